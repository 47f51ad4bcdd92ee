import numpy as np
import pytest

from boolean_ramsey.constants import Config, reload_config


@pytest.fixture
def rng():
    return np.random.default_rng(Config.table.seed)


@pytest.fixture
def fresh_config():
    """Restore the packaged configuration after a test replaced it."""
    yield Config
    reload_config()
