from boolean_ramsey.extractors.base_extractor import BaseExtractor, ExtractionOutcome
from boolean_ramsey.extractors.factory import ExtractorFactory
from boolean_ramsey.extractors.boolean import (
    PrincipalState,
    rainbow_boolean,
    rainbow_boolean_bm,
)
from boolean_ramsey.extractors.chains import rainbow_chain_a2, rainbow_chain_am
from boolean_ramsey.extractors.antichain import rainbow_antichain
