from .base_extractor import BaseExtractor


class ExtractorFactory:
    """
    Registry of the extraction algorithms, looked up by name.
    """

    registry = {}

    @classmethod
    def register(cls, name):
        def inner_wrapper(wrapped_class):
            assert name not in cls.registry, f"Extractor '{name}' already exists!"
            assert issubclass(wrapped_class, BaseExtractor)

            wrapped_class.name = name
            cls.registry[name] = wrapped_class
            return wrapped_class

        return inner_wrapper

    @classmethod
    def instantiate(cls, name, *args, **kwargs) -> BaseExtractor:
        assert name in cls.registry, f"Extractor '{name}' is not registered!"
        extractor_class = cls.registry[name]

        return extractor_class(*args, **kwargs)
