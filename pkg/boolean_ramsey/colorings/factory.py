from .base_coloring import BaseColoring


class ColoringFactory:
    """
    Registry of the explicit coloring constructions, looked up by name.
    """

    registry = {}

    @classmethod
    def register(cls, name):
        """
        Decorator function to register a coloring construction with a given name.

        Args:
            name (Constants.Colorings): The name of the construction.

        Returns:
            The decorated construction class.
        """

        def inner_wrapper(wrapped_class):
            assert name not in cls.registry, f"Coloring '{name}' already exists!"
            assert issubclass(wrapped_class, BaseColoring)

            cls.registry[name] = wrapped_class
            return wrapped_class

        return inner_wrapper

    @classmethod
    def instantiate(cls, name, *args, **kwargs) -> BaseColoring:
        """
        Instantiate a coloring construction with the given name.

        Raises:
            AssertionError: If the specified construction name is not registered.
        """
        assert name in cls.registry, f"Coloring '{name}' is not registered!"
        coloring_class = cls.registry[name]

        return coloring_class(*args, **kwargs)
