"""Boolean (rainbow) Ramsey numbers on Boolean lattices."""

__version__ = "0.1.0"
