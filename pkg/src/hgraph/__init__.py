"""Width parameters and representations of H-graphs."""

__version__ = "0.1.0"
