"""Exact homological computations over bound quiver algebras."""

__version__ = "0.1.0"
