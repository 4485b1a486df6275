"""Exact computations with extending structures of finite-dimensional bialgebras."""

__version__ = "0.1.0"
