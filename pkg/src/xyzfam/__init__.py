"""Parametric rational solutions of xyz(x+y+z) = a and wxyz(w+x+y+z) = a."""

__version__ = "0.1.0"
