"""Pythagorean boxes with primitive Pythagorean-rectangle faces.

A Pythagorean box has integer edges x, y, z and an integer inner diagonal t
with x**2 + y**2 + z**2 == t**2.  This package builds, classifies, generates
and exhaustively searches such boxes.
"""

from .errors import DomainError

__version__ = "0.1.0"

__all__ = ["DomainError", "__version__"]
