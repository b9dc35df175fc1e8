"""Exact quadrature formulas for the Bessel-polynomial weight on the unit circle."""

__version__ = "0.1.0"
