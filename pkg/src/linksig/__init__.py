"""Exact Levine-Tristram signature functions and higher Alexander polynomials of links."""

__version__ = "0.1.0"
