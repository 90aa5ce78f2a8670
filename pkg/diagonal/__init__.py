"""Exact constructions and checks for diagonal Diophantine equations a(x^p - y^q) = b(z^r - w^s)."""

__version__ = "0.1.0"
