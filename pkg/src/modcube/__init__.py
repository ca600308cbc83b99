"""Exact calculus of admissible cubical polynomials, zero-cycles with
modulus on the projective line, and logarithmic differential forms."""

__version__ = "0.1.0"
