"""Exact computations for projective coinvariant algebras of Segre products."""

__version__ = "0.1.0"
