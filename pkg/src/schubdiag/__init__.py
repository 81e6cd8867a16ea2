"""Exact Schubert calculus on flag varieties G/B for types A, B, C, D and G2."""

__version__ = "0.1.0"
