"""Exact profiles, decompositions, series and age algebras of relational structures."""

__version__ = "0.1.0"
