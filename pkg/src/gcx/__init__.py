"""Exact computations with graph complexes, their Maurer-Cartan elements and related operads."""

__version__ = "0.1.0"
