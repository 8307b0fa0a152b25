"""Exact invariants of graphs and their independence complexes."""

__version__ = "0.1.0"
