"""Lie algebras generated by extremal elements: bases, generic tables, f-sets."""

__version__ = "0.1.0"
