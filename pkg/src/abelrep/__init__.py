"""Graphical representations of abelian permutation groups."""

__version__ = "0.1.0"
