"""Lattice-polynomial (max-min) representations on permutographs and of piecewise linear functions."""

__version__ = "1.0.0"
