"""Algorithms for graphs a few edges away from chordal."""
__version__ = "0.1.0"
