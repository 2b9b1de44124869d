"""Algebraic entropy of rational linear maps, Mahler measures and trajectory growth."""

__version__ = "0.1.0"
