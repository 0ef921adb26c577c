"""Exact rational computations for a tree-structured conditional
quasi-greedy basis of l1.

All scalars cross the C++ boundary as exact "p/q" strings; the helpers
below convert to and from fractions.Fraction.
"""

from fractions import Fraction

from qgl1._core import *  # noqa: F401,F403
from qgl1._core import __version__  # noqa: F401


def frac(value):
    """Parses an exact "p/q" string into a Fraction."""
    return Fraction(value)


def as_fractions(vec):
    """Converts a {index: "p/q"} dict into {index: Fraction}."""
    return {index: Fraction(value) for index, value in vec.items()}


def from_fractions(vec):
    """Converts {index: Fraction | int | str} into the wire dict form."""
    out = {}
    for index, value in vec.items():
        f = Fraction(value)
        out[index] = str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    return out
