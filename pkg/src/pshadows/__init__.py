"""Enumeration and classification of basic shades and periodicity shadows."""

from .classifier import MARKOV, ClassificationRecord, FilterVerdict, VerdictKind, classify
from .core import (
    Ordering,
    Permutation,
    SkewIntMatrix,
    apply_permutation,
    canonical_max,
    canonical_min,
    compare_lex,
    opposite,
)
from .enumerator import EnumerationOptions, enumerate_basic_shades

__all__ = [
    "MARKOV",
    "ClassificationRecord",
    "EnumerationOptions",
    "FilterVerdict",
    "Ordering",
    "Permutation",
    "SkewIntMatrix",
    "VerdictKind",
    "apply_permutation",
    "canonical_max",
    "canonical_min",
    "classify",
    "compare_lex",
    "enumerate_basic_shades",
    "opposite",
]
