from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import pytest
from hypothesis import strategies as st

from pshadows.classifier import classify
from pshadows.core import SkewIntMatrix
from pshadows.enumerator import EnumerationOptions, enumerate_basic_shades
from pshadows.exactla import LinearForm

FIXTURES = Path(__file__).parent / "fixtures"

M = SkewIntMatrix(((0, -2, 2), (2, 0, -2), (-2, 2, 0)))

# the five n = 3 matrices, the last one zero
REFERENCE_N3 = [
    M.rows,
    ((0, -1, 1), (1, 0, -1), (-1, 1, 0)),
    ((0, -2, 1), (2, 0, -1), (-1, 1, 0)),
    ((0, -2, 1), (2, 0, -2), (-1, 2, 0)),
    ((0, 0, 0), (0, 0, 0), (0, 0, 0)),
]

# the twelve n = 4 matrices S1..S12 in reference order (S1..S7 essential)
REFERENCE_N4 = [
    ((0, -2, 0, 1), (2, 0, 0, -1), (0, 0, 0, 0), (-1, 1, 0, 0)),
    ((0, -1, 0, 1), (1, 0, -1, 0), (0, 1, 0, -1), (-1, 0, 1, 0)),
    ((0, -1, 0, 1), (1, 0, 0, -1), (0, 0, 0, 0), (-1, 1, 0, 0)),
    ((0, -2, 1, 1), (2, 0, -1, -1), (-1, 1, 0, 0), (-1, 1, 0, 0)),
    ((0, -1, -1, 1), (1, 0, -1, 0), (1, 1, 0, -1), (-1, 0, 1, 0)),
    ((0, -1, -1, 1), (1, 0, 0, -1), (1, 0, 0, -1), (-1, 1, 1, 0)),
    ((0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0)),
    ((0, -2, 0, 1), (2, 0, -2, 0), (0, 2, 0, -1), (-1, 0, 1, 0)),
    ((0, -2, 0, 1), (2, 0, 0, -2), (0, 0, 0, 0), (-1, 2, 0, 0)),
    ((0, -2, 0, 2), (2, 0, -2, 0), (0, 2, 0, -2), (-2, 0, 2, 0)),
    ((0, -2, 0, 2), (2, 0, 0, -2), (0, 0, 0, 0), (-2, 2, 0, 0)),
    ((0, -2, 0, 2), (2, 0, -1, -1), (0, 1, 0, -1), (-2, 1, 1, 0)),
]

# (n, shades, shadows, essential)
REFERENCE_COUNTS = {1: (1, 1, 1), 2: (1, 1, 1), 3: (5, 5, 4), 4: (12, 12, 7), 5: (138, 65, 26)}
N6_COUNTS = (1290, 516, 223)


def form_from_json(d: dict[str, str]) -> LinearForm:
    return LinearForm.from_dict({int(k) - 1: Fraction(v) for k, v in d.items()})


@lru_cache(maxsize=None)
def reference_items() -> tuple[dict, ...]:
    with open(FIXTURES / "reference_essential.json", encoding="utf-8") as fh:
        return tuple(json.load(fh))


@lru_cache(maxsize=None)
def shades(n: int, pruning: bool = False) -> tuple[SkewIntMatrix, ...]:
    return tuple(enumerate_basic_shades(EnumerationOptions(n=n, pruning=pruning)))


@lru_cache(maxsize=None)
def records(n: int):
    # pruned and unpruned runs are checked equal elsewhere; n = 6 uses pruning
    return tuple(classify(m) for m in shades(n, pruning=n >= 6))


@pytest.fixture(scope="session")
def markov() -> SkewIntMatrix:
    return M


@st.composite
def skew_matrices(draw, min_n: int = 1, max_n: int = 5) -> SkewIntMatrix:
    n = draw(st.integers(min_n, max_n))
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = draw(st.integers(-2, 2))
            m[i][j], m[j][i] = v, -v
    return SkewIntMatrix(m)


@st.composite
def matrix_and_permutations(draw, count: int = 1, max_n: int = 5):
    a = draw(skew_matrices(max_n=max_n))
    perms = [tuple(draw(st.permutations(range(a.n)))) for _ in range(count)]
    return a, perms
