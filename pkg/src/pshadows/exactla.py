"""Exact rational linear algebra: RREF, nullspaces, and symmetric kernels.

Solutions are returned in parametric form.  Free parameters are the
non-pivot columns of the reduced row echelon form, in increasing column
order; for the symmetric kernel the unknowns are the upper-triangle entries
of C in raster order (row 1 left to right, then row 2, ...).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .core import SkewIntMatrix

Number = Union[int, Fraction]
Assignment = Union[Mapping[int, Number], Sequence[Number]]


class IncompleteAssignmentError(KeyError):
    """An evaluation was asked for without a value for every parameter."""


@dataclass(frozen=True)
class LinearForm:
    """Homogeneous linear form ``sum coeff * param``; params are 0-based indices."""

    terms: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, Number]) -> LinearForm:
        return cls(tuple((k, Fraction(c)) for k, c in sorted(coeffs.items()) if c != 0))

    @classmethod
    def param(cls, k: int, coeff: Number = 1) -> LinearForm:
        return cls.from_dict({k: coeff})

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.terms)

    def params(self) -> set[int]:
        return {k for k, _ in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, k: int) -> Fraction:
        return self.as_dict().get(k, Fraction(0))

    def __add__(self, other: LinearForm) -> LinearForm:
        acc = self.as_dict()
        for k, c in other.terms:
            acc[k] = acc.get(k, Fraction(0)) + c
        return LinearForm.from_dict(acc)

    def __neg__(self) -> LinearForm:
        return LinearForm(tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other: LinearForm) -> LinearForm:
        return self + (-other)

    def scale(self, factor: Number) -> LinearForm:
        if factor == 0:
            return LinearForm()
        return LinearForm(tuple((k, c * factor) for k, c in self.terms))

    def evaluate(self, assignment: Assignment) -> Fraction:
        total = Fraction(0)
        for k, c in self.terms:
            try:
                total += c * Fraction(assignment[k])
            except (KeyError, IndexError):
                raise IncompleteAssignmentError(k) from None
        return total

    def render(self, symbol: str = "v") -> str:
        """Human-readable form such as ``2v₁ - (1/2)v₃``."""
        if not self.terms:
            return "0"
        parts = []
        for pos, (k, c) in enumerate(self.terms):
            name = symbol + _subscript(k + 1)
            mag = abs(c)
            if mag == 1:
                body = name
            elif mag.denominator == 1:
                body = f"{mag.numerator}{name}"
            else:
                body = f"({mag}){name}"
            if pos == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)


_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def _subscript(k: int) -> str:
    return str(k).translate(_SUBSCRIPTS)


def combine(forms: Sequence[LinearForm], coeffs: Sequence[Number]) -> LinearForm:
    acc: dict[int, Fraction] = {}
    for f, a in zip(forms, coeffs):
        if a == 0:
            continue
        for k, c in f.terms:
            acc[k] = acc.get(k, Fraction(0)) + c * a
    return LinearForm.from_dict(acc)


@dataclass(frozen=True)
class ParametricVector:
    entries: tuple[LinearForm, ...]
    nparams: int

    @property
    def n(self) -> int:
        return len(self.entries)

    def basis(self) -> list[tuple[Fraction, ...]]:
        """One vector per parameter (that parameter 1, all others 0)."""
        return [tuple(f.coefficient(k) for f in self.entries) for k in range(self.nparams)]


@dataclass(frozen=True)
class ParametricSymmetricMatrix:
    n: int
    upper: tuple[LinearForm, ...]
    nparams: int

    def entry(self, i: int, j: int) -> LinearForm:
        if i > j:
            i, j = j, i
        return self.upper[upper_index(self.n, i, j)]

    def full(self) -> list[list[LinearForm]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def column(self, j: int) -> list[LinearForm]:
        return [self.entry(i, j) for i in range(self.n)]


def upper_index(n: int, i: int, j: int) -> int:
    """Raster position of (i, j), i <= j, in the upper triangle."""
    return i * n - i * (i - 1) // 2 + (j - i)


def upper_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i, n)]


def rref(matrix: Sequence[Sequence[Number]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the list of pivot columns.

    Pivots are taken column by column, first nonzero row from the top; no
    magnitude heuristics are needed in exact arithmetic.
    """
    rows = [[Fraction(v) for v in r] for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        pr = rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix: Sequence[Sequence[Number]]) -> int:
    return len(rref(matrix)[1])


def _solve_homogeneous(matrix: Sequence[Sequence[Number]], nvars: int) -> tuple[list[LinearForm], int]:
    reduced, pivots = rref(matrix) if matrix else ([], [])
    free = [c for c in range(nvars) if c not in set(pivots)]
    param_of = {c: k for k, c in enumerate(free)}
    forms: list[LinearForm] = [LinearForm()] * nvars
    for c, k in param_of.items():
        forms[c] = LinearForm.param(k)
    for row, pc in zip(reduced, pivots):
        forms[pc] = LinearForm.from_dict({param_of[c]: -row[c] for c in free if row[c] != 0})
    return forms, len(free)


def nullspace_generic(a: SkewIntMatrix) -> ParametricVector:
    forms, d = _solve_homogeneous(a.rows, a.n)
    return ParametricVector(tuple(forms), d)


def symmetric_kernel_generic(a: SkewIntMatrix) -> ParametricSymmetricMatrix:
    """All symmetric C with A C = 0, parametrised by free upper-triangle entries."""
    n = a.n
    m = n * (n + 1) // 2
    equations = []
    for i in range(n):
        for j in range(n):
            eq = [0] * m
            for k in range(n):
                if a.rows[i][k]:
                    eq[upper_index(n, min(k, j), max(k, j))] += a.rows[i][k]
            if any(eq):
                equations.append(eq)
    forms, d = _solve_homogeneous(equations, m)
    return ParametricSymmetricMatrix(n, tuple(forms), d)


def evaluate_parametric(obj, assignment: Assignment):
    """Substitute parameter values; returns a vector (tuple) or an n x n matrix."""
    if isinstance(obj, ParametricVector):
        return tuple(f.evaluate(assignment) for f in obj.entries)
    if isinstance(obj, ParametricSymmetricMatrix):
        upper = [f.evaluate(assignment) for f in obj.upper]
        n = obj.n
        return [[upper[upper_index(n, min(i, j), max(i, j))] for j in range(n)] for i in range(n)]
    raise TypeError(f"cannot evaluate {type(obj).__name__}")


def matvec(a: Sequence[Sequence[Number]], x: Sequence[Number]) -> list[Fraction]:
    return [sum((Fraction(aij) * xj for aij, xj in zip(row, x)), Fraction(0)) for row in a]


def matmul(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]]) -> list[list[Fraction]]:
    cols = list(zip(*b))
    return [[sum((Fraction(x) * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def form_matvec(a: Sequence[Sequence[int]], x: Iterable[LinearForm]) -> list[LinearForm]:
    """A applied to a vector of linear forms, symbolically."""
    x = list(x)
    return [combine(x, row) for row in a]


def in_span(basis: Sequence[Sequence[Number]], v: Sequence[Number]) -> bool:
    if not any(v):
        return True
    return rank(list(basis) + [list(v)]) == rank(basis) if basis else False
