"""Shadow and essentiality decisions for shades.

A shade is a shadow when some symmetric natural matrix C with no zero
column satisfies A C = 0.  Two independent routes decide this:

* the filter, which inspects the generic nullspace vector x and looks for a
  zero entry, a pair of opposite entries, or a vanishing combination of
  entries with natural coefficients (decided exactly through Gordan's
  alternative: such a combination exists iff the entries of x cannot all be
  made positive at once);
* the feasibility check, which solves the linear inequalities on the
  parameters of the generic symmetric kernel and returns an integer witness.

The feasibility answer is the ground truth recorded in ``is_shadow``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import SkewIntMatrix, canonical_min, is_canonical, find_relabeling, opposite
from .exactla import (
    LinearForm,
    ParametricSymmetricMatrix,
    ParametricVector,
    combine,
    matmul,
    nullspace_generic,
    symmetric_kernel_generic,
    upper_index,
)
from .lp import feasible_point, minimize

MARKOV = SkewIntMatrix(((0, -2, 2), (2, 0, -2), (-2, 2, 0)))

Witness = tuple[tuple[int, ...], ...]


class VerdictKind(enum.Enum):
    PASS = "Pass"
    ZERO_ENTRY = "ZeroEntry"
    OPPOSITE_PAIR = "OppositePair"
    VANISHING_NATURAL_COMBINATION = "VanishingNaturalCombination"


@dataclass(frozen=True)
class FilterVerdict:
    """Outcome of the nullspace filter.

    ``detail`` is empty for PASS, ``(i,)`` for a zero entry, ``(i, j)`` for an
    opposite pair (0-based entry indices), and the natural coefficient of every
    entry of x for a vanishing combination.
    """

    kind: VerdictKind
    detail: tuple[int, ...] = ()

    @property
    def passed(self) -> bool:
        return self.kind is VerdictKind.PASS


def ps3_filter_verdict(x: ParametricVector) -> FilterVerdict:
    forms = x.entries
    for i, f in enumerate(forms):
        if f.is_zero():
            return FilterVerdict(VerdictKind.ZERO_ENTRY, (i,))
    for i in range(len(forms)):
        for j in range(i + 1, len(forms)):
            if (forms[i] + forms[j]).is_zero():
                return FilterVerdict(VerdictKind.OPPOSITE_PAIR, (i, j))
    coeffs = vanishing_combination(forms, x.nparams)
    if coeffs is None:
        return FilterVerdict(VerdictKind.PASS)
    return FilterVerdict(VerdictKind.VANISHING_NATURAL_COMBINATION, coeffs)


def positive_point(forms: tuple[LinearForm, ...] | list[LinearForm], nparams: int) -> list[Fraction] | None:
    """Parameters making every form >= 1 (equivalently > 0), or None."""
    return feasible_point([(f, 1) for f in forms], nparams)


def vanishing_combination(forms, nparams: int) -> tuple[int, ...] | None:
    """Natural coefficients, not all zero, whose combination of ``forms`` vanishes.

    None when the forms can all be made strictly positive.
    """
    if positive_point(forms, nparams) is not None:
        return None
    # y >= 0, sum y = 1, sum y_i f_i = 0 coefficient-wise
    r = len(forms)
    a_eq = [[f.coefficient(k) for f in forms] for k in range(nparams)]
    a_eq.append([Fraction(1)] * r)
    b_eq = [Fraction(0)] * nparams + [Fraction(1)]
    solved = minimize([0] * r, a_eq, b_eq)
    if solved is None:
        raise ArithmeticError("no positive point and no vanishing combination")
    return _to_naturals(solved[0])


def _to_naturals(values: list[Fraction]) -> tuple[int, ...]:
    lcm = 1
    for v in values:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in values]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return tuple(v // g for v in ints) if g else tuple(ints)


def ps3_feasible(a: SkewIntMatrix, c: ParametricSymmetricMatrix | None = None) -> Witness | None:
    """An integer witness C (symmetric, natural, no zero column, A C = 0), or None.

    Among feasible points the one minimising the off-diagonal mass, then the
    diagonal mass, is taken; it is scaled to integers and divided by the gcd
    of its entries.
    """
    if c is None:
        c = symmetric_kernel_generic(a)
    n = c.n
    constraints = [(f, 0) for f in c.upper]
    for j in range(n):
        constraints.append((combine(c.column(j), [1] * n), 1))
    off = combine([c.entry(i, j) for i in range(n) for j in range(i + 1, n)], [1] * (n * (n - 1) // 2))
    diag = combine([c.entry(i, i) for i in range(n)], [1] * n)
    point = feasible_point(constraints, c.nparams, objectives=[off, diag])
    if point is None:
        return None
    values = [f.evaluate(point) for f in c.upper]
    ints = _to_naturals(values)
    full = tuple(
        tuple(ints[upper_index(n, min(i, j), max(i, j))] for j in range(n)) for i in range(n)
    )
    if not is_valid_witness(a, full):
        raise ArithmeticError(f"feasibility produced an invalid witness for\n{a}")
    return full


def is_valid_witness(a: SkewIntMatrix, w) -> bool:
    n = a.n
    if len(w) != n or any(len(r) != n for r in w):
        return False
    if any(v < 0 or int(v) != v for r in w for v in r):
        return False
    if any(w[i][j] != w[j][i] for i in range(n) for j in range(n)):
        return False
    if any(all(w[i][j] == 0 for i in range(n)) for j in range(n)):
        return False
    return all(v == 0 for r in matmul(a.rows, w) for v in r)


def is_essential(a: SkewIntMatrix) -> bool:
    """Markov, or no row with both 2 and -2 and the double-arrow triangle rule."""
    if a == MARKOV:
        return True
    rows = a.rows
    n = a.n
    for r in rows:
        if 2 in r and -2 in r:
            return False
    for i in range(n):
        for j in range(n):
            aij = rows[i][j]
            if aij == 2:
                if any(rows[j][k] == 1 and rows[k][i] <= 0 for k in range(n)):
                    return False
            elif aij == -2:
                if any(rows[j][k] == -1 and rows[k][i] >= 0 for k in range(n)):
                    return False
    return True


def is_self_opposite(a: SkewIntMatrix) -> bool:
    """``canonical_min(-a) == a``."""
    return is_canonical(a) and find_relabeling(opposite(a), a) is not None


def is_self_opposite_exhaustive(a: SkewIntMatrix) -> bool:
    return canonical_min(opposite(a)) == a


@dataclass(frozen=True)
class ClassificationRecord:
    matrix: SkewIntMatrix
    is_shadow: bool
    is_essential: bool
    self_opposite: bool
    filter: FilterVerdict
    x: ParametricVector
    c_generic: ParametricSymmetricMatrix
    witness: Witness | None


def classify(a: SkewIntMatrix) -> ClassificationRecord:
    x = nullspace_generic(a)
    c = symmetric_kernel_generic(a)
    verdict = ps3_filter_verdict(x)
    witness = ps3_feasible(a, c)
    shadow = witness is not None
    return ClassificationRecord(
        matrix=a,
        is_shadow=shadow,
        is_essential=shadow and is_essential(a),
        self_opposite=is_self_opposite(a),
        filter=verdict,
        x=x,
        c_generic=c,
        witness=witness,
    )
