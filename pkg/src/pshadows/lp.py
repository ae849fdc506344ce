"""Exact rational linear programming (two-phase simplex, Bland's rule).

Only what the classifier needs: feasibility of ``form_i(v) >= lower_i`` over
rational parameter vectors, optionally followed by lexicographic
minimisation of a list of objective forms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exactla import LinearForm, Number


class Unbounded(ArithmeticError):
    pass


def _pivot(tab: list[list[Fraction]], obj: list[Fraction], basis: list[int], r: int, c: int) -> None:
    inv = 1 / tab[r][c]
    pr = tab[r] = [v * inv if v else v for v in tab[r]]
    nz = [k for k, v in enumerate(pr) if v]
    for i, row in enumerate(tab):
        if i != r and row[c] != 0:
            f = row[c]
            for k in nz:
                row[k] -= f * pr[k]
    if obj[c] != 0:
        f = obj[c]
        for k in nz:
            obj[k] -= f * pr[k]
    basis[r] = c


def _optimize(tab: list[list[Fraction]], obj: list[Fraction], basis: list[int], ncols: int) -> None:
    while True:
        enter = next((j for j in range(ncols) if obj[j] < 0), None)
        if enter is None:
            return
        best: tuple[Fraction, int] | None = None
        for i, row in enumerate(tab):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise Unbounded
        _pivot(tab, obj, basis, best[1], enter)


def minimize(
    cost: Sequence[Number], a_eq: Sequence[Sequence[Number]], b_eq: Sequence[Number]
) -> tuple[list[Fraction], Fraction] | None:
    """Minimise ``cost . x`` subject to ``a_eq x = b_eq``, ``x >= 0``.

    Returns ``(x, value)`` or None when infeasible; raises Unbounded.
    """
    nvar = len(cost)
    tab: list[list[Fraction]] = []
    for row, b in zip(a_eq, b_eq):
        row = [Fraction(v) for v in row]
        b = Fraction(b)
        if b < 0:
            row, b = [-v for v in row], -b
        tab.append(row)
        tab[-1].append(b)
    m = len(tab)
    # phase 1: one artificial per row
    for i, row in enumerate(tab):
        rhs = row.pop()
        row.extend(Fraction(int(k == i)) for k in range(m))
        row.append(rhs)
    basis = list(range(nvar, nvar + m))
    obj = [-sum((row[j] for row in tab), Fraction(0)) for j in range(nvar)]
    obj += [Fraction(0)] * m
    obj.append(-sum((row[-1] for row in tab), Fraction(0)))
    _optimize(tab, obj, basis, nvar)
    if obj[-1] != 0:
        return None
    # drive artificials out of the basis; drop redundant rows
    keep = []
    for i in range(m):
        if basis[i] >= nvar:
            col = next((j for j in range(nvar) if tab[i][j] != 0), None)
            if col is None:
                continue
            _pivot(tab, obj, basis, i, col)
        keep.append(i)
    tab = [tab[i][:nvar] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    # phase 2
    c = [Fraction(v) for v in cost]
    obj = list(c) + [Fraction(0)]
    for row, bv in zip(tab, basis):
        if c[bv] != 0:
            f = c[bv]
            obj = [a - f * b for a, b in zip(obj, row)]
    _optimize(tab, obj, basis, nvar)
    x = [Fraction(0)] * nvar
    for row, bv in zip(tab, basis):
        x[bv] = row[-1]
    return x, -obj[-1]


def feasible_point(
    constraints: Sequence[tuple[LinearForm, Number]],
    nparams: int,
    objectives: Sequence[LinearForm] = (),
) -> list[Fraction] | None:
    """A parameter vector with ``form(v) >= lower`` for every constraint, or None.

    With ``objectives``, the point minimises them lexicographically; each
    objective must be bounded below on the feasible region.
    """
    # a parameter constrained by ``c * v_k >= 0`` (c > 0) is its own nonnegative
    # column; every other parameter is split as v_k = p_k - q_k
    nonneg = {
        f.terms[0][0]
        for f, lo in constraints
        if len(f.terms) == 1 and f.terms[0][1] > 0 and lo >= 0
    }
    cols: list[tuple[int, int]] = []
    for k in range(nparams):
        cols.append((k, 1))
        if k not in nonneg:
            cols.append((k, -1))
    # ``v_k >= 0`` on a nonnegative column is already implied
    constraints = [
        (f, lo)
        for f, lo in constraints
        if not (len(f.terms) == 1 and f.terms[0][0] in nonneg and f.terms[0][1] > 0 and lo == 0)
    ]
    ns = len(constraints)

    def expand(form: LinearForm) -> list[Fraction]:
        d = form.as_dict()
        return [d.get(k, Fraction(0)) * s for k, s in cols]

    a_eq: list[list[Fraction]] = []
    b_eq: list[Fraction] = []
    for idx, (form, lo) in enumerate(constraints):
        slack = [Fraction(0)] * ns
        slack[idx] = Fraction(-1)
        a_eq.append(expand(form) + slack)
        b_eq.append(Fraction(lo))

    x: list[Fraction] | None = None
    goals = list(objectives) or [LinearForm()]
    for goal in goals:
        cost = expand(goal) + [Fraction(0)] * ns
        solved = minimize(cost, a_eq, b_eq)
        if solved is None:
            return None
        x, value = solved
        a_eq.append(cost)
        b_eq.append(value)
    assert x is not None
    point = [Fraction(0)] * nparams
    for (k, s), v in zip(cols, x):
        point[k] += s * v
    return point
