"""Brute-force reference implementations for small sizes (test use only).

Nothing here goes through the row-by-row generator or the LP; the only
shared piece is the single-row predicate.
"""

from __future__ import annotations

import itertools

from .core import ENTRY_RANGE, DomainError, SkewIntMatrix
from .enumerator import is_admissible_row

ORACLE_MAX_N = 4


def _all_skew(n: int):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for values in itertools.product(ENTRY_RANGE, repeat=len(pairs)):
        m = [[0] * n for _ in range(n)]
        for (i, j), v in zip(pairs, values):
            m[i][j] = v
            m[j][i] = -v
        yield tuple(tuple(r) for r in m)


def _det(m) -> int:
    # Leibniz expansion; independent of the enumerator's elimination
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i, p in enumerate(perm):
            prod *= m[i][p]
            if not prod:
                break
        total += -prod if inversions % 2 else prod
    return total


def _orbit(m):
    n = len(m)
    return [tuple(tuple(m[p][q] for q in perm) for p in perm) for perm in itertools.permutations(range(n))]


def brute_force_basic_shades(n: int) -> set[SkewIntMatrix]:
    """Scan every skew matrix with entries in [-2, 2] and keep orbit representatives."""
    if not 1 <= n <= ORACLE_MAX_N:
        raise DomainError(f"brute force limited to n <= {ORACLE_MAX_N}, got {n}")
    shades = [
        m for m in _all_skew(n)
        if all(is_admissible_row(r) for r in m) and _det(m) == 0
    ]
    keep = set()
    for m in shades:
        neg = tuple(tuple(-v for v in r) for r in m)
        if m == min(_orbit(m)) and m <= min(_orbit(neg)):
            keep.add(SkewIntMatrix(m))
    return keep


def brute_force_ps3(a: SkewIntMatrix, bound: int) -> tuple[tuple[int, ...], ...] | None:
    """Symmetric natural C, entries <= bound, nonzero columns, A C = 0; None if none found.

    None only means nothing exists within ``bound``.  Columns are filled left
    to right; each column is drawn from the natural null vectors of A, tried
    by increasing sum and then decreasing lexicographic order.
    """
    n = a.n
    if n > ORACLE_MAX_N:
        raise DomainError(f"brute force limited to n <= {ORACLE_MAX_N}, got {n}")
    rows = a.rows
    null = [
        v for v in itertools.product(range(bound + 1), repeat=n)
        if any(v) and all(sum(r[k] * v[k] for k in range(n)) == 0 for r in rows)
    ]
    null.sort(key=lambda v: (sum(v), tuple(-x for x in v)))
    cols: list[tuple[int, ...]] = []

    def fill(j: int) -> bool:
        if j == n:
            return True
        for v in null:
            if all(v[k] == cols[k][j] for k in range(j)):
                cols.append(v)
                if fill(j + 1):
                    return True
                cols.pop()
        return False

    if not fill(0):
        return None
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
