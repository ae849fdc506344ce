"""Row-by-row generation of basic shades.

A matrix is built one row at a time.  Row ``r+1`` is forced to the left of
the diagonal by skew-symmetry and free to the right of it; free entries are
tried in ascending order, so leaves come out in increasing row-major order.
A completed matrix is kept when it is singular, minimal in its permutation
orbit, and not above the minimal form of its negation.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import (
    ENTRY_RANGE,
    MAX_N,
    DomainError,
    SkewIntMatrix,
    canonical_min,
    has_smaller_relabeling,
    opposite,
    precedes_or_equal,
)

Row = tuple[int, ...]

THREADS_ENV = "PSHADOWS_THREADS"


class ArityError(ValueError):
    """Wrong number of free entries for the row being composed."""


def is_admissible_row(row: Sequence[int]) -> bool:
    """Sign and tameness conditions on a single row.

    * all-zero, or at least one positive and one negative entry;
    * a 2 never shares the row with another entry >= 1, and a -2 never with
      another entry <= -1;
    * at most four 1s and at most four -1s.
    """
    pos = neg = ones = mones = 0
    two = mtwo = False
    for v in row:
        if v < -2 or v > 2:
            raise DomainError(f"row entry {v} outside [-2, 2]")
        if v > 0:
            pos += 1
            if v == 1:
                ones += 1
            else:
                two = True
        elif v < 0:
            neg += 1
            if v == -1:
                mones += 1
            else:
                mtwo = True
    if (pos == 0) != (neg == 0):
        return False
    if (two and pos > 1) or (mtwo and neg > 1):
        return False
    return ones <= 4 and mones <= 4


def compose_row(prefix: Sequence[Sequence[int]], free: Sequence[int], n: int | None = None) -> Row:
    """Row ``r+1`` of a matrix whose first ``r`` rows are ``prefix``."""
    r = len(prefix)
    if n is None:
        if not prefix:
            n = len(free) + 1
        else:
            n = len(prefix[0])
    if r >= n:
        raise ArityError(f"prefix already has {r} rows of an {n}x{n} matrix")
    if len(free) != n - r - 1:
        raise ArityError(f"expected {n - r - 1} free entries, got {len(free)}")
    return tuple([-prefix[j][r] for j in range(r)] + [0] + list(free))


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_singular(a: SkewIntMatrix) -> bool:
    # skew-symmetric matrices of odd order are always singular
    if a.n % 2:
        return True
    return determinant(a.rows) == 0


def _rows_singular(rows: Sequence[Row]) -> bool:
    return len(rows) % 2 == 1 or determinant(rows) == 0


def _rows_basic(rows: Sequence[Row]) -> bool:
    n = len(rows)
    return (
        _rows_singular(rows)
        and not has_smaller_relabeling(rows, n)
        and not has_smaller_relabeling(rows, n, negate=True)
    )


def is_basic(a: SkewIntMatrix) -> bool:
    """Singular, orbit-minimal, and not above the minimal form of ``-a``."""
    return _rows_basic(a.rows)


def is_basic_exhaustive(a: SkewIntMatrix) -> bool:
    """Same predicate as :func:`is_basic`, by scanning every permutation."""
    return (
        is_singular(a)
        and canonical_min(a) == a
        and precedes_or_equal(a, canonical_min(opposite(a)))
    )


@dataclass(frozen=True)
class EnumerationOptions:
    n: int
    stop_at_zero: bool = False
    workers: int = 1
    pruning: bool = False
    split_depth: int = 2

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_N:
            raise DomainError(f"n must be in 1..{MAX_N}, got {self.n}")
        if self.workers < 1:
            raise DomainError(f"workers must be >= 1, got {self.workers}")


def default_workers() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _children(rows: tuple[Row, ...], n: int, pruning: bool) -> Iterator[tuple[Row, ...]]:
    r = len(rows)
    forced = [-rows[j][r] for j in range(r)]
    for free in itertools.product(ENTRY_RANGE, repeat=n - r - 1):
        row = tuple(forced + [0] + list(free))
        if not is_admissible_row(row):
            continue
        child = rows + (row,)
        if pruning and r + 1 < n and (
            has_smaller_relabeling(child, n) or has_smaller_relabeling(child, n, negate=True)
        ):
            continue
        yield child


def _search(rows: tuple[Row, ...], n: int, pruning: bool, out: list[tuple[Row, ...]]) -> None:
    if len(rows) == n:
        if _rows_basic(rows):
            out.append(rows)
        return
    for child in _children(rows, n, pruning):
        _search(child, n, pruning, out)


def _prefixes(n: int, depth: int, pruning: bool) -> list[tuple[Row, ...]]:
    level: list[tuple[Row, ...]] = [()]
    for _ in range(min(depth, n)):
        level = [c for rows in level for c in _children(rows, n, pruning)]
    return level


def _subtree(args: tuple[tuple[Row, ...], int, bool]) -> list[tuple[Row, ...]]:
    rows, n, pruning = args
    out: list[tuple[Row, ...]] = []
    _search(rows, n, pruning, out)
    return out


def enumerate_basic_shades(opts: EnumerationOptions) -> list[SkewIntMatrix]:
    """All basic shades of size ``opts.n`` in strictly increasing row-major order.

    The search tree is split on complete prefixes of ``split_depth`` rows.
    Prefixes are generated in increasing order and each subtree emits in
    increasing order, so concatenating subtree results in prefix order gives
    the sequential sequence for every worker count.
    """
    n = opts.n
    prefixes = _prefixes(n, opts.split_depth, opts.pruning)
    if opts.stop_at_zero:
        # every shade below the zero matrix sits in a subtree whose prefix is
        # at most the all-zero prefix
        zero_prefix = tuple((0,) * n for _ in range(min(opts.split_depth, n)))
        prefixes = [p for p in prefixes if p <= zero_prefix]
    tasks = [(p, n, opts.pruning) for p in prefixes]
    if opts.workers == 1 or len(tasks) <= 1:
        chunks = map(_subtree, tasks)
        found = [m for chunk in chunks for m in chunk]
    else:
        with ProcessPoolExecutor(max_workers=opts.workers) as pool:
            found = [m for chunk in pool.map(_subtree, tasks, chunksize=1) for m in chunk]
    result = [SkewIntMatrix(rows) for rows in found]
    if opts.stop_at_zero:
        for k, m in enumerate(result):
            if m.is_zero():
                return result[: k + 1]
    return result
