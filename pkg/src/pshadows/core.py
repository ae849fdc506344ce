"""Skew-symmetric integer matrices, the row-major order, and orbit canonical forms.

Matrices are compared by scanning entries row by row, left to right, using
plain integer order.  The permutation group acts by simultaneous
row/column relabelling, ``A_sigma[i][j] = A[sigma(i)][sigma(j)]``.

Indices are 0-based in code; documentation and rendered output use 1-based
vertex labels.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_N = 8
ENTRY_RANGE = (-2, -1, 0, 1, 2)

Rows = tuple[tuple[int, ...], ...]


class DimensionError(ValueError):
    """Operands have incompatible sizes."""


class DomainError(ValueError):
    """A value lies outside the range an operation accepts."""


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True, order=False)
class SkewIntMatrix:
    """Skew-symmetric integer matrix with entries in [-2, 2]."""

    rows: Rows

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if not 1 <= n <= MAX_N:
            raise DomainError(f"matrix size must be in 1..{MAX_N}, got {n}")
        for i, r in enumerate(rows):
            if len(r) != n:
                raise DimensionError(f"row {i + 1} has length {len(r)}, expected {n}")
            if r[i] != 0:
                raise DomainError(f"diagonal entry ({i + 1},{i + 1}) is {r[i]}")
            for j, v in enumerate(r):
                if v < -2 or v > 2:
                    raise DomainError(f"entry ({i + 1},{j + 1}) = {v} outside [-2, 2]")
                if rows[j][i] != -v:
                    raise DomainError(f"not skew-symmetric at ({i + 1},{j + 1})")

    @classmethod
    def zero(cls, n: int) -> SkewIntMatrix:
        return cls(tuple((0,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __neg__(self) -> SkewIntMatrix:
        return opposite(self)

    def flat(self) -> tuple[int, ...]:
        return tuple(v for r in self.rows for v in r)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def is_zero(self) -> bool:
        return not any(self.flat())

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{v:2d}" for v in r) for r in self.rows)


@dataclass(frozen=True)
class Permutation:
    """Bijection of {0, ..., n-1}; ``images[i]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise DomainError(f"not a permutation: {images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_one_based(cls, images: Iterable[int]) -> Permutation:
        return cls(tuple(i - 1 for i in images))

    @classmethod
    def swap(cls, n: int, i: int, j: int) -> Permutation:
        """Transposition of the 1-based labels ``i`` and ``j``."""
        images = list(range(n))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: Permutation) -> Permutation:
        """``(self o other)(i) = self(other(i))``."""
        if self.n != other.n:
            raise DimensionError("permutations of different sizes")
        return Permutation(tuple(self.images[k] for k in other.images))


def compare_lex(a: SkewIntMatrix, b: SkewIntMatrix) -> Ordering:
    if a.n != b.n:
        raise DimensionError(f"cannot compare {a.n}x{a.n} with {b.n}x{b.n}")
    for x, y in zip(a.flat(), b.flat()):
        if x != y:
            return Ordering.LESS if x < y else Ordering.GREATER
    return Ordering.EQUAL


def precedes_or_equal(a: SkewIntMatrix, b: SkewIntMatrix) -> bool:
    return compare_lex(a, b) is not Ordering.GREATER


def _permuted_rows(rows: Rows, images: Sequence[int]) -> Rows:
    return tuple(tuple(rows[p][q] for q in images) for p in images)


def apply_permutation(a: SkewIntMatrix, sigma: Permutation) -> SkewIntMatrix:
    if sigma.n != a.n:
        raise DimensionError(f"permutation of {sigma.n} points on a {a.n}x{a.n} matrix")
    return SkewIntMatrix(_permuted_rows(a.rows, sigma.images))


def opposite(a: SkewIntMatrix) -> SkewIntMatrix:
    return SkewIntMatrix(tuple(tuple(-v for v in r) for r in a.rows))


def canonical_min(a: SkewIntMatrix) -> SkewIntMatrix:
    """Smallest matrix in the permutation orbit of ``a`` (exhaustive over n!)."""
    best = min(_permuted_rows(a.rows, p) for p in itertools.permutations(range(a.n)))
    return SkewIntMatrix(best)


def canonical_max(a: SkewIntMatrix) -> SkewIntMatrix:
    """Largest matrix in the permutation orbit of ``a`` (exhaustive over n!)."""
    best = max(_permuted_rows(a.rows, p) for p in itertools.permutations(range(a.n)))
    return SkewIntMatrix(best)


# Backtracking search used by the enumerator.  It answers "does some relabelling
# beat the target?" without materialising the whole orbit, and also works on
# row prefixes, where only the first ``known`` rows (and by skew-symmetry the
# first ``known`` columns) are fixed.


def has_smaller_relabeling(rows: Sequence[Sequence[int]], n: int, negate: bool = False) -> bool:
    """True if ``s * M_sigma`` is strictly below ``M`` for some sigma, s = -1 if negate.

    ``rows`` holds the first ``r <= n`` rows of ``M``.  A relabelling only counts
    when the first differing entry is known for both sides, so a True answer
    holds for every completion of the prefix.
    """
    r = len(rows)
    sign = -1 if negate else 1
    # val[i][j] is sign * M[i][j], or None when not yet determined
    val: list[list[int | None]] = []
    for i in range(n):
        line: list[int | None] = []
        for j in range(n):
            if i < r:
                line.append(sign * rows[i][j])
            elif j < r:
                line.append(-sign * rows[j][i])
            else:
                line.append(None)
        val.append(line)
    target = [list(rw) for rw in rows]
    first = target[0]
    sigma = [0] * n
    used = [False] * n

    def rest() -> int:
        for p in range(1, r):
            vp = val[sigma[p]]
            tp = target[p]
            for q in range(n):
                v = vp[sigma[q]]
                if v is None:
                    return 0
                if v != tp[q]:
                    return -1 if v < tp[q] else 1
        return 0

    def dfs(q: int, row: list[int | None]) -> bool:
        if q == n:
            return rest() < 0
        t = first[q]
        cands = []
        for x in range(n):
            if used[x]:
                continue
            v = row[x]
            if v is None:
                continue
            if v < t:
                return True
            if v == t:
                cands.append(x)
        for x in cands:
            used[x] = True
            sigma[q] = x
            found = dfs(q + 1, row)
            used[x] = False
            if found:
                return True
        return False

    for s0 in range(n):
        used[s0] = True
        sigma[0] = s0
        found = dfs(1, val[s0])
        used[s0] = False
        if found:
            return True
    return False


def is_canonical(a: SkewIntMatrix) -> bool:
    """``canonical_min(a) == a``, decided by backtracking."""
    return not has_smaller_relabeling(a.rows, a.n)


def find_relabeling(a: SkewIntMatrix, b: SkewIntMatrix) -> Permutation | None:
    """Some sigma with ``apply_permutation(a, sigma) == b``, or None."""
    if a.n != b.n:
        raise DimensionError("matrices of different sizes")
    n = a.n
    ar, br = a.rows, b.rows
    if sorted(map(sorted, ar)) != sorted(map(sorted, br)):
        return None
    sigma = [0] * n
    used = [False] * n

    def dfs(k: int) -> bool:
        # entries (p, q) with p, q <= k are checked once sigma(k) is placed
        if k == n:
            return True
        bk = br[k]
        for x in range(n):
            if used[x] or sorted(ar[x]) != sorted(bk):
                continue
            ax = ar[x]
            if all(ax[sigma[q]] == bk[q] for q in range(k)):
                used[x] = True
                sigma[k] = x
                if dfs(k + 1):
                    return True
                used[x] = False
        return False

    return Permutation(tuple(sigma)) if dfs(0) else None
