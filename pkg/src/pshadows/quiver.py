"""Minimal quivers of signed adjacency matrices."""

from __future__ import annotations

from dataclasses import dataclass

from .core import SkewIntMatrix


@dataclass(frozen=True)
class Quiver:
    """``arr[i][j]`` counts the arrows i -> j (0-based vertices)."""

    n: int
    arr: tuple[tuple[int, ...], ...]

    def arrows(self) -> list[tuple[int, int]]:
        """One (source, target) pair per arrow, 1-based, in row-major order."""
        return [
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(self.n)
            for _ in range(self.arr[i][j])
        ]

    def is_minimal(self) -> bool:
        """No loops and no 2-cycles."""
        return all(self.arr[i][i] == 0 for i in range(self.n)) and all(
            min(self.arr[i][j], self.arr[j][i]) == 0
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )


def quiver_of(a: SkewIntMatrix) -> Quiver:
    return Quiver(a.n, tuple(tuple(max(v, 0) for v in row) for row in a.rows))


def signed_adjacency(q: Quiver) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(q.arr[i][j] - q.arr[j][i] for j in range(q.n)) for i in range(q.n))


def opposite_quiver(q: Quiver) -> Quiver:
    return Quiver(q.n, tuple(tuple(q.arr[j][i] for j in range(q.n)) for i in range(q.n)))


def to_dot(q: Quiver, name: str = "Q") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f"  {v};" for v in range(1, q.n + 1)]
    lines += [f"  {s} -> {t};" for s, t in q.arrows()]
    lines.append("}")
    return "\n".join(lines) + "\n"
