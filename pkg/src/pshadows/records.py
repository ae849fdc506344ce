"""Output records, their serialisations, and the counts report."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .classifier import ClassificationRecord, FilterVerdict, VerdictKind
from .core import SkewIntMatrix
from .exactla import LinearForm

FORMATS = ("jsonl", "text", "latex", "csv")


class FormatError(ValueError):
    """Unknown output format or malformed record."""


@dataclass(frozen=True)
class OutputRecord:
    n: int
    index: int
    matrix: tuple[tuple[int, ...], ...]
    is_shadow: bool | None = None
    is_essential: bool | None = None
    self_opposite: bool | None = None
    filter_verdict: FilterVerdict | None = None
    nullspace_basis: tuple[tuple[Fraction, ...], ...] | None = None
    kernel_parameter_count: int | None = None
    witness: tuple[tuple[int, ...], ...] | None = None

    @classmethod
    def from_matrix(cls, index: int, a: SkewIntMatrix) -> OutputRecord:
        return cls(n=a.n, index=index, matrix=a.rows)

    @classmethod
    def from_classification(cls, index: int, rec: ClassificationRecord) -> OutputRecord:
        return cls(
            n=rec.matrix.n,
            index=index,
            matrix=rec.matrix.rows,
            is_shadow=rec.is_shadow,
            is_essential=rec.is_essential,
            self_opposite=rec.self_opposite,
            filter_verdict=rec.filter,
            nullspace_basis=tuple(rec.x.basis()),
            kernel_parameter_count=rec.c_generic.nparams,
            witness=rec.witness,
        )

    @property
    def classified(self) -> bool:
        return self.is_shadow is not None


def _fraction_out(v: Fraction) -> int | str:
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _fraction_in(v: int | str) -> Fraction:
    return Fraction(v)


def _verdict_out(v: FilterVerdict) -> dict:
    if v.kind in (VerdictKind.ZERO_ENTRY, VerdictKind.OPPOSITE_PAIR):
        detail = [i + 1 for i in v.detail]
    else:
        detail = list(v.detail)
    return {"kind": v.kind.value, "detail": detail}


def _verdict_in(d: dict) -> FilterVerdict:
    kind = VerdictKind(d["kind"])
    detail = tuple(int(i) for i in d.get("detail", ()))
    if kind in (VerdictKind.ZERO_ENTRY, VerdictKind.OPPOSITE_PAIR):
        detail = tuple(i - 1 for i in detail)
    return FilterVerdict(kind, detail)


def to_json(rec: OutputRecord) -> str:
    d: dict = {"n": rec.n, "index": rec.index, "matrix": [list(r) for r in rec.matrix]}
    if rec.classified:
        d.update(
            is_shadow=rec.is_shadow,
            is_essential=rec.is_essential,
            self_opposite=rec.self_opposite,
            filter_verdict=_verdict_out(rec.filter_verdict),
            nullspace_basis=[[_fraction_out(v) for v in vec] for vec in rec.nullspace_basis],
            kernel_parameter_count=rec.kernel_parameter_count,
            witness=[list(r) for r in rec.witness] if rec.witness is not None else None,
        )
    return json.dumps(d, ensure_ascii=False)


def parse_record(line: str) -> OutputRecord:
    try:
        d = json.loads(line)
        matrix = tuple(tuple(int(v) for v in r) for r in d["matrix"])
        n = int(d.get("n", len(matrix)))
        index = int(d.get("index", 0))
    except (ValueError, KeyError, TypeError) as exc:
        raise FormatError(f"bad record: {exc}") from None
    if n != len(matrix):
        raise FormatError(f"record says n={n} but matrix has {len(matrix)} rows")
    if "is_shadow" not in d:
        return OutputRecord(n=n, index=index, matrix=matrix)
    witness = d.get("witness")
    return OutputRecord(
        n=n,
        index=index,
        matrix=matrix,
        is_shadow=bool(d["is_shadow"]),
        is_essential=bool(d["is_essential"]),
        self_opposite=bool(d["self_opposite"]),
        filter_verdict=_verdict_in(d["filter_verdict"]),
        nullspace_basis=tuple(tuple(_fraction_in(v) for v in vec) for vec in d["nullspace_basis"]),
        kernel_parameter_count=int(d["kernel_parameter_count"]),
        witness=tuple(tuple(int(v) for v in r) for r in witness) if witness is not None else None,
    )


# text and LaTeX layouts: matrix, generic x as a column, upper triangle of C


def _grid(cells: Sequence[Sequence[str]]) -> list[str]:
    width = max((len(c) for row in cells for c in row), default=1)
    return ["[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells]


def _x_from_basis(basis: Sequence[Sequence[Fraction]], n: int) -> list[LinearForm]:
    return [LinearForm.from_dict({k: vec[i] for k, vec in enumerate(basis)}) for i in range(n)]


def _x_forms(rec: OutputRecord, detail: ClassificationRecord | None) -> list[LinearForm] | None:
    if detail is not None:
        return list(detail.x.entries)
    if rec.nullspace_basis is not None:
        return _x_from_basis(rec.nullspace_basis, rec.n)
    return None


def render_text(rec: OutputRecord, detail: ClassificationRecord | None = None) -> str:
    n = rec.n
    out = [f"({rec.index})"]
    if rec.classified:
        flags = []
        flags.append("shadow" if rec.is_shadow else "not a shadow")
        if rec.is_essential:
            flags.append("essential")
        if rec.self_opposite:
            flags.append("self-opposite")
        flags.append(f"filter={rec.filter_verdict.kind.value}")
        out[0] += " " + ", ".join(flags)
    out += _grid([[str(v) for v in r] for r in rec.matrix])
    x = _x_forms(rec, detail)
    if x is not None:
        out.append("x =")
        out += _grid([[f.render("v")] for f in x])
    if detail is not None:
        c = detail.c_generic
        out.append("C =")
        out += _grid([
            [c.entry(i, j).render("c") if j >= i else "·" for j in range(n)] for i in range(n)
        ])
    if rec.witness is not None:
        out.append("witness =")
        out += _grid([[str(v) for v in r] for r in rec.witness])
    return "\n".join(out) + "\n"


def latex_form(f: LinearForm, symbol: str) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for pos, (k, c) in enumerate(f.terms):
        name = f"{symbol}_{{{k + 1}}}"
        mag = abs(c)
        if mag == 1:
            body = name
        elif mag.denominator == 1:
            body = f"{mag.numerator} {name}"
        else:
            body = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}} {name}"
        if pos == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def _bmatrix(cells: Sequence[Sequence[str]]) -> str:
    body = "\n".join("    " + " & ".join(row) + " \\\\" for row in cells)
    return "  \\begin{bmatrix}\n" + body + "\n  \\end{bmatrix}"


def render_latex(rec: OutputRecord, detail: ClassificationRecord | None = None) -> str:
    n = rec.n
    blocks = [_bmatrix([[str(v) for v in r] for r in rec.matrix])]
    x = _x_forms(rec, detail)
    if x is not None:
        blocks.append(_bmatrix([[latex_form(f, "v")] for f in x]))
    if detail is not None:
        c = detail.c_generic
        blocks.append(_bmatrix([
            [latex_form(c.entry(i, j), "c") if j >= i else "\\cdot" for j in range(n)]
            for i in range(n)
        ]))
    return f"% ({rec.index})\n$\n" + "\n".join(blocks) + "\n$\n"


def render_record(rec: OutputRecord, fmt: str, detail: ClassificationRecord | None = None) -> str:
    if fmt == "jsonl":
        return to_json(rec) + "\n"
    if fmt == "text":
        return render_text(rec, detail)
    if fmt == "latex":
        return render_latex(rec, detail)
    if fmt == "csv":
        raise FormatError("csv output carries counts only; use render_report")
    raise FormatError(f"unknown format {fmt!r}")


@dataclass
class EnumerationReport:
    rows: list[tuple[int, int, int | None, int | None]] = field(default_factory=list)

    def add(self, n: int, records: Iterable[OutputRecord]) -> None:
        records = list(records)
        if records and records[0].classified:
            shadows = sum(1 for r in records if r.is_shadow)
            essential = sum(1 for r in records if r.is_essential)
            self.rows.append((n, len(records), shadows, essential))
        else:
            self.rows.append((n, len(records), None, None))

    def render(self, fmt: str = "csv") -> str:
        def cell(v: int | None) -> str:
            return "" if v is None else str(v)

        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["n", "shades", "shadows", "essential"])
            for row in self.rows:
                w.writerow([cell(v) for v in row])
            return buf.getvalue()
        if fmt == "text":
            lines = [f"{'n':>3} {'shades':>8} {'shadows':>8} {'essential':>10}"]
            lines += [f"{n:>3} {cell(a):>8} {cell(b):>8} {cell(c):>10}" for n, a, b, c in self.rows]
            return "\n".join(lines) + "\n"
        raise FormatError(f"unknown report format {fmt!r}")

