"""Extract the numbered (A, x, C) items from a LaTeX source into a JSON fixture.

Every item is introduced by ``\\stepcounter{mac}`` and holds three bmatrix
blocks: the shade A, the generic null vector x, and the upper triangle of the
generic symmetric C (``\\cdot`` below the diagonal).  Forms are stored as
``{"param": "coefficient"}`` with 1-based parameter numbers; an unsubscripted
``v``/``c`` is parameter 1.

    python scripts/extract_reference_lists.py SOURCE.md tests/fixtures/reference_essential.json
"""

from __future__ import annotations

import argparse
import json
import re
from fractions import Fraction
from pathlib import Path

BMATRIX = re.compile(r"\\begin\{bmatrix\}(.*?)\\end\{bmatrix\}", re.S)
FRAC = re.compile(r"\\frac\{\s*(-?\d+)\s*\}\{\s*(\d+)\s*\}")
TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?([vc])(?:_\{(\d+)\})?")


def parse_form(text: str) -> dict[str, str]:
    s = FRAC.sub(r"\1/\2", text)
    s = re.sub(r"\s+", "", s)
    s = s.replace("+-", "-").replace("--", "+")
    if s in ("0", ""):
        return {}
    coeffs: dict[int, Fraction] = {}
    pos = 0
    while pos < len(s):
        m = TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse form {text!r} at {s[pos:]!r}")
        sign, num, _, idx = m.groups()
        c = Fraction(num) if num else Fraction(1)
        if sign == "-":
            c = -c
        k = int(idx) if idx else 1
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
        pos = m.end()
    return {str(k): str(v) for k, v in sorted(coeffs.items()) if v}


def cells(block: str) -> list[list[str]]:
    rows = [r.strip() for r in block.split("\\\\")]
    return [[c.strip() for c in r.split("&")] for r in rows if r]


def parse_items(source: str) -> list[dict]:
    chunks = source.split("\\stepcounter{mac}")[1:]
    items = []
    counters: dict[int, int] = {}
    for chunk in chunks:
        blocks = BMATRIX.findall(chunk)[:3]
        if len(blocks) != 3:
            raise ValueError("item without three bmatrix blocks")
        a = [[int(v) for v in row] for row in cells(blocks[0])]
        n = len(a)
        x = [parse_form(row[0]) for row in cells(blocks[1])]
        c_rows = cells(blocks[2])
        upper = [parse_form(c_rows[i][j]) for i in range(n) for j in range(i, n)]
        counters[n] = counters.get(n, 0) + 1
        items.append({"n": n, "item": counters[n], "matrix": a, "x": x, "c_upper": upper})
    return items


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("source", type=Path)
    ap.add_argument("output", type=Path)
    args = ap.parse_args()
    items = parse_items(args.source.read_text(encoding="utf-8"))
    args.output.write_text(json.dumps(items, indent=1) + "\n", encoding="utf-8")
    by_n: dict[int, int] = {}
    for it in items:
        by_n[it["n"]] = by_n.get(it["n"], 0) + 1
    print(f"wrote {len(items)} items: " + ", ".join(f"n={n}: {k}" for n, k in sorted(by_n.items())))


if __name__ == "__main__":
    main()
