from __future__ import annotations

import json

import pytest
from hypothesis import given, settings

from pshadows.classifier import classify
from pshadows.cli import main, paper_order
from pshadows.core import SkewIntMatrix
from pshadows.records import (
    EnumerationReport,
    FormatError,
    OutputRecord,
    parse_record,
    render_record,
    to_json,
)

from conftest import M, reference_items, shades, skew_matrices

ITEM1 = SkewIntMatrix(reference_items()[0]["matrix"])


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestRecords:
    def test_json_round_trip_unclassified(self):
        rec = OutputRecord.from_matrix(3, M)
        assert parse_record(to_json(rec)) == rec

    @settings(max_examples=40, deadline=None)
    @given(a=skew_matrices(max_n=4))
    def test_json_round_trip_classified(self, a):
        rec = OutputRecord.from_classification(1, classify(a))
        assert parse_record(to_json(rec)) == rec

    def test_bad_record(self):
        with pytest.raises(FormatError):
            parse_record('{"n": 3, "matrix": [[0]]}')
        with pytest.raises(FormatError):
            parse_record("not json")

    def test_text_zero1(self):
        z = SkewIntMatrix.zero(1)
        txt = render_record(OutputRecord.from_classification(1, classify(z)), "text", classify(z))
        assert "[0]" in txt and "v₁" in txt and "c₁" in txt

    def test_text_markov(self):
        rec = classify(M)
        txt = render_record(OutputRecord.from_classification(1, rec), "text", rec)
        assert txt.count("[") >= 3 + 3 + 3
        assert "essential" in txt and "self-opposite" in txt

    def test_latex_item1(self):
        rec = classify(ITEM1)
        tex = render_record(OutputRecord.from_classification(1, rec), "latex", rec)
        assert tex.count("\\begin{bmatrix}") == 3
        assert tex.count("\\cdot") == 10

    def test_csv_rejected_per_record(self):
        with pytest.raises(FormatError):
            render_record(OutputRecord.from_matrix(1, M), "csv")
        with pytest.raises(FormatError):
            render_record(OutputRecord.from_matrix(1, M), "yaml")

    def test_report(self):
        rep = EnumerationReport()
        rep.add(3, [OutputRecord.from_classification(i, classify(m)) for i, m in enumerate(shades(3), 1)])
        assert rep.render("csv") == "n,shades,shadows,essential\n3,5,5,4\n"
        assert "5" in rep.render("text")


class TestCli:
    def test_enumerate_n3(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "3", "--classify", "--format", "jsonl", "--threads", "1")
        recs = [json.loads(line) for line in out.splitlines()]
        assert code == 0 and len(recs) == 5
        assert sum(r["is_shadow"] for r in recs) == 5
        assert sum(r["is_essential"] for r in recs) == 4

    def test_enumerate_n5_essential(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "5", "--essential-only", "--threads", "1")
        assert code == 0 and len(out.splitlines()) == 26

    def test_enumerate_n1(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "1")
        assert code == 0 and json.loads(out) == {"n": 1, "index": 1, "matrix": [[0]]}

    def test_report(self, capsys):
        code, out, _ = run(capsys, "report", "--max-n", "5", "--threads", "1")
        lines = out.splitlines()
        assert code == 0
        assert lines[3] == "3,5,5,4" and lines[5] == "5,138,65,26"

    def test_verify(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "4", "--threads", "1")
        assert code == 0 and "PASS" in out

    def test_bad_n(self, capsys):
        code, _, err = run(capsys, "enumerate", "--n", "9")
        assert code == 1 and "error" in err

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["enumerate"])
        assert exc.value.code == 2

    def test_classify_round_trip(self, capsys, tmp_path):
        src = tmp_path / "in.jsonl"
        assert main(["enumerate", "--n", "4", "--out", str(src), "--threads", "1"]) == 0
        code, out, _ = run(capsys, "classify", "--in", str(src), "--threads", "1")
        recs = [parse_record(line) for line in out.splitlines()]
        assert code == 0 and len(recs) == 12
        assert sum(r.is_essential for r in recs) == 7

    def test_classify_rejects_non_shade(self, capsys, tmp_path):
        src = tmp_path / "in.jsonl"
        src.write_text(json.dumps({"matrix": [[0, 1], [-1, 0]]}) + "\n")
        code, _, err = run(capsys, "classify", "--in", str(src))
        assert code == 1 and "error" in err

    def test_paper_order(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "4", "--paper-order", "--threads", "1")
        flags = [json.loads(line)["is_essential"] for line in out.splitlines()]
        assert code == 0 and flags == [True] * 7 + [False] * 5
        ordered = paper_order([classify(m) for m in shades(4)])
        assert [r.is_essential for r in ordered] == flags

    @pytest.mark.parametrize("fmt", ["jsonl", "text", "latex", "csv"])
    def test_threads_byte_identical(self, capsys, fmt):
        outs = set()
        for t in ("1", "2", "8"):
            code, out, _ = run(capsys, "enumerate", "--n", "5", "--classify", "--format", fmt, "--threads", t)
            assert code == 0
            outs.add(out)
        assert len(outs) == 1
