"""End-to-end command line checks, run in process through main()."""

from __future__ import annotations

import json

import pytest

import veer.cli as cli
from veer.braid import parse
from veer.cli import UsageError, classify_word, main, run_batch
from veer.reconstruct import general_veering


def _json_line(capsys) -> dict:
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 1
    return json.loads(out[0])


def test_classify_text_output(capsys):
    assert main(["classify", "1 2"]) == 0
    out = capsys.readouterr().out
    assert "type         : periodic" in out
    assert "verdict      : Right" in out
    assert "method       : periodic-rule" in out
    assert "k=2" in out


def test_classify_json_and_separator(capsys):
    assert main(["classify", "--format", "json", "--", "-1 -2"]) == 0
    record = _json_line(capsys)
    assert record["input"] == "-1 -2"
    assert record["thurston_type"] == "periodic"
    assert record["verdict"] == "Left"
    assert record["invariants"] == {"k": -2}


def test_classify_methods(capsys):
    assert main(["classify", "1 1", "--method", "both", "--format", "json"]) == 0
    record = _json_line(capsys)
    assert record["method"] == "cross-checked"
    assert record["verdict"] == "Right"
    inv = record["invariants"]
    assert (inv["k"], inv["m"]) == (0, 2)
    assert (inv["k_1"], inv["k_2"], inv["k_3"]) == (0, 0, 0)
    assert inv["boundary_twist"] == "0"

    assert main(["classify", "1 1", "--method", "general", "--format", "json"]) == 0
    record = _json_line(capsys)
    assert record["method"] == "general-rule"
    assert record["verdict"] == "Right"

    # the special rules have no case for a pseudo-anosov word
    assert main(["classify", "1 -2", "--method", "reduced-only"]) == 1
    err = capsys.readouterr().err
    assert "reduced-only" in err


def test_classify_verbose_and_oracle(capsys):
    assert main(
        ["classify", "1", "--verbose", "--oracle", "--format", "json"]
    ) == 0
    record = _json_line(capsys)
    assert record["burau"] == [
        ["0", "t", "0"],
        ["1", "-t + 1", "0"],
        ["0", "0", "1"],
    ]
    assert record["reduced_burau"] == [["-t", "1"], ["0", "1"]]
    assert record["intersection_table"] == [[1, 1, 0], [1, 2, 1], [0, 1, 1]]
    gens = record["generators"]
    assert [g["generator"] for g in gens] == ["y1", "y2", "y3"]
    assert gens[0]["image"] == "y2"
    assert all(g["exact"] for g in gens)


def test_burau_command(capsys):
    assert main(["burau", "1", "--format", "json"]) == 0
    record = _json_line(capsys)
    assert record["representation"] == "unreduced"
    assert record["matrix"][0] == ["0", "t", "0"]

    assert main(["burau", "Delta^2", "--reduced", "--format", "json"]) == 0
    record = _json_line(capsys)
    assert record["matrix"] == [["t^3", "0"], ["0", "t^3"]]

    assert main(["burau", "1"]) == 0
    out = capsys.readouterr().out
    assert out.count("[") == 3  # one bracketed row per line


def test_intersect_command(capsys):
    assert main(["intersect", "", "--format", "json"]) == 0
    record = _json_line(capsys)
    assert record["table"] == [[1, 0, 1], [1, 1, 0], [0, 1, 1]]


def test_reconstruct_command(capsys):
    assert main(["reconstruct", "Delta^2", "--format", "json"]) == 0
    record = _json_line(capsys)
    assert record["verdict"] == "Right"
    assert record["boundary_twist"] == "1"
    assert [g["k"] for g in record["generators"]] == [1, 1, 1]
    assert [g["image"] for g in record["generators"]] == ["y1", "y2", "y3"]


def test_parse_error_exit_code(capsys):
    assert main(["classify", "1 9"]) == 1
    assert "parse error" in capsys.readouterr().err


def test_bad_usage_exits_one():
    with pytest.raises(SystemExit) as exc:
        main(["classify", "1", "--format", "yaml"])
    assert exc.value.code == 1


def test_internal_disagreement_exits_two(monkeypatch, capsys):
    ### CONVENTION: a broken cross-check is a defect, not an input error.
    monkeypatch.setattr(cli, "general_veering", lambda w: general_veering(w.inverse()))
    assert main(["classify", "1 1", "--method", "both"]) == 2
    assert "internal consistency failure" in capsys.readouterr().err


def test_classify_word_rejects_reduced_only_on_pa():
    w = parse("1 -2")
    with pytest.raises(UsageError):
        classify_word("1 -2", w, method="reduced-only")


def test_json_record_is_stable_under_reparse(capsys):
    words = ["1 2 -1 -2 1", "Delta^-2 2 2", "-2 -2 1", "1 -2 1 -2"]
    for text in words:
        assert main(["classify", text, "--format", "json", "--oracle"]) == 0
        first = _json_line(capsys)
        assert main(["classify", first["word"], "--format", "json", "--oracle"]) == 0
        second = _json_line(capsys)
        first.pop("input")
        second.pop("input")
        assert first == second


def test_batch_file_roundtrip(tmp_path, capsys):
    src = tmp_path / "words.txt"
    dst = tmp_path / "out.jsonl"
    src.write_text(
        "# comment lines and blanks are skipped\n"
        "\n"
        "1 2\n"
        "bad word\n"
        "-1 -1\n",
        encoding="utf-8",
    )
    assert main(["batch", str(src), str(dst)]) == 1
    summary = json.loads(capsys.readouterr().out)
    assert summary["total"] == 3
    assert summary["errors"] == 1
    assert summary["verdicts"]["Right"] == 1
    assert summary["verdicts"]["Left"] == 1

    records = [json.loads(line) for line in dst.read_text().splitlines()]
    assert [r.get("input") for r in records] == ["1 2", "bad word", "-1 -1"]
    assert "error" in records[1]
    assert records[0]["verdict"] == "Right"
    assert records[2]["verdict"] == "Left"


def test_batch_stdin_to_stdout(monkeypatch, capsys):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("1\n2 2\n"))
    assert main(["batch", "-"]) == 0
    captured = capsys.readouterr()
    records = [json.loads(line) for line in captured.out.splitlines()]
    assert [r["verdict"] for r in records] == ["Right", "Right"]
    summary = json.loads(captured.err)
    assert summary == {
        "total": 2,
        "errors": 0,
        "verdicts": {"Right": 2, "Left": 0, "Both": 0, "Neither": 0},
    }


def test_batch_empty_input(tmp_path, capsys):
    src = tmp_path / "empty.txt"
    src.write_text("# only a comment\n", encoding="utf-8")
    assert main(["batch", str(src)]) == 0
    captured = capsys.readouterr()
    assert captured.out == ""
    assert json.loads(captured.err)["total"] == 0


def test_run_batch_preserves_order():
    records, summary = run_batch(["2", "-2", "", "# skip", "1 -2"])
    assert [r["input"] for r in records] == ["2", "-2", "1 -2"]
    assert [r["verdict"] for r in records] == ["Right", "Left", "Neither"]
    assert summary["errors"] == 0
