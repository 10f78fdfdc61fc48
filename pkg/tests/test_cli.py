import json
import pathlib

import pytest

from ordfact.cli import main, run

FIXTURES = pathlib.Path(__file__).parent / "fixtures"
GOLDEN = pathlib.Path(__file__).parent / "golden"


def fixture(name):
    return str(FIXTURES / name)


def golden(name):
    return (GOLDEN / name).read_text(encoding="utf-8")


def run_cli(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGoldens:
    @pytest.mark.parametrize(
        "argv, name",
        [
            (("check", fixture("adj.json")), "check_adj.json"),
            (("factorize", fixture("adj.json")), "factorize_full_adj.json"),
            (
                ("factorize", fixture("adj.json"), "--flavor", "closed"),
                "factorize_closed_adj.json",
            ),
            (("diamond", fixture("adj.json")), "diamond_adj.json"),
            (
                ("quotient", fixture("indiscrete2.json")),
                "quotient_indiscrete2.json",
            ),
            (("concepts", fixture("id2.cxt")), "concepts_id2.json"),
        ],
    )
    def test_byte_identical(self, capsys, argv, name):
        code, out, err = run_cli(capsys, *argv)
        assert code == 0
        assert err == ""
        assert out == golden(name)

    def test_outputs_are_valid_sorted_json(self):
        for path in GOLDEN.glob("*.json"):
            text = path.read_text(encoding="utf-8")
            blob = json.loads(text)
            assert text == json.dumps(blob, indent=2, sort_keys=True) + "\n"


class TestExitCodes:
    def test_invalid_adjunction_is_one(self, capsys):
        code, out, err = run_cli(capsys, "check", fixture("bad.json"))
        assert code == 1
        assert out == ""
        assert "verification failure" in err and "'1'" in err

    def test_missing_file_is_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run_cli(capsys, "check", fixture("nope.json"))
        assert exc.value.code == 2

    def test_malformed_json_is_two(self, capsys, tmp_path):
        p = tmp_path / "garbage.json"
        p.write_text("{not json", encoding="utf-8")
        with pytest.raises(SystemExit) as exc:
            run_cli(capsys, "check", str(p))
        assert exc.value.code == 2

    def test_wrong_shape_is_two(self, capsys, tmp_path):
        p = tmp_path / "shape.json"
        p.write_text('{"left": 3}', encoding="utf-8")
        code, _, err = run_cli(capsys, "check", str(p))
        assert code == 2
        assert "malformed input" in err

    def test_bad_context_is_two(self, capsys, tmp_path):
        p = tmp_path / "bad.cxt"
        p.write_text("B\n\n1\n2\n\ng1\nm1\nm2\nXXX\n", encoding="utf-8")
        code, _, err = run_cli(capsys, "concepts", str(p))
        assert code == 2
        assert "line 9" in err

    def test_unknown_subcommand_is_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(["frobnicate"])
        assert exc.value.code == 2

    def test_main_raises_systemexit(self, capsys, monkeypatch):
        monkeypatch.setattr(
            "sys.argv", ["ordfact", "check", fixture("adj.json")]
        )
        with pytest.raises(SystemExit) as exc:
            main()
        assert exc.value.code == 0


class TestLaws:
    def test_small_run_passes(self, capsys):
        code, out, err = run_cli(
            capsys, "laws", "--seed", "3", "--size-cap", "3", "--samples", "5"
        )
        assert code == 0
        blob = json.loads(out)
        assert blob["passed"] is True
        assert blob["seed"] == 3

    def test_deterministic(self, capsys):
        args = ("laws", "--seed", "11", "--size-cap", "3", "--samples", "4")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second


class TestDotOutput:
    def test_quotient_dot(self, capsys, tmp_path):
        out_path = tmp_path / "q.dot"
        code, _, _ = run_cli(
            capsys,
            "quotient",
            fixture("indiscrete2.json"),
            "--dot",
            str(out_path),
        )
        assert code == 0
        dot = out_path.read_text(encoding="utf-8")
        assert dot.count("label=") == 1  # one class after collapsing p ~ q
        assert dot.count("->") == 0

    def test_concepts_dot_counts(self, capsys, tmp_path):
        out_path = tmp_path / "c.dot"
        code, _, _ = run_cli(
            capsys, "concepts", fixture("id2.cxt"), "--dot", str(out_path)
        )
        assert code == 0
        dot = out_path.read_text(encoding="utf-8")
        assert dot.count("label=") == 4  # one node per concept
        assert dot.count("->") == 4  # cover relation of the diamond

    def test_factorize_dot_matches_axis(self, capsys, tmp_path):
        out_path = tmp_path / "a.dot"
        code, out, _ = run_cli(
            capsys,
            "factorize",
            fixture("adj.json"),
            "--dot",
            str(out_path),
        )
        assert code == 0
        blob = json.loads(out)
        dot = out_path.read_text(encoding="utf-8")
        assert dot.count("label=") == len(blob["axis"]["elements"])
