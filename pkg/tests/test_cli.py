"""cli.py 테스트."""

import io
import logging
from unittest.mock import patch

import pytest

from src.cli import build_parser, main, run
from src.infra.logger import set_level
from src.io_formats.term_syntax import parse_term
from tests.conftest import chain_text


def invoke(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


class TestCount:
    def test_normal_table(self):
        code, text = invoke("count", "--max-size", "4", "--max-vars", "2")
        assert code == 0
        assert text.splitlines() == [
            "i\\n\t1\t2\t3\t4",
            "0\t1\t2\t9\t54",
            "1\t1\t2\t9\t54",
            "2\t0\t1\t6\t40",
        ]

    def test_neutral_table(self):
        code, text = invoke("count", "--kind", "neutral", "--max-size", "4", "--max-vars", "2")
        assert code == 0
        assert text.splitlines() == [
            "i\\n\t0\t1\t2\t3",
            "1\t1\t1\t3\t14",
            "2\t0\t1\t4\t20",
        ]

    def test_defaults_come_from_settings(self, monkeypatch):
        monkeypatch.setenv("PLAM_COUNTING__MAX_SIZE", "3")
        monkeypatch.setenv("PLAM_COUNTING__MAX_VARS", "1")
        _, text = invoke("count")
        assert text.splitlines()[0] == "i\\n\t1\t2\t3"
        assert len(text.splitlines()) == 3

    def test_negative_size_is_domain_error(self, capsys):
        code, _ = invoke("count", "--max-size", "-1")
        assert code == 1
        assert "error[COUNTING]" in capsys.readouterr().err


class TestSeries:
    def test_all_match(self):
        code, text = invoke("series", "--terms", "5")
        lines = text.splitlines()
        assert code == 0
        assert lines[0] == "n\trecurrence\tclosed_form\ttutte\tstatus"
        assert lines[4] == "4\t54\t54\t54\tMATCH"
        assert len(lines) == 6


class TestEnumerate:
    def test_lines(self):
        code, text = invoke("enumerate", "--size", "2")
        assert code == 0
        found = {parse_term(line) for line in text.splitlines()}
        assert found == {parse_term(r"[x] x (\y. y)"), parse_term(r"[x] \y. y x")}

    def test_numbered_text(self):
        _, text = invoke("enumerate", "--size", "3", "--format", "text")
        lines = text.splitlines()
        assert len(lines) == 9
        assert lines[0].startswith("1  ")

    def test_closed_terms(self):
        _, text = invoke("enumerate", "--size", "2", "--vars", "0")
        assert [parse_term(line) for line in text.splitlines()] != []
        assert all(parse_term(line).arity == 0 for line in text.splitlines())


class TestConversion:
    def test_to_map(self):
        code, text = invoke("to-map", r"[x] \y. y x")
        assert code == 0
        assert text == "edges 1\nvertex: 1 -1\nroot 1\n"

    def test_to_term_from_file(self, tmp_path):
        path = tmp_path / "isthmus.map"
        path.write_text("edges 1\nvertex: 1\nvertex: -1\nroot 1\n")
        code, text = invoke("to-term", str(path))
        assert code == 0
        assert parse_term(text.strip()) == parse_term(r"[x] x (\y. y)")

    def test_to_term_from_stdin(self, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("edges 0\nroot none\n"))
        code, text = invoke("to-term", "-")
        assert code == 0
        assert text == "[x] x\n"

    def test_roundtrip_through_files(self, tmp_path):
        source = r"[x] \y. (y (\z. z)) (\w. \u. \v. v (u (w x)))"
        _, map_text = invoke("to-map", source)
        path = tmp_path / "m.map"
        path.write_text(map_text)
        _, term_text = invoke("to-term", str(path))
        assert parse_term(term_text.strip()) == parse_term(source)

    @pytest.mark.parametrize(
        ("argv", "code"),
        [
            (("to-map", "[x] x x"), "NON_LINEAR"),
            (("to-map", "[x] (x"), "TERM_SYNTAX"),
            (("to-map", r"[x] \y. x y"), "NOT_NPT"),
            (("to-map", "y"), "UNBOUND_VARIABLE"),
        ],
    )
    def test_term_errors(self, capsys, argv, code):
        exit_code, text = invoke(*argv)
        assert exit_code == 1
        assert text == ""
        assert f"error[{code}]" in capsys.readouterr().err

    def test_missing_map_file(self, tmp_path, capsys):
        code, _ = invoke("to-term", str(tmp_path / "none.map"))
        assert code == 1
        assert "error[IO_ERROR]" in capsys.readouterr().err

    def test_non_planar_map(self, tmp_path, capsys):
        path = tmp_path / "torus.map"
        path.write_text("edges 2\nvertex: 1 2 -1 -2\nroot 1\n")
        code, _ = invoke("to-term", str(path))
        assert code == 1
        assert "error[NON_PLANAR]" in capsys.readouterr().err

    def test_deep_term_roundtrip(self, tmp_path):
        source = chain_text(520)
        code, map_text = invoke("to-map", source)
        assert code == 0
        assert map_text.startswith("edges 520\n")
        path = tmp_path / "deep.map"
        path.write_text(map_text)
        code, term_text = invoke("to-term", str(path))
        assert code == 0
        assert parse_term(term_text.strip()) == parse_term(source)

    def test_deep_unclosed_term_is_syntax_error(self, capsys):
        code, _ = invoke("to-map", chain_text(1200)[:-1])
        assert code == 1
        assert "error[TERM_SYNTAX]" in capsys.readouterr().err


class TestVerify:
    def test_small(self):
        code, text = invoke("verify", "--max-size", "3")
        assert code == 0
        assert text.splitlines() == [
            "size\tterms\tmaps",
            "1\t1\t1",
            "2\t2\t2",
            "3\t9\t9",
            "identities\t8",
            "OK",
        ]


class TestRenderAndTrace:
    def test_render_term(self, tmp_path):
        out = tmp_path / "d.dot"
        code, text = invoke("render", "--term", r"[x] x (\y. y)", "--out", str(out))
        assert code == 0
        assert text == ""
        assert out.read_text().startswith("digraph diagram {")

    def test_render_map(self, tmp_path):
        source = tmp_path / "loop.map"
        source.write_text("edges 1\nvertex: 1 -1\nroot 1\n")
        out = tmp_path / "m.dot"
        assert invoke("render", "--map", str(source), "--out", str(out))[0] == 0
        assert out.read_text().startswith("digraph map {")

    def test_render_bad_target(self, tmp_path, capsys):
        target = tmp_path / "missing" / "d.dot"
        code, _ = invoke("render", "--term", "[x] x", "--out", str(target))
        assert code == 1
        assert "error[IO_ERROR]" in capsys.readouterr().err

    def test_trace_term(self):
        code, text = invoke("trace", "--term", r"[x] \y. y x")
        assert code == 0
        assert text.splitlines()[0] == "⊙0 / VO_1  (e=1, o=1, value-open)"

    def test_trace_map(self, tmp_path):
        source = tmp_path / "isthmus.map"
        source.write_text("edges 1\nvertex: 1\nvertex: -1\nroot 1\n")
        _, text = invoke("trace", "--map", str(source))
        assert text.splitlines()[0].startswith("⊕ / FO")


class TestUsage:
    def test_command_required(self):
        assert invoke()[0] == 2

    def test_bad_choice(self):
        assert invoke("count", "--kind", "weird")[0] == 2

    def test_render_needs_source(self):
        assert invoke("render", "--out", "x.dot")[0] == 2

    def test_help(self, capsys):
        assert invoke("--help")[0] == 0
        assert "plam" in capsys.readouterr().out

    def test_parser_lists_commands(self):
        help_text = build_parser().format_help()
        commands = ["count", "series", "enumerate", "to-map"]
        commands += ["to-term", "verify", "render", "trace"]
        for command in commands:
            assert command in help_text

    def test_verbose_sets_info(self):
        root = logging.getLogger("src")
        previous = root.level
        try:
            assert invoke("-v", "series", "--terms", "2")[0] == 0
            assert root.level == logging.INFO
        finally:
            set_level(previous)


class TestMain:
    def test_exit_code(self, capsys):
        with (
            patch("sys.argv", ["plam", "series", "--terms", "3"]),
            pytest.raises(SystemExit) as exc_info,
        ):
            main()
        assert exc_info.value.code == 0
        assert "MATCH" in capsys.readouterr().out
