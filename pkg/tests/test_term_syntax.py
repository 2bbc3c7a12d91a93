"""람다 항 텍스트 문법 테스트."""

import pytest

from src.core.exceptions import NonLinearError, TermSyntaxError, UnboundVariableError
from src.counting.enumeration import iter_npt
from src.io_formats.term_syntax import TokenType, parse_term, print_term, tokenize
from src.lambda_core.terms import App, Lam, LinearTerm, Var, is_planar
from tests.conftest import chain_term, chain_text


class TestTokenize:
    def test_types_and_positions(self):
        tokens = tokenize(r"\x. x")
        assert [t.type for t in tokens] == [
            TokenType.LAMBDA,
            TokenType.NAME,
            TokenType.DOT,
            TokenType.NAME,
            TokenType.EOF,
        ]
        assert [t.position for t in tokens] == [0, 1, 2, 4, 5]

    def test_unicode_lambda(self):
        assert tokenize("λx. x")[0].type is TokenType.LAMBDA

    def test_unknown_character(self):
        with pytest.raises(TermSyntaxError) as exc_info:
            tokenize("[x] x + x")
        assert exc_info.value.position == 6


class TestParse:
    def test_value_open_example(self):
        t = parse_term(r"[x] \y. y x")
        assert t.body == Lam(App(Var(0), Var(1)))
        assert t.context == ("x",)

    def test_closed_identity(self):
        t = parse_term(r"\x. x")
        assert t == LinearTerm(Lam(Var(0)))
        assert t.context == ()

    def test_non_planar_parses(self):
        assert not is_planar(parse_term(r"[x] \y. x y"))

    def test_application_is_left_associative(self):
        t = parse_term("[a, b, c] a b c")
        assert t.body == App(App(Var(0), Var(1)), Var(2))

    def test_lambda_body_extends_right(self):
        assert parse_term(r"\x. \y. y x").body == Lam(Lam(App(Var(0), Var(1))))

    def test_multiple_binders(self):
        assert parse_term(r"\x y. y x") == parse_term(r"\x. \y. y x")

    def test_unicode_input(self):
        assert parse_term("[x] λy. y x") == parse_term(r"[x] \y. y x")

    def test_empty_prefix(self):
        assert parse_term(r"[] \x. x") == parse_term(r"\x. x")

    def test_trailing_lambda_argument(self):
        assert parse_term(r"[x] x \y. y") == parse_term(r"[x] x (\y. y)")

    def test_context_order(self):
        t = parse_term("[y, x] y x")
        assert t.body == App(Var(0), Var(1))
        assert t.context == ("y", "x")

    def test_shadowed_binder_leaves_outer_unused(self):
        with pytest.raises(NonLinearError) as exc_info:
            parse_term(r"\x. \x. x (\y. y)")
        assert exc_info.value.uses == 0


class TestParseErrors:
    @pytest.mark.parametrize(
        ("text", "position"),
        [
            ("[x] x)", 5),
            ("[x] (x", 6),
            (r"\. x", 1),
            (r"\x x", 4),
            ("[x x", 3),
            ("", 0),
        ],
    )
    def test_syntax_positions(self, text, position):
        with pytest.raises(TermSyntaxError) as exc_info:
            parse_term(text)
        assert exc_info.value.position == position

    def test_duplicate_prefix(self):
        with pytest.raises(TermSyntaxError) as exc_info:
            parse_term("[x, x] x x")
        assert exc_info.value.position == 4

    def test_unused_binder(self):
        with pytest.raises(NonLinearError) as exc_info:
            parse_term(r"\x. \y. x")
        assert exc_info.value.variable == "y"
        assert exc_info.value.uses == 0

    def test_binder_used_twice(self):
        with pytest.raises(NonLinearError) as exc_info:
            parse_term(r"\x. x x")
        assert exc_info.value.variable == "x"

    def test_free_variable_used_twice(self):
        with pytest.raises(NonLinearError):
            parse_term("[x] x x")

    def test_unused_context_name(self):
        with pytest.raises(NonLinearError) as exc_info:
            parse_term("[x, y] x")
        assert exc_info.value.variable == "y"

    def test_unbound(self):
        with pytest.raises(UnboundVariableError) as exc_info:
            parse_term("x")
        assert exc_info.value.variable == "x"


class TestPrint:
    def test_value_open(self):
        assert print_term(parse_term(r"[x] \y. y x")) == r"[x] \y. y x"

    def test_closed(self):
        assert print_term(parse_term(r"\a. a")) == r"\x. x"

    def test_spine_is_flattened(self):
        text = r"[x] x (\y. \z. z y) (\y. y)"
        assert print_term(parse_term(r"[x] (x (\p. \q. q p)) (\r. r)")) == text

    def test_binder_names_avoid_context(self):
        assert print_term(parse_term(r"[y] \a. a y")) == r"[y] \x. x y"

    def test_lambda_head_is_wrapped(self):
        t = LinearTerm(App(Lam(Var(0)), Var(0)), ("x",))
        assert print_term(t) == r"[x] (\y. y) x"

    def test_roundtrip_enumerated(self):
        for t, _ in iter_npt(5):
            text = print_term(t)
            again = parse_term(text)
            assert again == t
            assert print_term(again) == text


class TestDeepInput:
    """괄호가 천 겹 넘게 중첩되어도 파서와 프린터가 끝까지 간다."""

    LENGTH = 1200

    def test_parse(self):
        t = parse_term(chain_text(self.LENGTH))
        assert t == chain_term(self.LENGTH)
        assert t.leaf_count == self.LENGTH + 1

    def test_print_roundtrip(self):
        t = chain_term(self.LENGTH)
        assert parse_term(print_term(t)) == t

    def test_missing_paren_is_syntax_error(self):
        with pytest.raises(TermSyntaxError):
            parse_term(chain_text(self.LENGTH)[:-1])
