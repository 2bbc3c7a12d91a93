"""골격, 선형 항, 평면 장식 테스트."""

import pytest

from src.core.exceptions import NonLinearError, TermError, UnboundVariableError
from src.lambda_core.names import default_context, fresh_names, is_valid_name
from src.lambda_core.skeleton import Abstract, Apply, Leaf
from src.lambda_core.terms import (
    App,
    Lam,
    LinearTerm,
    Step,
    Var,
    decorate_planar,
    decorate_rl,
    free_occurrences,
    is_planar,
    replace_at,
    skeleton_of,
    subterm_at,
)
from tests.conftest import chain_term, term


class TestNames:
    def test_order(self):
        names = fresh_names()
        assert [next(names) for _ in range(8)] == ["x", "y", "z", "w", "u", "v", "x1", "x2"]

    def test_avoid(self):
        names = fresh_names(avoid=("x", "z"))
        assert [next(names) for _ in range(3)] == ["y", "w", "u"]

    def test_default_context(self):
        assert default_context(2) == ("x", "y")

    @pytest.mark.parametrize(
        ("name", "valid"), [("x", True), ("x_1", True), ("X", False), ("1x", False)]
    )
    def test_is_valid_name(self, name, valid):
        assert is_valid_name(name) is valid


class TestSkeleton:
    def test_degrees(self):
        skeleton = Abstract(Apply(Leaf(), Leaf()))
        assert skeleton.degree == 1
        assert skeleton.leaf_count == 2
        assert skeleton.lambda_count == 1

    def test_rejects_closed_body_under_lambda(self):
        closed = Abstract(Leaf())
        with pytest.raises(TermError):
            Abstract(closed)

    def test_structural_equality(self):
        assert Apply(Leaf(), Abstract(Leaf())) == Apply(Leaf(), Abstract(Leaf()))


class TestLinearTerm:
    def test_alpha_equivalence_ignores_names(self):
        assert LinearTerm(Var(0), ("x",)) == LinearTerm(Var(0), ("q",))
        assert hash(LinearTerm(Var(0), ("x",))) == hash(LinearTerm(Var(0), ("q",)))

    def test_context_length_matters(self):
        assert LinearTerm(Lam(Var(0))) != LinearTerm(Var(0), ("x",))

    def test_unused_binder(self):
        with pytest.raises(NonLinearError):
            LinearTerm(Lam(Lam(Var(0))))

    def test_duplicate_use(self):
        with pytest.raises(NonLinearError) as exc_info:
            LinearTerm(App(Var(0), Var(0)), ("x",))
        assert exc_info.value.variable == "x"
        assert exc_info.value.uses == 2

    def test_unbound_index(self):
        with pytest.raises(UnboundVariableError):
            LinearTerm(Var(0))

    def test_duplicate_context_name(self):
        with pytest.raises(TermError):
            LinearTerm(App(Var(0), Var(1)), ("x", "x"))

    def test_leaf_count_and_arity(self):
        t = term(r"[x] \y. y x")
        assert t.leaf_count == 2
        assert t.arity == 1

    def test_str_uses_printer(self):
        assert str(LinearTerm(Lam(App(Var(0), Var(1))), ("x",))) == r"[x] \y. y x"


class TestPaths:
    def test_subterm_and_replace(self):
        body = Lam(App(Var(0), Var(1)))
        assert subterm_at(body, (Step.BODY, Step.ARG)) == Var(1)
        assert replace_at(body, (Step.BODY, Step.FUN), Var(7)) == Lam(App(Var(7), Var(1)))

    def test_bad_path(self):
        with pytest.raises(TermError):
            subterm_at(Var(0), (Step.BODY,))

    def test_free_occurrences_left_to_right(self):
        body = App(Var(0), Lam(App(Var(0), Var(2))))
        assert list(free_occurrences(body)) == [
            ((Step.FUN,), 0),
            ((Step.ARG, Step.BODY, Step.ARG), 1),
        ]


class TestDecoratePlanar:
    def test_closed_example(self):
        skeleton = Abstract(Abstract(Apply(Leaf(), Abstract(Apply(Leaf(), Leaf())))))
        assert decorate_planar(skeleton) == term(r"\x. \y. y (\z. z x)")
        assert decorate_planar(skeleton).arity == 0

    def test_leaf(self):
        assert decorate_planar(Leaf()) == term("[x] x")

    def test_application_of_two_leaves(self):
        result = decorate_planar(Apply(Leaf(), Leaf()))
        assert result == term("[a, b] a b")
        assert result.context == ("x", "y")

    @pytest.mark.parametrize(
        "skeleton",
        [
            Leaf(),
            Apply(Leaf(), Abstract(Leaf())),
            Abstract(Apply(Leaf(), Leaf())),
            Apply(Apply(Leaf(), Leaf()), Abstract(Apply(Leaf(), Abstract(Leaf())))),
        ],
    )
    def test_roundtrip_and_planar(self, skeleton):
        decorated = decorate_planar(skeleton)
        assert skeleton_of(decorated) == skeleton
        assert is_planar(decorated)
        assert decorated.arity == skeleton.degree


class TestIsPlanar:
    def test_planar(self):
        assert is_planar(term(r"[x] \y. y x"))
        assert is_planar(term("[x] x"))

    def test_non_planar(self):
        assert not is_planar(term(r"[x] \y. x y"))


class TestDecorateRl:
    def test_exchanged_application(self):
        assert decorate_rl(Abstract(Apply(Leaf(), Leaf()))) == term(r"[x] \y. x y")

    def test_leaf(self):
        assert decorate_rl(Leaf()) == term("[x] x")

    def test_identity_argument(self):
        assert decorate_rl(Apply(Leaf(), Abstract(Leaf()))) == term(r"[x] x (\y. y)")


class TestDeepTerms:
    """재귀 한도보다 훨씬 깊은 항도 스택 없이 처리한다."""

    LENGTH = 3000

    def _deepest_path(self):
        return (Step.ARG, *(Step.BODY, Step.ARG) * (self.LENGTH - 1), Step.BODY)

    def test_equality_and_hash(self):
        t = chain_term(self.LENGTH)
        other = chain_term(self.LENGTH)
        assert t == other
        assert hash(t) == hash(other)
        assert t != chain_term(self.LENGTH - 1)

    def test_leaf_count_and_planarity(self):
        t = chain_term(self.LENGTH)
        assert t.leaf_count == self.LENGTH + 1
        assert is_planar(t)

    def test_skeleton_and_decoration(self):
        t = chain_term(self.LENGTH)
        skeleton = skeleton_of(t)
        assert skeleton.leaf_count == self.LENGTH + 1
        assert skeleton.lambda_count == self.LENGTH
        assert decorate_planar(skeleton) == t

    def test_deepest_path(self):
        t = chain_term(self.LENGTH)
        path = self._deepest_path()
        assert len(path) == 2 * self.LENGTH
        assert subterm_at(t.body, path) == Var(0)
        assert replace_at(t.body, path, Var(0)) == t.body
