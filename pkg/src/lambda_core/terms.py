"""선형 람다 항.

내부 표현은 이름이 없는 형식이다. Var(index)는 바인더 거리로 변수를 가리키고,
깊이 d 위치에서 문맥의 j번째 자유 변수는 Var(d + j)로 표현한다.
문맥(context)은 자유 변수 표시 이름의 순서 있는 튜플이며 context[0]이 스택의 맨 위,
즉 평면 항에서 가장 먼저 쓰이는 변수다. 추상의 본문은 [바인더] + 바깥 문맥을 본다.

두 항은 이름 없는 본문과 문맥 길이가 같으면 같다 (α-동치).
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import StrEnum
from typing import cast

from src.core.exceptions import NonLinearError, TermError, UnboundVariableError
from src.lambda_core.names import default_context, fresh_names, is_valid_name
from src.lambda_core.skeleton import Abstract, Apply, Leaf, Skeleton


class _Node:
    """항 노드 공통 비교. 깊은 항에서도 재귀하지 않도록 평탄 키로 비교한다."""

    __slots__ = ()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _Node):
            return NotImplemented
        return term_key(cast("Term", self)) == term_key(cast("Term", other))

    def __hash__(self) -> int:
        return hash(term_key(cast("Term", self)))


@dataclass(frozen=True, slots=True, eq=False)
class Var(_Node):
    index: int


@dataclass(frozen=True, slots=True, eq=False)
class App(_Node):
    fun: Term
    arg: Term


@dataclass(frozen=True, slots=True, eq=False)
class Lam(_Node):
    body: Term


Term = Var | App | Lam


class Step(StrEnum):
    """항 트리에서 한 칸 내려가는 방향."""

    FUN = "fun"
    ARG = "arg"
    BODY = "body"


Path = tuple[Step, ...]


# ----------------------------------------------------------------------
# 경로
# ----------------------------------------------------------------------


def subterm_at(term: Term, path: Path) -> Term:
    """루트에서 path를 따라 내려간 부분 항을 반환한다."""
    node = term
    for step in path:
        match step, node:
            case Step.FUN, App(fun=fun):
                node = fun
            case Step.ARG, App(arg=arg):
                node = arg
            case Step.BODY, Lam(body=body):
                node = body
            case _:
                raise TermError(f"경로 {'/'.join(path)}가 항의 모양과 맞지 않습니다")
    return node


def replace_at(term: Term, path: Path, replacement: Term) -> Term:
    """path 위치의 부분 항을 replacement로 바꾼 새 항을 반환한다."""
    ancestors: list[Term] = []
    node = term
    for step in path:
        ancestors.append(node)
        match step, node:
            case Step.FUN, App(fun=fun):
                node = fun
            case Step.ARG, App(arg=arg):
                node = arg
            case Step.BODY, Lam(body=body):
                node = body
            case _:
                raise TermError(f"경로 {'/'.join(path)}가 항의 모양과 맞지 않습니다")

    result = replacement
    for step, parent in zip(reversed(path), reversed(ancestors), strict=True):
        match step, parent:
            case Step.FUN, App(arg=arg):
                result = App(result, arg)
            case Step.ARG, App(fun=fun):
                result = App(fun, result)
            case _:
                result = Lam(result)
    return result


def binder_depth(path: Path) -> int:
    """path 끝 위치를 감싸는 추상의 개수."""
    return sum(1 for step in path if step is Step.BODY)


def free_occurrences(term: Term) -> Iterator[tuple[Path, int]]:
    """자유 변수 출현을 (경로, 문맥 위치) 쌍으로 왼쪽부터 나열한다."""
    pending: list[tuple[Term, Path, int]] = [(term, (), 0)]
    while pending:
        node, path, depth = pending.pop()
        match node:
            case Var(index=index):
                if index >= depth:
                    yield path, index - depth
            case App(fun=fun, arg=arg):
                pending.append((arg, (*path, Step.ARG), depth))
                pending.append((fun, (*path, Step.FUN), depth))
            case Lam(body=body):
                pending.append((body, (*path, Step.BODY), depth + 1))


def term_key(term: Term) -> tuple[int, ...]:
    """전위 순서 평탄 키. Var는 (0, index), App은 1, Lam은 2.

    각 태그의 자식 수가 정해져 있으므로 키가 같으면 항도 같다.
    사전식 비교는 Var < App < Lam, 그 다음 자식 순서다.
    """
    out: list[int] = []
    pending: list[Term] = [term]
    while pending:
        node = pending.pop()
        match node:
            case Var(index=index):
                out.extend((0, index))
            case App(fun=fun, arg=arg):
                out.append(1)
                pending.append(arg)
                pending.append(fun)
            case Lam(body=body):
                out.append(2)
                pending.append(body)
            case _:
                raise TypeError(node)
    return tuple(out)


def leaf_count(term: Term) -> int:
    count = 0
    pending: list[Term] = [term]
    while pending:
        match pending.pop():
            case Var():
                count += 1
            case App(fun=fun, arg=arg):
                pending.append(fun)
                pending.append(arg)
            case Lam(body=body):
                pending.append(body)
    return count


# ----------------------------------------------------------------------
# 선형 항
# ----------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class LinearTerm:
    """문맥을 가진 선형 람다 항.

    생성 시 모든 바인더와 자유 변수가 정확히 한 번씩 쓰였는지 검사한다.

    Attributes:
        body: 이름 없는 항
        context: 자유 변수 표시 이름 (context[0]이 가장 먼저 쓰이는 변수)
    """

    body: Term
    context: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "context", tuple(self.context))
        if len(set(self.context)) != len(self.context):
            raise TermError(f"문맥 이름이 중복되었습니다: {', '.join(self.context)}")
        for name in self.context:
            if not is_valid_name(name):
                raise TermError(f"잘못된 변수 이름: {name!r}")
        _check_linear(self.body, self.context)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearTerm):
            return NotImplemented
        return self.body == other.body and len(self.context) == len(other.context)

    def __hash__(self) -> int:
        return hash((self.body, len(self.context)))

    def __str__(self) -> str:
        from src.io_formats.term_syntax import print_term

        return print_term(self)

    @property
    def arity(self) -> int:
        """자유 변수 개수 (골격의 차수)."""
        return len(self.context)

    @property
    def leaf_count(self) -> int:
        return leaf_count(self.body)

    def sort_key(self) -> tuple[object, ...]:
        return (len(self.context), term_key(self.body))

    def with_context(self, context: tuple[str, ...]) -> LinearTerm:
        """같은 항을 다른 표시 이름으로 반환한다."""
        return LinearTerm(self.body, context)


def _check_linear(body: Term, context: tuple[str, ...]) -> None:
    """모든 바인더와 문맥 변수가 정확히 한 번씩 쓰였는지 검사한다."""
    bound_uses: list[int] = []
    free_uses: Counter[int] = Counter()
    pending: list[tuple[Term, tuple[int, ...]]] = [(body, ())]
    while pending:
        node, binders = pending.pop()
        match node:
            case Var(index=index):
                if index < 0:
                    raise TermError(f"음수 인덱스 {index}")
                depth = len(binders)
                if index < depth:
                    bound_uses[binders[depth - 1 - index]] += 1
                else:
                    free_uses[index - depth] += 1
            case App(fun=fun, arg=arg):
                pending.append((arg, binders))
                pending.append((fun, binders))
            case Lam(body=inner):
                bound_uses.append(0)
                pending.append((inner, (*binders, len(bound_uses) - 1)))
            case _:
                raise TypeError(node)

    for position in sorted(free_uses):
        if position >= len(context):
            raise UnboundVariableError(f"#{position}")
    for position, name in enumerate(context):
        if free_uses[position] != 1:
            raise NonLinearError(name, free_uses[position])
    binder_names = fresh_names(avoid=context)
    for uses in bound_uses:
        name = next(binder_names)
        if uses != 1:
            raise NonLinearError(name, uses)


# ----------------------------------------------------------------------
# 골격과 평면 장식
# ----------------------------------------------------------------------


def skeleton_of(term: Term | LinearTerm) -> Skeleton:
    """항의 골격을 반환한다."""
    if isinstance(term, LinearTerm):
        term = term.body
    pending: list[tuple[Term, bool]] = [(term, False)]
    built: list[Skeleton] = []
    while pending:
        node, expanded = pending.pop()
        match node:
            case Var():
                built.append(Leaf())
            case App(fun=fun, arg=arg) if not expanded:
                pending.append((node, True))
                pending.append((arg, False))
                pending.append((fun, False))
            case App():
                right = built.pop()
                built.append(Apply(built.pop(), right))
            case Lam(body=body) if not expanded:
                pending.append((node, True))
                pending.append((body, False))
            case Lam():
                built.append(Abstract(built.pop()))
            case _:
                raise TypeError(node)
    return built[0]


def decorate_planar(skeleton: Skeleton) -> LinearTerm:
    """골격의 유일한 평면 장식을 반환한다.

    스택 알고리즘: 잎에서 pop, 추상에서 새 바인더 push, 적용은 왼쪽 먼저.
    스택이 비어 있을 때 만나는 잎은 새 자유 변수가 되며 생성 순서가 문맥 순서다.

    Args:
        skeleton: 임의의 람다 골격

    Returns:
        차수만큼의 자유 변수를 가진 평면 선형 항
    """
    return _decorate(skeleton, right_first=False)


def decorate_rl(skeleton: Skeleton) -> LinearTerm:
    """적용을 오른쪽 먼저 순회하는 장식 (RL-평면 장식)."""
    return _decorate(skeleton, right_first=True)


def _decorate(skeleton: Skeleton, *, right_first: bool) -> LinearTerm:
    binders: list[int] = []
    free_count = 0
    pending: list[tuple[Skeleton, int, bool]] = [(skeleton, 0, False)]
    built: list[Term] = []
    while pending:
        node, depth, expanded = pending.pop()
        match node:
            case Leaf():
                if binders:
                    built.append(Var(depth - 1 - binders.pop()))
                else:
                    built.append(Var(depth + free_count))
                    free_count += 1
            case Abstract(body=body) if not expanded:
                binders.append(depth)
                pending.append((node, depth, True))
                pending.append((body, depth + 1, False))
            case Abstract():
                built.append(Lam(built.pop()))
            case Apply(left=left, right=right) if not expanded:
                first, second = (right, left) if right_first else (left, right)
                pending.append((node, depth, True))
                pending.append((second, depth, False))
                pending.append((first, depth, False))
            case Apply():
                later = built.pop()
                earlier = built.pop()
                built.append(App(later, earlier) if right_first else App(earlier, later))
    return LinearTerm(built[0], default_context(free_count))


def is_planar(term: LinearTerm) -> bool:
    """항이 자기 골격의 평면 장식과 α-동치인지 판정한다.

    왼쪽부터 읽으면서 각 변수가 아직 쓰이지 않은 가장 안쪽 바인더인지,
    바인더가 남아 있지 않으면 다음 문맥 변수인지 확인한다.
    """
    binders: list[int] = []
    free_count = 0
    pending: list[tuple[Term, int]] = [(term.body, 0)]
    while pending:
        node, depth = pending.pop()
        match node:
            case Var(index=index):
                if binders:
                    expected = depth - 1 - binders.pop()
                else:
                    expected = depth + free_count
                    free_count += 1
                if index != expected:
                    return False
            case App(fun=fun, arg=arg):
                pending.append((arg, depth))
                pending.append((fun, depth))
            case Lam(body=body):
                binders.append(depth)
                pending.append((body, depth + 1))
    return True
