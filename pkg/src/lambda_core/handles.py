"""중립 핸들과 바깥 중립 핸들(ONH).

핸들은 항을 중립 부분 항(초점)과 그 주변 문맥으로 나눈 것이며,
루트에서 초점까지의 경로로 저장한다.

ONH 순서 규칙 (a 노드에서):
    1. 적용 전체
    2. 인자 쪽 핸들
    3. 인자의 차수가 0일 때만 함수 쪽 핸들
s 규칙은 그대로 통과하고, ℓ 규칙은 본문으로 내려간다.
"""

from __future__ import annotations

from dataclasses import dataclass

from src.core.exceptions import ColoringError, TermError
from src.lambda_core.coloring import Coloring, Kind, Rule, color
from src.lambda_core.terms import (
    App,
    Lam,
    LinearTerm,
    Path,
    Step,
    Term,
    Var,
    binder_depth,
    replace_at,
)


@dataclass(frozen=True, slots=True)
class Handle:
    """루트에서 중립 부분 항까지의 경로와 그 부분 항."""

    path: Path
    focus: Term

    @property
    def depth(self) -> int:
        """초점을 감싸는 추상의 개수."""
        return binder_depth(self.path)


def _coloring_for(term: LinearTerm, coloring: Coloring | None) -> Coloring:
    if coloring is not None:
        return coloring
    found = color(term, Kind.NORMAL) or color(term, Kind.NEUTRAL)
    if found is None:
        raise ColoringError("색칠할 수 없는 항입니다 (β-redex 포함)")
    return found


def outer_neutral_handles(term: LinearTerm, coloring: Coloring | None = None) -> list[Handle]:
    """바깥 중립 핸들을 바깥 경계의 반시계 방향 순서로 나열한다.

    Args:
        term: 색칠 가능한 선형 항 (차수 무관)
        coloring: term의 색칠. None이면 정규 색칠을 먼저 시도한다.

    Returns:
        순서 있는 핸들 목록
    """
    handles: list[Handle] = []
    pending: list[tuple[Term, Coloring, Path]] = [(term.body, _coloring_for(term, coloring), ())]
    while pending:
        node, rule_node, path = pending.pop()
        match rule_node.rule, node:
            case Rule.VAR, Var():
                handles.append(Handle(path, node))
            case Rule.APP, App(fun=fun, arg=arg):
                fun_coloring, arg_coloring = rule_node.premises
                handles.append(Handle(path, node))
                if arg_coloring.degree == 0:
                    pending.append((fun, fun_coloring, (*path, Step.FUN)))
                pending.append((arg, arg_coloring, (*path, Step.ARG)))
            case Rule.SWITCH, _:
                pending.append((node, rule_node.premises[0], path))
            case Rule.LAM, Lam(body=body):
                pending.append((body, rule_node.premises[0], (*path, Step.BODY)))
            case _:
                raise ColoringError(f"색칠 규칙 {rule_node.rule}이 항의 모양과 맞지 않습니다")
    return handles


def neutral_handles(term: LinearTerm) -> list[Handle]:
    """모든 중립 부분 항 (변수와 적용) 을 전위 순서로 나열한다.

    정규 항이 아니면 ColoringError.
    """
    if color(term, Kind.NORMAL) is None:
        raise ColoringError("정규 항이 아닙니다")
    handles: list[Handle] = []
    pending: list[tuple[Term, Path]] = [(term.body, ())]
    while pending:
        node, path = pending.pop()
        match node:
            case Var():
                handles.append(Handle(path, node))
            case App(fun=fun, arg=arg):
                handles.append(Handle(path, node))
                pending.append((arg, (*path, Step.ARG)))
                pending.append((fun, (*path, Step.FUN)))
            case Lam(body=body):
                pending.append((body, (*path, Step.BODY)))
    return handles


def plug_handle(term: LinearTerm, handle: Handle, name: str = "x") -> LinearTerm:
    """자유 변수가 하나인 항에 대해 역-(VO) 수술을 임의의 핸들에서 수행한다.

    term = C[u] 일 때 [name] λy. C[u(name)] 을 만든다. 바깥 핸들이 아니면
    결과는 선형이지만 평면이 아닐 수 있다.

    Args:
        term: 자유 변수가 정확히 하나인 선형 항
        handle: 초점 경로
        name: 새 자유 변수의 표시 이름

    Returns:
        새 선형 항 (문맥 길이 1)
    """
    if term.arity != 1:
        raise TermError(f"자유 변수가 하나인 항이 필요합니다 (현재 {term.arity}개)")
    plugged = App(handle.focus, Var(handle.depth + 1))
    body = Lam(replace_at(term.body, handle.path, plugged))
    return LinearTerm(body, (name,))
