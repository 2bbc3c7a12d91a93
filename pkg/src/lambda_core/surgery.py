"""정규 평면 항(NPT)의 삼분류와 FO/VO 합성·분해 수술.

NPT는 자유 변수가 정확히 하나인 정규 평면 선형 항이다.

    FO 합성: t1의 자유 변수 x1을 x1(λx2.t2)로 바꾼다.
    VO 합성: t1 = C[u]를 k번째 바깥 핸들에서 나눠 [x] λy. C[u(x)]를 만든다.

분해 연산은 각 합성의 정확한 역이다.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

from src.core.exceptions import ClassificationError, HandleIndexError, NotNormalPlanarError
from src.infra.logger import setup_logger
from src.lambda_core.coloring import Coloring, Kind, color
from src.lambda_core.handles import outer_neutral_handles, plug_handle
from src.lambda_core.names import fresh_names
from src.lambda_core.terms import (
    App,
    Lam,
    LinearTerm,
    Path,
    Step,
    Term,
    Var,
    binder_depth,
    free_occurrences,
    is_planar,
    replace_at,
    subterm_at,
)

logger = setup_logger(__name__)


class TermClass(StrEnum):
    IDENTITY = "identity"
    FUNCTION_OPEN = "function-open"
    VALUE_OPEN = "value-open"


@dataclass(frozen=True, slots=True)
class Trichotomy:
    """삼분류 결과.

    Attributes:
        tag: 분류
        path: 자유 변수를 포함한 적용 x(u) 또는 u(x)의 경로 (identity이면 빈 경로)
        subterm: 그 적용 부분 항 (identity이면 변수 자신)
    """

    tag: TermClass
    path: Path
    subterm: Term


def require_npt(term: LinearTerm, role: str = "입력") -> Coloring:
    """term이 NPT인지 확인하고 정규 색칠을 반환한다."""
    if term.arity != 1:
        raise NotNormalPlanarError(f"{role}의 자유 변수가 {term.arity}개입니다")
    coloring = color(term, Kind.NORMAL)
    if coloring is None:
        raise NotNormalPlanarError(f"{role}에 β-redex가 있습니다")
    if not is_planar(term):
        raise NotNormalPlanarError(f"{role}가 평면 항이 아닙니다")
    return coloring


def _free_path(term: LinearTerm) -> Path:
    occurrences = list(free_occurrences(term.body))
    if len(occurrences) != 1:
        raise NotNormalPlanarError(f"자유 변수 출현이 {len(occurrences)}개입니다")
    return occurrences[0][0]


def _class_of(path: Path) -> TermClass:
    if not path:
        return TermClass.IDENTITY
    return TermClass.FUNCTION_OPEN if path[-1] is Step.FUN else TermClass.VALUE_OPEN


def term_class(term: LinearTerm) -> TermClass:
    """자유 변수의 출현 위치만 보고 분류한다. NPT 검사는 하지 않는다."""
    return _class_of(_free_path(term))


def classify(term: LinearTerm, coloring: Coloring | None = None) -> Trichotomy:
    """자유 변수가 하나인 정규 항을 identity / function-open / value-open으로 나눈다.

    자유 변수의 유일한 출현 위치를 본다. 항 전체이면 identity,
    적용의 함수 자리이면 function-open, 인자 자리이면 value-open.
    """
    if coloring is None:
        coloring = require_npt(term)
    path = _free_path(term)
    tag = _class_of(path)
    if tag is TermClass.IDENTITY:
        return Trichotomy(tag, path, term.body)
    parent = path[:-1]
    return Trichotomy(tag, parent, subterm_at(term.body, parent))


# ----------------------------------------------------------------------
# function-open
# ----------------------------------------------------------------------


def compose_fun_open(first: LinearTerm, second: LinearTerm) -> LinearTerm:
    """FO 합성: first의 자유 변수 x1을 x1(λx2.second)로 바꾼다.

    Args:
        first: NPT [x1]t1
        second: NPT [x2]t2

    Returns:
        function-open NPT (크기는 두 입력의 합)
    """
    require_npt(first, "첫 번째 인자")
    require_npt(second, "두 번째 인자")
    path = _free_path(first)
    depth = binder_depth(path)
    # 두 번째 항의 자유 변수는 새 λ에 그대로 묶이므로 재인덱싱이 필요 없다.
    grafted = App(Var(depth), Lam(second.body))
    return LinearTerm(replace_at(first.body, path, grafted), first.context)


def decompose_fun_open(term: LinearTerm) -> tuple[LinearTerm, LinearTerm]:
    """FO 분해: x(λy.u)를 x로 되돌리고 [y]u를 떼어 낸다."""
    coloring = require_npt(term)
    shape = classify(term, coloring)
    if shape.tag is not TermClass.FUNCTION_OPEN:
        raise ClassificationError(TermClass.FUNCTION_OPEN, shape.tag)
    node = shape.subterm
    if not (isinstance(node, App) and isinstance(node.arg, Lam)):
        raise NotNormalPlanarError("자유 변수의 인자가 추상이 아닙니다")
    argument = node.arg.body
    if any(True for _ in free_occurrences(node.arg)):
        raise NotNormalPlanarError("자유 변수의 인자가 닫힌 항이 아닙니다")
    restored = replace_at(term.body, shape.path, Var(binder_depth(shape.path)))
    first = LinearTerm(restored, term.context)
    name = next(fresh_names())
    second = LinearTerm(argument, (name,))
    return first, second


# ----------------------------------------------------------------------
# value-open
# ----------------------------------------------------------------------


def compose_val_open(term: LinearTerm, index: int, name: str | None = None) -> LinearTerm:
    """VO 합성: k번째 바깥 중립 핸들 u에서 [x] λy. C[u(x)]를 만든다.

    Args:
        term: NPT [y]C[u]
        index: 1부터 |ONH(term)|까지의 핸들 번호
        name: 새 자유 변수의 표시 이름 (기본값: 첫 번째 새 이름)

    Returns:
        value-open NPT (크기 +1, 바깥 핸들 수 index+1)
    """
    coloring = require_npt(term)
    handles = outer_neutral_handles(term, coloring)
    if not 1 <= index <= len(handles):
        raise HandleIndexError(index, 1, len(handles))
    return plug_handle(term, handles[index - 1], name or next(fresh_names()))


def decompose_val_open(term: LinearTerm) -> tuple[LinearTerm, int]:
    """VO 분해: 가장 바깥 λy와 자유 변수에 대한 적용을 지운다.

    Returns:
        (t1, k). compose_val_open(t1, k)가 term을 돌려준다.
    """
    coloring = require_npt(term)
    shape = classify(term, coloring)
    if shape.tag is not TermClass.VALUE_OPEN:
        raise ClassificationError(TermClass.VALUE_OPEN, shape.tag)
    if not isinstance(term.body, Lam) or not shape.path or shape.path[0] is not Step.BODY:
        raise NotNormalPlanarError("value-open 항이 추상으로 시작하지 않습니다")
    node = shape.subterm
    if not isinstance(node, App):
        raise NotNormalPlanarError("자유 변수가 적용의 인자가 아닙니다")
    inner_path = shape.path[1:]
    stripped = replace_at(term.body.body, inner_path, node.fun)
    name = next(fresh_names(avoid=term.context))
    reduced = LinearTerm(stripped, (name,))
    reduced_coloring = require_npt(reduced, "분해 결과")
    handles = outer_neutral_handles(reduced, reduced_coloring)
    for position, handle in enumerate(handles, start=1):
        if handle.path == inner_path:
            return reduced, position
    logger.warning(f"분해 위치 {'/'.join(inner_path)}가 바깥 핸들이 아닙니다: {term}")
    raise NotNormalPlanarError("제거된 적용이 바깥 중립 핸들 위치가 아닙니다")
