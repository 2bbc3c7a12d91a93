"""루트 평면 지도 ↔ 정규 평면 항 전단사.

양쪽을 같은 TutteSide 계약으로 감싸고, 한쪽을 끝까지 분해해 트레이스를 만든 뒤
다른 쪽에서 같은 트레이스를 다시 접는다.

    꼭짓점 지도         ↔ [x]x
    ⊕(M1, M2)          ↔ FO(t1, t2)
    ⊙ₖ(M1)             ↔ VO_{k+1}(t1)

지도 인덱스 k 와 항 인덱스 k+1 의 변환은 TermSide 한 곳에서만 한다.
분해와 재조립은 명시적 스택으로 반복 수행한다.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import TypeVar

from src.bijection.trace import DecompTrace
from src.core.exceptions import AppError, NotNormalPlanarError
from src.core.interfaces import Case, TutteSide
from src.infra.logger import setup_logger
from src.lambda_core.coloring import Coloring, Kind, color, require_kind
from src.lambda_core.handles import outer_neutral_handles
from src.lambda_core.surgery import (
    TermClass,
    compose_fun_open,
    compose_val_open,
    decompose_fun_open,
    decompose_val_open,
    require_npt,
    term_class,
)
from src.lambda_core.terms import LinearTerm, Var
from src.maps.canonical import canonicalize
from src.maps.rooted_map import MapClass, RootedMap, classify_map, validate
from src.maps.tutte import (
    compose_isthmic,
    compose_nonisthmic,
    decompose_isthmic,
    decompose_nonisthmic,
)

logger = setup_logger(__name__)

T = TypeVar("T")
U = TypeVar("U")


# ----------------------------------------------------------------------
# 양쪽 어댑터
# ----------------------------------------------------------------------


class MapSide:
    """루트 평면 지도 쪽 Tutte 분해."""

    _CASES = {
        MapClass.VERTEX: Case.VERTEX,
        MapClass.ISTHMIC: Case.ISTHMIC,
        MapClass.NON_ISTHMIC: Case.NON_ISTHMIC,
    }

    @property
    def name(self) -> str:
        return "map"

    def case_of(self, obj: RootedMap) -> Case:
        return self._CASES[classify_map(obj)]

    def split_pair(self, obj: RootedMap) -> tuple[RootedMap, RootedMap]:
        return decompose_isthmic(obj)

    def split_single(self, obj: RootedMap) -> tuple[RootedMap, int]:
        return decompose_nonisthmic(obj)

    def unit(self) -> RootedMap:
        return RootedMap.vertex()

    def join_pair(self, first: RootedMap, second: RootedMap) -> RootedMap:
        return compose_isthmic(first, second)

    def join_single(self, obj: RootedMap, k: int) -> RootedMap:
        return compose_nonisthmic(obj, k)


class TermSide:
    """NPT 쪽 Tutte 분해. 항 인덱스는 지도 인덱스 + 1."""

    _CASES = {
        TermClass.IDENTITY: Case.VERTEX,
        TermClass.FUNCTION_OPEN: Case.ISTHMIC,
        TermClass.VALUE_OPEN: Case.NON_ISTHMIC,
    }

    @property
    def name(self) -> str:
        return "term"

    def case_of(self, obj: LinearTerm) -> Case:
        return self._CASES[term_class(obj)]

    def split_pair(self, obj: LinearTerm) -> tuple[LinearTerm, LinearTerm]:
        return decompose_fun_open(obj)

    def split_single(self, obj: LinearTerm) -> tuple[LinearTerm, int]:
        reduced, handle_index = decompose_val_open(obj)
        return reduced, handle_index - 1

    def unit(self) -> LinearTerm:
        return LinearTerm(Var(0), ("x",))

    def join_pair(self, first: LinearTerm, second: LinearTerm) -> LinearTerm:
        return compose_fun_open(first, second)

    def join_single(self, obj: LinearTerm, k: int) -> LinearTerm:
        return compose_val_open(obj, k + 1)


MAP_SIDE = MapSide()
TERM_SIDE = TermSide()


# ----------------------------------------------------------------------
# 분해와 재조립
# ----------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class _Visit:
    obj: object


@dataclass(frozen=True, slots=True)
class _Build:
    case: Case
    index: int | None
    arity: int


def unfold(obj: T, side: TutteSide[T]) -> DecompTrace:
    """obj를 끝까지 분해해 트레이스를 만든다."""
    stack: list[_Visit | _Build] = [_Visit(obj)]
    built: list[DecompTrace] = []
    while stack:
        frame = stack.pop()
        if isinstance(frame, _Build):
            children = tuple(built[len(built) - frame.arity :]) if frame.arity else ()
            del built[len(built) - frame.arity :]
            built.append(DecompTrace(frame.case, frame.index, children))
            continue
        current = frame.obj
        case = side.case_of(current)  # type: ignore[arg-type]
        if case is Case.VERTEX:
            built.append(DecompTrace(Case.VERTEX))
        elif case is Case.ISTHMIC:
            first, second = side.split_pair(current)  # type: ignore[arg-type]
            stack.append(_Build(case, None, 2))
            stack.append(_Visit(second))
            stack.append(_Visit(first))
        else:
            reduced, k = side.split_single(current)  # type: ignore[arg-type]
            stack.append(_Build(case, k, 1))
            stack.append(_Visit(reduced))
    return built[0]


def fold(trace: DecompTrace, side: TutteSide[U]) -> U:
    """트레이스를 side 위에서 다시 조립한다."""
    stack: list[tuple[DecompTrace, bool]] = [(trace, False)]
    built: list[U] = []
    while stack:
        node, expanded = stack.pop()
        if node.case is Case.VERTEX:
            built.append(side.unit())
        elif not expanded:
            stack.append((node, True))
            stack.extend((child, False) for child in reversed(node.children))
        elif node.case is Case.ISTHMIC:
            second = built.pop()
            first = built.pop()
            built.append(side.join_pair(first, second))
        else:
            assert node.index is not None
            built.append(side.join_single(built.pop(), node.index))
    return built[0]


def decomposition_trace(obj: RootedMap | LinearTerm) -> DecompTrace:
    """지도나 NPT의 분해 트레이스."""
    if isinstance(obj, RootedMap):
        validate(obj)
        return unfold(obj, MAP_SIDE)
    require_npt(obj)
    return unfold(obj, TERM_SIDE)


def map_to_term(m: RootedMap) -> tuple[LinearTerm, Coloring]:
    """지도에 대응하는 NPT와 그 정규 색칠.

    크기 = 간선 수 + 1, 바깥 핸들 수 = 바깥 면 차수 + 1.
    """
    validate(m)
    term = fold(unfold(m, MAP_SIDE), TERM_SIDE)
    coloring = color(term, Kind.NORMAL)
    if coloring is None:
        raise NotNormalPlanarError(f"지도의 상 {term} 에 정규 색칠이 없습니다")
    return term, coloring


def term_to_map(term: LinearTerm, coloring: Coloring | None = None) -> RootedMap:
    """NPT에 대응하는 루트 평면 지도 (map_to_term의 역).

    coloring을 주면 정규 색칠인지도 확인한다.
    """
    require_npt(term)
    if coloring is not None:
        require_kind(coloring, Kind.NORMAL)
    return fold(unfold(term, TERM_SIDE), MAP_SIDE)


# ----------------------------------------------------------------------
# 전수 검증
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class BijectionFailure:
    """검증 실패 하나."""

    kind: str
    subject: str
    detail: str
    trace: DecompTrace | None = None


@dataclass
class BijectionReport:
    """verify_bijection 결과.

    Attributes:
        max_size: 검증한 최대 항 크기
        term_counts: 크기별 NPT 수
        map_counts: 크기별(간선 수 + 1) 지도 수
        term_degrees: (크기, 바깥 핸들 수) 별 NPT 수
        map_degrees: (간선 수 + 1, 바깥 면 차수 + 1) 별 지도 수
        failures: 위반 목록
    """

    max_size: int
    term_counts: dict[int, int] = field(default_factory=dict)
    map_counts: dict[int, int] = field(default_factory=dict)
    term_degrees: Counter[tuple[int, int]] = field(default_factory=Counter)
    map_degrees: Counter[tuple[int, int]] = field(default_factory=Counter)
    failures: list[BijectionFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def checked(self) -> int:
        return sum(self.term_counts.values()) + sum(self.map_counts.values())


def _check_term(term: LinearTerm, size: int, report: BijectionReport) -> RootedMap | None:
    subject = str(term)
    trace: DecompTrace | None = None
    try:
        trace = unfold(term, TERM_SIDE)
        image = fold(trace, MAP_SIDE)
        back = fold(unfold(image, MAP_SIDE), TERM_SIDE)
    except AppError as exc:
        report.failures.append(BijectionFailure("term-error", subject, exc.message, trace))
        return None
    handles = len(outer_neutral_handles(term))
    report.term_degrees[(size, handles)] += 1
    if back != term:
        report.failures.append(
            BijectionFailure("term-roundtrip", subject, f"돌아온 항 {back}", trace)
        )
    if image.edges + 1 != size:
        report.failures.append(
            BijectionFailure("size-law", subject, f"간선 {image.edges}, 크기 {size}", trace)
        )
    if image.outer_face_degree() + 1 != handles:
        report.failures.append(
            BijectionFailure(
                "handle-law",
                subject,
                f"바깥 면 {image.outer_face_degree()}, 핸들 {handles}",
                trace,
            )
        )
    return image


def _check_map(m: RootedMap, report: BijectionReport) -> None:
    subject = " ".join(str(cycle) for cycle in m.rotation) or "vertex"
    trace: DecompTrace | None = None
    try:
        trace = unfold(m, MAP_SIDE)
        term = fold(trace, TERM_SIDE)
        back = fold(unfold(term, TERM_SIDE), MAP_SIDE)
    except AppError as exc:
        report.failures.append(BijectionFailure("map-error", subject, exc.message, trace))
        return
    size = term.leaf_count
    handles = len(outer_neutral_handles(term))
    report.map_degrees[(m.edges + 1, m.outer_face_degree() + 1)] += 1
    if canonicalize(back) != canonicalize(m):
        report.failures.append(BijectionFailure("map-roundtrip", subject, str(back), trace))
    if size != m.edges + 1 or handles != m.outer_face_degree() + 1:
        report.failures.append(
            BijectionFailure("map-laws", subject, f"크기 {size}, 핸들 {handles}", trace)
        )


def verify_bijection(max_size: int) -> BijectionReport:
    """크기 max_size 이하의 모든 NPT 와 간선 max_size−1 이하의 모든 지도를 왕복 검증한다.

    점검 항목: 항→지도→항 α-항등, 지도→항→지도 정규형 항등, 크기별 개수 일치,
    지도 상의 단사성, 크기 법칙, 핸들 법칙, (크기, 차수) 분포 일치.

    Args:
        max_size: 최대 항 크기 (1 이상)

    Returns:
        BijectionReport
    """
    from src.counting.enumeration import enumerate_npt
    from src.maps.closure import generate_maps

    report = BijectionReport(max_size=max_size)
    layers = generate_maps(max(max_size - 1, 0))
    for size in range(1, max_size + 1):
        terms = enumerate_npt(size, 1)
        images = set()
        for term, _ in terms:
            image = _check_term(term, size, report)
            if image is not None:
                images.add(canonicalize(image))
        maps = layers[size - 1]
        for canonical in maps:
            _check_map(canonical.map, report)
        report.term_counts[size] = len(terms)
        report.map_counts[size] = len(maps)
        if len(terms) != len(maps):
            report.failures.append(
                BijectionFailure("count", f"size {size}", f"항 {len(terms)}, 지도 {len(maps)}")
            )
        if len(images) != len(terms):
            report.failures.append(
                BijectionFailure("injective", f"size {size}", f"서로 다른 상 {len(images)}개")
            )
        logger.info(f"크기 {size}: 항 {len(terms)}개, 지도 {len(maps)}개 검증")
    if report.term_degrees != report.map_degrees:
        report.failures.append(
            BijectionFailure("degree-table", "all", "(크기, 차수) 분포가 다릅니다")
        )
    return report
