"""회전 시스템으로 표현한 루트 평면 지도.

간선 i는 다트 +i, −i 두 개를 만들고 α(d) = −d 이다.
σ는 각 꼭짓점 둘레의 다트를 반시계 방향으로 도는 순열이며 회전 주기들로 주어진다.
면은 φ(d) = σ(α(d)) = σ(−d) 의 궤도이고, 다트 d의 왼쪽 면이 d가 속한 φ-궤도다.
간선이 없는 지도(꼭짓점 지도)는 회전 주기가 없고 루트가 None이다.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import StrEnum
from functools import cached_property

from src.core.exceptions import (
    DisconnectedMapError,
    MalformedPermutationError,
    NonPlanarMapError,
)
from src.infra.logger import setup_logger

logger = setup_logger(__name__)

Dart = int
Cycle = tuple[Dart, ...]


def _dart_key(dart: Dart) -> tuple[int, int]:
    """+e 가 −e 보다 앞서는 다트 정렬 키."""
    return (abs(dart), 0 if dart > 0 else 1)


def _normalize_cycle(cycle: Iterable[Dart]) -> Cycle:
    items = tuple(cycle)
    if not items:
        return items
    start = min(range(len(items)), key=lambda k: _dart_key(items[k]))
    return items[start:] + items[:start]


@dataclass(frozen=True)
class RootedMap:
    """루트 평면 지도.

    회전 주기는 생성 시 정규화된다 (각 주기는 가장 작은 다트부터, 주기들은 그 다트 순).
    같은 라벨의 지도는 같은 값이 된다. 라벨과 무관한 비교는 canonicalize를 쓴다.

    Attributes:
        edges: 간선 수 E
        rotation: 꼭짓점별 반시계 회전 주기
        root: 루트 다트 (꼭짓점 지도이면 None)
    """

    edges: int
    rotation: tuple[Cycle, ...] = ()
    root: Dart | None = None

    def __post_init__(self) -> None:
        cycles = sorted(
            (_normalize_cycle(c) for c in self.rotation),
            key=lambda c: _dart_key(c[0]) if c else (0, 0),
        )
        object.__setattr__(self, "rotation", tuple(cycles))

    # ------------------------------------------------------------------
    # 생성자
    # ------------------------------------------------------------------

    @classmethod
    def vertex(cls) -> RootedMap:
        """간선이 없는 꼭짓점 지도."""
        return cls(edges=0)

    @classmethod
    def from_sigma(cls, edges: int, sigma: Mapping[Dart, Dart], root: Dart | None) -> RootedMap:
        """σ 사전에서 회전 주기를 뽑아 지도를 만든다."""
        return cls(edges=edges, rotation=tuple(_orbits(sigma)), root=root)

    @classmethod
    def from_phi(cls, edges: int, phi: Mapping[Dart, Dart], root: Dart | None) -> RootedMap:
        """면 순열 φ 에서 σ(e) = φ(−e) 로 지도를 만든다."""
        sigma = {dart: phi[-dart] for dart in phi}
        return cls.from_sigma(edges, sigma, root)

    # ------------------------------------------------------------------
    # 순열
    # ------------------------------------------------------------------

    @property
    def is_vertex_map(self) -> bool:
        return self.edges == 0

    @property
    def darts(self) -> tuple[Dart, ...]:
        return tuple(d for e in range(1, self.edges + 1) for d in (e, -e))

    @cached_property
    def sigma(self) -> dict[Dart, Dart]:
        table: dict[Dart, Dart] = {}
        for cycle in self.rotation:
            for k, dart in enumerate(cycle):
                table[dart] = cycle[(k + 1) % len(cycle)]
        return table

    @cached_property
    def phi(self) -> dict[Dart, Dart]:
        """φ(d) = σ(−d)."""
        return {dart: self.sigma[-dart] for dart in self.sigma}

    @cached_property
    def vertex_of(self) -> dict[Dart, int]:
        """다트 → 꼭짓점 번호 (rotation의 위치)."""
        return {dart: v for v, cycle in enumerate(self.rotation) for dart in cycle}

    @property
    def vertex_count(self) -> int:
        return 1 if self.is_vertex_map else len(self.rotation)

    def face_orbit(self, dart: Dart) -> Cycle:
        """dart 에서 시작하는 φ-궤도 (dart 왼쪽 면의 경계)."""
        orbit = [dart]
        current = self.phi[dart]
        while current != dart:
            orbit.append(current)
            current = self.phi[current]
        return tuple(orbit)

    def faces(self) -> list[Cycle]:
        """모든 면. 꼭짓점 지도는 빈 경계를 가진 면 하나."""
        if self.is_vertex_map:
            return [()]
        return list(_orbits(self.phi))

    def outer_face(self) -> Cycle:
        if self.root is None:
            return ()
        return self.face_orbit(self.root)

    def outer_face_degree(self) -> int:
        """루트 다트 왼쪽 면의 다트 수. 꼭짓점 지도는 0."""
        return len(self.outer_face())

    def vertex_degrees(self) -> list[int]:
        return [len(cycle) for cycle in self.rotation] if self.rotation else [0]

    def __str__(self) -> str:
        from src.io_formats.map_file import print_map

        return print_map(self, canonical=False)


def _orbits(permutation: Mapping[Dart, Dart]) -> list[Cycle]:
    seen: set[Dart] = set()
    cycles: list[Cycle] = []
    for start in sorted(permutation, key=_dart_key):
        if start in seen:
            continue
        orbit = [start]
        seen.add(start)
        current = permutation[start]
        while current != start:
            orbit.append(current)
            seen.add(current)
            current = permutation[current]
        cycles.append(tuple(orbit))
    return cycles


# ----------------------------------------------------------------------
# 검증
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class MapReport:
    """validate 결과."""

    vertices: int
    edges: int
    faces: int
    outer_degree: int

    @property
    def euler_characteristic(self) -> int:
        return self.vertices - self.edges + self.faces


def _check_permutation(m: RootedMap) -> None:
    if m.edges < 0:
        raise MalformedPermutationError(f"간선 수가 음수입니다: {m.edges}")
    listed = [dart for cycle in m.rotation for dart in cycle]
    if any(not cycle for cycle in m.rotation):
        raise MalformedPermutationError("빈 회전 주기가 있습니다")
    expected = set(m.darts)
    if len(listed) != len(set(listed)):
        raise MalformedPermutationError("다트가 두 번 이상 나타납니다")
    if set(listed) != expected:
        missing = sorted(expected - set(listed), key=_dart_key)
        extra = sorted(set(listed) - expected, key=_dart_key)
        raise MalformedPermutationError(f"다트 불일치 (누락 {missing}, 범위 밖 {extra})")
    if m.edges == 0:
        if m.root is not None:
            raise MalformedPermutationError("꼭짓점 지도에는 루트 다트가 없어야 합니다")
    elif m.root not in expected:
        raise MalformedPermutationError(f"루트 다트 {m.root}가 지도에 없습니다")


def component_count(vertices: int, links: Iterable[tuple[int, int]]) -> int:
    """꼭짓점 0..vertices-1 과 간선 목록의 연결 성분 수 (union-find)."""
    parent = list(range(vertices))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    components = vertices
    for a, b in links:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            components -= 1
    return components


def validate(m: RootedMap) -> MapReport:
    """순열 형식, 연결성, 오일러 공식 V − E + F = 2 를 확인한다.

    Raises:
        MalformedPermutationError: 다트 집합/루트가 잘못됨
        DisconnectedMapError: 기저 그래프가 연결되어 있지 않음
        NonPlanarMapError: 오일러 지표가 2가 아님
    """
    _check_permutation(m)
    if m.is_vertex_map:
        return MapReport(vertices=1, edges=0, faces=1, outer_degree=0)

    links = [(m.vertex_of[e], m.vertex_of[-e]) for e in range(1, m.edges + 1)]
    components = component_count(len(m.rotation), links)
    if components != 1:
        raise DisconnectedMapError(components)

    report = MapReport(
        vertices=m.vertex_count,
        edges=m.edges,
        faces=len(m.faces()),
        outer_degree=m.outer_face_degree(),
    )
    if report.euler_characteristic != 2:
        genus = (2 - report.euler_characteristic) // 2
        logger.warning(f"평면이 아닌 지도: V={report.vertices} E={report.edges} F={report.faces}")
        raise NonPlanarMapError(genus)
    return report


# ----------------------------------------------------------------------
# 간선과 분류
# ----------------------------------------------------------------------


class MapClass(StrEnum):
    VERTEX = "vertex"
    ISTHMIC = "isthmic"
    NON_ISTHMIC = "non-isthmic"


def is_isthmus(m: RootedMap, edge: int) -> bool:
    """간선의 두 다트가 같은 면에 있으면 isthmus."""
    dart = abs(edge)
    return -dart in m.face_orbit(dart)


def deletion_disconnects(m: RootedMap, edge: int) -> bool:
    """간선을 지웠을 때 그래프가 끊어지는지 연결성으로 직접 확인한다."""
    dart = abs(edge)
    links = [
        (m.vertex_of[e], m.vertex_of[-e]) for e in range(1, m.edges + 1) if e != dart
    ]
    return component_count(len(m.rotation), links) > 1


def classify_map(m: RootedMap) -> MapClass:
    """Tutte 삼분류: 꼭짓점 지도 / isthmic 루트 / non-isthmic 루트."""
    if m.root is None:
        return MapClass.VERTEX
    return MapClass.ISTHMIC if is_isthmus(m, m.root) else MapClass.NON_ISTHMIC
