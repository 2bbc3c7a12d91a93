"""루트를 보존하는 동형에 대한 정규형.

루트 다트에서 시작하는 너비 우선 탐색으로 다트에 새 번호를 붙인다.
각 다트에서 σ-다음 다트, 그 다음 α-짝 순서로 방문하며
처음 만난 간선에 다음 번호를 준다 (처음 만난 방향이 +).
루트 지도의 자기 동형은 자명하므로 이 번호 매김은 표현과 무관하다.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from src.maps.rooted_map import Dart, RootedMap


@dataclass(frozen=True)
class CanonicalMap:
    """정규 라벨로 다시 쓴 지도. 두 루트 지도가 동형이면 값이 같다."""

    map: RootedMap

    @property
    def edges(self) -> int:
        return self.map.edges

    def sort_key(self) -> tuple[object, ...]:
        return (self.map.edges, self.map.rotation)


def canonical_labels(m: RootedMap) -> dict[Dart, Dart]:
    """원래 다트 → 정규 다트 번호."""
    if m.root is None:
        return {}
    labels: dict[Dart, Dart] = {m.root: 1, -m.root: -1}
    next_label = 2
    visited = {m.root}
    queue = deque([m.root])
    while queue:
        dart = queue.popleft()
        for neighbour in (m.sigma[dart], -dart):
            if neighbour not in labels:
                labels[neighbour] = next_label
                labels[-neighbour] = -next_label
                next_label += 1
            if neighbour not in visited:
                visited.add(neighbour)
                queue.append(neighbour)
    return labels


def canonicalize(m: RootedMap) -> CanonicalMap:
    """정규형을 계산한다. 멱등이다."""
    if m.root is None:
        return CanonicalMap(RootedMap.vertex())
    labels = canonical_labels(m)
    rotation = tuple(tuple(labels[d] for d in cycle) for cycle in m.rotation)
    return CanonicalMap(RootedMap(edges=m.edges, rotation=rotation, root=1))


def same_map(first: RootedMap, second: RootedMap) -> bool:
    """루트를 보존하는 동형 판정."""
    return canonicalize(first) == canonicalize(second)
