"""⊕ / ⊙ₖ 아래 닫힘으로 루트 평면 지도를 간선 수별로 생성한다.

꼭짓점 지도에서 시작해 층(간선 수)마다 모든 합성을 만들고 정규형으로 중복을 없앤다.
층 n 의 지도 수는 tutte_count(n) 과 같아야 한다.
"""

from __future__ import annotations

from src.infra.logger import setup_logger
from src.maps.canonical import CanonicalMap, canonicalize
from src.maps.rooted_map import RootedMap
from src.maps.tutte import compose_isthmic, compose_nonisthmic

logger = setup_logger(__name__)


def generate_maps(max_edges: int) -> list[list[CanonicalMap]]:
    """간선 0..max_edges 층별 정규 지도 목록.

    Args:
        max_edges: 최대 간선 수

    Returns:
        layers[n] = 간선 n개 지도의 정렬된 목록
    """
    layers: list[list[CanonicalMap]] = [[canonicalize(RootedMap.vertex())]]
    for n in range(1, max_edges + 1):
        found: dict[CanonicalMap, None] = {}
        for left_edges in range(n):
            right_edges = n - 1 - left_edges
            for left in layers[left_edges]:
                for right in layers[right_edges]:
                    found.setdefault(canonicalize(compose_isthmic(left.map, right.map)))
        for base in layers[n - 1]:
            for k in range(base.map.outer_face_degree() + 1):
                found.setdefault(canonicalize(compose_nonisthmic(base.map, k)))
        layer = sorted(found, key=CanonicalMap.sort_key)
        logger.info(f"간선 {n}개 지도 {len(layer)}개 생성")
        layers.append(layer)
    return layers

