"""Tutte 합성 연산 ⊕, ⊙ₖ 와 그 역.

두 연산 모두 면 순열 φ를 직접 고쳐서 정의한다. 새 루트 간선은 항상 가장 큰 번호 A를 쓴다.

⊕(M1, M2): 바깥 면이 (A, M2의 바깥 면, −A, M1의 바깥 면) 이 되도록 잇는다.
    φ(A) = r2,  φ(p2) = −A,  φ(−A) = r1,  φ(p1) = A    (p = 루트 앞 다트)

⊙ₖ(M1): 바깥 면을 루트에서 k걸음 거꾸로 걸은 꼭짓점까지 새 간선 A를 잇는다.
    새 루트 면은 (A, 거꾸로 걸은 k개의 다트) 이다.
"""

from __future__ import annotations

from src.core.exceptions import HandleIndexError, MapClassError
from src.infra.logger import setup_logger
from src.maps.rooted_map import Dart, MapClass, RootedMap, classify_map

logger = setup_logger(__name__)


def _shifted_phi(m: RootedMap, offset: int) -> dict[Dart, Dart]:
    """간선 번호를 offset만큼 민 φ."""

    def shift(d: Dart) -> Dart:
        return d + offset if d > 0 else d - offset

    return {shift(d): shift(e) for d, e in m.phi.items()}


def _predecessor(phi: dict[Dart, Dart], dart: Dart) -> Dart:
    """φ(p) = dart 인 p."""
    current = dart
    while phi[current] != dart:
        current = phi[current]
    return current


# ----------------------------------------------------------------------
# isthmic
# ----------------------------------------------------------------------


def compose_isthmic(first: RootedMap, second: RootedMap) -> RootedMap:
    """⊕(M1, M2): 새 isthmic 루트 간선으로 두 지도를 잇는다.

    e = 1 + e1 + e2, o = 2 + o1 + o2.
    """
    e1, e2 = first.edges, second.edges
    root = e1 + e2 + 1
    phi = {**_shifted_phi(first, 0), **_shifted_phi(second, e1)}

    if second.root is None:
        phi[root] = -root
    else:
        r2 = second.root + e1 if second.root > 0 else second.root - e1
        phi[_predecessor(phi, r2)] = -root
        phi[root] = r2

    if first.root is None:
        phi[-root] = root
    else:
        r1 = first.root
        phi[_predecessor(phi, r1)] = root
        phi[-root] = r1

    return RootedMap.from_phi(root, phi, root)


def _delete_root_edge(m: RootedMap) -> list[tuple[Dart, ...]]:
    """루트 간선의 두 다트를 회전 주기에서 뺀다 (빈 주기는 고립 꼭짓점으로 남긴다)."""
    assert m.root is not None
    edge = abs(m.root)
    return [tuple(d for d in cycle if abs(d) != edge) for cycle in m.rotation]


def _extract(cycles: list[tuple[Dart, ...]], root: Dart | None) -> RootedMap:
    """root가 속한 성분만 골라 간선 번호를 절댓값 순서대로 1..k로 다시 붙인다."""
    if root is None:
        return RootedMap.vertex()
    where = {d: v for v, cycle in enumerate(cycles) for d in cycle}
    # root가 속한 꼭짓점에서 간선을 따라 닿는 꼭짓점 전체
    reached = {where[root]}
    frontier = [where[root]]
    while frontier:
        v = frontier.pop()
        for d in cycles[v]:
            w = where[-d]
            if w not in reached:
                reached.add(w)
                frontier.append(w)
    kept = [cycles[v] for v in sorted(reached)]
    labels = sorted({abs(d) for cycle in kept for d in cycle})
    renumber = {old: new for new, old in enumerate(labels, start=1)}

    def relabel(d: Dart) -> Dart:
        return renumber[d] if d > 0 else -renumber[-d]

    return RootedMap(
        edges=len(labels),
        rotation=tuple(tuple(relabel(d) for d in cycle) for cycle in kept),
        root=relabel(root),
    )


def decompose_isthmic(m: RootedMap) -> tuple[RootedMap, RootedMap]:
    """isthmic 루트 간선을 지워 두 성분으로 나눈다.

    M1의 루트는 −A 바로 다음 다트, M2의 루트는 A 바로 다음 다트 (없으면 꼭짓점 지도).
    """
    kind = classify_map(m)
    if kind is not MapClass.ISTHMIC:
        raise MapClassError(MapClass.ISTHMIC, kind)
    assert m.root is not None
    a = m.root
    after_minus = m.phi[-a]
    after_plus = m.phi[a]
    cycles = _delete_root_edge(m)
    first = _extract(cycles, None if after_minus == a else after_minus)
    second = _extract(cycles, None if after_plus == -a else after_plus)
    return first, second


# ----------------------------------------------------------------------
# non-isthmic
# ----------------------------------------------------------------------


def compose_nonisthmic(m: RootedMap, k: int) -> RootedMap:
    """⊙ₖ(M): 루트 꼭짓점에서 바깥 면을 k걸음 거꾸로 간 꼭짓점까지 간선을 더한다.

    Args:
        m: 루트 평면 지도
        k: 0 ≤ k ≤ o(m)

    Returns:
        non-isthmic 루트를 가진 지도 (e = 1 + e1, o = k + 1)
    """
    degree = m.outer_face_degree()
    if not 0 <= k <= degree:
        raise HandleIndexError(k, 0, degree)
    a = m.edges + 1
    if m.root is None:
        return RootedMap(edges=1, rotation=((a, -a),), root=a)

    phi = dict(m.phi)
    outer = m.outer_face()
    r = m.root
    p = outer[degree - 1]
    if k == 0:
        phi[a] = a
        phi[p] = -a
        phi[-a] = r
    elif k == degree:
        phi[-a] = -a
        phi[p] = a
        phi[a] = r
    else:
        d1 = outer[degree - k]
        q = outer[degree - k - 1]
        phi[p] = a
        phi[a] = d1
        phi[q] = -a
        phi[-a] = r
    return RootedMap.from_phi(a, phi, a)


def decompose_nonisthmic(m: RootedMap) -> tuple[RootedMap, int]:
    """non-isthmic 루트 간선을 지우고 (M1, k) 를 돌려준다.

    새 루트는 −A 바로 다음 다트이며, 그것이 −A 자신이면 A 바로 다음 다트다.
    k = o(M) − 1.
    """
    kind = classify_map(m)
    if kind is not MapClass.NON_ISTHMIC:
        raise MapClassError(MapClass.NON_ISTHMIC, kind)
    assert m.root is not None
    a = m.root
    k = m.outer_face_degree() - 1
    new_root = m.phi[-a]
    if new_root == -a:
        new_root = m.phi[a]
    cycles = _delete_root_edge(m)
    reduced = _extract(cycles, None if abs(new_root) == abs(a) else new_root)
    logger.debug(f"non-isthmic 분해: e={m.edges} -> {reduced.edges}, k={k}")
    return reduced, k
