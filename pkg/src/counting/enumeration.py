"""정규 평면 항의 전수 열거.

v/a/s/ℓ 문법에서 색칠을 크기·차수별로 직접 생성한 뒤 골격을 평면 장식한다.
β-redex가 있는 골격은 애초에 만들어지지 않는다.
"""

from __future__ import annotations

from collections.abc import Iterator
from functools import lru_cache

from src.infra.logger import setup_logger
from src.lambda_core.coloring import Coloring
from src.lambda_core.terms import LinearTerm, decorate_planar

logger = setup_logger(__name__)


@lru_cache(maxsize=None)
def neutral_colorings(n: int, i: int) -> tuple[Coloring, ...]:
    """크기 n, 차수 i 인 중립 색칠 전체."""
    if n < 0 or i < 0 or i > n + 1:
        return ()
    found: list[Coloring] = []
    if n == 0 and i == 1:
        found.append(Coloring.var())
    for a in range(n):
        b = n - a
        for j in range(i + 1):
            heads = neutral_colorings(a, j)
            if not heads:
                continue
            args = normal_colorings(b, i - j)
            found.extend(Coloring.app(head, arg) for head in heads for arg in args)
    return tuple(found)


@lru_cache(maxsize=None)
def normal_colorings(n: int, i: int) -> tuple[Coloring, ...]:
    """크기 n, 차수 i 인 정규 색칠 전체."""
    if n < 1 or i < 0 or i > n:
        return ()
    switched = [Coloring.switch(c) for c in neutral_colorings(n - 1, i)]
    abstracted = [Coloring.lam(c) for c in normal_colorings(n, i + 1)]
    return (*switched, *abstracted)


def enumerate_npt(n: int, i: int = 1) -> list[tuple[LinearTerm, Coloring]]:
    """크기 n, 자유 변수 i개인 정규 평면 항을 정해진 순서로 모두 나열한다.

    순서는 이름 없는 항의 구조 순서 (Var < App < Lam) 다.

    Args:
        n: 크기 (s 규칙 사용 횟수, 곧 잎 수)
        i: 자유 변수 개수

    Returns:
        (항, 정규 색칠) 목록. 길이는 F[n][i].
    """
    pairs = [(decorate_planar(c.skeleton()), c) for c in normal_colorings(n, i)]
    pairs.sort(key=lambda pair: pair[0].sort_key())
    logger.info(f"크기 {n}, 차수 {i}: 정규 평면 항 {len(pairs)}개")
    return pairs


def iter_npt(max_size: int) -> Iterator[tuple[LinearTerm, Coloring]]:
    """크기 1..max_size 의 NPT(자유 변수 1개)를 크기 순으로 생성한다."""
    for n in range(1, max_size + 1):
        yield from enumerate_npt(n, 1)
