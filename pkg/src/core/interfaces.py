"""핵심 인터페이스 정의.

모든 모듈이 의존하는 Protocol 기반 계약.
구현체는 각 모듈에서 제공한다.
"""

from __future__ import annotations

from enum import StrEnum
from typing import Protocol, TypeVar, runtime_checkable

T = TypeVar("T")


class Case(StrEnum):
    """Tutte 분해의 한 단계가 속한 경우.

    지도 쪽: 꼭짓점 / isthmic 루트 / non-isthmic 루트
    항 쪽:   identity / function-open / value-open
    """

    VERTEX = "vertex"
    ISTHMIC = "isthmic"
    NON_ISTHMIC = "non-isthmic"


@runtime_checkable
class TutteSide(Protocol[T]):
    """Tutte 분해를 지원하는 조합 객체 족의 계약.

    지도와 NPT 두 구현이 같은 분해 트리를 만들어 내므로 전단사가 된다.
    단항 분해의 인덱스 k는 항상 지도 쪽 관례 (0 ≤ k ≤ 바깥 면 차수) 로 주고받는다.
    """

    @property
    def name(self) -> str:
        """로그와 보고서에 쓰는 이름."""
        ...

    def case_of(self, obj: T) -> Case:
        """obj가 어느 경우인지 판정한다."""
        ...

    def split_pair(self, obj: T) -> tuple[T, T]:
        """ISTHMIC 경우를 두 부분으로 나눈다."""
        ...

    def split_single(self, obj: T) -> tuple[T, int]:
        """NON_ISTHMIC 경우를 한 부분과 인덱스 k 로 나눈다."""
        ...

    def unit(self) -> T:
        """VERTEX 경우의 유일한 객체."""
        ...

    def join_pair(self, first: T, second: T) -> T:
        """split_pair의 역."""
        ...

    def join_single(self, obj: T, k: int) -> T:
        """split_single의 역."""
        ...
