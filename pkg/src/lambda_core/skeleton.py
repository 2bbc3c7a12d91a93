"""람다 골격 (Motzkin 트리).

노드 종류는 세 가지다: 잎(V), 적용(A), 추상(L).
차수(degree)는 잎 수에서 L 노드 수를 뺀 값이며 모든 부분 트리에서 0 이상이어야 한다.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from src.core.exceptions import TermError


@dataclass(frozen=True, slots=True)
class Leaf:
    """변수 자리 (V 노드)."""

    degree: int = field(default=1, init=False, repr=False, compare=False)
    leaf_count: int = field(default=1, init=False, repr=False, compare=False)
    lambda_count: int = field(default=0, init=False, repr=False, compare=False)


@dataclass(frozen=True, slots=True)
class Apply:
    """적용 노드 (A). 차수는 두 자식의 합."""

    left: Skeleton
    right: Skeleton
    degree: int = field(init=False, repr=False, compare=False)
    leaf_count: int = field(init=False, repr=False, compare=False)
    lambda_count: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "degree", self.left.degree + self.right.degree)
        object.__setattr__(self, "leaf_count", self.left.leaf_count + self.right.leaf_count)
        object.__setattr__(
            self, "lambda_count", self.left.lambda_count + self.right.lambda_count
        )


@dataclass(frozen=True, slots=True)
class Abstract:
    """추상 노드 (L). 본문의 차수가 1 이상이어야 한다."""

    body: Skeleton
    degree: int = field(init=False, repr=False, compare=False)
    leaf_count: int = field(init=False, repr=False, compare=False)
    lambda_count: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.body.degree < 1:
            raise TermError("차수 0인 골격 위에 추상을 둘 수 없습니다")
        object.__setattr__(self, "degree", self.body.degree - 1)
        object.__setattr__(self, "leaf_count", self.body.leaf_count)
        object.__setattr__(self, "lambda_count", self.body.lambda_count + 1)


Skeleton = Leaf | Apply | Abstract
