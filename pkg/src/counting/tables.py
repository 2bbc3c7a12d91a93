"""중립/정규 평면 항의 크기·차수별 개수 표.

    N[n][i] = [i=1][n=0] + Σ_{a+b=n} Σ_{j+k=i} N[a][j]·F[b][k]
    F[n][i] = Σ_{j≥i} N[n−1][j]            (F[0][i] = 0)

N은 중립 색칠 개수 (크기 n, 자유 변수 i개), F는 정규 색칠 개수다.
파이썬 정수는 임의 정밀도이므로 큰 n에서도 정확하다.
"""

from __future__ import annotations

from dataclasses import dataclass

from src.core.exceptions import CountingError
from src.infra.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class CountTable:
    """크기 0..max_n, 차수 0..max_i 범위의 개수 표.

    Attributes:
        neutral: neutral[n][i] = N[n][i]
        normal: normal[n][i] = F[n][i]
    """

    max_n: int
    max_i: int
    neutral: tuple[tuple[int, ...], ...]
    normal: tuple[tuple[int, ...], ...]

    def neutral_count(self, n: int, i: int) -> int:
        return self.neutral[n][i]

    def normal_count(self, n: int, i: int) -> int:
        return self.normal[n][i]

    def neutral_row(self, i: int) -> list[int]:
        """차수 i 의 중립 개수를 크기 순서로 반환한다."""
        return [self.neutral[n][i] for n in range(self.max_n + 1)]

    def normal_row(self, i: int) -> list[int]:
        return [self.normal[n][i] for n in range(self.max_n + 1)]


def _build(max_n: int, degrees: int) -> tuple[list[list[int]], list[list[int]]]:
    """차수 0..degrees 까지 빠짐없이 계산한다."""
    neutral = [[0] * (degrees + 1) for _ in range(max_n + 1)]
    normal = [[0] * (degrees + 1) for _ in range(max_n + 1)]
    for n in range(max_n + 1):
        if n >= 1:
            # F[n][i]는 N[n-1][i..]의 꼬리 합
            running = 0
            for i in range(degrees, -1, -1):
                running += neutral[n - 1][i]
                normal[n][i] = running
        for i in range(degrees + 1):
            total = 1 if (n == 0 and i == 1) else 0
            for a in range(n):
                b = n - a
                for j in range(i + 1):
                    left = neutral[a][j]
                    if left:
                        total += left * normal[b][i - j]
            neutral[n][i] = total
    return neutral, normal


def count_tables(max_n: int, max_i: int) -> CountTable:
    """크기 max_n, 차수 max_i 까지의 N/F 표를 만든다.

    N[n][i]는 i ≤ n+1 에서만 0이 아니므로 내부 계산은 max(max_i, max_n+1) 차수까지 한다.

    Args:
        max_n: 최대 크기
        max_i: 출력할 최대 차수

    Returns:
        CountTable
    """
    if max_n < 0 or max_i < 0:
        raise CountingError(f"범위는 0 이상이어야 합니다 (max_n={max_n}, max_i={max_i})")
    degrees = max(max_i, max_n + 1)
    neutral, normal = _build(max_n, degrees)
    logger.info(f"계수 표 생성 완료: n ≤ {max_n}, i ≤ {max_i}")
    return CountTable(
        max_n=max_n,
        max_i=max_i,
        neutral=tuple(tuple(row[: max_i + 1]) for row in neutral),
        normal=tuple(tuple(row[: max_i + 1]) for row in normal),
    )


def neutral_one_variable(max_n: int) -> list[int]:
    """자유 변수가 하나인 중립 항의 개수 B_1 계수 (크기 0..max_n)."""
    return count_tables(max_n, 1).neutral_row(1)


def closed_counts(max_n: int) -> list[int]:
    """닫힌 정규 평면 항의 개수 F[n][0] (크기 0..max_n)."""
    return count_tables(max_n, 0).normal_row(0)


@dataclass(frozen=True)
class IdentityReport:
    """생성함수 항등식 점검 결과.

    Attributes:
        max_n: 점검한 최대 크기
        checked: 점검한 (n, 항등식 이름) 개수
    """

    max_n: int
    checked: int


def check_identities(max_n: int) -> IdentityReport:
    """R(z,0) = z·B(z,1) 과 R_1(z) = R_0(z) 를 n ≤ max_n 에서 확인한다.

    즉 F[n][0] = Σ_i N[n−1][i] 이고 F[n][1] = F[n][0].
    위반은 구현 버그이므로 CountingError를 던진다.
    """
    degrees = max_n + 1
    neutral, normal = _build(max_n, degrees)
    checked = 0
    for n in range(max_n + 1):
        column_sum = sum(neutral[n - 1]) if n >= 1 else 0
        if normal[n][0] != column_sum:
            raise CountingError(
                f"R(z,0) = zB(z,1) 위반: F[{n}][0]={normal[n][0]}, Σ N[{n - 1}][i]={column_sum}"
            )
        if normal[n][1] != normal[n][0]:
            raise CountingError(
                f"R_1 = R_0 위반: F[{n}][1]={normal[n][1]}, F[{n}][0]={normal[n][0]}"
            )
        checked += 2
    return IdentityReport(max_n=max_n, checked=checked)
