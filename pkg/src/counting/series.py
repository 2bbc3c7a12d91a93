"""정확한 유리 계수 멱급수와 닫힌 형식 검증.

PowerSeries는 z^0..z^(order-1) 계수를 Fraction으로 저장한다.
서로 다른 차수의 급수를 섞으면 결과는 더 작은 차수로 잘린다.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from src.core.exceptions import CountingError
from src.counting.tables import closed_counts
from src.infra.logger import setup_logger

logger = setup_logger(__name__)

Number = int | Fraction


@dataclass(frozen=True)
class PowerSeries:
    """잘린 형식 멱급수.

    Attributes:
        coeffs: 길이 order의 계수 튜플
    """

    coeffs: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[Number], order: int) -> PowerSeries:
        """주어진 계수를 order 길이로 자르거나 0으로 채운다."""
        if order < 0:
            raise CountingError(f"차수는 0 이상이어야 합니다: {order}")
        items = [Fraction(v) for v in values][:order]
        items.extend(Fraction(0) for _ in range(order - len(items)))
        return cls(tuple(items))

    @classmethod
    def constant(cls, value: Number, order: int) -> PowerSeries:
        return cls.of([value], order)

    @classmethod
    def monomial(cls, coefficient: Number, power: int, order: int) -> PowerSeries:
        """coefficient · z^power."""
        return cls.of([0] * power + [coefficient], order)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    # ------------------------------------------------------------------
    # 산술
    # ------------------------------------------------------------------

    def _coerce(self, other: PowerSeries | Number) -> PowerSeries:
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.constant(other, self.order)

    def __add__(self, other: PowerSeries | Number) -> PowerSeries:
        rhs = self._coerce(other)
        order = min(self.order, rhs.order)
        return PowerSeries(tuple(self.coeffs[n] + rhs.coeffs[n] for n in range(order)))

    __radd__ = __add__

    def __neg__(self) -> PowerSeries:
        return PowerSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: PowerSeries | Number) -> PowerSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Number) -> PowerSeries:
        return self._coerce(other) - self

    def __mul__(self, other: PowerSeries | Number) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            factor = Fraction(other)
            return PowerSeries(tuple(c * factor for c in self.coeffs))
        order = min(self.order, other.order)
        result = [Fraction(0)] * order
        for i, a in enumerate(self.coeffs[:order]):
            if a:
                for j in range(order - i):
                    result[i + j] += a * other.coeffs[j]
        return PowerSeries(tuple(result))

    __rmul__ = __mul__

    def __truediv__(self, scalar: Number) -> PowerSeries:
        return self * (Fraction(1) / Fraction(scalar))

    def shift_down(self, power: int = 1) -> PowerSeries:
        """z^power 로 나눈다. 잘려 나가는 낮은 계수는 0이어야 한다."""
        if any(self.coeffs[:power]):
            raise CountingError(f"z^{power}로 나눌 수 없습니다: 낮은 차수 계수가 0이 아닙니다")
        return PowerSeries(self.coeffs[power:])

    def integer_coefficients(self, start: int = 0) -> list[int]:
        """start 이후 계수를 정수로 변환한다. 정수가 아니면 CountingError."""
        values: list[int] = []
        for n, c in enumerate(self.coeffs[start:], start=start):
            if c.denominator != 1:
                raise CountingError(f"z^{n} 계수 {c}가 정수가 아닙니다")
            values.append(c.numerator)
        return values


def binomial_series(scale: Number, exponent: Number, order: int) -> PowerSeries:
    """(1 + scale·z)^exponent 를 일반화 이항 급수로 전개한다."""
    a = Fraction(scale)
    r = Fraction(exponent)
    coeffs: list[Fraction] = []
    term = Fraction(1)
    for n in range(order):
        coeffs.append(term)
        term = term * (r - n) / (n + 1) * a
    return PowerSeries(tuple(coeffs))


def _one_minus_12z(order: int) -> PowerSeries:
    return PowerSeries.of([1, -12], order)


def closed_form_R0(max_n: int) -> list[int]:  # noqa: N802
    """R_0(z) = −(1/54z)(1 − 18z − (1−12z)^{3/2}) 의 z^1..z^max_n 계수.

    (1−12z)^{3/2} 는 (1−12z)·sqrt(1−12z) 로 계산한다.
    """
    order = max_n + 2
    root = binomial_series(-12, Fraction(1, 2), order)
    three_halves = _one_minus_12z(order) * root
    numerator = PowerSeries.of([1, -18], order) - three_halves
    r0 = (numerator.shift_down(1) * Fraction(-1, 54)).integer_coefficients()
    logger.debug(f"닫힌 형식 계수 {max_n}개 계산")
    return r0[1 : max_n + 1]


def quadratic_method_R0(max_n: int) -> list[int]:  # noqa: N802
    """이차 방법의 매개화로 R_0 계수를 다시 계산한다.

        X(z)   = (12z + 1 − sqrt(1 − 12z)) / (18z)
        R_0(z) = ((12z − 1)·X(z) − 8z + 1) / 3
    """
    order = max_n + 2
    root = binomial_series(-12, Fraction(1, 2), order)
    x_numerator = PowerSeries.of([1, 12], order) - root
    x = x_numerator.shift_down(1) / 18
    r0 = (PowerSeries.of([-1, 12], x.order) * x + PowerSeries.of([1, -8], x.order)) / 3
    return r0.integer_coefficients()[1 : max_n + 1]


def rooted_map_series(max_n: int) -> list[int]:
    """−(1/54z²)(1 − 18z − (1−12z)^{3/2}) 의 z^0..z^max_n 계수 (간선 n개 루트 평면 지도 수)."""
    return closed_form_R0(max_n + 1)


def tutte_count(n: int) -> int:
    """간선 n개 루트 평면 지도 수 2·(2n)!·3^n / (n!·(n+2)!)."""
    if n < 0:
        raise CountingError(f"간선 수는 0 이상이어야 합니다: {n}")
    numerator = 2 * math.factorial(2 * n) * 3**n
    denominator = math.factorial(n) * math.factorial(n + 2)
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise CountingError(f"Tutte 공식이 정수가 아닙니다 (n={n})")
    return quotient


@dataclass(frozen=True)
class SeriesRow:
    """series 출력 한 줄."""

    n: int
    recurrence: int
    closed_form: int
    tutte: int

    @property
    def matches(self) -> bool:
        return self.recurrence == self.closed_form == self.tutte


def series_rows(terms: int, recurrence: Sequence[int] | None = None) -> list[SeriesRow]:
    """n = 1..terms 각각에 대해 점화식·닫힌 형식·Tutte 값을 나란히 놓는다.

    Args:
        terms: 행 개수
        recurrence: F[n][0] 값 (크기 0부터). None이면 계수 표에서 계산한다.
    """
    if recurrence is None:
        recurrence = closed_counts(terms)
    closed = closed_form_R0(terms)
    return [
        SeriesRow(
            n=n,
            recurrence=recurrence[n],
            closed_form=closed[n - 1],
            tutte=tutte_count(n - 1),
        )
        for n in range(1, terms + 1)
    ]
