"""도메인 예외 계층.

AppError를 기반으로 한 구조화된 예외 체계.
모든 커스텀 예외는 AppError를 상속하며 code 속성으로 분류된다.
CLI는 AppError를 잡아 `error[<code>]: <message>` 형태로 출력하고 종료 코드 1을 돌려준다.

사용 예시:
    raise NonLinearError(variable="x")
    raise MapClassError(expected="isthmic", actual="vertex")
"""

from __future__ import annotations


class AppError(Exception):
    """애플리케이션 기반 예외.

    모든 커스텀 예외의 최상위 클래스.
    code 속성으로 프로그래매틱 에러 분류를 지원한다.
    """

    def __init__(self, message: str, code: str = "UNKNOWN") -> None:
        """AppError를 초기화한다.

        Args:
            message: 사람이 읽을 수 있는 에러 설명
            code: 프로그래매틱 에러 분류 코드 (기본값: UNKNOWN)
        """
        super().__init__(message)
        self.message = message
        self.code = code

    def __repr__(self) -> str:
        return f"{type(self).__name__}(code={self.code!r}, message={self.message!r})"


# ----------------------------------------------------------------------
# 람다 항
# ----------------------------------------------------------------------


class TermError(AppError):
    """람다 항 관련 예외의 공통 부모."""

    def __init__(self, message: str, code: str = "TERM_ERROR") -> None:
        super().__init__(message=message, code=code)


class TermSyntaxError(TermError):
    """항 텍스트 파싱 실패.

    어느 위치에서 무엇 때문에 실패했는지를 함께 기록한다.
    """

    def __init__(self, position: int, reason: str) -> None:
        """TermSyntaxError를 초기화한다.

        Args:
            position: 입력 문자열 안의 0 기반 오프셋
            reason: 실패 원인 설명
        """
        super().__init__(message=f"위치 {position}: {reason}", code="TERM_SYNTAX")
        self.position = position
        self.reason = reason


class NonLinearError(TermError):
    """변수가 정확히 한 번 쓰이지 않은 항."""

    def __init__(self, variable: str, uses: int | None = None) -> None:
        """NonLinearError를 초기화한다.

        Args:
            variable: 문제가 된 변수 이름 (이름 없는 형식이면 인덱스 표기)
            uses: 실제 사용 횟수 (알 수 있을 때)
        """
        detail = f" ({uses}회 사용)" if uses is not None else ""
        super().__init__(
            message=f"변수 '{variable}'가 선형이 아닙니다{detail}",
            code="NON_LINEAR",
        )
        self.variable = variable
        self.uses = uses


class UnboundVariableError(TermError):
    """어떤 바인더나 문맥에도 속하지 않는 변수."""

    def __init__(self, variable: str) -> None:
        super().__init__(message=f"변수 '{variable}'가 바인딩되지 않았습니다", code="UNBOUND_VARIABLE")
        self.variable = variable


class NotNormalPlanarError(TermError):
    """자유 변수가 하나인 정규 평면 항(NPT)이 필요한 자리에 다른 항이 들어왔다."""

    def __init__(self, reason: str) -> None:
        super().__init__(message=f"정규 평면 항이 아닙니다: {reason}", code="NOT_NPT")
        self.reason = reason


class ClassificationError(TermError):
    """항의 삼분류(identity / function-open / value-open)가 연산의 전제와 맞지 않는다."""

    def __init__(self, expected: str, actual: str) -> None:
        super().__init__(
            message=f"{expected} 항이 필요하지만 {actual} 항이 주어졌습니다",
            code="WRONG_CLASS",
        )
        self.expected = expected
        self.actual = actual


class ColoringError(TermError):
    """규칙 v/a/s/ℓ 의 모양에 맞지 않는 색칠 구성."""

    def __init__(self, reason: str) -> None:
        super().__init__(message=f"잘못된 색칠: {reason}", code="BAD_COLORING")
        self.reason = reason


# ----------------------------------------------------------------------
# 루트 평면 지도
# ----------------------------------------------------------------------


class MapError(AppError):
    """지도 관련 예외의 공통 부모."""

    def __init__(self, message: str, code: str = "MAP_ERROR") -> None:
        super().__init__(message=message, code=code)


class MalformedPermutationError(MapError):
    """회전 주기가 다트 집합 위의 순열이 아니거나 루트가 잘못되었다."""

    def __init__(self, reason: str) -> None:
        super().__init__(message=f"잘못된 회전 시스템: {reason}", code="MALFORMED_PERMUTATION")
        self.reason = reason


class DisconnectedMapError(MapError):
    """기저 그래프가 연결되어 있지 않다."""

    def __init__(self, components: int) -> None:
        super().__init__(
            message=f"지도가 연결되어 있지 않습니다 (성분 {components}개)",
            code="DISCONNECTED",
        )
        self.components = components


class NonPlanarMapError(MapError):
    """오일러 지표가 2가 아닌 지도 (종수 > 0)."""

    def __init__(self, genus: int) -> None:
        super().__init__(message=f"평면 지도가 아닙니다 (종수 {genus})", code="NON_PLANAR")
        self.genus = genus


class MapFormatError(MapError):
    """지도 텍스트 형식 오류."""

    def __init__(self, line: int, reason: str) -> None:
        """MapFormatError를 초기화한다.

        Args:
            line: 1 기반 줄 번호 (파일 전체 문제이면 0)
            reason: 실패 원인 설명
        """
        super().__init__(message=f"{line}번째 줄: {reason}", code="MAP_FORMAT")
        self.line = line
        self.reason = reason


class MapClassError(MapError):
    """Tutte 분류가 연산의 전제와 맞지 않는다."""

    def __init__(self, expected: str, actual: str) -> None:
        super().__init__(
            message=f"{expected} 루트가 필요하지만 {actual} 지도가 주어졌습니다",
            code="WRONG_MAP_CLASS",
        )
        self.expected = expected
        self.actual = actual


# ----------------------------------------------------------------------
# 공통
# ----------------------------------------------------------------------


class HandleIndexError(AppError):
    """핸들 번호 또는 외곽면 보행 길이 k 가 허용 범위를 벗어났다."""

    def __init__(self, index: int, lower: int, upper: int) -> None:
        super().__init__(
            message=f"인덱스 {index}가 범위 [{lower}, {upper}]를 벗어났습니다",
            code="INDEX_RANGE",
        )
        self.index = index
        self.lower = lower
        self.upper = upper


class CountingError(AppError):
    """계수 검증 실패. 구현 버그를 뜻한다."""

    def __init__(self, reason: str) -> None:
        super().__init__(message=reason, code="COUNTING")
        self.reason = reason


class ConfigError(AppError):
    """설정 오류 예외.

    잘못된 설정 값 등 구성 관련 오류를 나타낸다.
    """

    def __init__(self, message: str) -> None:
        super().__init__(message=message, code="CONFIG_ERROR")
