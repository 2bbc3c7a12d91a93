"""공통 테스트 픽스처 및 헬퍼 함수.

여러 테스트 파일에서 공통으로 사용되는 예제 항, 작은 지도, 설정 초기화를 정의한다.
"""

import pytest

from src.infra.config import reset_settings
from src.io_formats.term_syntax import parse_term
from src.lambda_core.terms import App, Lam, LinearTerm, Term, Var
from src.maps.rooted_map import RootedMap

# 자유 변수 x 하나를 가진 크기 4 정규 평면 항 54개 (문헌의 목록 순서)
APPENDIX_A = [
    r"x(\y. y(\z. z(\w. w)))",
    r"x(\y. y(\z. \w. w z))",
    r"x(\y. (y(\z. z))(\w. w))",
    r"x(\y. \z. z(y(\w. w)))",
    r"x(\y. \z. z(\w. w y))",
    r"x(\y. \z. (z(\w. w))y)",
    r"x(\y. \z. (z y)(\w. w))",
    r"x(\y. \z. \w. w(z y))",
    r"x(\y. \z. \w. (w z)y)",
    r"(x(\y. y))(\z. z(\w. w))",
    r"(x(\y. y))(\z. \w. w z)",
    r"(x(\y. y(\z. z)))(\w. w)",
    r"(x(\y. \z. z y))(\w. w)",
    r"((x(\y. y))(\z. z))(\w. w)",
    r"\y. y(x(\z. z(\w. w)))",
    r"\y. y(x(\z. \w. w z))",
    r"\y. y((x(\z. z))(\w. w))",
    r"\y. y(\z. z(x(\w. w)))",
    r"\y. y(\z. z(\w. w x))",
    r"\y. y(\z. (z(\w. w))x)",
    r"\y. y(\z. (z x)(\w. w))",
    r"\y. y(\z. \w. w(z x))",
    r"\y. y(\z. \w. (w z)x)",
    r"\y. (y(\z. z))(x(\w. w))",
    r"\y. (y(\z. z))(\w. w x)",
    r"\y. (y(\z. z(\w. w)))x",
    r"\y. (y(\z. \w. w z))x",
    r"\y. ((y(\z. z))(\w. w))x",
    r"\y. (y x)(\z. z(\w. w))",
    r"\y. (y x)(\z. \w. w z)",
    r"\y. (y(x(\z. z)))(\w. w)",
    r"\y. (y(\z. z x))(\w. w)",
    r"\y. ((y(\z. z))x)(\w. w)",
    r"\y. ((y x)(\z. z))(\w. w)",
    r"\y. \z. z(y(x(\w. w)))",
    r"\y. \z. z(y(\w. w x))",
    r"\y. \z. z((y(\w. w))x)",
    r"\y. \z. z((y x)(\w. w))",
    r"\y. \z. z(\w. w(y x))",
    r"\y. \z. z(\w. (w y)x)",
    r"\y. \z. (z(\w. w))(y x)",
    r"\y. \z. (z y)(x(\w. w))",
    r"\y. \z. (z y)(\w. w x)",
    r"\y. \z. (z(y(\w. w)))x",
    r"\y. \z. (z(\w. w y))x",
    r"\y. \z. (z(\w. w)y)x",
    r"\y. \z. ((z y)(\w. w))x",
    r"\y. \z. (z(y x))(\w. w)",
    r"\y. \z. ((z y)x)(\w. w)",
    r"\y. \z. \w. w(z(y x))",
    r"\y. \z. \w. w((z y)x)",
    r"\y. \z. \w. (w z)(y x)",
    r"\y. \z. \w. (w(z y))x",
    r"\y. \z. \w. ((w z)y)x",
]

# 바깥 중립 핸들 7개짜리 function-open 예제
SEVEN_HANDLES = r"[y] (y (\z. z)) (\w. \u. \v. v (u w))"

# 바깥 중립 핸들 4개짜리 value-open 분해 결과 예제
FOUR_HANDLES = r"[y] \z. \w. (w z) (\u. u (\v. v y))"


def term(text: str) -> LinearTerm:
    """테스트용 짧은 이름."""
    return parse_term(text)


def chain_term(length: int) -> LinearTerm:
    """[x] x (λy1. y1 (λy2. y2 (… (λyL. yL)))) 를 이름 없는 형태로 직접 만든다.

    잎 L+1개, 깊이 2L+1, 바깥 중립 핸들 2L+1개. 지도 쪽은 이음다리 L개의 사슬이다.
    """
    body: Term = Lam(Var(0))
    for _ in range(length - 1):
        body = Lam(App(Var(0), body))
    return LinearTerm(App(Var(0), body), ("x",))


def chain_text(length: int) -> str:
    """chain_term(length) 의 문자열 표기."""
    opening = "".join(f"(\\y{i}. y{i} " for i in range(length - 1))
    return f"[x] x {opening}(\\y{length - 1}. y{length - 1}){')' * (length - 1)}"


@pytest.fixture(autouse=True)
def _fresh_settings(monkeypatch):
    """테스트마다 설정 싱글톤과 PLAM_ 환경변수를 비운다."""
    for key in ("PLAM_LOG_LEVEL", "PLAM_COUNTING__MAX_SIZE", "PLAM_VERIFY__MAX_SIZE"):
        monkeypatch.delenv(key, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def vertex_map() -> RootedMap:
    return RootedMap.vertex()


@pytest.fixture
def isthmus_map() -> RootedMap:
    """간선 하나, 꼭짓점 둘."""
    return RootedMap(edges=1, rotation=((1,), (-1,)), root=1)


@pytest.fixture
def loop_map() -> RootedMap:
    """고리 하나, 꼭짓점 하나."""
    return RootedMap(edges=1, rotation=((1, -1),), root=1)


@pytest.fixture
def torus_map() -> RootedMap:
    """꼭짓점 하나에 간선 둘이 엇갈린 토러스 지도 (V − E + F = 0)."""
    return RootedMap(edges=2, rotation=((1, 2, -1, -2),), root=1)
