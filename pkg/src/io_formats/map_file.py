"""지도 텍스트 형식.

    # 주석과 빈 줄은 무시한다
    edges 2
    vertex: 1 2 -2
    vertex: -1
    root 1

꼭짓점 줄의 다트는 반시계 순서다. 간선이 없으면 꼭짓점 줄 없이 `root none`.
"""

from __future__ import annotations

from src.core.exceptions import MapFormatError
from src.maps.canonical import canonicalize
from src.maps.rooted_map import Cycle, Dart, RootedMap, validate


def _parse_int(text: str, line: int, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise MapFormatError(line, f"{what}가 정수가 아닙니다: {text!r}") from None


def parse_map(text: str) -> RootedMap:
    """지도 파일을 읽고 validate 까지 통과한 지도를 반환한다.

    Raises:
        MapFormatError: 형식 오류 (줄 번호 포함, 0 은 파일 전체)
        MalformedPermutationError, DisconnectedMapError, NonPlanarMapError: validate 실패
    """
    edges: int | None = None
    rotation: list[Cycle] = []
    root: Dart | None = None
    root_seen = False

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        if keyword == "edges":
            if edges is not None:
                raise MapFormatError(number, "edges 줄이 두 번 있습니다")
            edges = _parse_int(rest.strip(), number, "간선 수")
            if edges < 0:
                raise MapFormatError(number, "간선 수가 음수입니다")
        elif line.startswith("vertex:"):
            if edges is None:
                raise MapFormatError(number, "vertex 줄이 edges 줄보다 먼저 나왔습니다")
            darts = tuple(
                _parse_int(item, number, "다트") for item in line[len("vertex:") :].split()
            )
            if not darts and edges > 0:
                raise MapFormatError(number, "빈 vertex 줄")
            if darts:
                rotation.append(darts)
        elif keyword == "root":
            if root_seen:
                raise MapFormatError(number, "root 줄이 두 번 있습니다")
            root_seen = True
            value = rest.strip()
            root = None if value == "none" else _parse_int(value, number, "루트 다트")
        else:
            raise MapFormatError(number, f"알 수 없는 줄: {line!r}")

    if edges is None:
        raise MapFormatError(0, "edges 줄이 없습니다")
    if not root_seen:
        raise MapFormatError(0, "root 줄이 없습니다")
    if edges > 0 and root is None:
        raise MapFormatError(0, "간선이 있는 지도에는 루트 다트가 필요합니다")

    m = RootedMap(edges=edges, rotation=tuple(rotation), root=root)
    validate(m)
    return m


def print_map(m: RootedMap, canonical: bool = True) -> str:
    """지도 파일 텍스트. canonical 이면 정규 라벨로 바꿔 쓴다 (LF 줄 끝)."""
    if canonical:
        m = canonicalize(m).map
    lines = [f"edges {m.edges}"]
    lines.extend("vertex: " + " ".join(str(d) for d in cycle) for cycle in m.rotation)
    lines.append("root none" if m.root is None else f"root {m.root}")
    return "\n".join(lines) + "\n"
