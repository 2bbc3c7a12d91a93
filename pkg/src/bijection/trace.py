"""분해 트레이스: 병렬 Tutte 분해의 재귀 트리.

어느 쪽에서 만들었든 같은 트레이스를 다른 쪽에서 다시 접으면 대응 객체가 나온다.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from src.core.interfaces import Case

_TERM_LABELS = {
    Case.VERTEX: "identity",
    Case.ISTHMIC: "function-open",
    Case.NON_ISTHMIC: "value-open",
}


@dataclass(frozen=True, slots=True, eq=False)
class DecompTrace:
    """분해 한 단계.

    Attributes:
        case: 이 단계의 경우
        index: NON_ISTHMIC 일 때 지도 쪽 인덱스 k (항 쪽은 k+1), 그 외 None
        children: 부분 분해 (VERTEX 0개, ISTHMIC 2개, NON_ISTHMIC 1개)
        edges: 대응 지도의 간선 수 (= 항 크기 − 1)
        outer_degree: 대응 지도의 바깥 면 차수 (= 바깥 핸들 수 − 1)
    """

    case: Case
    index: int | None = None
    children: tuple[DecompTrace, ...] = ()
    edges: int = field(init=False, repr=False)
    outer_degree: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        match self.case:
            case Case.VERTEX:
                edges, outer = 0, 0
            case Case.ISTHMIC:
                edges = 1 + sum(child.edges for child in self.children)
                outer = 2 + sum(child.outer_degree for child in self.children)
            case Case.NON_ISTHMIC:
                if self.index is None:
                    raise ValueError("NON_ISTHMIC 단계에는 index가 필요합니다")
                edges = 1 + sum(child.edges for child in self.children)
                outer = self.index + 1
            case _:
                raise ValueError(self.case)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "outer_degree", outer)

    def steps(self) -> tuple[tuple[Case, int | None], ...]:
        """전위 순서의 (경우, 인덱스) 나열. 경우가 자식 수를 정하므로 트리를 결정한다."""
        out: list[tuple[Case, int | None]] = []
        pending: list[DecompTrace] = [self]
        while pending:
            node = pending.pop()
            out.append((node.case, node.index))
            pending.extend(reversed(node.children))
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DecompTrace):
            return NotImplemented
        return self.steps() == other.steps()

    def __hash__(self) -> int:
        return hash(self.steps())


def render_trace(trace: DecompTrace) -> str:
    """들여쓰기 텍스트로 트레이스를 보여 준다.

    예:
        ⊙1 / VO_2  (e=6, o=2)
          ⊕ / FO  (e=5, o=4)
            ...
    """
    lines: list[str] = []
    pending: list[tuple[DecompTrace, int]] = [(trace, 0)]
    while pending:
        node, depth = pending.pop()
        match node.case:
            case Case.VERTEX:
                label = "vertex / id"
            case Case.ISTHMIC:
                label = "⊕ / FO"
            case _:
                label = f"⊙{node.index} / VO_{(node.index or 0) + 1}"
        lines.append(
            f"{'  ' * depth}{label}  (e={node.edges}, o={node.outer_degree}, "
            f"{_TERM_LABELS[node.case]})"
        )
        for child in reversed(node.children):
            pending.append((child, depth + 1))
    return "\n".join(lines)
