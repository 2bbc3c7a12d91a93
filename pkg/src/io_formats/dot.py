"""Graphviz DOT 출력.

색칠된 문자열 다이어그램과 루트 지도를 DOT 텍스트로 만든다. 배치는 dot 도구에 맡긴다.

다이어그램 노드:
    ℓ: 빨강 입력 하나 (본문), 빨강 출력 (λx.t), 파랑 출력 (바인더 x)
    a: 파랑 입력 (함수), 빨강 입력 (인자), 파랑 출력 (적용)
    s: 파랑 입력, 빨강 출력 (중립 → 정규)
파랑 선은 B (중립), 빨강 선은 R (정규) 이다.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from src.core.exceptions import ColoringError
from src.lambda_core.coloring import Coloring, Kind, Rule, color
from src.lambda_core.terms import App, Lam, LinearTerm, Term, Var
from src.maps.rooted_map import RootedMap

_WIRE_STYLE = {
    Kind.NEUTRAL: 'color=blue, label="B"',
    Kind.NORMAL: 'color=red, label="R", penwidth=2',
}
_NODE_STYLE = {
    Rule.LAM: 'label="ℓ", shape=circle',
    Rule.APP: 'label="a", shape=circle',
    Rule.SWITCH: 'label="s", shape=point, width=0.12',
}


@dataclass
class _Diagram:
    nodes: list[str] = field(default_factory=list)
    wires: list[str] = field(default_factory=list)

    def node(self, rule: Rule) -> str:
        name = f"n{len(self.nodes)}"
        self.nodes.append(f'  {name} [{_NODE_STYLE[rule]}];')
        return name

    def wire(self, source: str, target: str, kind: Kind) -> None:
        self.wires.append(f"  {source} -> {target} [{_WIRE_STYLE[kind]}];")


@dataclass(frozen=True, slots=True)
class _Close:
    """전제를 다 그린 뒤 rule 노드를 마무리하라는 표시."""

    rule: Rule
    abstraction: str | None = None


def emit_dot_diagram(term: LinearTerm, coloring: Coloring | None = None) -> str:
    """색칠된 항의 문자열 다이어그램.

    자유 변수마다 입력 노드, 전체 항에는 출력 노드 하나가 붙는다.

    Args:
        term: 중립 또는 정규 선형 항
        coloring: term의 색칠 (없으면 정규, 그 다음 중립 순으로 계산)

    Raises:
        ColoringError: 항이 중립도 정규도 아님
    """
    if coloring is None:
        coloring = color(term, Kind.NORMAL) or color(term, Kind.NEUTRAL)
        if coloring is None:
            raise ColoringError("β-정규형이 아닌 항은 다이어그램을 그릴 수 없습니다")

    diagram = _Diagram()
    inputs = []
    for position, name in enumerate(term.context):
        node = f"in{position}"
        inputs.append(node)
        diagram.nodes.append(f'  {node} [label="{name}", shape=plaintext];')

    # ℓ 노드는 들어갈 때, a·s 노드는 전제를 다 그린 뒤에 만든다.
    pending: list[tuple[Term, Coloring, list[str]] | _Close] = [(term.body, coloring, [])]
    sources: list[str] = []
    while pending:
        item = pending.pop()
        if isinstance(item, _Close):
            source = sources.pop()
            if item.rule is Rule.APP:
                fun_source = sources.pop()
                apply = diagram.node(Rule.APP)
                diagram.wire(fun_source, apply, Kind.NEUTRAL)
                diagram.wire(source, apply, Kind.NORMAL)
                sources.append(apply)
            elif item.rule is Rule.SWITCH:
                switch = diagram.node(Rule.SWITCH)
                diagram.wire(source, switch, Kind.NEUTRAL)
                sources.append(switch)
            else:
                assert item.abstraction is not None
                diagram.wire(source, item.abstraction, Kind.NORMAL)
                sources.append(item.abstraction)
            continue
        node, paint, binders = item
        match paint.rule, node:
            case Rule.VAR, Var(index=index):
                depth = len(binders)
                if index < depth:
                    sources.append(binders[depth - 1 - index])
                else:
                    sources.append(inputs[index - depth])
            case Rule.APP, App(fun=fun, arg=arg):
                pending.append(_Close(Rule.APP))
                pending.append((arg, paint.premises[1], binders))
                pending.append((fun, paint.premises[0], binders))
            case Rule.SWITCH, _:
                pending.append(_Close(Rule.SWITCH))
                pending.append((node, paint.premises[0], binders))
            case Rule.LAM, Lam(body=body):
                abstraction = diagram.node(Rule.LAM)
                pending.append(_Close(Rule.LAM, abstraction))
                pending.append((body, paint.premises[0], [*binders, abstraction]))
            case _:
                raise ColoringError(
                    f"색칠 규칙 {paint.rule}이 항 {type(node).__name__}와 맞지 않습니다"
                )

    result = sources.pop()
    diagram.nodes.append('  out [label="out", shape=plaintext];')
    diagram.wire(result, "out", coloring.kind)
    lines = [
        "digraph diagram {",
        "  rankdir=BT;",
        *diagram.nodes,
        *diagram.wires,
        "}",
    ]
    return "\n".join(lines) + "\n"


def emit_dot_map(m: RootedMap) -> str:
    """루트 지도를 무향 다중 그래프로 그린다. 루트 간선만 루트 다트 방향 화살표."""
    lines = ["digraph map {", "  node [shape=circle];"]
    count = m.vertex_count
    for vertex in range(count):
        rotation = " ".join(str(d) for d in m.rotation[vertex]) if m.rotation else ""
        lines.append(f'  v{vertex} [label="v{vertex}", tooltip="{rotation}"];')
    for edge in range(1, m.edges + 1):
        dart = edge
        if m.root is not None and abs(m.root) == edge:
            dart = m.root
        tail = m.vertex_of[dart]
        head = m.vertex_of[-dart]
        if dart == m.root:
            style = f'dir=forward, color=red, penwidth=2, label="root {dart}"'
        else:
            style = f'dir=none, label="{edge}"'
        lines.append(f"  v{tail} -> v{head} [{style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
