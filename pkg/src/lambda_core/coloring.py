"""B/R 색칠: 중립(neutral)과 정규(normal) 항을 증명하는 유도 트리.

규칙
    v : 변수 한 개                      → 중립 (차수 1)
    a : 중립 × 정규                     → 중립 (차수 합)
    s : 중립                            → 정규 (크기 +1)
    ℓ : 정규 (차수 ≥ 1)                 → 정규 (차수 −1)

크기(size)는 s 규칙 사용 횟수다. 정규 색칠의 크기는 잎 수와 같다.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum

from src.core.exceptions import ColoringError
from src.lambda_core.names import fresh_names
from src.lambda_core.skeleton import Abstract, Apply, Leaf, Skeleton
from src.lambda_core.terms import App, Lam, LinearTerm, Term, Var


class Rule(StrEnum):
    VAR = "v"
    APP = "a"
    SWITCH = "s"
    LAM = "l"


class Kind(StrEnum):
    """색칠 종류. B = 중립, R = 정규."""

    NEUTRAL = "B"
    NORMAL = "R"


_PREMISE_KINDS: dict[Rule, tuple[Kind, ...]] = {
    Rule.VAR: (),
    Rule.APP: (Kind.NEUTRAL, Kind.NORMAL),
    Rule.SWITCH: (Kind.NEUTRAL,),
    Rule.LAM: (Kind.NORMAL,),
}


@dataclass(frozen=True, slots=True, eq=False)
class Coloring:
    """규칙 하나와 그 전제들로 이루어진 유도 트리.

    degree와 size는 생성 시 전제로부터 계산된다.
    """

    rule: Rule
    premises: tuple[Coloring, ...] = ()
    degree: int = field(init=False, compare=False)
    size: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        expected = _PREMISE_KINDS[self.rule]
        actual = tuple(p.kind for p in self.premises)
        if actual != expected:
            raise ColoringError(
                f"규칙 {self.rule}의 전제는 {expected}여야 하지만 {actual}입니다"
            )
        match self.rule:
            case Rule.VAR:
                degree, size = 1, 0
            case Rule.APP:
                fun, arg = self.premises
                degree, size = fun.degree + arg.degree, fun.size + arg.size
            case Rule.SWITCH:
                degree, size = self.premises[0].degree, self.premises[0].size + 1
            case Rule.LAM:
                body = self.premises[0]
                if body.degree < 1:
                    raise ColoringError("차수 0인 정규 항 위에 ℓ 규칙을 쓸 수 없습니다")
                degree, size = body.degree - 1, body.size
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "size", size)

    @property
    def kind(self) -> Kind:
        if self.rule in (Rule.VAR, Rule.APP):
            return Kind.NEUTRAL
        return Kind.NORMAL

    # ------------------------------------------------------------------
    # 생성자
    # ------------------------------------------------------------------

    @classmethod
    def var(cls) -> Coloring:
        return cls(Rule.VAR)

    @classmethod
    def app(cls, fun: Coloring, arg: Coloring) -> Coloring:
        return cls(Rule.APP, (fun, arg))

    @classmethod
    def switch(cls, neutral: Coloring) -> Coloring:
        return cls(Rule.SWITCH, (neutral,))

    @classmethod
    def lam(cls, body: Coloring) -> Coloring:
        return cls(Rule.LAM, (body,))

    # ------------------------------------------------------------------
    # 조회
    # ------------------------------------------------------------------

    def rules(self) -> tuple[Rule, ...]:
        """전위 순서의 규칙 나열. 규칙마다 전제 수가 정해져 있어 트리를 결정한다."""
        out: list[Rule] = []
        pending: list[Coloring] = [self]
        while pending:
            node = pending.pop()
            out.append(node.rule)
            pending.extend(reversed(node.premises))
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.rules() == other.rules()

    def __hash__(self) -> int:
        return hash(self.rules())

    def skeleton(self) -> Skeleton:
        """색칠이 증명하는 골격 (s 노드는 골격에 나타나지 않는다)."""
        pending: list[tuple[Coloring, bool]] = [(self, False)]
        built: list[Skeleton] = []
        while pending:
            node, expanded = pending.pop()
            if node.rule is Rule.VAR:
                built.append(Leaf())
            elif not expanded:
                pending.append((node, True))
                pending.extend((premise, False) for premise in reversed(node.premises))
            elif node.rule is Rule.APP:
                right = built.pop()
                built.append(Apply(built.pop(), right))
            elif node.rule is Rule.LAM:
                built.append(Abstract(built.pop()))
        return built[0]

    def count(self, rule: Rule) -> int:
        """유도 트리에서 rule이 쓰인 횟수."""
        return self.rules().count(rule)


def color(term: LinearTerm | Term, kind: Kind) -> Coloring | None:
    """요청한 종류의 유일한 색칠을 반환한다. 없으면 None.

    정규 색칠은 β-redex가 있으면 없고, 중립 색칠은 머리 적용 모양이 아니면 없다.
    """
    body = term.body if isinstance(term, LinearTerm) else term
    pending: list[tuple[Term, Kind] | Rule] = [(body, kind)]
    built: list[Coloring] = []
    while pending:
        item = pending.pop()
        if isinstance(item, Rule):
            match item:
                case Rule.APP:
                    arg = built.pop()
                    built.append(Coloring.app(built.pop(), arg))
                case Rule.SWITCH:
                    built.append(Coloring.switch(built.pop()))
                case Rule.LAM:
                    built.append(Coloring.lam(built.pop()))
            continue
        node, wanted = item
        if wanted is Kind.NORMAL:
            if isinstance(node, Lam):
                pending.extend((Rule.LAM, (node.body, Kind.NORMAL)))
            else:
                pending.extend((Rule.SWITCH, (node, Kind.NEUTRAL)))
            continue
        match node:
            case Var():
                built.append(Coloring.var())
            case App(fun=fun, arg=arg):
                pending.extend((Rule.APP, (arg, Kind.NORMAL), (fun, Kind.NEUTRAL)))
            case _:
                return None
    return built[0]


def require_kind(coloring: Coloring, kind: Kind) -> None:
    if coloring.kind is not kind:
        raise ColoringError(f"{kind.name} 색칠이 필요하지만 {coloring.kind.name} 색칠입니다")


def head_variable(term: LinearTerm, coloring: Coloring) -> str:
    """중립 항의 머리 변수 이름. a 규칙의 왼쪽 가지만 따라 내려간다.

    Args:
        term: 중립 항
        coloring: term의 중립 색칠

    Returns:
        머리 위치의 자유 변수 표시 이름
    """
    require_kind(coloring, Kind.NEUTRAL)
    node = term.body
    while isinstance(node, App):
        node = node.fun
    if not isinstance(node, Var):
        raise ColoringError("중립 항의 머리가 변수가 아닙니다")
    return term.context[node.index]


def neutral_body(term: LinearTerm, coloring: Coloring) -> LinearTerm:
    """앞쪽 추상을 모두 벗긴 중립 본문과 확장된 문맥을 반환한다.

    벗긴 바인더는 안쪽부터 문맥 앞에 붙는다. 인덱스는 바뀌지 않는다.
    """
    require_kind(coloring, Kind.NORMAL)
    node = term.body
    stripped = 0
    while isinstance(node, Lam):
        node = node.body
        stripped += 1
    names = fresh_names(avoid=term.context)
    binders = [next(names) for _ in range(stripped)]
    return LinearTerm(node, (*reversed(binders), *term.context))
