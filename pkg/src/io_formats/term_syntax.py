"""람다 항 텍스트 문법.

    term   := lam | app
    lam    := '\\' NAME+ '.' term          (본문은 오른쪽 끝까지)
    app    := atom atom*                   (왼쪽 결합)
    atom   := NAME | '(' term ')' | lam
    prefix := '[' NAME (',' NAME)* ']'     (선택, 자유 변수 문맥)

입력에서는 'λ'도 받지만 출력은 항상 '\\'를 쓴다.
출력 형식: `[x] \\y. y x`, 닫힌 항은 접두어 없이 `\\x. x`.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from enum import StrEnum

from src.core.exceptions import NonLinearError, TermSyntaxError, UnboundVariableError
from src.lambda_core.names import fresh_names
from src.lambda_core.terms import App, Lam, LinearTerm, Term, Var


class TokenType(StrEnum):
    LAMBDA = "lambda"
    DOT = "dot"
    LPAREN = "("
    RPAREN = ")"
    LBRACKET = "["
    RBRACKET = "]"
    COMMA = ","
    NAME = "name"
    EOF = "eof"


@dataclass(frozen=True, slots=True)
class Token:
    type: TokenType
    value: str
    position: int


_TOKEN_RE = re.compile(
    r"(?P<space>\s+)|(?P<name>[a-z][a-z0-9_]*)|(?P<lambda>\\|λ)|(?P<punct>[.()\[\],])"
)
_PUNCT = {
    ".": TokenType.DOT,
    "(": TokenType.LPAREN,
    ")": TokenType.RPAREN,
    "[": TokenType.LBRACKET,
    "]": TokenType.RBRACKET,
    ",": TokenType.COMMA,
}


def tokenize(text: str) -> list[Token]:
    """입력을 토큰 목록으로 나눈다. 끝에 EOF 토큰이 붙는다."""
    tokens: list[Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if match is None:
            raise TermSyntaxError(position, f"알 수 없는 문자 {text[position]!r}")
        kind = match.lastgroup
        value = match.group()
        if kind == "name":
            tokens.append(Token(TokenType.NAME, value, position))
        elif kind == "lambda":
            tokens.append(Token(TokenType.LAMBDA, value, position))
        elif kind == "punct":
            tokens.append(Token(_PUNCT[value], value, position))
        position = match.end()
    tokens.append(Token(TokenType.EOF, "", len(text)))
    return tokens


# ----------------------------------------------------------------------
# 파서
# ----------------------------------------------------------------------


@dataclass(slots=True)
class _Spine:
    node: Term | None = None


@dataclass(frozen=True, slots=True)
class _Binder:
    names: list[str]
    marks: list[int]


@dataclass(frozen=True, slots=True)
class _Group:
    pass


_ATOM_START = (TokenType.NAME, TokenType.LPAREN, TokenType.LAMBDA)


class _Parser:
    """스택 기반 하강 파서. 이름을 읽는 즉시 이름 없는 인덱스로 바꾼다."""

    def __init__(self, text: str) -> None:
        self.tokens = tokenize(text)
        self.index = 0
        self.context: tuple[str, ...] = ()
        self.scope: list[tuple[str, int]] = []
        self.bound_uses: list[int] = []
        self.free_uses: Counter[str] = Counter()

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: TokenType, what: str) -> Token:
        token = self.current
        if token.type is not kind:
            found = token.value or "입력 끝"
            raise TermSyntaxError(token.position, f"{what}이(가) 필요하지만 {found!r}")
        return self.advance()

    def parse(self) -> LinearTerm:
        if self.current.type is TokenType.LBRACKET:
            self.context = self.prefix()
        body = self.term()
        self.expect(TokenType.EOF, "입력 끝")
        for name in self.context:
            if self.free_uses[name] != 1:
                raise NonLinearError(name, self.free_uses[name])
        return LinearTerm(body, self.context)

    def prefix(self) -> tuple[str, ...]:
        self.advance()
        names: list[str] = []
        if self.current.type is not TokenType.RBRACKET:
            names.append(self.expect(TokenType.NAME, "변수 이름").value)
            while self.current.type is TokenType.COMMA:
                self.advance()
                token = self.expect(TokenType.NAME, "변수 이름")
                if token.value in names:
                    raise TermSyntaxError(token.position, f"문맥에 '{token.value}'가 두 번 있습니다")
                names.append(token.value)
        self.expect(TokenType.RBRACKET, "']'")
        return tuple(names)

    def term(self) -> Term:
        """term 하나를 읽는다. 중첩은 호출 스택 대신 frames 스택에 쌓는다.

        프레임 종류: _Spine (적용 열 누적), _Binder (본문을 기다리는 λ), _Group (괄호).
        """
        frames: list[_Spine | _Binder | _Group] = []
        start_term = True
        while True:
            if start_term:
                if self.current.type is TokenType.LAMBDA:
                    frames.append(self.binder())
                    continue
                frames.append(_Spine())
            value = self.atom(frames)
            start_term = value is None
            if value is None:
                continue
            # 완성된 atom을 적용 열에 붙이고, 열이 끝나면 바깥 프레임으로 올려 보낸다.
            while True:
                spine = frames[-1]
                assert isinstance(spine, _Spine)
                finished = value if spine.node is None else App(spine.node, value)
                spine.node = finished
                if self.current.type in _ATOM_START:
                    break
                frames.pop()
                while frames and isinstance(frames[-1], _Binder):
                    finished = self.close_binder(frames.pop(), finished)
                if not frames:
                    return finished
                if isinstance(frames[-1], _Group):
                    frames.pop()
                    self.expect(TokenType.RPAREN, "')'")
                value = finished
            start_term = False

    def binder(self) -> _Binder:
        self.advance()
        names = [self.expect(TokenType.NAME, "바인더 이름").value]
        while self.current.type is TokenType.NAME:
            names.append(self.advance().value)
        self.expect(TokenType.DOT, "'.'")
        marks = []
        for name in names:
            self.bound_uses.append(0)
            marks.append(len(self.bound_uses) - 1)
            self.scope.append((name, marks[-1]))
        return _Binder(names, marks)

    def close_binder(self, frame: _Binder, body: Term) -> Term:
        for name, mark in zip(reversed(frame.names), reversed(frame.marks), strict=True):
            self.scope.pop()
            if self.bound_uses[mark] != 1:
                raise NonLinearError(name, self.bound_uses[mark])
            body = Lam(body)
        return body

    def atom(self, frames: list[_Spine | _Binder | _Group]) -> Term | None:
        """변수면 그 항을, 괄호나 λ를 열었으면 None을 돌려준다."""
        token = self.current
        match token.type:
            case TokenType.NAME:
                self.advance()
                return self.variable(token)
            case TokenType.LPAREN:
                self.advance()
                frames.append(_Group())
                return None
            case TokenType.LAMBDA:
                frames.append(self.binder())
                return None
        found = token.value or "입력 끝"
        raise TermSyntaxError(token.position, f"항이 필요하지만 {found!r}")

    def variable(self, token: Token) -> Var:
        name = token.value
        depth = len(self.scope)
        for offset, (bound, slot) in enumerate(reversed(self.scope)):
            if bound == name:
                self.bound_uses[slot] += 1
                return Var(offset)
        if name not in self.context:
            raise UnboundVariableError(name)
        self.free_uses[name] += 1
        return Var(depth + self.context.index(name))


def parse_term(text: str) -> LinearTerm:
    """텍스트를 선형 항으로 읽는다.

    Raises:
        TermSyntaxError: 문법 오류 (위치 포함)
        NonLinearError: 어떤 변수가 정확히 한 번 쓰이지 않음
        UnboundVariableError: 접두어 문맥에 없는 자유 변수
    """
    return _Parser(text).parse()


# ----------------------------------------------------------------------
# 출력
# ----------------------------------------------------------------------


def print_term(term: LinearTerm) -> str:
    """정규 출력. 바인더 이름은 문맥을 피한 fresh 이름을 깊이 순으로 쓴다."""
    names = fresh_names(avoid=term.context)
    binder_names: list[str] = []

    def binder(depth: int) -> str:
        while len(binder_names) <= depth:
            binder_names.append(next(names))
        return binder_names[depth]

    pieces: list[str] = []
    pending: list[str | tuple[Term, int]] = [(term.body, 0)]
    while pending:
        item = pending.pop()
        if isinstance(item, str):
            pieces.append(item)
            continue
        node, depth = item
        match node:
            case Var(index=index):
                if index < depth:
                    pieces.append(binder(depth - 1 - index))
                else:
                    pieces.append(term.context[index - depth])
            case Lam(body=body):
                pieces.append(f"\\{binder(depth)}. ")
                pending.append((body, depth + 1))
            case App():
                spine: list[Term] = []
                head: Term = node
                while isinstance(head, App):
                    spine.append(head.arg)
                    head = head.fun
                # 스택이므로 뒤에서부터 넣는다: head, ' ', arg1, ' ', arg2 ...
                for part in [head, *reversed(spine)][::-1]:
                    pending.extend(_wrapped(part, depth))
                    pending.append(" ")
                pending.pop()
            case _:
                raise TypeError(node)

    text = "".join(pieces)
    if not term.context:
        return text
    return f"[{', '.join(term.context)}] {text}"


def _wrapped(node: Term, depth: int) -> list[str | tuple[Term, int]]:
    """스택에 넣을 순서(역순)로 node를 괄호와 함께 돌려준다."""
    if isinstance(node, Var):
        return [(node, depth)]
    return [")", (node, depth), "("]
