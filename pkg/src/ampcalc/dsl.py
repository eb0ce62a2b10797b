"""Text formats for diagrams and amplitude tables.

Diagram grammar (whitespace-insensitive, ``#`` comments to end of line)::

    diagram := node ("->" node)+
    node    := IDENT | "{" branch ("|" branch)+ "}"
    branch  := node ("->" node)*

A braces node between neighbours P and Q is a parallel process whose
branches each run P -> b1 -> ... -> bk -> Q. Chains nest to the right.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .core import (
    COMPLEX_RE,
    LABEL_RE,
    AmplitudeTable,
    format_complex,
    parse_complex,
)
from .diagram import Atomic, Parallel, ProcessExpr, Series, require_valid, right_nested
from .errors import AmplitudeError, ConjugateConflict, NonFinite, Unprintable


@dataclass(frozen=True)
class Diagnostic:
    line: int
    column: int
    message: str

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.message}"


class DslSyntaxError(AmplitudeError, ValueError):
    def __init__(self, diagnostic: Diagnostic):
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT, ARROW, LBRACE, RBRACE, BAR
    text: str
    line: int
    column: int


_PUNCT = {"->": "ARROW", "{": "LBRACE", "}": "RBRACE", "|": "BAR"}


def _error(line: int, column: int, message: str) -> DslSyntaxError:
    return DslSyntaxError(Diagnostic(line, column, message))


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    line, col, i, n = 1, 1, 0, len(source)
    while i < n:
        ch = source[i]
        if ch == "\n":
            line, col, i = line + 1, 1, i + 1
            continue
        if ch.isspace():
            col, i = col + 1, i + 1
            continue
        if ch == "#":
            while i < n and source[i] != "\n":
                i += 1
            continue
        if source.startswith("->", i):
            tokens.append(Token("ARROW", "->", line, col))
            col, i = col + 2, i + 2
            continue
        if ch in "{}|":
            tokens.append(Token(_PUNCT[ch], ch, line, col))
            col, i = col + 1, i + 1
            continue
        m = LABEL_RE.match(source, i)
        if m is None:
            raise _error(line, col, f"unexpected character {ch!r}")
        tokens.append(Token("IDENT", m.group(), line, col))
        col += len(m.group())
        i = m.end()
    return tokens


@dataclass(frozen=True)
class _Ident:
    name: str
    tok: Token


@dataclass(frozen=True)
class _Braces:
    branches: tuple[tuple["_Node", ...], ...]
    tok: Token


_Node = Union[_Ident, _Braces]

_DESCRIBE = {
    "ARROW": "'->'",
    "LBRACE": "'{'",
    "RBRACE": "'}'",
    "BAR": "'|'",
}


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def unexpected(self, tok: Token, expected: str) -> DslSyntaxError:
        what = f"'{tok.text}'" if tok.kind == "IDENT" else _DESCRIBE[tok.kind]
        return _error(tok.line, tok.column, f"unexpected {what}, expected {expected}")

    def node(self, after: Token | None) -> _Node:
        tok = self.peek()
        if tok is None:
            if after is None:
                raise _error(1, 1, "empty diagram")
            raise _error(after.line, after.column, f"dangling '{after.text}': expected a state or '{{'")
        if tok.kind == "IDENT":
            self.advance()
            return _Ident(tok.text, tok)
        if tok.kind == "LBRACE":
            return self.braces()
        raise self.unexpected(tok, "a state or '{'")

    def braces(self) -> _Braces:
        open_tok = self.advance()
        branches = [self.branch(open_tok)]
        while True:
            tok = self.peek()
            if tok is None:
                raise _error(open_tok.line, open_tok.column, "unclosed '{'")
            if tok.kind == "BAR":
                branches.append(self.branch(self.advance()))
                continue
            if tok.kind == "RBRACE":
                self.advance()
                break
            raise self.unexpected(tok, "'->', '|' or '}'")
        if len(branches) < 2:
            raise _error(open_tok.line, open_tok.column, "a parallel block needs at least 2 branches")
        return _Braces(tuple(branches), open_tok)

    def branch(self, after: Token) -> tuple[_Node, ...]:
        nodes = [self.node(after)]
        while (tok := self.peek()) is not None and tok.kind == "ARROW":
            nodes.append(self.node(self.advance()))
        return tuple(nodes)

    def diagram(self) -> list[_Node]:
        nodes = [self.node(None)]
        while (tok := self.peek()) is not None and tok.kind == "ARROW":
            nodes.append(self.node(self.advance()))
        tok = self.peek()
        if tok is not None:
            raise self.unexpected(tok, "'->' or end of input")
        if len(nodes) < 2:
            first = nodes[0].tok
            raise _error(first.line, first.column, "a diagram needs at least two nodes")
        return nodes


def _build(nodes: list[_Node]) -> ProcessExpr:
    """Lower a node sequence whose ends are states into a right-nested chain."""
    for end in (nodes[0], nodes[-1]):
        if isinstance(end, _Braces):
            raise _error(end.tok.line, end.tok.column, "a parallel block needs a state on both sides")
    for left, right in zip(nodes, nodes[1:]):
        if isinstance(left, _Braces) and isinstance(right, _Braces):
            raise _error(right.tok.line, right.tok.column, "two parallel blocks need a state between them")
    steps: list[ProcessExpr] = []
    i = 0
    while i < len(nodes) - 1:
        src = nodes[i]
        nxt = nodes[i + 1]
        assert isinstance(src, _Ident)
        if isinstance(nxt, _Ident):
            steps.append(Atomic(src.name, nxt.name))
            i += 1
        else:
            dst = nodes[i + 2]
            steps.append(Parallel(_build([src, *b, dst]) for b in nxt.branches))
            i += 2
    return right_nested(steps)


def parse_diagram(source: str) -> ProcessExpr:
    nodes = _Parser(tokenize(source)).diagram()
    return _build(nodes)


def _chain_nodes(e: ProcessExpr) -> list[str]:
    """Rendered node texts along a chain, endpoints included."""
    steps: list[ProcessExpr] = []
    while isinstance(e, Series):
        if isinstance(e.first, Series):
            raise Unprintable("left-nested series has no grammar form")
        steps.append(e.first)
        e = e.second
    steps.append(e)
    out = [_start(steps[0])]
    for step in steps:
        if isinstance(step, Atomic):
            out.append(step.target)
        else:
            out.append(_render_braces(step))
            out.append(_end(step))
    return out


def _start(step: ProcessExpr) -> str:
    while not isinstance(step, Atomic):
        step = step.first if isinstance(step, Series) else step.branches[0]
    return step.source


def _end(step: ProcessExpr) -> str:
    while not isinstance(step, Atomic):
        step = step.second if isinstance(step, Series) else step.branches[0]
    return step.target


def _render_braces(p: Parallel) -> str:
    parts = []
    for b in p.branches:
        interior = _chain_nodes(b)[1:-1]
        if not interior:
            raise Unprintable("a parallel branch without an intermediate state cannot be written")
        parts.append(" -> ".join(interior))
    return "{" + " | ".join(parts) + "}"


def print_diagram(e: ProcessExpr) -> str:
    """Canonical text for ``e``; inverse of :func:`parse_diagram`."""
    require_valid(e)
    return " -> ".join(_chain_nodes(e))


_KET_RE = re.compile(
    r"\s*<\s*(?P<to>[A-Za-z_][A-Za-z0-9_]*)\s*\|\s*(?P<src>[A-Za-z_][A-Za-z0-9_]*)\s*>\s*"
)


def parse_amp_table(source: str) -> AmplitudeTable:
    """Build a table from ``<TO|FROM> = RE+IMi`` lines, top to bottom."""
    table = AmplitudeTable()
    for lineno, raw in enumerate(source.splitlines(), start=1):
        text = raw.split("#", 1)[0]
        if not text.strip():
            continue
        m = _KET_RE.match(text)
        if m is None:
            col = len(text) - len(text.lstrip()) + 1
            raise _error(lineno, col, "expected '<TO|FROM>'")
        pos = m.end()
        if pos >= len(text) or text[pos] != "=":
            raise _error(lineno, min(pos, len(text) - 1) + 1, "expected '='")
        literal = text[pos + 1 :]
        lit_col = pos + 2 + len(literal) - len(literal.lstrip())
        if COMPLEX_RE.fullmatch(literal) is None or not literal.strip():
            raise _error(lineno, min(lit_col, len(text)), f"malformed amplitude {literal.strip()!r}")
        amp = parse_complex(literal)
        try:
            table = table.insert(m["src"], m["to"], amp)
        except ConjugateConflict as exc:
            raise ConjugateConflict(str(exc), line=lineno) from None
        except NonFinite:
            raise _error(lineno, lit_col, "amplitude is not finite") from None
    return table


def print_amp_table(table: AmplitudeTable) -> str:
    return "".join(
        f"<{t}|{s}> = {format_complex(table.entries[(s, t)])}\n" for s, t in table
    )
