"""Query text <-> AST.

Grammar (adjacency means AND, ! binds tighter than &, & tighter than |,
both binary operators left-associative):

    query   := or
    or      := and ('|' and)*
    and     := unary (('&' | adjacency) unary)*
    unary   := '!' unary | primary
    primary := '(' query ')' | providercall | fieldpill | keyword

    providercall := COLON-IDENT '(' (arg (',' arg)*)? ')'   parens optional
    fieldpill    := IDENT ':' (IDENT | QUOTED)
    keyword      := IDENT | QUOTED

A ':' glued to a preceding identifier separates a field pill; a ':' directly
before an identifier anywhere else starts a provider call. Quoted strings
(single or double) have no escape sequences. The printer emits explicit '&',
canonical spacing, and quotes any value that is not identifier-shaped;
printing a parsed AST reparses to the identical AST.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from ..errors import LexError, ParseError

__all__ = [
    "Token",
    "tokenize",
    "MatchAll",
    "Keyword",
    "FieldPill",
    "ProviderCall",
    "And",
    "Or",
    "Not",
    "Group",
    "QueryAst",
    "parse_query",
    "parse_tokens",
    "print_query",
    "strip_groups",
    "ast_json",
]

COLON_IDENT = "colon_ident"
IDENT = "ident"
QUOTED = "quoted"
COLON = "colon"
LPAREN = "lparen"
RPAREN = "rparen"
AMP = "amp"
PIPE = "pipe"
BANG = "bang"
COMMA = "comma"

_SINGLE = {"(": LPAREN, ")": RPAREN, "&": AMP, "|": PIPE, "!": BANG, ",": COMMA}
_IDENT_RE = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_.\-]*")


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    pos: int


def tokenize(text: str) -> list[Token]:
    """Lex query text. Raises LexError on illegal characters or an
    unterminated quote (position points at the opening quote)."""
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "'\"":
            end = text.find(ch, i + 1)
            if end == -1:
                raise LexError("unterminated quoted string", i)
            tokens.append(Token(QUOTED, text[i + 1 : end], i))
            i = end + 1
            continue
        if ch == ":":
            prev = tokens[-1] if tokens else None
            glued = (
                prev is not None
                and prev.kind == IDENT
                and prev.pos + len(prev.value) == i
            )
            if not glued:
                m = _IDENT_RE.match(text, i + 1)
                if m and m.start() == i + 1:
                    tokens.append(Token(COLON_IDENT, m.group(), i))
                    i = m.end()
                    continue
            tokens.append(Token(COLON, ":", i))
            i += 1
            continue
        if ch in _SINGLE:
            tokens.append(Token(_SINGLE[ch], ch, i))
            i += 1
            continue
        m = _IDENT_RE.match(text, i)
        if m:
            tokens.append(Token(IDENT, m.group(), i))
            i = m.end()
            continue
        raise LexError(f"illegal character {ch!r}", i)
    return tokens


@dataclass(frozen=True)
class MatchAll:
    """The empty query: everything in scope."""


@dataclass(frozen=True)
class Keyword:
    text: str


@dataclass(frozen=True)
class FieldPill:
    field: str
    value: str


@dataclass(frozen=True)
class ProviderCall:
    name: str
    args: tuple[str, ...] = ()


@dataclass(frozen=True)
class And:
    left: "QueryAst"
    right: "QueryAst"


@dataclass(frozen=True)
class Or:
    left: "QueryAst"
    right: "QueryAst"


@dataclass(frozen=True)
class Not:
    child: "QueryAst"


@dataclass(frozen=True)
class Group:
    """Explicit parentheses, kept so printing round-trips exactly."""

    child: "QueryAst"


QueryAst = Union[MatchAll, Keyword, FieldPill, ProviderCall, And, Or, Not, Group]

_STARTERS = frozenset({LPAREN, COLON_IDENT, IDENT, QUOTED, BANG})


class _Parser:
    def __init__(self, tokens: list[Token], text_len: int):
        self.tokens = tokens
        self.i = 0
        self.end = text_len

    def peek(self, ahead: int = 0) -> Token | None:
        idx = self.i + ahead
        return self.tokens[idx] if idx < len(self.tokens) else None

    def pos(self) -> int:
        tok = self.peek()
        return tok.pos if tok is not None else self.end

    def take(self, kind: str) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != kind:
            raise ParseError(f"expected {kind}", self.pos(), (kind,))
        self.i += 1
        return tok

    def query(self) -> QueryAst:
        if self.peek() is None:
            return MatchAll()
        node = self.or_expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok.kind}", tok.pos)
        return node

    def or_expr(self) -> QueryAst:
        node = self.and_expr()
        while (tok := self.peek()) is not None and tok.kind == PIPE:
            self.i += 1
            node = Or(node, self.and_expr())
        return node

    def and_expr(self) -> QueryAst:
        node = self.unary()
        while (tok := self.peek()) is not None:
            if tok.kind == AMP:
                self.i += 1
                node = And(node, self.unary())
            elif tok.kind in _STARTERS:
                # Adjacent terms conjoin without an operator.
                node = And(node, self.unary())
            else:
                break
        return node

    def unary(self) -> QueryAst:
        tok = self.peek()
        if tok is not None and tok.kind == BANG:
            self.i += 1
            return Not(self.unary())
        return self.primary()

    def primary(self) -> QueryAst:
        tok = self.peek()
        if tok is None:
            raise ParseError("expected a term", self.pos(), tuple(sorted(_STARTERS)))
        if tok.kind == LPAREN:
            self.i += 1
            inner = self.or_expr()
            self.take(RPAREN)
            return Group(inner)
        if tok.kind == COLON_IDENT:
            self.i += 1
            args: list[str] = []
            nxt = self.peek()
            if nxt is not None and nxt.kind == LPAREN:
                self.i += 1
                if (cur := self.peek()) is not None and cur.kind != RPAREN:
                    args.append(self._arg())
                    while (cur := self.peek()) is not None and cur.kind == COMMA:
                        self.i += 1
                        args.append(self._arg())
                self.take(RPAREN)
            return ProviderCall(tok.value, tuple(args))
        if tok.kind == IDENT:
            nxt = self.peek(1)
            if nxt is not None and nxt.kind == COLON:
                self.i += 2
                vtok = self.peek()
                if vtok is None or vtok.kind not in (IDENT, QUOTED):
                    raise ParseError(
                        "expected a value after ':'", self.pos(), (IDENT, QUOTED)
                    )
                self.i += 1
                return FieldPill(tok.value, vtok.value)
            self.i += 1
            return Keyword(tok.value)
        if tok.kind == QUOTED:
            self.i += 1
            return Keyword(tok.value)
        raise ParseError(f"unexpected {tok.kind}", tok.pos, tuple(sorted(_STARTERS)))

    def _arg(self) -> str:
        tok = self.peek()
        if tok is None or tok.kind not in (IDENT, QUOTED):
            raise ParseError("expected an argument", self.pos(), (IDENT, QUOTED))
        self.i += 1
        return tok.value


def parse_tokens(tokens: list[Token], text_len: int = 0) -> QueryAst:
    end = text_len or (tokens[-1].pos + len(tokens[-1].value) if tokens else 0)
    return _Parser(tokens, end).query()


def parse_query(text: str) -> QueryAst:
    """Parse query text; whitespace-only input is the match-all query."""
    return _Parser(tokenize(text), len(text)).query()


_BARE_RE = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_.\-]*\Z")

_PREC_OR = 1
_PREC_AND = 2
_PREC_NOT = 3
_PREC_ATOM = 4


def _value_text(value: str) -> str:
    if _BARE_RE.fullmatch(value):
        return value
    if "'" not in value:
        return f"'{value}'"
    if '"' not in value:
        return f'"{value}"'
    raise ValueError(f"value {value!r} mixes both quote kinds and cannot be printed")


def _render(node: QueryAst, min_prec: int) -> str:
    if isinstance(node, Keyword):
        return _value_text(node.text)
    if isinstance(node, FieldPill):
        if not _BARE_RE.fullmatch(node.field):
            raise ValueError(f"field name {node.field!r} is not printable")
        return f"{node.field}: {_value_text(node.value)}"
    if isinstance(node, ProviderCall):
        if not _BARE_RE.fullmatch(node.name):
            raise ValueError(f"provider alias {node.name!r} is not printable")
        return f":{node.name}({', '.join(_value_text(a) for a in node.args)})"
    if isinstance(node, Group):
        return f"({_render(node.child, _PREC_OR)})"
    if isinstance(node, Not):
        return _maybe_wrap(f"!{_render(node.child, _PREC_NOT)}", _PREC_NOT, min_prec)
    if isinstance(node, And):
        text = f"{_render(node.left, _PREC_AND)} & {_render(node.right, _PREC_AND + 1)}"
        return _maybe_wrap(text, _PREC_AND, min_prec)
    if isinstance(node, Or):
        text = f"{_render(node.left, _PREC_OR)} | {_render(node.right, _PREC_OR + 1)}"
        return _maybe_wrap(text, _PREC_OR, min_prec)
    raise ValueError(f"cannot print {type(node).__name__} inside an expression")


def _maybe_wrap(text: str, prec: int, min_prec: int) -> str:
    return f"({text})" if prec < min_prec else text


def print_query(ast: QueryAst) -> str:
    """Canonical text for an AST. Printing a parsed AST reparses identically;
    ASTs built by hand gain parentheses where precedence demands them."""
    if isinstance(ast, MatchAll):
        return ""
    return _render(ast, _PREC_OR)


def strip_groups(ast: QueryAst) -> QueryAst:
    """Drop Group wrappers, leaving the bare operator tree."""
    if isinstance(ast, Group):
        return strip_groups(ast.child)
    if isinstance(ast, And):
        return And(strip_groups(ast.left), strip_groups(ast.right))
    if isinstance(ast, Or):
        return Or(strip_groups(ast.left), strip_groups(ast.right))
    if isinstance(ast, Not):
        return Not(strip_groups(ast.child))
    return ast


def ast_json(ast: QueryAst) -> dict:
    """JSON-shaped AST for the debug parse endpoint."""
    if isinstance(ast, MatchAll):
        return {"node": "all"}
    if isinstance(ast, Keyword):
        return {"node": "keyword", "text": ast.text}
    if isinstance(ast, FieldPill):
        return {"node": "pill", "field": ast.field, "value": ast.value}
    if isinstance(ast, ProviderCall):
        return {"node": "call", "name": ast.name, "args": list(ast.args)}
    if isinstance(ast, And):
        return {"node": "and", "left": ast_json(ast.left), "right": ast_json(ast.right)}
    if isinstance(ast, Or):
        return {"node": "or", "left": ast_json(ast.left), "right": ast_json(ast.right)}
    if isinstance(ast, Not):
        return {"node": "not", "child": ast_json(ast.child)}
    if isinstance(ast, Group):
        return {"node": "group", "child": ast_json(ast.child)}
    raise ValueError(f"unknown node {type(ast).__name__}")
