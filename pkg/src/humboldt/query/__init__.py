"""Boolean query language: lexer, parser, printer, evaluation, suggestions."""

from .syntax import (
    And,
    FieldPill,
    Group,
    Keyword,
    MatchAll,
    Not,
    Or,
    ProviderCall,
    QueryAst,
    Token,
    ast_json,
    parse_query,
    print_query,
    strip_groups,
    tokenize,
)
from .eval import ResultSet, evaluate, pill_matches
from .suggest import Suggestion, suggest

__all__ = [
    "And",
    "FieldPill",
    "Group",
    "Keyword",
    "MatchAll",
    "Not",
    "Or",
    "ProviderCall",
    "QueryAst",
    "Token",
    "ast_json",
    "parse_query",
    "print_query",
    "strip_groups",
    "tokenize",
    "ResultSet",
    "evaluate",
    "pill_matches",
    "Suggestion",
    "suggest",
]
