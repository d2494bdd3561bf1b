"""Abstract syntax, parser and printer for formulas of untyped set theory.

Concrete syntax (whitespace-insensitive)::

    formula := iff
    iff     := imp ("<->" imp)*
    imp     := disj ("->" imp)?
    disj    := conj ("or" conj)*
    conj    := neg ("and" neg)*
    neg     := "not" neg | atom
    atom    := term ("=" | "in") term | "(" formula ")" | ("forall" | "exists") ident "." formula
    term    := ident | "{" ident "|" formula "}" | "{" (term ("," term)*)? "}"
             | "<" term "," term ">" | "U(" term ")" | "P(" term ")" | term "`" term

Application is left-associative; a parenthesised term ``( term )`` is also
accepted so that nested applications such as ``f`(g`x)`` can be written.
Unicode aliases: ``∈ ¬ ∧ ∨ → ↔ ∀ ∃ ⟨ ⟩``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterator, Union


class PairingConvention(enum.Enum):
    QUINE = "quine"  # a pair sits at the level of its components
    WK = "wk"  # Wiener-Kuratowski: two levels above its components

    @classmethod
    def parse(cls, text: str) -> "PairingConvention":
        try:
            return cls[text.upper()]
        except KeyError:
            raise ValueError(f"unknown pairing convention {text!r} (use quine or wk)") from None



@dataclass(frozen=True)
class Span:
    start: int
    end: int
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


def _span():
    return field(default=None, compare=False, repr=False)


# ---------------------------------------------------------------------------
# Terms


@dataclass(frozen=True)
class Var:
    name: str
    span: Span | None = _span()


@dataclass(frozen=True)
class Abst:
    """Set abstract ``{ var | body }``."""

    var: str
    body: Formula
    span: Span | None = _span()


@dataclass(frozen=True)
class Enum:
    """Finite enumeration ``{t1, ..., tn}``; ``Enum(())`` is the empty set."""

    elems: tuple[Term, ...]
    span: Span | None = _span()


@dataclass(frozen=True)
class Pair:
    left: Term
    right: Term
    span: Span | None = _span()


@dataclass(frozen=True)
class Union_:
    inner: Term
    span: Span | None = _span()


@dataclass(frozen=True)
class Pow:
    inner: Term
    span: Span | None = _span()


@dataclass(frozen=True)
class App:
    """Function application ``fun`arg``."""

    fun: Term
    arg: Term
    span: Span | None = _span()


Term = Union[Var, Abst, Enum, Pair, Union_, Pow, App]


def Sng(inner: Term) -> Enum:
    """Singleton ``{t}``."""
    return Enum((inner,))


EMPTYSET = Enum(())


def universe(var: str = "x") -> Abst:
    """``V = { x | x = x }``."""
    return Abst(var, Eq(Var(var), Var(var)))


# ---------------------------------------------------------------------------
# Formulas


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term
    span: Span | None = _span()


@dataclass(frozen=True)
class Mem:
    left: Term
    right: Term
    span: Span | None = _span()


@dataclass(frozen=True)
class Not:
    body: Formula
    span: Span | None = _span()


@dataclass(frozen=True)
class And:
    left: Formula
    right: Formula
    span: Span | None = _span()


@dataclass(frozen=True)
class Or:
    left: Formula
    right: Formula
    span: Span | None = _span()


@dataclass(frozen=True)
class Implies:
    left: Formula
    right: Formula
    span: Span | None = _span()


@dataclass(frozen=True)
class Iff:
    left: Formula
    right: Formula
    span: Span | None = _span()


@dataclass(frozen=True)
class Forall:
    var: str
    body: Formula
    span: Span | None = _span()


@dataclass(frozen=True)
class Exists:
    var: str
    body: Formula
    span: Span | None = _span()


Formula = Union[Eq, Mem, Not, And, Or, Implies, Iff, Forall, Exists]
BINARY = (And, Or, Implies, Iff)
QUANTIFIERS = (Forall, Exists)
ATOMS = (Eq, Mem)


# ---------------------------------------------------------------------------
# Lexer

KEYWORDS = {"in", "not", "and", "or", "forall", "exists"}
_ALIASES = {
    "∈": "in",
    "¬": "not",
    "∧": "and",
    "∨": "or",
    "→": "->",
    "↔": "<->",
    "∀": "forall",
    "∃": "exists",
    "⟨": "<",
    "⟩": ">",
}
_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<op><->|->|[=(){}|,.`<>]|[∈¬∧∨→↔∀∃⟨⟩])
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", a keyword, an operator, or "EOF"
    text: str
    span: Span


class ParseError(ValueError):
    """Syntax error with position and the set of acceptable tokens."""

    def __init__(self, message: str, line: int, column: int, expected: frozenset[str] = frozenset()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = expected
        hint = f" (expected one of: {', '.join(sorted(expected))})" if expected else ""
        super().__init__(f"{line}:{column}: {message}{hint}")


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            line, col = _position(text, pos)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        start, end = m.span()
        line, col = _position(text, start)
        span = Span(start, end, line, col)
        if m.lastgroup == "op":
            op = _ALIASES.get(m.group(), m.group())
            tokens.append(Token(op, op, span))
        elif m.lastgroup == "ident":
            word = m.group()
            tokens.append(Token(word if word in KEYWORDS else "ident", word, span))
        pos = end
    line, col = _position(text, len(text))
    tokens.append(Token("EOF", "", Span(len(text), len(text), line, col)))
    return tokens


# ---------------------------------------------------------------------------
# Parser

_TERM_START = frozenset({"ident", "{", "<", "("})
_FORMULA_START = _TERM_START | {"not", "forall", "exists"}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def error(self, expected) -> ParseError:
        t = self.tok
        found = "end of input" if t.kind == "EOF" else repr(t.text)
        return ParseError(f"unexpected {found}", t.span.line, t.span.column, frozenset(expected))

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            raise self.error({kind})
        return self.advance()

    def span_from(self, start: Token) -> Span:
        end = self.tokens[self.pos - 1].span.end
        return Span(start.span.start, end, start.span.line, start.span.column)

    # formulas
    def formula(self) -> Formula:
        start = self.tok
        left = self.imp()
        while self.tok.kind == "<->":
            self.advance()
            left = Iff(left, self.imp(), span=self.span_from(start))
        return left

    def imp(self) -> Formula:
        start = self.tok
        left = self.disj()
        if self.tok.kind == "->":
            self.advance()
            return Implies(left, self.imp(), span=self.span_from(start))
        return left

    def disj(self) -> Formula:
        start = self.tok
        left = self.conj()
        while self.tok.kind == "or":
            self.advance()
            left = Or(left, self.conj(), span=self.span_from(start))
        return left

    def conj(self) -> Formula:
        start = self.tok
        left = self.neg()
        while self.tok.kind == "and":
            self.advance()
            left = And(left, self.neg(), span=self.span_from(start))
        return left

    def neg(self) -> Formula:
        start = self.tok
        if self.tok.kind == "not":
            self.advance()
            return Not(self.neg(), span=self.span_from(start))
        return self.atom()

    def atom(self) -> Formula:
        start = self.tok
        if start.kind in ("forall", "exists"):
            self.advance()
            var = self.expect("ident").text
            self.expect(".")
            body = self.formula()
            cls = Forall if start.kind == "forall" else Exists
            return cls(var, body, span=self.span_from(start))
        if start.kind == "(":
            saved = self.pos
            try:
                self.advance()
                inner = self.formula()
                self.expect(")")
            except ParseError:
                inner = None
            if inner is not None and self.tok.kind not in ("=", "in", "`"):
                return inner
            # the parenthesis opened a term
            self.pos = saved
        if start.kind not in _TERM_START:
            raise self.error(_FORMULA_START)
        left = self.term()
        op = self.tok.kind
        if op not in ("=", "in"):
            raise self.error({"=", "in", "`"})
        self.advance()
        right = self.term()
        cls = Eq if op == "=" else Mem
        return cls(left, right, span=self.span_from(start))

    # terms
    def term(self) -> Term:
        start = self.tok
        left = self.primary()
        while self.tok.kind == "`":
            self.advance()
            left = App(left, self.primary(), span=self.span_from(start))
        return left

    def primary(self) -> Term:
        start = self.tok
        kind = start.kind
        if kind == "ident":
            nxt = self.tokens[self.pos + 1]
            if start.text in ("U", "P") and nxt.kind == "(":
                self.advance()
                self.advance()
                inner = self.term()
                self.expect(")")
                cls = Union_ if start.text == "U" else Pow
                return cls(inner, span=self.span_from(start))
            self.advance()
            return Var(start.text, span=start.span)
        if kind == "(":
            self.advance()
            inner = self.term()
            self.expect(")")
            return inner
        if kind == "<":
            self.advance()
            left = self.term()
            self.expect(",")
            right = self.term()
            self.expect(">")
            return Pair(left, right, span=self.span_from(start))
        if kind == "{":
            self.advance()
            if self.tok.kind == "ident" and self.tokens[self.pos + 1].kind == "|":
                var = self.advance().text
                self.advance()
                body = self.formula()
                self.expect("}")
                return Abst(var, body, span=self.span_from(start))
            elems = []
            if self.tok.kind != "}":
                elems.append(self.term())
                while self.tok.kind == ",":
                    self.advance()
                    elems.append(self.term())
            if self.tok.kind != "}":
                raise self.error({",", "}"})
            self.advance()
            return Enum(tuple(elems), span=self.span_from(start))
        raise self.error(_TERM_START)


def parse(text: str) -> Formula:
    """Parse a formula, raising :class:`ParseError` on malformed input.

    >>> parse("x in y")
    Mem(left=Var(name='x'), right=Var(name='y'))
    """
    p = _Parser(text)
    f = p.formula()
    if p.tok.kind != "EOF":
        raise p.error({"EOF", "<->", "->", "or", "and"})
    return f


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    if p.tok.kind != "EOF":
        raise p.error({"EOF", "`"})
    return t


# ---------------------------------------------------------------------------
# Printer

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4}
_OPS = {Iff: "<->", Implies: "->", Or: "or", And: "and"}


def render_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Abst):
        return "{ " + t.var + " | " + render(t.body) + " }"
    if isinstance(t, Enum):
        return "{" + ", ".join(render_term(e) for e in t.elems) + "}"
    if isinstance(t, Pair):
        return f"<{render_term(t.left)}, {render_term(t.right)}>"
    if isinstance(t, Union_):
        return f"U({render_term(t.inner)})"
    if isinstance(t, Pow):
        return f"P({render_term(t.inner)})"
    if isinstance(t, App):
        arg = render_term(t.arg)
        if isinstance(t.arg, App):
            arg = f"({arg})"
        return f"{render_term(t.fun)}`{arg}"
    raise TypeError(f"not a term: {t!r}")


def render(f: Formula) -> str:
    """Canonical text of a formula; ``parse(render(f)) == f``.

    >>> render(parse("not x in x"))
    'not (x in x)'
    """
    return _render(f, 0, tail=True)


def _render(f: Formula, ctx: int, tail: bool) -> str:
    if isinstance(f, Eq):
        return f"{render_term(f.left)} = {render_term(f.right)}"
    if isinstance(f, Mem):
        return f"{render_term(f.left)} in {render_term(f.right)}"
    if isinstance(f, Not):
        return f"not ({_render(f.body, 0, True)})"
    if isinstance(f, QUANTIFIERS):
        word = "forall" if isinstance(f, Forall) else "exists"
        text = f"{word} {f.var}. {_render(f.body, 0, True)}"
        # a quantifier body extends as far right as possible
        return text if tail else f"({text})"
    if isinstance(f, BINARY):
        prec = _PREC[type(f)]
        right_assoc = isinstance(f, Implies)
        left_ctx = prec + 1 if right_assoc else prec
        right_ctx = prec if right_assoc else prec + 1
        left = _render(f.left, left_ctx, tail=False)
        right = _render(f.right, right_ctx, tail=True)
        text = f"{left} {_OPS[type(f)]} {right}"
        if prec < ctx:
            return f"({text})"
        return text
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# Variables


def children(node) -> Iterator:
    if isinstance(node, (Var,)):
        return iter(())
    if isinstance(node, (Abst, Forall, Exists, Not)):
        return iter((node.body,))
    if isinstance(node, Enum):
        return iter(node.elems)
    if isinstance(node, (Union_, Pow)):
        return iter((node.inner,))
    if isinstance(node, App):
        return iter((node.fun, node.arg))
    return iter((node.left, node.right))


def binder_var(node) -> str | None:
    if isinstance(node, (Abst, Forall, Exists)):
        return node.var
    return None


def free_vars(node) -> frozenset[str]:
    """Variables with at least one free occurrence.

    >>> sorted(free_vars(parse("y = { z | z in w }")))
    ['w', 'y']
    """
    if isinstance(node, Var):
        return frozenset((node.name,))
    out: frozenset[str] = frozenset().union(*(free_vars(c) for c in children(node)))
    bound = binder_var(node)
    if bound is not None:
        out = out - {bound}
    return out


def all_vars(node) -> frozenset[str]:
    if isinstance(node, Var):
        return frozenset((node.name,))
    out = frozenset().union(*(all_vars(c) for c in children(node)))
    bound = binder_var(node)
    return out | {bound} if bound is not None else out


def rename_free(node, old: str, new: str):
    """Substitute the variable ``new`` for free occurrences of ``old``."""
    if isinstance(node, Var):
        return Var(new, span=node.span) if node.name == old else node
    if binder_var(node) == old:
        return node
    return _rebuild(node, [rename_free(c, old, new) for c in children(node)])


def _rebuild(node, kids: list):
    if isinstance(node, (Abst, Forall, Exists)):
        return type(node)(node.var, kids[0], span=node.span)
    if isinstance(node, Not):
        return Not(kids[0], span=node.span)
    if isinstance(node, Enum):
        return Enum(tuple(kids), span=node.span)
    if isinstance(node, (Union_, Pow)):
        return type(node)(kids[0], span=node.span)
    if isinstance(node, Var):
        return node
    return type(node)(kids[0], kids[1], span=node.span)


def canonicalize(node, prefix: str = "v"):
    """Rename bound variables to ``v0, v1, ...`` in binding order.

    Alpha-equivalent formulas have equal canonical forms.
    """
    avoid = free_vars(node)
    counter = iter(range(10**9))

    def fresh() -> str:
        while True:
            name = f"{prefix}{next(counter)}"
            if name not in avoid:
                return name

    def go(n, env: dict[str, str]):
        if isinstance(n, Var):
            return Var(env[n.name], span=n.span) if n.name in env else n
        bound = binder_var(n)
        if bound is not None:
            new = fresh()
            return type(n)(new, go(n.body, {**env, bound: new}), span=n.span)
        return _rebuild(n, [go(c, env) for c in children(n)])

    return go(node, {})


def alpha_equivalent(f: Formula, g: Formula) -> bool:
    return canonicalize(f) == canonicalize(g)


def canonical_render(f: Formula) -> str:
    return render(canonicalize(f))
