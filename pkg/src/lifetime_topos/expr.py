"""A small expression language over lifetimes.

    (1,4) ^ (3,7)        meet
    (1,4) v (3,7)        join
    (2,8) -> (5,6)       implication
    !(2,8)               pseudo-complement
    (5,6) <= (2,8)       order query, yields a boolean

``!`` binds tightest, ``<=`` loosest; ``^``, ``v`` and ``->`` share one
level and associate to the left.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import algebra as alg

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<op>->|<=|\^|v|!|\(|\)|,|-))"
)


class ExprError(ValueError):
    def __init__(self, pos: int, message: str):
        super().__init__(f"at position {pos}: {message}")
        self.pos = pos


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def tokenize(src: str) -> list[_Tok]:
    toks, i = [], 0
    while i < len(src):
        if src[i].isspace():
            i += 1
            continue
        m = _TOKEN_RE.match(src, i)
        if m is None or m.end() == i:
            raise ExprError(i, f"unexpected character {src[i]!r}")
        start = m.start("num") if m.group("num") else m.start("op")
        kind = "num" if m.group("num") else m.group("op")
        toks.append(_Tok(kind, m.group(kind if kind == "num" else "op"), start))
        i = m.end()
    toks.append(_Tok("end", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src: str, bounds: alg.Bounds):
        self.toks = tokenize(src)
        self.i = 0
        self.bounds = bounds

    def peek(self, k: int = 0) -> _Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self, kind: str) -> _Tok:
        tok = self.peek()
        if tok.kind != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if tok.kind == "end" else repr(tok.text)
            raise ExprError(tok.pos, f"expected {want}, got {got}")
        self.i += 1
        return tok

    def number(self):
        neg = self.peek().kind == "-"
        if neg:
            self.i += 1
        tok = self.take("num")
        try:
            q = alg.parse_rational(tok.text)
        except ValueError as exc:
            raise ExprError(tok.pos, str(exc)) from None
        return -q if neg else q

    def parse(self) -> Union[alg.Lifetime, bool]:
        left = self.chain()
        if self.peek().kind == "<=":
            self.i += 1
            right = self.chain()
            self.take("end")
            return alg.leq(left, right)
        self.take("end")
        return left

    def chain(self) -> alg.Lifetime:
        value = self.unary()
        ops = {"^": alg.meet, "v": alg.join, "->": alg.implies}
        while self.peek().kind in ops:
            op = ops[self.peek().kind]
            self.i += 1
            value = op(value, self.unary())
        return value

    def unary(self) -> alg.Lifetime:
        if self.peek().kind == "!":
            self.i += 1
            return alg.pseudo_complement(self.unary())
        return self.atom()

    def atom(self) -> alg.Lifetime:
        tok = self.peek()
        if tok.kind != "(":
            got = "end of input" if tok.kind == "end" else repr(tok.text)
            raise ExprError(tok.pos, f"expected a pair or '(', got {got}")
        is_pair = self.peek(1).kind == "num" or (
            self.peek(1).kind == "-" and self.peek(2).kind == "num"
        )
        self.i += 1
        if is_pair:
            x1 = self.number()
            self.take(",")
            x2 = self.number()
            self.take(")")
            return alg.Lifetime(x1, x2, self.bounds)
        inner = self.chain()
        self.take(")")
        return inner


def evaluate(src: str, bounds: alg.Bounds) -> Union[alg.Lifetime, bool]:
    """Evaluate ``src``; raises ExprError on syntax and OutOfBoundsError on bad pairs."""
    return _Parser(src, bounds).parse()


def render(value: Union[alg.Lifetime, bool], decimals=None) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return alg.format_lifetime(value, decimals)
