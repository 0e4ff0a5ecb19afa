"""Parser for class literals like ``2(E1+E12)+K`` or ``12E1+E2``.

Terms are E1..E10, E12 (the half-fiber sum pairing 2 with E1, E2), and
K (the torsion class); integer multipliers distribute over
parenthesized sums.  The result keeps the formal coefficients, so the
same expression always yields the same SID tuple, not merely the same
lattice class.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .lattice import PicClass, SidCoefficients

_TOKEN = re.compile(r"\s*(E1[02]|E[1-9]|K|[0-9]+|[()+])")


@dataclass(frozen=True)
class ClassExpr:
    """Formal nonnegative combination of the SID generators and K."""

    a0: int
    a: tuple
    k: int

    def __add__(self, other):
        return ClassExpr(
            self.a0 + other.a0,
            tuple(x + y for x, y in zip(self.a, other.a)),
            self.k + other.k,
        )

    def scaled(self, n: int):
        return ClassExpr(n * self.a0, tuple(n * x for x in self.a), n * self.k)

    def to_sid(self) -> SidCoefficients:
        return SidCoefficients(self.a0, self.a, self.k % 2)

    def to_pic(self) -> PicClass:
        return self.to_sid().to_pic()


_ZERO = ClassExpr(0, (0,) * 10, 0)


def _atom(name: str) -> ClassExpr:
    if name == "K":
        return ClassExpr(0, (0,) * 10, 1)
    if name == "E12":
        return ClassExpr(1, (0,) * 10, 0)
    i = int(name[1:])
    return ClassExpr(0, tuple(1 if j == i - 1 else 0 for j in range(10)), 0)


def parse_class_expr(text: str) -> ClassExpr:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot read class literal near {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    tokens.append(None)
    idx = 0

    def peek():
        return tokens[idx]

    def take():
        nonlocal idx
        t = tokens[idx]
        idx += 1
        return t

    def parse_sum():
        total = parse_term()
        while peek() == "+":
            take()
            total = total + parse_term()
        return total

    def parse_term():
        mult = 1
        t = peek()
        if t is not None and t.isdigit():
            mult = int(take())
        t = peek()
        if t == "(":
            take()
            inner = parse_sum()
            if take() != ")":
                raise ValueError("unbalanced parentheses in class literal")
            return inner.scaled(mult)
        if t is None or t in ("+", ")"):
            raise ValueError("multiplier without a term in class literal")
        return _atom(take()).scaled(mult)

    out = parse_sum()
    if peek() is not None:
        raise ValueError(f"trailing input in class literal near {peek()!r}")
    return out
