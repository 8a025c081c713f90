"""Parser for the weight notation used on the command line.

Accepted forms::

    (3,2,1,0)
    1/2*(31,1,1,1,1,1,1,-1)
    ( 1 , -1/2 )

Whitespace is ignored.  ``str(Weight)`` prints the same notation, so
``parse_weight(str(w)) == w`` for every weight.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction as Q

from .lie_core import LieError, Weight

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")


class WeightSyntaxError(LieError):
    def __init__(self, message: str, text: str, column: int):
        self.text = text
        self.column = column  # 1-based
        super().__init__(f"{message} at column {column}: {text!r}")


@dataclass(frozen=True)
class WeightExpr:
    source: str
    value: Weight


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, message: str):
        raise WeightSyntaxError(message, self.text, self.pos + 1)

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            self.fail(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def rational(self) -> Q:
        self.skip()
        m = _RATIONAL.match(self.text, self.pos)
        if not m:
            self.fail("malformed rational")
        start = self.pos
        self.pos = m.end()
        num, _, den = m.group().partition("/")
        if den and int(den) == 0:
            raise WeightSyntaxError("zero denominator", self.text, start + 1)
        return Q(int(num), int(den) if den else 1)


def parse_weight(text: str, arity: int | None = None) -> Weight:
    """Parse ``[rational*](r1,...,rn)`` into an exact :class:`Weight`."""
    sc = _Scanner(text)
    scale = Q(1)
    if sc.peek() != "(":
        scale = sc.rational()
        sc.expect("*")
    sc.expect("(")
    coords = [sc.rational()]
    while sc.peek() == ",":
        sc.pos += 1
        coords.append(sc.rational())
    if sc.peek() != ")":
        if sc.peek() == "":
            sc.fail("unbalanced parenthesis, missing ')'")
        sc.fail(f"expected ',' or ')', found {sc.peek()!r}")
    sc.pos += 1
    if sc.peek():
        sc.fail(f"unexpected trailing text {sc.text[sc.pos:].strip()!r}")
    if arity is not None and len(coords) != arity:
        raise WeightSyntaxError(f"expected {arity} coordinates, got {len(coords)}", text, 1)
    return Weight(scale * c for c in coords)


def parse_expr(text: str, arity: int | None = None) -> WeightExpr:
    return WeightExpr(text, parse_weight(text, arity))


def format_weight(w) -> str:
    return str(Weight(w))
