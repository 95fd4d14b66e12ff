"""Module expressions such as ``P(*),S(1),tau2(sum(S(2),I(3)))``.

Atoms ``P(v)``, ``I(v)``, ``S(v)`` name the indecomposable projective,
injective and simple at a vertex label; ``P(*)`` and ``I(*)`` expand to one
module per vertex.  Functions: ``sum``, ``omega``, ``coomega``, ``tau``,
``taum``, ``tau2``, ``taum2``, ``nu``.  A top-level comma list yields several
modules.
"""

from __future__ import annotations

import re

from .algebra import BoundQuiverAlgebra
from .homology import ar_translate, ar_translate_inv, cosyzygy, nakayama, syzygy, tau_d, tau_d_inv
from .representations import Representation, direct_sum, injective, projective, simple, zero_module


class ExpressionError(ValueError):
    pass


_TOKEN = re.compile(r"\s*([(),*]|[A-Za-z0-9_'.]+)")

_UNARY = {
    "omega": syzygy,
    "coomega": cosyzygy,
    "tau": ar_translate,
    "taum": ar_translate_inv,
    "tau2": lambda M: tau_d(2, M),
    "taum2": lambda M: tau_d_inv(2, M),
    "nu": nakayama,
}
_ATOMS = {"P": projective, "I": injective, "S": simple}


def _tokenize(text: str) -> list[str]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExpressionError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        out.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    def __init__(self, A: BoundQuiverAlgebra, text: str):
        self.A = A
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ExpressionError("unexpected end of expression")
        if expected is not None and tok != expected:
            raise ExpressionError(f"expected {expected!r}, found {tok!r}")
        self.i += 1
        return tok

    def parse_list(self) -> list[Representation]:
        out = self.parse_expr()
        while self.peek() == ",":
            self.take(",")
            out.extend(self.parse_expr())
        if self.peek() is not None:
            raise ExpressionError(f"trailing input at {self.peek()!r}")
        return out

    def parse_expr(self) -> list[Representation]:
        name = self.take()
        if name in _ATOMS:
            self.take("(")
            label = self.take()
            self.take(")")
            if label == "*":
                if name == "S":
                    return [simple(self.A, v) for v in range(self.A.n)]
                return [_ATOMS[name](self.A, v) for v in range(self.A.n)]
            return [_ATOMS[name](self.A, self._vertex(label))]
        if name == "sum":
            self.take("(")
            parts = self.parse_expr()
            while self.peek() == ",":
                self.take(",")
                parts.extend(self.parse_expr())
            self.take(")")
            return [direct_sum(parts)] if parts else [zero_module(self.A)]
        if name == "zero":
            self.take("(")
            self.take(")")
            return [zero_module(self.A)]
        if name in _UNARY:
            self.take("(")
            args = self.parse_expr()
            self.take(")")
            return [_UNARY[name](M) for M in args]
        raise ExpressionError(f"unknown function {name!r}")

    def _vertex(self, label: str) -> int:
        idx = self.A.quiver.vertex_index.get(label)
        if idx is None:
            raise ExpressionError(f"unknown vertex {label!r}")
        return idx


def evaluate(A: BoundQuiverAlgebra, text: str) -> list[Representation]:
    """All modules named by a comma list of expressions."""
    if not text.strip():
        raise ExpressionError("empty module expression")
    return _Parser(A, text).parse_list()


def evaluate_one(A: BoundQuiverAlgebra, text: str) -> Representation:
    mods = evaluate(A, text)
    if len(mods) == 1:
        return mods[0]
    return direct_sum(mods)
