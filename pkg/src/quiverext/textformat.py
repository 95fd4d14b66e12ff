"""Line-oriented algebra description format.

::

    # comment
    field Q            | field F <prime>
    vertex <label>
    arrow <name> : <src> -> <tgt>
    rel <term> (+|- <term>)*

A term is ``[coeff*]name(*name)*`` with ``b*a`` meaning "first a, then b".
Coefficients are integers or fractions and default to 1.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path as FsPath

from .algebra import AlgebraError, BoundQuiverAlgebra, Quiver, _check_relation, build_algebra
from .linalg import QQ, GF, Field

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")
_NUM = re.compile(r"^\d+(/\d+)?$")


class ParseError(AlgebraError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _split_terms(body: str, lineno: int) -> list[tuple[int, str]]:
    body = body.strip()
    if not body:
        raise ParseError(lineno, "empty relation")
    if body[0] not in "+-":
        body = "+" + body
    pieces = re.findall(r"([+-])([^+-]*)", body)
    if "".join(op + t for op, t in pieces) != body:
        raise ParseError(lineno, "malformed relation")
    terms = []
    for op, t in pieces:
        if not t.strip():
            raise ParseError(lineno, "dangling operator in relation")
        terms.append((1 if op == "+" else -1, t.strip()))
    return terms


def _parse_term(term: str, quiver: Quiver, lineno: int) -> tuple[Fraction, tuple[int, ...]]:
    parts = [p.strip() for p in term.split("*")]
    coeff = Fraction(1)
    if parts and _NUM.match(parts[0]):
        coeff = Fraction(parts[0])
        parts = parts[1:]
    if not parts:
        raise ParseError(lineno, f"term {term!r} has no arrows")
    walk = []
    for name in reversed(parts):
        if name not in quiver.arrow_index:
            raise ParseError(lineno, f"unknown arrow {name!r}")
        walk.append(quiver.arrow_index[name])
    return coeff, tuple(walk)


def parse_algebra(text: str, *, field: Field | None = None, length_cap: int | None = None) -> BoundQuiverAlgebra:
    """Parse the text format.  ``field`` overrides the file's ``field`` line."""
    file_field: Field = QQ
    vertices: list[str] = []
    arrows: list[tuple[str, str, str]] = []
    rel_lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kw, _, rest = line.partition(" ")
        rest = rest.strip()
        if kw == "field":
            toks = rest.split()
            if toks == ["Q"]:
                file_field = QQ
            elif len(toks) == 2 and toks[0] == "F" and toks[1].isdigit():
                try:
                    file_field = GF(int(toks[1]))
                except ValueError as exc:
                    raise ParseError(lineno, str(exc)) from None
            else:
                raise ParseError(lineno, f"bad field line {rest!r}")
        elif kw == "vertex":
            if not rest or len(rest.split()) != 1:
                raise ParseError(lineno, "vertex needs exactly one label")
            if rest in vertices:
                raise ParseError(lineno, f"duplicate vertex {rest!r}")
            vertices.append(rest)
        elif kw == "arrow":
            m = re.match(r"^(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$", rest)
            if not m:
                raise ParseError(lineno, f"bad arrow line {rest!r}")
            name, s, t = m.groups()
            if not _NAME.match(name):
                raise ParseError(lineno, f"bad arrow name {name!r}")
            for v in (s, t):
                if v not in vertices:
                    raise ParseError(lineno, f"arrow {name} uses undeclared vertex {v!r}")
            if any(a[0] == name for a in arrows):
                raise ParseError(lineno, f"duplicate arrow {name!r}")
            arrows.append((name, s, t))
        elif kw == "rel":
            rel_lines.append((lineno, rest))
        else:
            raise ParseError(lineno, f"unknown directive {kw!r}")
    quiver = Quiver(vertices, arrows)
    F = field if field is not None else file_field
    rels = []
    for lineno, body in rel_lines:
        rel: dict = {}
        for sign, term in _split_terms(body, lineno):
            c, w = _parse_term(term, quiver, lineno)
            rel[w] = rel.get(w, Fraction(0)) + sign * c
        rel = {w: c for w, c in rel.items() if c}
        try:
            _check_relation(quiver, rel)
            rels.append({w: F(c) for w, c in rel.items()})
        except (AlgebraError, ZeroDivisionError) as exc:
            raise ParseError(lineno, str(exc)) from None
    kwargs = {} if length_cap is None else {"length_cap": length_cap}
    return build_algebra(quiver, rels, F, **kwargs)


def load_algebra(path, **kwargs) -> BoundQuiverAlgebra:
    return parse_algebra(FsPath(path).read_text(encoding="utf-8"), **kwargs)


def _fmt_coeff(c, field: Field) -> str:
    if field.p is not None:
        return str(int(c))
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_algebra(A: BoundQuiverAlgebra, header: str | None = None) -> str:
    """Canonical text for ``A``; parse(format(A)) reproduces the same algebra."""
    Q = A.quiver
    lines = []
    if header:
        lines.extend(f"# {h}" if h else "#" for h in header.splitlines())
    lines.append(f"field {A.field.descriptor()}")
    for v in Q.vertices:
        lines.append(f"vertex {v}")
    for a in Q.arrows:
        lines.append(f"arrow {a.name} : {Q.vertices[a.source]} -> {Q.vertices[a.target]}")
    for rel in A.relations:
        terms = sorted(rel.items(), key=lambda kv: (-len(kv[0]), kv[0]))
        out = []
        for k, (w, c) in enumerate(terms):
            word = "*".join(Q.arrows[a].name for a in reversed(w))
            neg = False
            if A.field.p is None and c < 0:
                neg, c = True, -c
            cs = _fmt_coeff(c, A.field)
            body = word if cs == "1" else f"{cs}*{word}"
            if k == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"- {body}" if neg else f"+ {body}")
        lines.append("rel " + " ".join(out))
    return "\n".join(lines) + "\n"
