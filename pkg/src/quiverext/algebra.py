"""Bound quiver algebras KQ/I with explicit normal-form bases.

Paths are stored in walk order (first arrow first).  Written in the usual
algebraic convention the composite of ``a: i -> j`` then ``b: j -> k`` is
``b*a``; :func:`Path.word` produces that form.

Normal forms come from a noncommutative Groebner basis for the path algebra
under length-lexicographic order, ties broken by arrow declaration order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from .linalg import QQ, Field, Mat, rank

DEFAULT_LENGTH_CAP = 30


class AlgebraError(ValueError):
    """Malformed quiver or relation input."""


class NotFiniteDimensional(AlgebraError):
    """Completion or basis enumeration ran past the word-length cap."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


class Quiver:
    def __init__(self, vertices: Sequence[str], arrows: Sequence[tuple[str, str, str]]):
        self.vertices = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraError("duplicate vertex label")
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        arr = []
        for name, s, t in arrows:
            if s not in self.vertex_index or t not in self.vertex_index:
                raise AlgebraError(f"arrow {name} has an unknown endpoint")
            arr.append(Arrow(name, self.vertex_index[s], self.vertex_index[t]))
        self.arrows = tuple(arr)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise AlgebraError("duplicate arrow name")
        self.arrow_index = {a.name: i for i, a in enumerate(self.arrows)}

    @property
    def n(self) -> int:
        return len(self.vertices)

    def reversed(self) -> "Quiver":
        return Quiver(
            self.vertices,
            [(a.name, self.vertices[a.target], self.vertices[a.source]) for a in self.arrows],
        )

    def out_arrows(self, v: int) -> list[int]:
        return [i for i, a in enumerate(self.arrows) if a.source == v]

    def in_arrows(self, v: int) -> list[int]:
        return [i for i, a in enumerate(self.arrows) if a.target == v]

    def __eq__(self, other):
        return (
            isinstance(other, Quiver)
            and self.vertices == other.vertices
            and self.arrows == other.arrows
        )

    def __hash__(self):
        return hash((self.vertices, self.arrows))


class Path(NamedTuple):
    """A path in walk order; trivial when ``arrows`` is empty."""

    start: int
    end: int
    arrows: tuple[int, ...]

    def __len__(self):  # noqa: D105
        return len(self.arrows)

    def word(self, quiver: Quiver) -> str:
        if not self.arrows:
            return f"e{quiver.vertices[self.start]}"
        return "*".join(quiver.arrows[a].name for a in reversed(self.arrows))


def make_path(quiver: Quiver, arrows: Sequence[int], start: int | None = None) -> Path:
    arrows = tuple(arrows)
    if not arrows:
        if start is None:
            raise AlgebraError("trivial path needs a vertex")
        return Path(start, start, ())
    for a, b in zip(arrows, arrows[1:]):
        if quiver.arrows[a].target != quiver.arrows[b].source:
            raise AlgebraError("arrows are not composable")
    return Path(quiver.arrows[arrows[0]].source, quiver.arrows[arrows[-1]].target, arrows)


# A relation / ideal element: mapping arrow-tuple (walk order, length >= 2) -> coefficient.
Poly = dict


def _check_relation(quiver: Quiver, rel: Mapping[tuple, object]) -> None:
    ends = set()
    for w in rel:
        if len(w) < 2:
            raise AlgebraError("relation terms must have length >= 2 (admissibility)")
        p = make_path(quiver, w)
        ends.add((p.start, p.end))
    if len(ends) > 1:
        raise AlgebraError("relation terms are not parallel")


class BoundQuiverAlgebra:
    """A finite-dimensional algebra KQ/I.

    ``relations`` are mappings from walk-order arrow tuples to coefficients.
    The constructor completes them to a reduced Groebner basis and enumerates
    the normal words; both are exposed read-only.
    """

    def __init__(
        self,
        quiver: Quiver,
        relations: Iterable[Mapping[tuple, object]],
        field: Field = QQ,
        *,
        length_cap: int = DEFAULT_LENGTH_CAP,
        _reverse_order: bool = False,
        _prebuilt: tuple | None = None,
    ):
        self.quiver = quiver
        self.field = field
        self.length_cap = length_cap
        self._reverse_order = _reverse_order
        rels = []
        for r in relations:
            clean = {tuple(w): field(c) for w, c in r.items() if field(c)}
            if clean:
                _check_relation(quiver, clean)
                rels.append(clean)
        self.relations = tuple(rels)
        self._nf_cache: dict[tuple, dict] = {}
        self._opposite: BoundQuiverAlgebra | None = None
        self.parent: BoundQuiverAlgebra | None = None
        self.removed: frozenset[int] = frozenset()
        if _prebuilt is None:
            self.groebner = self._complete()
            self.basis = self._enumerate_basis()
        else:
            self.groebner, self.basis = _prebuilt
        self.basis_index = {p: i for i, p in enumerate(self.basis)}
        self._lt_by_last: dict[int, list[tuple]] = {}
        for lt, _ in self.groebner:
            self._lt_by_last.setdefault(lt[-1], []).append(lt)

    # -- order ---------------------------------------------------------
    def _key(self, w: tuple) -> tuple:
        return (len(w), tuple(reversed(w)) if self._reverse_order else w)

    def _path_key(self, p: Path) -> tuple:
        return (len(p.arrows), tuple(reversed(p.arrows)) if self._reverse_order else p.arrows, p.start)

    # -- Groebner completion ------------------------------------------
    def _reduce_poly(self, f: Mapping[tuple, object], G: list) -> dict:
        """Full reduction of ``f`` by the monic list ``G`` (no memo)."""
        F = self.field
        p = F.p
        f = dict(f)
        out: dict = {}
        lts = {lt: g for lt, g in G}
        while f:
            w = max(f, key=self._key)
            c = f.pop(w)
            hit = None
            for i in range(len(w)):
                for lt, g in lts.items():
                    if w[i : i + len(lt)] == lt:
                        hit = (i, lt, g)
                        break
                if hit:
                    break
            if hit is None:
                out[w] = c
                continue
            i, lt, g = hit
            u, v = w[:i], w[i + len(lt) :]
            for t, gc in g.items():
                if t == lt:
                    continue
                nw = u + t + v
                val = f.get(nw, F.zero) - c * gc
                if p is not None:
                    val %= p
                if val:
                    f[nw] = val
                else:
                    f.pop(nw, None)
        return out

    def _monic(self, f: dict) -> tuple[tuple, dict]:
        lt = max(f, key=self._key)
        inv = self.field.inv(f[lt])
        p = self.field.p
        g = {w: (c * inv) % p if p is not None else c * inv for w, c in f.items()}
        return lt, g

    def _complete(self) -> list[tuple[tuple, dict]]:
        G: list[tuple[tuple, dict]] = []
        queue: list[dict] = [dict(r) for r in self.relations]
        pairs: list[tuple] = []
        alive: set[tuple] = set()
        F = self.field
        p = F.p
        while queue or pairs:
            if queue:
                f = queue.pop(0)
            else:
                (lt1, g1), (lt2, g2), k = pairs.pop(0)
                if lt1 not in alive or lt2 not in alive:
                    continue
                tail = lt2[k:]
                head = lt1[: len(lt1) - k]
                f = {}
                for t, c in g1.items():
                    f[t + tail] = f.get(t + tail, F.zero) + c
                for t, c in g2.items():
                    f[head + t] = f.get(head + t, F.zero) - c
                if p is not None:
                    f = {w: c % p for w, c in f.items()}
                f = {w: c for w, c in f.items() if c}
            r = self._reduce_poly(f, G)
            if not r:
                continue
            lt, g = self._monic(r)
            if len(lt) > self.length_cap:
                raise NotFiniteDimensional(
                    f"not finite-dimensional within cap: completion produced a leading word of length {len(lt)}"
                )
            # drop old elements whose leading word contains the new one
            keep = []
            for olt, og in G:
                if any(olt[i : i + len(lt)] == lt for i in range(len(olt) - len(lt) + 1)):
                    alive.discard(olt)
                    queue.append(og)
                else:
                    keep.append((olt, og))
            G = keep
            G.append((lt, g))
            alive.add(lt)
            new = (lt, g)
            for old in G:
                for a, b in ((new, old), (old, new)) if old is not new else ((new, new),):
                    la, lb = a[0], b[0]
                    for k in range(1, min(len(la), len(lb))):
                        if la[-k:] == lb[:k]:
                            pairs.append((a, b, k))
        # tail-reduce to the reduced Groebner basis
        out = []
        for lt, g in G:
            others = [(l2, g2) for l2, g2 in G if l2 != lt]
            tail = {w: c for w, c in g.items() if w != lt}
            red = self._reduce_poly(tail, others + [(lt, g)]) if tail else {}
            full = dict(red)
            full[lt] = F.one
            out.append((lt, full))
        out.sort(key=lambda x: self._key(x[0]))
        return out

    def _enumerate_basis(self) -> tuple[Path, ...]:
        Q = self.quiver
        lts = {lt for lt, _ in self.groebner}
        words: list[Path] = [Path(v, v, ()) for v in range(Q.n)]
        frontier = [Path(a.source, a.target, (i,)) for i, a in enumerate(Q.arrows)]
        length = 1
        while frontier:
            if length > self.length_cap:
                raise NotFiniteDimensional(
                    f"not finite-dimensional within cap: normal words of length {length} exist"
                )
            words.extend(frontier)
            nxt = []
            for w in frontier:
                for ai in Q.out_arrows(w.end):
                    nw = w.arrows + (ai,)
                    if any(nw[len(nw) - len(lt) :] == lt for lt in lts if len(lt) <= len(nw)):
                        continue
                    nxt.append(Path(w.start, Q.arrows[ai].target, nw))
            frontier = nxt
            length += 1
        words.sort(key=self._path_key)
        return tuple(words)

    # -- normal forms and multiplication ---------------------------------
    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return self.quiver.n

    def normal_form(self, arrows: tuple) -> dict[int, object]:
        """Normal form of a nonempty walk-order word as {basis index: coeff}."""
        arrows = tuple(arrows)
        cached = self._nf_cache.get(arrows)
        if cached is not None:
            return cached
        F = self.field
        p = F.p
        hit = None
        for end in range(1, len(arrows) + 1):
            for lt in self._lt_by_last.get(arrows[end - 1], ()):
                if end >= len(lt) and arrows[end - len(lt) : end] == lt:
                    hit = (end - len(lt), lt)
                    break
            if hit:
                break
        if hit is None:
            path = make_path(self.quiver, arrows)
            res = {self.basis_index[path]: F.one}
        else:
            i, lt = hit
            g = self._gb_dict[lt]
            u, v = arrows[:i], arrows[i + len(lt) :]
            res = {}
            for t, gc in g.items():
                if t == lt:
                    continue
                for b, c in self.normal_form(u + t + v).items():
                    val = res.get(b, F.zero) - gc * c
                    if p is not None:
                        val %= p
                    if val:
                        res[b] = val
                    else:
                        res.pop(b, None)
        self._nf_cache[arrows] = res
        return res

    @property
    def _gb_dict(self) -> dict:
        d = self.__dict__.get("_gbd")
        if d is None:
            d = {lt: g for lt, g in self.groebner}
            self.__dict__["_gbd"] = d
        return d

    def reduce(self, element: Mapping[tuple, object]) -> dict[int, object]:
        """Normal form of a linear combination of nonempty walk-order words."""
        F = self.field
        out: dict = {}
        for w, c in element.items():
            c = F(c)
            for b, bc in self.normal_form(tuple(w)).items():
                val = out.get(b, F.zero) + c * bc
                if F.p is not None:
                    val %= F.p
                out[b] = val
        return {b: c for b, c in out.items() if c}

    def mul_basis(self, i: int, j: int) -> dict[int, object]:
        """b_i * b_j: first b_j, then b_i."""
        x, y = self.basis[i], self.basis[j]
        if y.end != x.start:
            return {}
        if not y.arrows:
            return {i: self.field.one}
        if not x.arrows:
            return {j: self.field.one}
        return self.normal_form(y.arrows + x.arrows)

    def multiply(self, x: Mapping[int, object], y: Mapping[int, object]) -> dict[int, object]:
        F = self.field
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.mul_basis(i, j).items():
                    val = out.get(k, F.zero) + F(a) * F(b) * c
                    if F.p is not None:
                        val %= F.p
                    out[k] = val
        return {k: c for k, c in out.items() if c}

    def idempotent(self, v: int) -> dict[int, object]:
        return {self.basis_index[Path(v, v, ())]: self.field.one}

    def paths_between(self, v: int, w: int) -> list[int]:
        """Indices of basis words starting at ``v`` and ending at ``w``."""
        table = self.__dict__.get("_between")
        if table is None:
            table = {}
            for i, p in enumerate(self.basis):
                table.setdefault((p.start, p.end), []).append(i)
            self.__dict__["_between"] = table
        return table.get((v, w), [])

    def word(self, i: int) -> str:
        return self.basis[i].word(self.quiver)

    def vertex(self, label) -> int:
        label = str(label)
        if label not in self.quiver.vertex_index:
            raise AlgebraError(f"unknown vertex {label!r}")
        return self.quiver.vertex_index[label]

    def vertex_set(self, labels: Iterable) -> frozenset[int]:
        return frozenset(self.vertex(v) for v in labels)

    # -- derived algebras -----------------------------------------------
    def opposite(self) -> "BoundQuiverAlgebra":
        """A^op: arrows reversed, words reversed, basis index-aligned with A."""
        if self._opposite is None:
            Q = self.quiver.reversed()
            rels = [{tuple(reversed(w)): c for w, c in r.items()} for r in self.relations]
            gb = [
                (tuple(reversed(lt)), {tuple(reversed(w)): c for w, c in g.items()})
                for lt, g in self.groebner
            ]
            basis = tuple(Path(p.end, p.start, tuple(reversed(p.arrows))) for p in self.basis)
            op = BoundQuiverAlgebra(
                Q,
                rels,
                self.field,
                length_cap=self.length_cap,
                _reverse_order=not self._reverse_order,
                _prebuilt=(gb, basis),
            )
            op._opposite = self
            self._opposite = op
        return self._opposite

    def quotient(self, removed: Iterable[int]) -> "BoundQuiverAlgebra":
        """A/<e> for e the sum of trivial paths at ``removed``.

        Terms passing through a removed vertex are dropped from each relation;
        the images generate the quotient ideal, which is completed afresh.
        """
        removed = frozenset(removed)
        if not removed:
            return self
        cache = self.__dict__.setdefault("_quotients", {})
        if removed in cache:
            return cache[removed]
        Q = self.quiver
        keep_v = [v for v in range(Q.n) if v not in removed]
        keep_a = [
            i for i, a in enumerate(Q.arrows) if a.source not in removed and a.target not in removed
        ]
        amap = {old: new for new, old in enumerate(keep_a)}
        newQ = Quiver(
            [Q.vertices[v] for v in keep_v],
            [(Q.arrows[i].name, Q.vertices[Q.arrows[i].source], Q.vertices[Q.arrows[i].target]) for i in keep_a],
        )
        rels = []
        for r in self.relations:
            img = {tuple(amap[a] for a in w): c for w, c in r.items() if all(a in amap for a in w)}
            if img:
                rels.append(img)
        B = BoundQuiverAlgebra(newQ, rels, self.field, length_cap=self.length_cap)
        B.parent = self
        B.removed = removed
        cache[removed] = B
        return B

    @property
    def is_zero(self) -> bool:
        return self.quiver.n == 0

    def parent_vertex(self, v: int) -> int:
        """Index in the parent algebra of quotient vertex ``v``."""
        if self.parent is None:
            return v
        return self.parent.quiver.vertex_index[self.quiver.vertices[v]]

    def with_field(self, field: Field) -> "BoundQuiverAlgebra":
        return BoundQuiverAlgebra(
            self.quiver,
            [{w: _coerce(c, field) for w, c in r.items()} for r in self.relations],
            field,
            length_cap=self.length_cap,
        )

    # -- checks ----------------------------------------------------------
    def structure_constants(self) -> dict[tuple[int, int], dict[int, object]]:
        n = self.dimension
        return {(i, j): self.mul_basis(i, j) for i in range(n) for j in range(n)}

    def is_associative(self) -> bool:
        n = self.dimension
        for i in range(n):
            for j in range(n):
                xy = self.mul_basis(i, j)
                for k in range(n):
                    left = self.multiply(xy, {k: self.field.one})
                    right = self.multiply({i: self.field.one}, self.mul_basis(j, k))
                    if left != right:
                        return False
        return True

    def ideal_dimension(self, vertices: Iterable[int]) -> int:
        """dim of the two-sided ideal generated by the trivial paths at ``vertices``."""
        vs = set(vertices)
        F = self.field
        rows = []
        for v in vs:
            for i in range(self.dimension):
                if self.basis[i].start != v:
                    continue
                for j in range(self.dimension):
                    if self.basis[j].end != v:
                        continue
                    prod = self.mul_basis(i, j)
                    if prod:
                        rows.append([prod.get(k, F.zero) for k in range(self.dimension)])
        if not rows:
            return 0
        return rank(Mat(F, len(rows), self.dimension, rows))

    def radical_nilpotency(self) -> int:
        """Least k with rad^k = 0, i.e. one more than the longest basis word."""
        return max((len(p.arrows) for p in self.basis), default=-1) + 1

    def __repr__(self):
        return (
            f"BoundQuiverAlgebra({self.quiver.n} vertices, {len(self.quiver.arrows)} arrows, "
            f"dim {self.dimension} over {self.field!r})"
        )


def _coerce(c, field: Field):
    from fractions import Fraction

    return field(Fraction(c)) if field.p is not None else field(c)


def build_algebra(
    quiver: Quiver,
    relations: Iterable[Mapping[tuple, object]],
    field: Field = QQ,
    length_cap: int = DEFAULT_LENGTH_CAP,
) -> BoundQuiverAlgebra:
    return BoundQuiverAlgebra(quiver, relations, field, length_cap=length_cap)


def relation_from_words(quiver: Quiver, terms: Sequence[tuple[object, str]]) -> dict:
    """Build a relation from (coefficient, ``"b*a"``) pairs in composition order."""
    rel: dict = {}
    for c, word in terms:
        names = [s.strip() for s in word.split("*")]
        try:
            walk = tuple(quiver.arrow_index[n] for n in reversed(names))
        except KeyError as exc:
            raise AlgebraError(f"unknown arrow {exc.args[0]!r}") from None
        rel[walk] = rel.get(walk, 0) + c
    return rel
