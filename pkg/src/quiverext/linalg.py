"""Exact dense linear algebra over the rationals and prime fields.

Matrices are immutable row tuples.  Every routine is exact; nothing in the
package ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


class Field:
    """Ground field descriptor.  ``p is None`` means the rationals."""

    def __init__(self, p: int | None = None):
        if p is not None:
            if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
                raise ValueError(f"field modulus must be prime, got {p}")
        self.p = p
        self.zero = Fraction(0) if p is None else 0
        self.one = Fraction(1) if p is None else 1

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    def __call__(self, x) -> Fraction | int:
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / x
        return pow(x, -1, self.p)

    def elements(self):
        if self.p is None:
            raise ValueError("the rationals cannot be enumerated")
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    def descriptor(self) -> str:
        return "Q" if self.p is None else f"F {self.p}"


QQ = Field()


@lru_cache(maxsize=None)
def GF(p: int) -> Field:
    return Field(p)


class Mat:
    """An ``nrows x ncols`` matrix with entries in ``field``."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, nrows: int, ncols: int, rows: Sequence[Sequence] | None = None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            z = field.zero
            rows = tuple((z,) * ncols for _ in range(nrows))
        else:
            rows = tuple(tuple(r) for r in rows)
            if len(rows) != nrows or any(len(r) != ncols for r in rows):
                raise ValueError("row data does not match declared shape")
        self.rows = rows

    # -- constructors -------------------------------------------------
    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Mat":
        return cls(field, nrows, ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        z, o = field.zero, field.one
        return cls(field, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], ncols: int | None = None) -> "Mat":
        rows = [[field(x) for x in r] for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(field, len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence], nrows: int) -> "Mat":
        if not cols:
            return cls(field, nrows, 0)
        return cls(field, nrows, len(cols), [[c[i] for c in cols] for i in range(nrows)])

    # -- basic protocol -----------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.shape == other.shape
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Mat({self.nrows}x{self.ncols}: [{body}])"

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def T(self) -> "Mat":
        return Mat(self.field, self.ncols, self.nrows, list(zip(*self.rows)) if self.nrows else [() for _ in range(self.ncols)])

    # -- arithmetic ---------------------------------------------------
    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        p = self.field.p
        z = self.field.zero
        n = other.ncols
        orows = other.rows
        out = []
        for r in self.rows:
            acc = [z] * n
            for k, a in enumerate(r):
                if a:
                    ok = orows[k]
                    for j in range(n):
                        b = ok[j]
                        if b:
                            acc[j] += a * b
            if p is not None:
                acc = [x % p for x in acc]
            out.append(acc)
        return Mat(self.field, self.nrows, n, out)

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        p = self.field.p
        rows = [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        if p is not None:
            rows = [[x % p for x in r] for r in rows]
        return Mat(self.field, self.nrows, self.ncols, rows)

    def __neg__(self) -> "Mat":
        return self.scale(-1)

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (-other)

    def scale(self, c) -> "Mat":
        c = self.field(c)
        p = self.field.p
        rows = [[c * x for x in r] for r in self.rows]
        if p is not None:
            rows = [[x % p for x in r] for r in rows]
        return Mat(self.field, self.nrows, self.ncols, rows)

    def apply(self, v: Sequence) -> tuple:
        p = self.field.p
        out = []
        for r in self.rows:
            s = self.field.zero
            for a, b in zip(r, v):
                if a and b:
                    s += a * b
            out.append(s % p if p is not None else s)
        return tuple(out)

    def submatrix(self, rows: Iterable[int] | None = None, cols: Iterable[int] | None = None) -> "Mat":
        rows = list(range(self.nrows)) if rows is None else list(rows)
        cols = list(range(self.ncols)) if cols is None else list(cols)
        return Mat(self.field, len(rows), len(cols), [[self.rows[i][j] for j in cols] for i in rows])


def hstack(field: Field, nrows: int, mats: Sequence[Mat]) -> Mat:
    ncols = sum(m.ncols for m in mats)
    rows = [[x for m in mats for x in m.rows[i]] for i in range(nrows)]
    return Mat(field, nrows, ncols, rows)


def vstack(field: Field, ncols: int, mats: Sequence[Mat]) -> Mat:
    rows = [r for m in mats for r in m.rows]
    return Mat(field, len(rows), ncols, rows)


def block_diag(field: Field, mats: Sequence[Mat]) -> Mat:
    nr = sum(m.nrows for m in mats)
    nc = sum(m.ncols for m in mats)
    z = field.zero
    rows = []
    off = 0
    for m in mats:
        for r in m.rows:
            rows.append([z] * off + list(r) + [z] * (nc - off - m.ncols))
        off += m.ncols
    return Mat(field, nr, nc, rows)


# -- elimination ------------------------------------------------------

class SparseEchelon:
    """Incremental Gaussian elimination on sparse rows ``{column: value}``.

    Pivot rows stay fully reduced: no pivot row has a nonzero entry in
    another row's pivot column.
    """

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.pivots: dict[int, dict] = {}
        self._holders: dict[int, set[int]] = {}

    def _sub(self, row: dict, f, prow: dict) -> None:
        p = self.field.p
        for j, x in prow.items():
            y = row.get(j, 0) - f * x
            if p is not None:
                y %= p
            if y:
                row[j] = y
            else:
                row.pop(j, None)

    def add(self, row: dict) -> bool:
        """Insert a row; True when it raised the rank."""
        F = self.field
        row = {j: F(x) for j, x in row.items() if x}
        for c in [c for c in row if c in self.pivots]:
            f = row.get(c)
            if f:
                self._sub(row, f, self.pivots[c])
        if not row:
            return False
        c = min(row)
        inv = F.inv(row[c])
        if inv != 1:
            row = {j: F(x * inv) for j, x in row.items()}
        for holder in list(self._holders.get(c, ())):
            prow = self.pivots[holder]
            old = set(prow)
            self._sub(prow, prow[c], row)
            for j in old - set(prow):
                self._holders[j].discard(holder)
            for j in set(prow) - old:
                self._holders.setdefault(j, set()).add(holder)
        self._holders.pop(c, None)
        self.pivots[c] = row
        for j in row:
            if j != c:
                self._holders.setdefault(j, set()).add(c)
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def kernel_columns(self) -> list[list]:
        F = self.field
        out = []
        for f in range(self.ncols):
            if f in self.pivots:
                continue
            v = [F.zero] * self.ncols
            v[f] = F.one
            for pc in self._holders.get(f, ()):
                v[pc] = F(-self.pivots[pc][f])
            out.append(v)
        return out


def _echelon(m: Mat) -> SparseEchelon:
    E = SparseEchelon(m.field, m.ncols)
    for r in m.rows:
        E.add({j: x for j, x in enumerate(r) if x})
    return E


def rref(m: Mat) -> tuple[list[list], list[int]]:
    """Reduced row echelon form: (rows, pivot columns)."""
    F = m.field
    E = _echelon(m)
    pivots = sorted(E.pivots)
    rows = []
    for c in pivots:
        dense = [F.zero] * m.ncols
        for j, x in E.pivots[c].items():
            dense[j] = x
        rows.append(dense)
    return rows, pivots


def rank(m: Mat) -> int:
    if m.nrows == 0 or m.ncols == 0:
        return 0
    return len(rref(m)[1])


def kernel_basis(m: Mat) -> Mat:
    """Columns form a basis of {v : m v = 0}."""
    n = m.ncols
    if not m.nrows:
        return Mat.identity(m.field, n)
    return Mat.from_columns(m.field, _echelon(m).kernel_columns(), n)


def column_space(m: Mat) -> Mat:
    """A column basis of the image, chosen among the columns of ``m``."""
    if m.ncols == 0 or m.nrows == 0:
        return Mat(m.field, m.nrows, 0)
    _, pivots = rref(m)
    return m.submatrix(cols=pivots)


def left_kernel(m: Mat) -> Mat:
    """Rows form a basis of {w : w m = 0}; as a map it is a cokernel projection."""
    return kernel_basis(m.T()).T()


def solve(m: Mat, b: Mat) -> Mat | None:
    """Some x with m x = b, or None when the system is inconsistent."""
    if m.nrows != b.nrows:
        raise ValueError(f"row count mismatch: {m.nrows} vs {b.nrows}")
    F = m.field
    n = m.ncols
    aug = hstack(F, m.nrows, [m, b])
    R, pivots = rref(aug)
    if any(pc >= n for pc in pivots):
        return None
    x = [[F.zero] * b.ncols for _ in range(n)]
    for row, pc in zip(R, pivots):
        x[pc] = list(row[n:])
    return Mat(F, n, b.ncols, x)


def left_inverse(m: Mat) -> Mat:
    """L with L m = I, for ``m`` of full column rank."""
    F = m.field
    if m.ncols == 0:
        return Mat(F, 0, m.nrows)
    sol = solve(m.T(), Mat.identity(F, m.ncols))
    if sol is None:
        raise ValueError("matrix does not have full column rank")
    return sol.T()


def right_inverse(m: Mat) -> Mat:
    """R with m R = I, for ``m`` of full row rank."""
    F = m.field
    if m.nrows == 0:
        return Mat(F, m.ncols, 0)
    sol = solve(m, Mat.identity(F, m.nrows))
    if sol is None:
        raise ValueError("matrix does not have full row rank")
    return sol


def inverse(m: Mat) -> Mat:
    if m.nrows != m.ncols:
        raise ValueError("inverse of a non-square matrix")
    return right_inverse(m)


def is_invertible(m: Mat) -> bool:
    return m.nrows == m.ncols and rank(m) == m.nrows


def mat_power(m: Mat, k: int) -> Mat:
    out = Mat.identity(m.field, m.nrows)
    base = m
    while k:
        if k & 1:
            out = out @ base
        base = base @ base
        k >>= 1
    return out


def charpoly(m: Mat) -> list:
    """Coefficients of det(xI - m), lowest degree first (monic).

    Hessenberg reduction followed by the standard recurrence; valid over any
    field.
    """
    F = m.field
    p = F.p
    n = m.nrows
    H = [list(r) for r in m.rows]

    def red(x):
        return x % p if p is not None else x

    for j in range(n - 2):
        piv = None
        for i in range(j + 1, n):
            if H[i][j]:
                piv = i
                break
        if piv is None:
            continue
        if piv != j + 1:
            H[piv], H[j + 1] = H[j + 1], H[piv]
            for r in H:
                r[piv], r[j + 1] = r[j + 1], r[piv]
        inv = F.inv(H[j + 1][j])
        for i in range(j + 2, n):
            f = red(H[i][j] * inv)
            if f:
                H[i] = [red(a - f * b) for a, b in zip(H[i], H[j + 1])]
                for r in H:
                    r[j + 1] = red(r[j + 1] + f * r[i])
    # p_k(x) = (x - h_kk) p_{k-1} - sum ...
    polys = [[F.one]]
    for k in range(n):
        prev = polys[-1]
        new = [F.zero] + list(prev)
        for i, c in enumerate(prev):
            new[i] = red(new[i] - H[k][k] * c)
        t = F.one
        for i in range(k - 1, -1, -1):
            t = red(t * H[i + 1][i])
            coef = red(t * H[i][k])
            if coef:
                for idx, c in enumerate(polys[i]):
                    new[idx] = red(new[idx] - coef * c)
        polys.append(new)
    return polys[-1]


def poly_eval_matrix(coeffs: Sequence, m: Mat) -> Mat:
    """Evaluate a polynomial (lowest degree first) at a square matrix."""
    F = m.field
    n = m.nrows
    out = Mat.zeros(F, n, n)
    for c in reversed(coeffs):
        out = out @ m + Mat.identity(F, n).scale(c)
    return out
