"""Exact linear algebra over QQ and prime fields GF(p).

Matrices are python-flint ``fmpq_mat`` / ``nmod_mat`` objects.  This module
adds the handful of operations the rest of the package needs on top of
them: a canonical reduced row echelon form with pivot list, null spaces,
column spaces, membership solving and a few block constructors.

Vectors are always column vectors; a "basis matrix" holds one basis vector
per column.
"""
from __future__ import annotations

import random
from fractions import Fraction

import flint


class FieldError(ValueError):
    """Raised for an unsupported or malformed field description."""


def _is_prime(p: int) -> bool:
    return p >= 2 and flint.fmpz(p).is_prime()


class Field:
    """The ground field: ``Field()`` is QQ, ``Field(p)`` is GF(p)."""

    __slots__ = ("p",)

    MAX_PRIME = 2**31 - 1

    def __init__(self, p: int | None = None):
        if p is not None:
            if not isinstance(p, int) or not _is_prime(p):
                raise FieldError(f"GF({p}): characteristic must be prime")
            if p > self.MAX_PRIME:
                raise FieldError(f"GF({p}): characteristic exceeds word size")
        self.p = p

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Accepts ``QQ``, ``GF:7``, ``GF 7`` and ``GF7``."""
        t = text.strip()
        if t.upper() in ("QQ", "Q"):
            return cls()
        up = t.upper()
        if up.startswith("GF"):
            rest = t[2:].strip().lstrip(":").strip()
            try:
                p = int(rest)
            except ValueError:
                raise FieldError(f"cannot read characteristic from {text!r}") from None
            return cls(p)
        raise FieldError(f"unknown field {text!r}")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def name(self) -> str:
        return "QQ" if self.p is None else f"GF:{self.p}"

    def __repr__(self):
        return f"Field({self.name})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    # scalars -------------------------------------------------------------
    def __call__(self, x):
        """Coerce an int, Fraction, string ``a/b`` or flint scalar."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.p is None:
            if isinstance(x, flint.fmpq):
                return x
            if isinstance(x, Fraction):
                return flint.fmpq(x.numerator, x.denominator)
            if isinstance(x, flint.nmod):
                raise FieldError("cannot coerce a GF(p) scalar into QQ")
            return flint.fmpq(int(x))
        if isinstance(x, flint.nmod):
            return flint.nmod(int(x), self.p)
        if isinstance(x, (Fraction, flint.fmpq)):
            num, den = (x.numerator, x.denominator) if isinstance(x, Fraction) else (int(x.p), int(x.q))
            if den % self.p == 0:
                raise FieldError(f"denominator {den} vanishes in GF({self.p})")
            return flint.nmod(num, self.p) / flint.nmod(den, self.p)
        return flint.nmod(int(x), self.p)

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def to_python(self, x):
        """Plain python value (int or Fraction) of a scalar."""
        if self.p is None:
            x = self(x)
            return int(x.p) if x.q == 1 else Fraction(int(x.p), int(x.q))
        return int(self(x))

    def format(self, x) -> str:
        v = self.to_python(x)
        return str(v)

    def random_scalar(self, rng: random.Random, bound: int = 7):
        if self.p is None:
            return flint.fmpq(rng.randint(-bound, bound))
        return flint.nmod(rng.randrange(self.p), self.p)

    # matrices ------------------------------------------------------------
    def matrix(self, rows: int, cols: int, entries=None):
        """Matrix from a flat row-major entry list (zero matrix if omitted)."""
        if entries is None:
            if self.p is None:
                return flint.fmpq_mat(rows, cols)
            return flint.nmod_mat(rows, cols, self.p)
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        if self.p is None:
            ok = (int, flint.fmpq)
            return flint.fmpq_mat(rows, cols, [e if type(e) in ok else self(e) for e in entries])
        ok = (int, flint.nmod)
        return flint.nmod_mat(rows, cols, [e if type(e) in ok else self(e) for e in entries], self.p)

    def from_rows(self, rows, ncols: int | None = None):
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
        return self.matrix(len(rows), ncols, [e for r in rows for e in r])

    def zeros(self, rows: int, cols: int):
        return self.matrix(rows, cols)

    def identity(self, n: int):
        m = self.matrix(n, n)
        one = self.one()
        for i in range(n):
            m[i, i] = one
        return m

    def random_matrix(self, rows: int, cols: int, rng: random.Random):
        return self.matrix(rows, cols, [self.random_scalar(rng) for _ in range(rows * cols)])

    def mat_field(self, m) -> "Field":
        return self


def field_of(m) -> Field:
    if isinstance(m, flint.nmod_mat):
        return Field(int(m.modulus()))
    return Field()


def shape(m) -> tuple[int, int]:
    return m.nrows(), m.ncols()


def entries(m) -> list:
    """Flat row-major entries."""
    return list(m.entries())


def is_zero(m) -> bool:
    return all(e == 0 for e in m.entries())


def rref(m):
    """Canonical reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` has ``len(pivots)`` nonzero rows
    (the remaining rows are zero) and ``pivots[i]`` is the column of the
    leading one in row ``i``.  The form is unique, so results do not depend
    on any internal pivoting strategy.
    """
    r, c = shape(m)
    if r == 0 or c == 0:
        return m, []
    R, rank = m.rref()
    pivots = []
    row = 0
    for j in range(c):
        if row >= rank:
            break
        if R[row, j] != 0:
            pivots.append(j)
            row += 1
    return R, pivots


def rank(m) -> int:
    r, c = shape(m)
    if r == 0 or c == 0:
        return 0
    return m.rank()


def kernel(m):
    """Basis of the null space, one vector per column.

    For each free column ``f`` of the RREF the basis vector has a one in
    position ``f`` and zeros in every other free position.
    """
    F = field_of(m)
    r, c = shape(m)
    R, piv = rref(m)
    pivset = set(piv)
    free = [j for j in range(c) if j not in pivset]
    K = F.zeros(c, len(free))
    for k, f in enumerate(free):
        K[f, k] = F.one()
        for i, p in enumerate(piv):
            v = R[i, f]
            if v != 0:
                K[p, k] = -v
    return K


def image(m):
    """Basis of the column space: the pivot columns of ``m`` itself."""
    _, piv = rref(m)
    return columns(m, piv)


def kernel_image(m):
    return kernel(m), image(m)


def columns(m, idx):
    F = field_of(m)
    r, _ = shape(m)
    out = F.zeros(r, len(idx))
    for k, j in enumerate(idx):
        for i in range(r):
            v = m[i, j]
            if v != 0:
                out[i, k] = v
    return out


def rows_of(m, idx):
    F = field_of(m)
    _, c = shape(m)
    out = F.zeros(len(idx), c)
    for k, i in enumerate(idx):
        for j in range(c):
            v = m[i, j]
            if v != 0:
                out[k, j] = v
    return out


def submatrix(m, rows, cols):
    F = field_of(m)
    out = F.zeros(len(rows), len(cols))
    for a, i in enumerate(rows):
        for b, j in enumerate(cols):
            v = m[i, j]
            if v != 0:
                out[a, b] = v
    return out


def hstack(mats, nrows: int | None = None, field: Field | None = None):
    mats = list(mats)
    if not mats:
        return field.zeros(nrows or 0, 0)
    F = field_of(mats[0])
    r = mats[0].nrows()
    for x in mats:
        if x.nrows() != r:
            raise ValueError("hstack: row mismatch")
    lists = [x.tolist() for x in mats]
    flat = []
    for i in range(r):
        for lst in lists:
            flat.extend(lst[i])
    return F.matrix(r, sum(x.ncols() for x in mats), flat)


def vstack(mats, ncols: int | None = None, field: Field | None = None):
    mats = list(mats)
    if not mats:
        return field.zeros(0, ncols or 0)
    F = field_of(mats[0])
    c = mats[0].ncols()
    flat = []
    for x in mats:
        if x.ncols() != c:
            raise ValueError("vstack: column mismatch")
        flat.extend(x.entries())
    return F.matrix(sum(x.nrows() for x in mats), c, flat)


def block_diag(mats, field: Field | None = None):
    mats = list(mats)
    if not mats:
        return field.zeros(0, 0)
    F = field_of(mats[0])
    c = sum(x.ncols() for x in mats)
    zero = F.zero()
    flat = []
    off = 0
    for x in mats:
        for row in x.tolist():
            flat.extend([zero] * off)
            flat.extend(row)
            flat.extend([zero] * (c - off - x.ncols()))
        off += x.ncols()
    return F.matrix(sum(x.nrows() for x in mats), c, flat)


def place(target, block, row: int, col: int):
    """Add ``block`` into ``target`` at the given offset (in place)."""
    for i in range(block.nrows()):
        for j in range(block.ncols()):
            v = block[i, j]
            if v != 0:
                target[row + i, col + j] = target[row + i, col + j] + v


def solve_membership(basis, target):
    """Coefficients ``x`` with ``basis * x == target`` or ``None``.

    ``target`` may have several columns; ``None`` is returned if any column
    lies outside the span.  The solution puts zero weight on non-pivot
    columns, so it is deterministic.
    """
    F = field_of(target)
    n, h = shape(basis)
    t = target.ncols()
    if h == 0:
        return F.zeros(0, t) if is_zero(target) else None
    aug = hstack([basis, target])
    R, piv = rref(aug)
    if piv and piv[-1] >= h:
        return None
    x = F.zeros(h, t)
    for i, p in enumerate(piv):
        for j in range(t):
            v = R[i, h + j]
            if v != 0:
                x[p, j] = v
    return x


def left_inverse(B):
    """A left inverse of a matrix with independent columns."""
    F = field_of(B)
    n, h = shape(B)
    if h == 0:
        return F.zeros(0, n)
    _, piv = rref(B.transpose())
    if len(piv) != h:
        raise ValueError("left_inverse: columns are dependent")
    sq = rows_of(B, piv)
    inv = sq.inv()
    L = F.zeros(h, n)
    for k, p in enumerate(piv):
        for i in range(h):
            v = inv[i, k]
            if v != 0:
                L[i, p] = v
    return L


def complement_columns(U, n: int | None = None, field: Field | None = None):
    """Standard basis vectors extending the column space of ``U`` to k^n.

    Returns the list of chosen coordinate indices (lowest indices first).
    """
    if U is None or U.ncols() == 0:
        return list(range(n if n is not None else U.nrows()))
    F = field_of(U)
    n = U.nrows()
    aug = hstack([U, F.identity(n)])
    _, piv = rref(aug)
    h = U.ncols()
    return [p - h for p in piv if p >= h]


def extend_independent(U, candidates):
    """Indices of ``candidates`` columns that extend span(U) greedily."""
    F = field_of(candidates)
    h = 0 if U is None else U.ncols()
    aug = candidates if U is None or h == 0 else hstack([U, candidates])
    _, piv = rref(aug)
    return [p - h for p in piv if p >= h]


def unit_vector(F: Field, n: int, i: int):
    v = F.zeros(n, 1)
    v[i, 0] = F.one()
    return v


def kron(a, b):
    F = field_of(a)
    ra, ca = shape(a)
    rb, cb = shape(b)
    out = F.zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            s = a[i, j]
            if s == 0:
                continue
            for k in range(rb):
                for l in range(cb):
                    v = b[k, l]
                    if v != 0:
                        out[i * rb + k, j * cb + l] = s * v
    return out


def to_lists(m, F: Field | None = None):
    F = F or field_of(m)
    return [[F.to_python(m[i, j]) for j in range(m.ncols())] for i in range(m.nrows())]


def det(m):
    if m.nrows() == 0:
        return field_of(m).one()
    return m.det()
