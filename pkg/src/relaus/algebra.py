"""Finite-dimensional algebras with a chosen complete set of idempotents.

Every algebra here is *Peirce graded*: the basis is a union of bases of the
blocks ``e_j A e_i`` for a fixed complete set of orthogonal primitive
idempotents ``e_1, ..., e_n``, and each ``e_i`` is itself a basis element.
A basis element in ``e_j A e_i`` has ``source`` i and ``target`` j.
Multiplication is written like composition of functions: ``x*y`` is
nonzero only when ``source(x) == target(y)``.

Bound quiver algebras ``kQ/I`` are built by :func:`path_algebra`; algebras
of endomorphisms (used for tilting modules and cover pairs) are built from
explicit structure constants by :mod:`relaus.modules`.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction

import flint

from . import linalg as la
from .linalg import Field


class AlgebraError(ValueError):
    """Raised when structure constants or idempotents are inconsistent."""


class PresentationError(ValueError):
    """A malformed quiver presentation.

    ``code`` is a short machine readable tag such as ``unknown-vertex``,
    ``duplicate-label``, ``non-uniform``, ``non-admissible`` or
    ``not-saturated``.
    """

    def __init__(self, message: str, code: str = "invalid", line: int | None = None,
                 column: int | None = None):
        self.code = code
        self.line = line
        self.column = column
        loc = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(f"{loc}{message}")


@dataclass(frozen=True)
class Arrow:
    label: str
    source: str
    target: str


class Algebra:
    """A Peirce graded finite-dimensional algebra.

    Args:
        field: ground field.
        vertices: labels of the idempotents ``e_i``.
        labels: one label per basis element.
        source, target: vertex index of each basis element.
        mult: ``mult[x][y]`` is a tuple of ``(z, coeff)`` pairs giving
            ``b_x * b_y``.  Missing entries are zero.
        idempotents: basis index of ``e_i`` for each vertex.
        generators: basis elements that together with the idempotents
            generate the algebra.  Module structure only needs to be
            checked on these.
    """

    def __init__(self, field: Field, vertices, labels, source, target, mult,
                 idempotents, generators=None, name: str = "A", arrows=None,
                 radical_is_arrow_ideal: bool = False):
        self.field = field
        self.vertices = tuple(str(v) for v in vertices)
        self.labels = tuple(labels)
        self.source = tuple(source)
        self.target = tuple(target)
        self.mult = {x: dict(row) for x, row in mult.items()}
        self.idempotents = tuple(idempotents)
        self.name = name
        self.arrows = tuple(arrows) if arrows is not None else None
        self._arrow_ideal = radical_is_arrow_ideal
        n = len(self.labels)
        if not (len(self.source) == len(self.target) == n):
            raise AlgebraError("basis data of unequal length")
        idem = set(self.idempotents)
        if generators is None:
            generators = [b for b in range(n) if b not in idem]
        self.generators = tuple(generators)
        self._blocks: dict[tuple[int, int], list[int]] = {}
        for b in range(n):
            self._blocks.setdefault((self.source[b], self.target[b]), []).append(b)
        self._position = {}
        for (i, j), lst in self._blocks.items():
            for k, b in enumerate(lst):
                self._position[b] = k
        self._opposite = None
        self._cache: dict = {}
        self._check_grading()

    # basic data ------------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def vertex_index(self, v) -> int:
        v = str(v)
        try:
            return self.vertices.index(v)
        except ValueError:
            raise KeyError(f"unknown vertex {v!r} of {self.name}") from None

    def block(self, src: int, tgt: int) -> list[int]:
        """Basis indices of ``e_tgt A e_src``."""
        return self._blocks.get((src, tgt), [])

    def position(self, b: int) -> int:
        """Index of basis element ``b`` inside its block."""
        return self._position[b]

    def product(self, x: int, y: int):
        """``b_x * b_y`` as a tuple of ``(z, coeff)``."""
        return self.mult.get(x, {}).get(y, ())

    def multiply(self, u: dict, v: dict) -> dict:
        """Product of two sparse coordinate vectors ``{index: coeff}``."""
        out: dict = {}
        for x, cx in u.items():
            row = self.mult.get(x)
            if not row:
                continue
            for y, cy in v.items():
                for z, c in row.get(y, ()):
                    out[z] = out.get(z, 0) + cx * cy * c
        return {z: c for z, c in out.items() if c != 0}

    def _check_grading(self):
        idem = self.idempotents
        if len(idem) != self.n_vertices:
            raise AlgebraError("need exactly one idempotent per vertex")
        for i, e in enumerate(idem):
            if self.source[e] != i or self.target[e] != i:
                raise AlgebraError(f"idempotent of vertex {self.vertices[i]} is not in e_i A e_i")
        for x, row in self.mult.items():
            for y, terms in row.items():
                if self.source[x] != self.target[y]:
                    raise AlgebraError(f"product {self.labels[x]}*{self.labels[y]} is not composable")
                for z, _ in terms:
                    if self.source[z] != self.source[y] or self.target[z] != self.target[x]:
                        raise AlgebraError("structure constants violate the Peirce grading")

    def verify(self) -> bool:
        """Check associativity and that the idempotents act as identities."""
        F = self.field
        one = F.one()
        n = self.dim
        for b in range(n):
            s, t = self.source[b], self.target[b]
            if dict(self.product(self.idempotents[t], b)) != {b: one}:
                raise AlgebraError(f"e_{self.vertices[t]} does not fix {self.labels[b]}")
            if dict(self.product(b, self.idempotents[s])) != {b: one}:
                raise AlgebraError(f"{self.labels[b]} is not fixed by e_{self.vertices[s]}")
        for x in range(n):
            for y in range(n):
                if self.source[x] != self.target[y]:
                    continue
                xy = dict(self.product(x, y))
                for z in range(n):
                    if self.source[y] != self.target[z]:
                        continue
                    lhs = self.multiply(xy, {z: one})
                    rhs = self.multiply({x: one}, dict(self.product(y, z)))
                    if lhs != rhs:
                        raise AlgebraError("multiplication is not associative")
        return True

    # identity and comparison -----------------------------------------------
    def digest(self) -> str:
        d = self._cache.get("digest")
        if d is None:
            h = hashlib.sha256()
            h.update(self.field.name.encode())
            h.update(repr((self.vertices, self.source, self.target, self.idempotents)).encode())
            for x in sorted(self.mult):
                for y in sorted(self.mult[x]):
                    terms = sorted((z, str(self.field.to_python(c))) for z, c in self.mult[x][y])
                    h.update(repr((x, y, terms)).encode())
            d = h.hexdigest()
            self._cache["digest"] = d
        return d

    def same_structure(self, other: "Algebra") -> bool:
        return isinstance(other, Algebra) and self.digest() == other.digest()

    def __repr__(self):
        return f"Algebra({self.name}, dim={self.dim}, vertices={list(self.vertices)}, {self.field.name})"

    # opposite ---------------------------------------------------------------
    def opposite(self) -> "Algebra":
        """The opposite algebra on the same basis indices.

        ``opposite().opposite()`` returns this very object.
        """
        if self._opposite is None:
            mult: dict = {}
            for x, row in self.mult.items():
                for y, terms in row.items():
                    mult.setdefault(y, {})[x] = terms
            arrows = None
            if self.arrows is not None:
                arrows = tuple((lab, b) for lab, b in self.arrows)
            labels = tuple(_reverse_label(lab) for lab in self.labels)
            name = self.name[:-3] if self.name.endswith("^op") else self.name + "^op"
            op = Algebra(self.field, self.vertices, labels, self.target, self.source, mult,
                         self.idempotents, self.generators, name=name, arrows=arrows,
                         radical_is_arrow_ideal=self._arrow_ideal)
            op._opposite = self
            self._opposite = op
        return self._opposite

    # characters and radical ---------------------------------------------------
    def left_multiplication(self, b: int, src_block: tuple[int, int]):
        """Matrix of ``y -> b*y`` from block ``src_block`` to the block it lands in."""
        s, t = src_block
        if t != self.source[b]:
            raise AlgebraError("left multiplication by a non-composable element")
        dom = self.block(s, t)
        cod = self.block(s, self.target[b])
        F = self.field
        m = F.zeros(len(cod), len(dom))
        for k, y in enumerate(dom):
            for z, c in self.product(b, y):
                m[self.position(z), k] = m[self.position(z), k] + c
        return m

    def character(self, i: int) -> dict:
        """The algebra map ``e_i A e_i -> k`` killing the radical.

        Returns ``{basis index: value}`` for the basis of ``e_i A e_i``.  The
        value of ``b`` is the unique eigenvalue of left multiplication by
        ``b``; it exists because ``e_i A e_i`` is local with residue field k.
        """
        key = ("char", i)
        if key in self._cache:
            return self._cache[key]
        F = self.field
        out = {}
        for b in self.block(i, i):
            if b == self.idempotents[i]:
                out[b] = F.one()
            elif self._arrow_ideal:
                out[b] = F.zero()
            else:
                out[b] = single_eigenvalue(self.left_multiplication(b, (i, i)))
                if out[b] is None:
                    raise AlgebraError(
                        f"e_{self.vertices[i]} A e_{self.vertices[i]} is not a split local algebra")
        self._cache[key] = out
        return out

    def radical_block(self, src: int, tgt: int):
        """Basis (columns, in block coordinates) of ``e_tgt rad(A) e_src``."""
        key = ("radblock", src, tgt)
        if key in self._cache:
            return self._cache[key]
        F = self.field
        blk = self.block(src, tgt)
        if self._arrow_ideal:
            keep = [k for k, b in enumerate(blk) if b not in self.idempotents]
            res = la.columns(F.identity(len(blk)), keep)
        else:
            lam = self.character(src)
            back = self.block(tgt, src)
            rows = []
            for y in back:
                row = []
                for x in blk:
                    v = F.zero()
                    for z, c in self.product(y, x):
                        v += c * lam.get(z, 0)
                    row.append(v)
                rows.append(row)
            if rows:
                res = la.kernel(F.from_rows(rows, len(blk)))
            else:
                res = F.identity(len(blk))
        self._cache[key] = res
        return res

    def radical(self):
        """Basis of the Jacobson radical as columns in full coordinates."""
        F = self.field
        cols = []
        for (s, t), blk in sorted(self._blocks.items()):
            R = self.radical_block(s, t)
            for k in range(R.ncols()):
                v = [F.zero()] * self.dim
                for a, b in enumerate(blk):
                    v[b] = R[a, k]
                cols.append(v)
        if not cols:
            return F.zeros(self.dim, 0)
        return F.from_rows(cols, self.dim).transpose()

    def isomorphic_vertices(self, i: int, j: int) -> bool:
        """Whether ``A e_i`` and ``A e_j`` are isomorphic."""
        if i == j:
            return True
        return self.radical_block(i, j).ncols() < len(self.block(i, j))

    def vertex_classes(self) -> list[list[int]]:
        """Vertices grouped by isomorphism of their projectives."""
        classes: list[list[int]] = []
        for i in range(self.n_vertices):
            for c in classes:
                if self.isomorphic_vertices(c[0], i):
                    c.append(i)
                    break
            else:
                classes.append([i])
        return classes

    def is_basic(self) -> bool:
        return all(len(c) == 1 for c in self.vertex_classes())

    def unit(self) -> dict:
        return {e: self.field.one() for e in self.idempotents}


def _reverse_label(label: str) -> str:
    if label.startswith("e_") or "*" not in label:
        return label
    return "*".join(reversed(label.split("*")))


def single_eigenvalue(m):
    """The eigenvalue of ``m`` if its minimal polynomial is ``(x - c)^k``."""
    if m.nrows() == 0:
        return None
    mp = m.minpoly()
    _, factors = mp.factor()
    if len(factors) != 1:
        return None
    f, _ = factors[0]
    if f.degree() != 1:
        return None
    coeffs = f.coeffs()
    return -coeffs[0] / coeffs[1]


# ---------------------------------------------------------------------------
# bound quiver algebras


def _lin_comb_key(path):
    return path


def path_algebra(field: Field, vertices, arrows, relations=(), name: str = "A",
                 length_cap: int | None = None) -> Algebra:
    """The bound quiver algebra ``kQ/I``.

    Args:
        field: ground field.
        vertices: vertex labels.
        arrows: ``(label, source, target)`` triples.
        relations: each relation is a list of ``(coeff, path)`` where ``path``
            is a tuple of arrow labels written like a composition, so
            ``("n", "a")`` means first ``a`` and then ``n``.
        length_cap: give up if the ideal does not contain all paths of this
            length.  Defaults to ``2 * (#arrows + #vertices)``.

    Relations must be uniform (all terms share source and target),
    homogeneous and of length at least two.  The ideal is reduced degree by
    degree; the basis consists of the paths that are not leading terms,
    sorted by length and then lexicographically by arrow labels.
    """
    vertices = [str(v) for v in vertices]
    if len(set(vertices)) != len(vertices):
        raise PresentationError("duplicate vertex label", "duplicate-label")
    vidx = {v: i for i, v in enumerate(vertices)}
    arr: dict[str, tuple[int, int]] = {}
    for lab, s, t in arrows:
        s, t = str(s), str(t)
        if lab in arr:
            raise PresentationError(f"duplicate arrow label {lab!r}", "duplicate-label")
        for v in (s, t):
            if v not in vidx:
                raise PresentationError(f"arrow {lab!r} uses unknown vertex {v!r}", "unknown-vertex")
        arr[lab] = (vidx[s], vidx[t])
    if length_cap is None:
        length_cap = 2 * (len(arr) + len(vertices))

    def path_ends(path):
        for a in path:
            if a not in arr:
                raise PresentationError(f"unknown arrow {a!r}", "unknown-arrow")
        for left, right in zip(path, path[1:]):
            if arr[left][0] != arr[right][1]:
                raise PresentationError(f"path {'*'.join(path)} is not composable", "non-uniform")
        return arr[path[-1]][0], arr[path[0]][1]

    # normalise relations
    rels_by_len: dict[int, list[dict]] = {}
    for rel in relations:
        terms: dict = {}
        ends = set()
        lengths = set()
        for c, path in rel:
            path = tuple(path)
            if len(path) < 2:
                raise PresentationError(
                    f"relation term {'*'.join(path) or 'e'} has length < 2", "non-admissible")
            ends.add(path_ends(path))
            lengths.add(len(path))
            terms[path] = terms.get(path, field.zero()) + field(c)
        terms = {p: c for p, c in terms.items() if c != 0}
        if len(ends) > 1:
            raise PresentationError("relation terms do not share source and target", "non-uniform")
        if len(lengths) > 1:
            raise PresentationError("relation mixes path lengths", "non-homogeneous")
        if terms:
            rels_by_len.setdefault(lengths.pop(), []).append(terms)

    out_arrows: dict[int, list[str]] = {}
    for lab, (s, t) in arr.items():
        out_arrows.setdefault(s, []).append(lab)
    in_arrows: dict[int, list[str]] = {}
    for lab, (s, t) in arr.items():
        in_arrows.setdefault(t, []).append(lab)

    # paths[l]: sorted list of paths of length l; ends[p] = (src, tgt)
    ends: dict = {}
    paths = {1: sorted((a,) for a in arr)}
    for p in paths[1]:
        ends[p] = arr[p[0]]
    standard: dict[int, list] = {}
    normal: dict[int, dict] = {}
    ideal_rows: list[dict] = []   # basis of I_{l-1} as {path: coeff}
    level = 1
    while True:
        if level > length_cap:
            raise PresentationError(
                f"ideal does not contain all paths of length {length_cap}; "
                "presentation is not admissible within the length cap", "not-saturated")
        cur = paths[level]
        if not cur:
            break
        gens: list[dict] = []
        for r in rels_by_len.get(level, []):
            gens.append(r)
        for x in ideal_rows:
            for a in arr:
                left = {}
                right = {}
                for p, c in x.items():
                    s, t = ends[p]
                    if arr[a][0] == t:
                        left[(a,) + p] = c
                    if arr[a][1] == s:
                        right[p + (a,)] = c
                if left:
                    gens.append(left)
                if right:
                    gens.append(right)
        # columns in descending path order so that leading terms are the
        # largest paths and the smallest survive as basis elements
        order = sorted(cur, reverse=True)
        col = {p: k for k, p in enumerate(order)}
        if gens:
            M = field.from_rows([[g.get(p, field.zero()) for p in order] for g in gens], len(order))
            R, piv = la.rref(M)
        else:
            R, piv = None, []
        pivset = set(piv)
        std = sorted(p for p in cur if col[p] not in pivset)
        standard[level] = std
        nf: dict = {}
        for p in std:
            nf[p] = ((p, field.one()),)
        for i, pc in enumerate(piv):
            p = order[pc]
            terms = []
            for q in std:
                v = R[i, col[q]]
                if v != 0:
                    terms.append((q, -v))
            nf[p] = tuple(terms)
        normal[level] = nf
        ideal_rows = []
        for i in range(len(piv)):
            ideal_rows.append({order[j]: R[i, j] for j in range(len(order)) if R[i, j] != 0})
        if not std:
            break
        nxt = []
        for p in cur:
            s, t = ends[p]
            for a in out_arrows.get(t, []):
                q = (a,) + p
                ends[q] = (s, arr[a][1])
                nxt.append(q)
        level += 1
        paths[level] = sorted(nxt)
        if len(nxt) > 200000:
            raise PresentationError("too many paths before the ideal saturates", "not-saturated")
    top = level  # all paths of length >= top vanish

    # assemble basis
    labels = [f"e_{v}" for v in vertices]
    src = list(range(len(vertices)))
    tgt = list(range(len(vertices)))
    path_of: list = [None] * len(vertices)
    index: dict = {}
    for lvl in sorted(standard):
        for p in standard[lvl]:
            index[p] = len(labels)
            labels.append("*".join(p))
            s, t = ends[p]
            src.append(s)
            tgt.append(t)
            path_of.append(p)
    idem = list(range(len(vertices)))
    one = field.one()
    mult: dict = {}
    n = len(labels)
    for x in range(n):
        for y in range(n):
            if src[x] != tgt[y]:
                continue
            if x < len(vertices):
                terms = ((y, one),)
            elif y < len(vertices):
                terms = ((x, one),)
            else:
                q = path_of[x] + path_of[y]
                if len(q) >= top:
                    continue
                terms = tuple((index[r], c) for r, c in normal[len(q)][q])
            if terms:
                mult.setdefault(x, {})[y] = terms
    gens = [index[(a,)] for a in sorted(arr) if (a,) in index]
    arrow_info = tuple((a, index[(a,)]) for a in sorted(arr) if (a,) in index)
    A = Algebra(field, vertices, labels, src, tgt, mult, idem, generators=gens, name=name,
                arrows=arrow_info, radical_is_arrow_ideal=True)
    A.presentation = {
        "vertices": list(vertices),
        "arrows": [(a, vertices[arr[a][0]], vertices[arr[a][1]]) for a in arr],
        "relations": [[(c, p) for p, c in r.items()] for rs in rels_by_len.values() for r in rs],
    }
    A.loewy_bound = top
    A.path_of = path_of
    return A
