"""Finite-dimensional left modules over Peirce graded algebras.

A module is stored as one vector space per vertex (``dims``) and one matrix
per basis element of the algebra.  The matrix of a basis element from
``e_j A e_i`` maps the vertex ``i`` space to the vertex ``j`` space.  Module
maps are block diagonal: one matrix per vertex.  Because of this grading all
kernels, images and Hom computations are done vertex by vertex.
"""
from __future__ import annotations

import hashlib
import random

from . import linalg as la
from .algebra import Algebra, AlgebraError, single_eigenvalue


class ModuleError(ValueError):
    """Raised for inconsistent module data."""


class DecompositionError(ArithmeticError):
    """Raised when an endomorphism ring does not split over the ground field."""


class Module:
    """A left module given by its action matrices.

    Args:
        algebra: the algebra acting.
        dims: dimension of ``e_i M`` for each vertex ``i``.
        action: one matrix per basis element of ``algebra``; the matrix of
            ``b`` has shape ``(dims[target(b)], dims[source(b)])``.
        name: optional display name.
        check: verify the module axioms on construction.
    """

    def __init__(self, algebra: Algebra, dims, action, name: str | None = None,
                 check: bool = False):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        self.action = tuple(action)
        self.name = name
        if len(self.dims) != algebra.n_vertices:
            raise ModuleError("dimension vector has the wrong length")
        if len(self.action) != algebra.dim:
            raise ModuleError("need one action matrix per basis element")
        for b, m in enumerate(self.action):
            want = (self.dims[algebra.target[b]], self.dims[algebra.source[b]])
            if la.shape(m) != want:
                raise ModuleError(
                    f"matrix of {algebra.labels[b]} has shape {la.shape(m)}, expected {want}")
        self._digest = None
        self._cache: dict = {}
        if check:
            self.verify()

    @property
    def field(self):
        return self.algebra.field

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def __repr__(self):
        nm = f"{self.name}, " if self.name else ""
        return f"Module({nm}dims={self.dims})"

    def verify(self) -> bool:
        """Check that the action is an algebra homomorphism."""
        A = self.algebra
        F = self.field
        for i, e in enumerate(A.idempotents):
            if self.action[e] != F.identity(self.dims[i]):
                raise ModuleError(f"idempotent e_{A.vertices[i]} does not act as the identity")
        for x in A.generators:
            for y in range(A.dim):
                if A.source[x] != A.target[y]:
                    continue
                lhs = self.action[x] * self.action[y]
                rhs = F.zeros(*la.shape(lhs))
                for z, c in A.product(x, y):
                    rhs += c * self.action[z]
                if lhs != rhs:
                    raise ModuleError(
                        f"action violates {A.labels[x]}*{A.labels[y]}")
        return True

    def digest(self) -> str:
        if self._digest is None:
            h = hashlib.sha256()
            h.update(self.algebra.digest().encode())
            h.update(repr(self.dims).encode())
            for m in self.action:
                h.update(repr([str(e) for e in m.entries()]).encode())
            self._digest = h.hexdigest()
        return self._digest

    def same_as(self, other: "Module") -> bool:
        """Equality of the underlying data (not isomorphism)."""
        return (self.algebra.same_structure(other.algebra) and self.dims == other.dims
                and all(a == b for a, b in zip(self.action, other.action)))

    def offsets(self) -> list[int]:
        out, o = [], 0
        for d in self.dims:
            out.append(o)
            o += d
        return out

    def full_action(self, b: int):
        """The action of ``b`` on the whole space (block placed in a big matrix)."""
        F = self.field
        n = self.total_dim
        off = self.offsets()
        A = self.algebra
        m = F.zeros(n, n)
        la.place(m, self.action[b], off[A.target[b]], off[A.source[b]])
        return m

    def act(self, element: dict, vertex_from: int):
        """Matrix of a linear combination ``{basis: coeff}`` from a given vertex."""
        A = self.algebra
        F = self.field
        tgt = None
        out = None
        for b, c in element.items():
            if A.source[b] != vertex_from:
                continue
            if out is None:
                tgt = A.target[b]
                out = F.zeros(self.dims[tgt], self.dims[vertex_from])
            out += c * self.action[b]
        return out

    def renamed(self, name: str) -> "Module":
        m = Module(self.algebra, self.dims, self.action, name=name)
        m._digest = self._digest
        m._cache = self._cache
        return m

    @classmethod
    def from_arrow_matrices(cls, algebra: Algebra, dims, arrow_mats: dict, name=None,
                            check: bool = True) -> "Module":
        """A representation of a bound quiver given by arrow matrices.

        Every path basis element acts by the product of its arrow matrices.
        The defining relations are checked.
        """
        if algebra.arrows is None:
            raise ModuleError("arrow matrices need a quiver algebra")
        F = algebra.field
        dims = tuple(dims)
        known = {lab for lab, _ in algebra.arrows}
        for lab in arrow_mats:
            if lab not in known:
                raise ModuleError(f"unknown arrow {lab!r}")
        amat = {}
        for lab, b in algebra.arrows:
            s, t = algebra.source[b], algebra.target[b]
            m = arrow_mats.get(lab)
            if m is None:
                m = F.zeros(dims[t], dims[s])
            if la.shape(m) != (dims[t], dims[s]):
                raise ModuleError(f"matrix of arrow {lab!r} has shape {la.shape(m)}, "
                                  f"expected {(dims[t], dims[s])}")
            amat[lab] = m

        def path_matrix(path):
            m = amat[path[0]]
            for a in path[1:]:
                m = m * amat[a]
            return m

        action = []
        for b in range(algebra.dim):
            if b in algebra.idempotents:
                action.append(F.identity(dims[algebra.source[b]]))
            else:
                action.append(path_matrix(algebra.path_of[b]))
        for rel in algebra.presentation["relations"]:
            total = None
            for c, path in rel:
                term = c * path_matrix(path)
                total = term if total is None else total + term
            if total is not None and not la.is_zero(total):
                raise ModuleError("arrow matrices violate a relation")
        # the relations generate the ideal, so every path in it now acts by zero
        mod = cls(algebra, dims, action, name=name)
        if check:
            mod.verify()
        return mod


# ---------------------------------------------------------------------------
# maps


class ModuleMap:
    """A module homomorphism given by one matrix per vertex."""

    def __init__(self, source: Module, target: Module, blocks):
        self.source = source
        self.target = target
        self.blocks = tuple(blocks)
        for v, m in enumerate(self.blocks):
            if la.shape(m) != (target.dims[v], source.dims[v]):
                raise ModuleError("map block has the wrong shape")

    @property
    def field(self):
        return self.source.field

    def __repr__(self):
        return f"ModuleMap({self.source!r} -> {self.target!r})"

    def verify(self) -> bool:
        A = self.source.algebra
        for b in A.generators:
            s, t = A.source[b], A.target[b]
            if self.blocks[t] * self.source.action[b] != self.target.action[b] * self.blocks[s]:
                raise ModuleError(f"map does not commute with {A.labels[b]}")
        return True

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """``self o other``."""
        return ModuleMap(other.source, self.target,
                         [a * b for a, b in zip(self.blocks, other.blocks)])

    def __mul__(self, other):
        if isinstance(other, ModuleMap):
            return self.compose(other)
        return ModuleMap(self.source, self.target, [other * m for m in self.blocks])

    def __rmul__(self, c):
        return ModuleMap(self.source, self.target, [c * m for m in self.blocks])

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, self.target, [a + b for a, b in zip(self.blocks, other.blocks)])

    def __sub__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, self.target, [a - b for a, b in zip(self.blocks, other.blocks)])

    def is_zero(self) -> bool:
        return all(la.is_zero(m) for m in self.blocks)

    def rank(self) -> int:
        return sum(la.rank(m) for m in self.blocks)

    def is_injective(self) -> bool:
        return self.rank() == self.source.total_dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.total_dim

    def is_isomorphism(self) -> bool:
        return self.source.dims == self.target.dims and self.is_injective()

    def vector(self) -> list:
        out = []
        for m in self.blocks:
            out.extend(m.entries())
        return out

    def matrix(self):
        return la.block_diag(self.blocks, field=self.field)


def identity_map(M: Module) -> ModuleMap:
    return ModuleMap(M, M, [M.field.identity(d) for d in M.dims])


def zero_map(M: Module, N: Module) -> ModuleMap:
    F = M.field
    return ModuleMap(M, N, [F.zeros(n, m) for m, n in zip(M.dims, N.dims)])


def map_from_vector(M: Module, N: Module, vec) -> ModuleMap:
    F = M.field
    blocks, o = [], 0
    for m, n in zip(M.dims, N.dims):
        blocks.append(F.matrix(n, m, vec[o:o + n * m]))
        o += n * m
    return ModuleMap(M, N, blocks)


def maps_matrix(maps, M: Module, N: Module):
    """Columns are the vectorised maps."""
    F = M.field
    size = sum(m * n for m, n in zip(M.dims, N.dims))
    if not maps:
        return F.zeros(size, 0)
    return F.from_rows([f.vector() for f in maps], size).transpose()


def hom_space(M: Module, N: Module) -> list[ModuleMap]:
    """A basis of ``Hom_A(M, N)``.

    Solves ``f_j rho_M(b) = rho_N(b) f_i`` for every generator ``b`` of the
    algebra, with one block of unknowns per vertex.
    """
    key = ("hom", N.digest())
    cached = M._cache.get(key)
    if cached is not None:
        return [ModuleMap(M, N, f.blocks) for f in cached]
    A = M.algebra
    F = M.field
    off, o = [], 0
    for m, n in zip(M.dims, N.dims):
        off.append(o)
        o += m * n
    nunk = o
    if nunk == 0:
        M._cache[key] = []
        return []
    zero = F.zero()
    rows = []
    for b in A.generators:
        i, j = A.source[b], A.target[b]
        dMi, dMj, dNi, dNj = M.dims[i], M.dims[j], N.dims[i], N.dims[j]
        if dMi == 0 or dNj == 0:
            continue
        rM = M.action[b].tolist()   # dMj x dMi
        rN = N.action[b].tolist()   # dNj x dNi
        for r in range(dNj):
            for c in range(dMi):
                row = [zero] * nunk
                # f_j[r, s] * rM[s][c]
                base = off[j] + r * dMj
                for s in range(dMj):
                    v = rM[s][c]
                    if v != 0:
                        row[base + s] += v
                # - rN[r][t] * f_i[t, c]
                for t in range(dNi):
                    v = rN[r][t]
                    if v != 0:
                        row[off[i] + t * dMi + c] -= v
                rows.append(row)
    if rows:
        K = la.kernel(F.from_rows(rows, nunk))
    else:
        K = F.identity(nunk)
    maps = []
    cols = K.transpose().tolist()
    for vec in cols:
        maps.append(map_from_vector(M, N, vec))
    M._cache[key] = maps
    return list(maps)


def hom_dim(M: Module, N: Module) -> int:
    return len(hom_space(M, N))


class HomCoordinates:
    """Coordinates of maps with respect to a fixed basis of a Hom space."""

    def __init__(self, basis: list[ModuleMap], M: Module, N: Module):
        self.basis = basis
        self.M, self.N = M, N
        B = maps_matrix(basis, M, N)
        self._B = B
        self._L = la.left_inverse(B)

    def __len__(self):
        return len(self.basis)

    def coords(self, f: ModuleMap) -> list:
        F = self.M.field
        if not self.basis:
            return []
        v = F.matrix(len(f.vector()), 1, f.vector())
        return (self._L * v).entries()

    def combine(self, coeffs) -> ModuleMap:
        out = zero_map(self.M, self.N)
        for c, f in zip(coeffs, self.basis):
            if c != 0:
                out = out + c * f
        return out


# ---------------------------------------------------------------------------
# sums, submodules, quotients


def zero_module(A: Algebra, name: str = "0") -> Module:
    F = A.field
    return Module(A, [0] * A.n_vertices,
                  [F.zeros(0, 0) for _ in range(A.dim)], name=name)


def direct_sum(mods, algebra: Algebra | None = None, name: str | None = None):
    """External direct sum with its inclusions and projections."""
    mods = list(mods)
    if not mods:
        Z = zero_module(algebra)
        return Z, [], []
    A = mods[0].algebra
    F = A.field
    dims = [sum(m.dims[v] for m in mods) for v in range(A.n_vertices)]
    action = [la.block_diag([m.action[b] for m in mods], field=F) for b in range(A.dim)]
    S = Module(A, dims, action, name=name)
    incs, projs = [], []
    before = [0] * A.n_vertices
    for m in mods:
        ib, pb = [], []
        for v in range(A.n_vertices):
            i = F.zeros(dims[v], m.dims[v])
            for k in range(m.dims[v]):
                i[before[v] + k, k] = F.one()
            ib.append(i)
            pb.append(i.transpose())
        incs.append(ModuleMap(m, S, ib))
        projs.append(ModuleMap(S, m, pb))
        for v in range(A.n_vertices):
            before[v] += m.dims[v]
    return S, incs, projs


def direct_sum_module(mods, algebra: Algebra | None = None, name: str | None = None) -> Module:
    return direct_sum(mods, algebra, name)[0]


def submodule(M: Module, spaces, name: str | None = None):
    """The submodule spanned per vertex by the columns of ``spaces[v]``.

    Returns the module and its inclusion.  The spaces must be invariant.
    """
    A = M.algebra
    lefts = [la.left_inverse(U) for U in spaces]
    dims = [U.ncols() for U in spaces]
    action = []
    for b in range(A.dim):
        i, j = A.source[b], A.target[b]
        action.append(lefts[j] * (M.action[b] * spaces[i]))
    S = Module(A, dims, action, name=name)
    return S, ModuleMap(S, M, list(spaces))


def quotient(M: Module, spaces, name: str | None = None):
    """``M`` modulo the invariant subspaces ``spaces``; returns module and projection."""
    A = M.algebra
    F = M.field
    projs, sections = [], []
    for v, U in enumerate(spaces):
        d = M.dims[v]
        comp = la.complement_columns(U, d) if U.ncols() else list(range(d))
        C = la.columns(F.identity(d), comp)
        full = la.hstack([U, C]) if U.ncols() else C
        inv = full.inv() if d else F.zeros(0, 0)
        projs.append(la.rows_of(inv, list(range(U.ncols(), d))))
        sections.append(C)
    dims = [s.ncols() for s in sections]
    action = []
    for b in range(A.dim):
        i, j = A.source[b], A.target[b]
        action.append(projs[j] * (M.action[b] * sections[i]))
    Q = Module(A, dims, action, name=name)
    return Q, ModuleMap(M, Q, projs)


class Factorization:
    """Kernel, image and cokernel of a map ``f: M -> N``."""

    def __init__(self, f: ModuleMap):
        self.map = f
        M, N = f.source, f.target
        ker_spaces = [la.kernel(m) for m in f.blocks]
        im_spaces = [la.image(m) for m in f.blocks]
        self.kernel, self.kernel_inclusion = submodule(M, ker_spaces)
        self.image, self.image_inclusion = submodule(N, im_spaces)
        lefts = [la.left_inverse(U) for U in im_spaces]
        self.coimage_map = ModuleMap(M, self.image, [L * m for L, m in zip(lefts, f.blocks)])
        self.cokernel, self.cokernel_projection = quotient(N, im_spaces)


def map_factorization(f: ModuleMap) -> Factorization:
    return Factorization(f)


def kernel(f: ModuleMap):
    fac = Factorization(f)
    return fac.kernel, fac.kernel_inclusion


def cokernel(f: ModuleMap):
    fac = Factorization(f)
    return fac.cokernel, fac.cokernel_projection


# ---------------------------------------------------------------------------
# standard modules


class ProjectiveModule(Module):
    """A direct sum of indecomposable projectives ``A e_g``.

    ``gens`` lists the vertex of each summand.  The vertex ``u`` space is the
    concatenation over summands of the block ``e_u A e_g``.
    """

    def __init__(self, algebra: Algebra, gens, name: str | None = None):
        self.gens = tuple(gens)
        A = algebra
        F = A.field
        dims = [sum(len(A.block(g, u)) for g in self.gens) for u in range(A.n_vertices)]
        self._goff = []
        for u in range(A.n_vertices):
            o, lst = 0, []
            for g in self.gens:
                lst.append(o)
                o += len(A.block(g, u))
            self._goff.append(lst)
        action = []
        lm = _left_mult_cache(A)
        for b in range(A.dim):
            k, u = A.source[b], A.target[b]
            m = F.zeros(dims[u], dims[k])
            for gi, g in enumerate(self.gens):
                blk = lm(b, g)
                if blk is not None:
                    la.place(m, blk, self._goff[u][gi], self._goff[k][gi])
            action.append(m)
        super().__init__(A, dims, action, name=name)

    def generator_offset(self, gi: int) -> int:
        """Position of the generator ``e_g`` of summand ``gi`` in its vertex space."""
        A = self.algebra
        g = self.gens[gi]
        return self._goff[g][gi] + A.position(A.idempotents[g])

    def generator_vector(self, gi: int):
        F = self.field
        g = self.gens[gi]
        v = F.zeros(self.dims[g], 1)
        v[self.generator_offset(gi), 0] = F.one()
        return v

    def map_from_images(self, N: Module, images) -> ModuleMap:
        """The map sending generator ``gi`` to ``images[gi]`` (a column in ``N_g``)."""
        A = self.algebra
        F = self.field
        blocks = [F.zeros(N.dims[u], self.dims[u]) for u in range(A.n_vertices)]
        for gi, g in enumerate(self.gens):
            x = images[gi]
            for u in range(A.n_vertices):
                blk = A.block(g, u)
                for k, b in enumerate(blk):
                    col = N.action[b] * x
                    o = self._goff[u][gi] + k
                    for r in range(N.dims[u]):
                        v = col[r, 0]
                        if v != 0:
                            blocks[u][r, o] = v
        return ModuleMap(self, N, blocks)

    def coefficients(self, vec, u: int) -> dict:
        """Split a vector of the vertex ``u`` space into algebra elements per summand.

        Returns ``{summand index: {basis: coeff}}``.
        """
        A = self.algebra
        out = {}
        for gj, g in enumerate(self.gens):
            blk = A.block(g, u)
            o = self._goff[u][gj]
            el = {}
            for k, b in enumerate(blk):
                v = vec[o + k]
                if v != 0:
                    el[b] = v
            if el:
                out[gj] = el
        return out


def _left_mult_cache(A: Algebra):
    cache = A._cache.setdefault("leftmult", {})

    def get(b, g):
        key = (b, g)
        if key not in cache:
            k = A.source[b]
            if not A.block(g, k) and not A.block(g, A.target[b]):
                cache[key] = None
            else:
                cache[key] = A.left_multiplication(b, (g, k))
        return cache[key]
    return get


def projective(A: Algebra, i: int, name: str | None = None) -> ProjectiveModule:
    return ProjectiveModule(A, [i], name=name or f"P{A.vertices[i]}")


def dualize(M: Module, name: str | None = None) -> Module:
    """``D M = Hom_k(M, k)`` as a module over the opposite algebra."""
    if name is None and M.name:
        name = f"D({M.name})"
    return Module(M.algebra.opposite(), M.dims, [m.transpose() for m in M.action], name=name)


def dualize_map(f: ModuleMap) -> ModuleMap:
    """``D f: D N -> D M``."""
    DM, DN = dualize(f.source), dualize(f.target)
    return ModuleMap(DN, DM, [m.transpose() for m in f.blocks])


def injective(A: Algebra, i: int, name: str | None = None) -> Module:
    P = projective(A.opposite(), i)
    return dualize(P, name=name or f"I{A.vertices[i]}")


def regular(A: Algebra) -> ProjectiveModule:
    return ProjectiveModule(A, list(range(A.n_vertices)), name="A")


def dual_regular(A: Algebra) -> Module:
    return dualize(regular(A.opposite()), name="DA")


def radical_spaces(M: Module):
    """Per vertex basis of ``rad(A) M``."""
    A = M.algebra
    F = M.field
    cols: list[list] = [[] for _ in range(A.n_vertices)]
    if A._arrow_ideal:
        for b in A.generators:
            i, j = A.source[b], A.target[b]
            if M.dims[i] and M.dims[j]:
                cols[j].append(M.action[b])
    else:
        for (s, t), blk in A._blocks.items():
            if not M.dims[s] or not M.dims[t]:
                continue
            R = A.radical_block(s, t)
            for k in range(R.ncols()):
                m = F.zeros(M.dims[t], M.dims[s])
                for a, b in enumerate(blk):
                    c = R[a, k]
                    if c != 0:
                        m += c * M.action[b]
                cols[t].append(m)
    spaces = []
    for v in range(A.n_vertices):
        if cols[v]:
            spaces.append(la.image(la.hstack(cols[v])))
        else:
            spaces.append(F.zeros(M.dims[v], 0))
    return spaces


def radical(M: Module):
    """``rad M`` with its inclusion."""
    return submodule(M, radical_spaces(M), name=f"rad{M.name}" if M.name else None)


def top(M: Module):
    """``M / rad M`` with the projection."""
    return quotient(M, radical_spaces(M), name=f"top({M.name})" if M.name else None)


def simple(A: Algebra, i: int, name: str | None = None) -> Module:
    S, _ = top(projective(A, i))
    return S.renamed(name or f"S{A.vertices[i]}")


def socle_spaces(M: Module):
    """Per vertex basis of ``soc M``, the joint kernel of the radical."""
    DM = dualize(M)
    rs = radical_spaces(DM)
    # soc M is the annihilator of rad(DM) under the pairing
    F = M.field
    out = []
    for v, U in enumerate(rs):
        if U.ncols() == 0:
            out.append(F.identity(M.dims[v]))
        else:
            out.append(la.kernel(U.transpose()))
    return out


def socle(M: Module):
    return submodule(M, socle_spaces(M))


def projective_cover(M: Module):
    """Minimal projective cover ``P -> M``.

    Returns ``(P, pi)``.  One generator is taken for each basis vector of a
    complement of ``rad M`` at a representative vertex of each isomorphism
    class of indecomposable projectives.
    """
    A = M.algebra
    F = M.field
    rad = radical_spaces(M)
    gens, images = [], []
    for cls in A.vertex_classes():
        c = cls[0]
        if M.dims[c] == 0:
            continue
        # make sure the character exists: needed for the split top
        if not A._arrow_ideal:
            A.character(c)
        comp = la.complement_columns(rad[c], M.dims[c]) if rad[c].ncols() else list(range(M.dims[c]))
        for k in comp:
            gens.append(c)
            images.append(la.unit_vector(F, M.dims[c], k))
    order = sorted(range(len(gens)), key=lambda t: gens[t])
    gens = [gens[t] for t in order]
    images = [images[t] for t in order]
    P = ProjectiveModule(A, gens)
    return P, P.map_from_images(M, images)


def injective_envelope(M: Module):
    """Minimal injective envelope ``M -> I`` computed through duality."""
    P, pi = projective_cover(dualize(M))
    I = dualize(P)
    iota = dualize_map(pi)
    return I, ModuleMap(M, I, iota.blocks)


# ---------------------------------------------------------------------------
# endomorphisms, decomposition, isomorphism


def _block_diag_matrix(f: ModuleMap):
    return la.block_diag(f.blocks, field=f.field)


def eigen_data(f: ModuleMap):
    """Factorisation of the minimal polynomial of an endomorphism."""
    m = _block_diag_matrix(f)
    if m.nrows() == 0:
        return []
    _, factors = m.minpoly().factor()
    return factors


def _poly_at(poly, f: ModuleMap, power: int = 1):
    """Per vertex matrices of ``poly(f)^power``."""
    out = []
    F = f.field
    coeffs = poly.coeffs()
    for m in f.blocks:
        n = m.nrows()
        acc = F.zeros(n, n)
        for c in reversed(coeffs):
            acc = acc * m + c * F.identity(n)
        res = F.identity(n)
        for _ in range(power):
            res = res * acc
        out.append(res)
    return out


def local_endomorphisms(M: Module, basis: list[ModuleMap] | None = None):
    """Test whether ``End(M)`` is local with residue field k.

    Returns the basis of the radical (as maps) when it is, else ``None``.
    The radical is the span of ``phi - lambda(phi)`` over basis elements; it
    must be a nilpotent two-sided ideal.
    """
    if basis is None:
        basis = hom_space(M, M)
    if M.is_zero():
        return None
    F = M.field
    ident = identity_map(M)
    shifted = []
    for phi in basis:
        lam = single_eigenvalue(_block_diag_matrix(phi))
        if lam is None:
            return None
        shifted.append(phi - lam * ident)
    Nmat = maps_matrix(shifted, M, M)
    Nbasis = la.image(Nmat)
    if Nbasis.ncols() != len(basis) - 1:
        return None
    rad = [map_from_vector(M, M, Nbasis.transpose().tolist()[k]) for k in range(Nbasis.ncols())]
    # two-sided ideal
    prods = []
    for r in rad:
        for phi in basis:
            prods.append(r.compose(phi))
            prods.append(phi.compose(r))
    if prods:
        P = maps_matrix(prods, M, M)
        if la.solve_membership(Nbasis, P) is None:
            return None
    # nilpotent: powers of the ideal shrink to zero
    power = rad
    for _ in range(M.total_dim + 1):
        if not power:
            break
        nxt = [a.compose(b) for a in power for b in rad]
        nxt = [f for f in nxt if not f.is_zero()]
        if not nxt:
            power = []
            break
        im = la.image(maps_matrix(nxt, M, M))
        power = [map_from_vector(M, M, im.transpose().tolist()[k]) for k in range(im.ncols())]
    if power:
        return None
    return rad


class Summand:
    """An indecomposable summand with split inclusion and projection."""

    def __init__(self, module: Module, inclusion: ModuleMap, projection: ModuleMap,
                 end_radical=None):
        self.module = module
        self.inclusion = inclusion
        self.projection = projection
        self.end_radical = end_radical


class Decomposition:
    """Krull-Schmidt decomposition ``M = sum of summands``.

    ``classes`` groups summand indices by isomorphism; ``isos[k]`` maps each
    member of class ``k`` to an isomorphism from the class representative.
    """

    def __init__(self, module: Module, summands: list[Summand], classes: list[list[int]]):
        self.module = module
        self.summands = summands
        self.classes = classes

    @property
    def multiplicities(self) -> list[int]:
        return [len(c) for c in self.classes]

    @property
    def representatives(self) -> list[Module]:
        return [self.summands[c[0]].module for c in self.classes]

    def pairs(self) -> list[tuple[Module, int]]:
        return list(zip(self.representatives, self.multiplicities))

    def verify(self) -> bool:
        M = self.module
        total = zero_map(M, M)
        for s in self.summands:
            if not s.projection.compose(s.inclusion).is_isomorphism():
                raise ModuleError("summand projection is not a retraction")
            total = total + s.inclusion.compose(s.projection)
        for a, s in enumerate(self.summands):
            for b, t in enumerate(self.summands):
                pq = t.projection.compose(s.inclusion)
                if a == b:
                    if pq.blocks != identity_map(s.module).blocks:
                        raise ModuleError("projection after inclusion is not the identity")
                elif not pq.is_zero():
                    raise ModuleError("summands are not independent")
        if total.blocks != identity_map(M).blocks:
            raise ModuleError("summands do not exhaust the module")
        return True


def _split(X: Module, rng: random.Random):
    """Find an endomorphism whose minimal polynomial has two coprime factors.

    Returns the per vertex kernels of the two coprime parts, or ``None``
    when ``End(X)`` is local.  Raises if the ring does not split over k.
    """
    basis = hom_space(X, X)
    if len(basis) == 1:
        return None, []
    rad = local_endomorphisms(X, basis)
    if rad is not None:
        return None, rad
    F = X.field
    candidates = list(basis)
    for a in basis[:8]:
        for b in basis[:8]:
            candidates.append(a.compose(b))
    for _ in range(40):
        phi = zero_map(X, X)
        for f in basis:
            phi = phi + F.random_scalar(rng) * f
        candidates.append(phi)
    nonsplit = False
    for phi in candidates:
        factors = eigen_data(phi)
        if len(factors) >= 2:
            g, e = factors[0]
            rest = None
            for h, k in factors[1:]:
                hk = h ** k
                rest = hk if rest is None else rest * hk
            U = [la.kernel(m) for m in _poly_at(g, phi, e)]
            W = [la.kernel(m) for m in _poly_at(rest, phi, 1)]
            return (U, W), None
        if factors and factors[0][0].degree() > 1:
            nonsplit = True
    if nonsplit:
        raise DecompositionError(
            "endomorphism ring does not split over the ground field; "
            "decomposition needs a field extension")
    raise DecompositionError("could not find a splitting endomorphism")


def decompose(M: Module, seed: int = 0) -> Decomposition:
    """Decompose into indecomposables by splitting endomorphisms.

    Random choices use ``seed``.  The result is deterministic for a fixed
    seed.  Summands are grouped into isomorphism classes.
    """
    key = ("decompose", seed)
    if key in M._cache:
        return M._cache[key]
    rng = random.Random(seed)
    F = M.field
    out: list[Summand] = []
    stack = [(M, identity_map(M), identity_map(M))]
    while stack:
        X, inc, proj = stack.pop()
        if X.is_zero():
            continue
        parts, rad = _split(X, rng)
        if parts is None:
            out.append(Summand(X, inc, proj, rad))
            continue
        U, W = parts
        SU, iU = submodule(X, U)
        SW, iW = submodule(X, W)
        pu, pw = [], []
        for v in range(X.algebra.n_vertices):
            full = la.hstack([U[v], W[v]]) if X.dims[v] else F.zeros(0, 0)
            inv = full.inv() if X.dims[v] else F.zeros(0, 0)
            pu.append(la.rows_of(inv, list(range(U[v].ncols()))))
            pw.append(la.rows_of(inv, list(range(U[v].ncols(), X.dims[v]))))
        pU = ModuleMap(X, SU, pu)
        pW = ModuleMap(X, SW, pw)
        stack.append((SW, inc.compose(iW), pW.compose(proj)))
        stack.append((SU, inc.compose(iU), pU.compose(proj)))
    out.sort(key=lambda s: (s.module.total_dim, s.module.dims))
    classes: list[list[int]] = []
    for idx, s in enumerate(out):
        for c in classes:
            if indecomposable_isomorphism(out[c[0]].module, s.module) is not None:
                c.append(idx)
                break
        else:
            classes.append([idx])
    res = Decomposition(M, out, classes)
    M._cache[key] = res
    return res


def indecomposable_isomorphism(X: Module, Y: Module):
    """An isomorphism ``X -> Y`` between indecomposables, or ``None``.

    ``X`` and ``Y`` are isomorphic exactly when some ``g o f`` with ``f`` and
    ``g`` from the Hom bases is invertible; then ``f`` is an isomorphism.
    """
    if X.dims != Y.dims:
        return None
    if X.is_zero():
        return identity_map(X)
    fs = hom_space(X, Y)
    if not fs:
        return None
    gs = hom_space(Y, X)
    for f in fs:
        if f.is_isomorphism():
            return f
    for f in fs:
        for g in gs:
            if la.det(_block_diag_matrix(g.compose(f))) != 0:
                return f
    return None


def is_indecomposable(M: Module, seed: int = 0) -> bool:
    if M.is_zero():
        return False
    return len(decompose(M, seed).summands) == 1


def isomorphism_classes(mods, seed: int = 0) -> list[list[int]]:
    """Group indecomposable modules by isomorphism."""
    classes: list[list[int]] = []
    for idx, m in enumerate(mods):
        for c in classes:
            if indecomposable_isomorphism(mods[c[0]], m) is not None:
                c.append(idx)
                break
        else:
            classes.append([idx])
    return classes


def multiset_signature(M: Module, seed: int = 0):
    """Indecomposable representatives and multiplicities of ``M``."""
    return decompose(M, seed).pairs()


def is_isomorphic(M: Module, N: Module, seed: int = 0) -> bool:
    if M.dims != N.dims:
        return False
    a = decompose(M, seed).pairs()
    b = decompose(N, seed).pairs()
    if len(a) != len(b):
        return False
    used = [False] * len(b)
    for X, m in a:
        for k, (Y, n) in enumerate(b):
            if not used[k] and m == n and indecomposable_isomorphism(X, Y) is not None:
                used[k] = True
                break
        else:
            return False
    return True


def same_additive_closure(M: Module, N: Module, seed: int = 0) -> bool:
    """``add M == add N``: same indecomposable summands up to isomorphism."""
    a = decompose(M, seed).representatives
    b = decompose(N, seed).representatives
    if len(a) != len(b):
        return False
    for X in a:
        if not any(indecomposable_isomorphism(X, Y) is not None for Y in b):
            return False
    return True


def basic_part(M: Module, seed: int = 0, name: str | None = None) -> Module:
    reps = decompose(M, seed).representatives
    return direct_sum_module(reps, algebra=M.algebra, name=name)


def add_membership(X: Module, T: Module):
    """Whether ``X`` is a summand of a finite sum of copies of ``T``.

    Trace test: ``id_X`` must be a combination of composites
    ``X -> T -> X``.  Returns ``(bool, coefficients or None)``.
    """
    if X.is_zero():
        return True, []
    fs = hom_space(X, T)
    gs = hom_space(T, X)
    comps = [g.compose(f) for f in fs for g in gs]
    if not comps:
        return False, None
    B = maps_matrix(comps, X, X)
    target = X.field.matrix(len(identity_map(X).vector()), 1, identity_map(X).vector())
    sol = la.solve_membership(B, target)
    if sol is None:
        return False, None
    return True, sol.entries()


def in_add(X: Module, T: Module) -> bool:
    return add_membership(X, T)[0]


def dimension_vector(M: Module) -> tuple[int, ...]:
    return M.dims
