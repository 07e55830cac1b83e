"""Endomorphism algebras and the functors ``Hom_A(X, -)``.

For a module ``X`` with indecomposable summands ``X_1, ..., X_r`` the algebra
``End_A(X)`` is Peirce graded by the summands: a map ``X_k -> X_l`` has
source ``k`` and target ``l``, and multiplication is composition.
``Hom_A(X, M)`` is a left module over ``End_A(X)^op`` whose vertex ``k``
space is ``Hom_A(X_k, M)``; the element given by ``h: X_k -> X_l`` sends
``g`` in ``Hom_A(X_l, M)`` to ``g o h``.
"""
from __future__ import annotations

from . import linalg as la
from . import modules as md
from .algebra import Algebra
from .homology import Bimodule
from .modules import Module, ModuleMap


def _hom_basis_with_identity(X: Module):
    basis = md.hom_space(X, X)
    ident = md.identity_map(X)
    F = X.field
    size = len(ident.vector())
    U = F.matrix(size, 1, ident.vector())
    cand = md.maps_matrix(basis, X, X)
    keep = la.extend_independent(U, cand)
    return [ident] + [basis[k] for k in keep]


class HomFunctor:
    """``Hom_A(X, -)`` for a module ``X``.

    Args:
        X: the module.  Its basic part is used: the summands are one
            representative per isomorphism class, so the endomorphism ring
            is basic and Morita equivalent to ``End_A(X)``.
        seed: seed for the decomposition of ``X``.
        summands: optional explicit list of pairwise non-isomorphic
            indecomposable summands, overriding the decomposition.
    """

    def __init__(self, X: Module, seed: int = 0, summands=None, name: str = "E"):
        if summands is None:
            summands = md.decompose(X, seed).representatives
        self.summands = list(summands)
        self.source_algebra = X.algebra
        self.module = md.direct_sum_module(self.summands, algebra=X.algebra, name=X.name)
        r = len(self.summands)
        F = X.field
        self.hom = {}
        self.coords = {}
        for k in range(r):
            for l in range(r):
                if k == l:
                    basis = _hom_basis_with_identity(self.summands[k])
                else:
                    basis = md.hom_space(self.summands[k], self.summands[l])
                self.hom[k, l] = basis
                self.coords[k, l] = md.HomCoordinates(basis, self.summands[k], self.summands[l])
        # basis of End(X): idempotents first, then the rest by (source, target)
        labels, src, tgt, maps = [], [], [], []
        index = {}
        for k in range(r):
            index[k, k, 0] = len(labels)
            labels.append(f"id{k}")
            src.append(k)
            tgt.append(k)
            maps.append(self.hom[k, k][0])
        for k in range(r):
            for l in range(r):
                start = 1 if k == l else 0
                for j in range(start, len(self.hom[k, l])):
                    index[k, l, j] = len(labels)
                    labels.append(f"h{k}{l}_{j}")
                    src.append(k)
                    tgt.append(l)
                    maps.append(self.hom[k, l][j])
        self.maps = maps
        self.index = index
        mult: dict = {}
        for x in range(len(maps)):
            for y in range(len(maps)):
                if src[x] != tgt[y]:
                    continue
                comp = maps[x].compose(maps[y])
                a, b = src[y], tgt[x]
                co = self.coords[a, b].coords(comp)
                terms = tuple((index[a, b, j], c) for j, c in enumerate(co) if c != 0)
                if terms:
                    mult.setdefault(x, {})[y] = terms
        vertices = [str(k) for k in range(r)]
        self.end = Algebra(F, vertices, labels, src, tgt, mult, list(range(r)),
                           name=f"End({X.name or 'X'})")
        # each summand is indecomposable with local endomorphism ring, so the
        # character of vertex k is read off the identity coefficient
        self.ring = self.end.opposite()
        self.ring.name = name
        self._hom_cache: dict = {}

    @property
    def rank(self) -> int:
        return len(self.summands)

    def _homs_into(self, M: Module):
        key = M.digest()
        hit = self._hom_cache.get(key)
        if hit is None:
            bases = [md.hom_space(Xk, M) for Xk in self.summands]
            coords = [md.HomCoordinates(b, Xk, M) for b, Xk in zip(bases, self.summands)]
            hit = (bases, coords)
            self._hom_cache[key] = hit
        return hit

    def apply(self, M: Module, name: str | None = None) -> Module:
        """``Hom_A(X, M)`` as a module over ``End_A(X)^op``."""
        bases, coords = self._homs_into(M)
        F = M.field
        E = self.ring
        action = []
        for b in range(E.dim):
            h = self.maps[b]
            k, l = self.end.source[b], self.end.target[b]   # h: X_k -> X_l
            # in E the element maps vertex l to vertex k
            cols = [coords[k].coords(g.compose(h)) for g in bases[l]]
            if cols:
                m = F.from_rows(cols, len(bases[k])).transpose()
            else:
                m = F.zeros(len(bases[k]), 0)
            action.append(m)
        return Module(E, [len(b) for b in bases], action, name=name)

    def apply_map(self, f: ModuleMap) -> ModuleMap:
        """``Hom_A(X, f)``: postcomposition."""
        bM, _ = self._homs_into(f.source)
        bN, cN = self._homs_into(f.target)
        FM = self.apply(f.source)
        FN = self.apply(f.target)
        F = f.field
        blocks = []
        for k in range(self.rank):
            cols = [cN[k].coords(f.compose(g)) for g in bM[k]]
            if cols:
                blocks.append(F.from_rows(cols, len(bN[k])).transpose())
            else:
                blocks.append(F.zeros(len(bN[k]), 0))
        return ModuleMap(FM, FN, blocks)

    def bimodule(self) -> Bimodule:
        """``X`` as an ``(A, End_A(X)^op)``-bimodule."""
        return Bimodule(self.summands, self.ring, self.maps)

    def evaluation(self, M: Module):
        """The evaluation map ``X (x)_E Hom_A(X, M) -> M``.

        Returns ``(tensor module, map)``.
        """
        from .homology import tensor_bimodule
        FM = self.apply(M)
        bases, _ = self._homs_into(M)
        T, pieces = tensor_bimodule(self.bimodule(), FM)
        A = self.source_algebra
        F = M.field
        blocks = []
        for u in range(A.n_vertices):
            p = pieces[u]
            ev = F.zeros(M.dims[u], p.ambient_dim)
            for k, Xk in enumerate(self.summands):
                for r in range(Xk.dims[u]):
                    for j, g in enumerate(bases[k]):
                        col = p.index(k, r, j)
                        gu = g.blocks[u]
                        for s in range(M.dims[u]):
                            v = gu[s, r]
                            if v != 0:
                                ev[s, col] = v
            # well defined: ev vanishes on the relations
            if ev * p.section * p.projection != ev:
                raise ArithmeticError("evaluation does not factor through the tensor product")
            blocks.append(ev * p.section)
        return T, ModuleMap(T, M, blocks)


def end_algebra_of(M: Module, seed: int = 0) -> Algebra:
    """``End_A(M)`` of the basic part of ``M``, Peirce graded by its summands."""
    return HomFunctor(M, seed).end
