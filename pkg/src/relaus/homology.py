"""Resolutions, Ext, Tor, tensor products and homological dimensions."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg as la
from . import modules as md
from .algebra import Algebra
from .modules import Module, ModuleMap, ProjectiveModule
from .values import INF, AtLeast, vmax

DEFAULT_CAP = 64


class Resolution:
    """A (co)resolution of a module.

    For ``direction == "projective"`` the terms are ``P_0, P_1, ...`` and
    ``maps[0]: P_0 -> M`` is the augmentation, ``maps[k]: P_k -> P_{k-1}``.
    For ``"injective"`` the terms are ``I^0, I^1, ...`` with
    ``maps[0]: M -> I^0`` and ``maps[k]: I^{k-1} -> I^k``.

    ``syzygies[k]`` is the ``k``-th (co)syzygy, ``syzygies[0] = M``.
    ``length`` is the projective (injective) dimension: an int, ``INF``
    when a syzygy repeats, or ``AtLeast(cap)`` if the cap was reached.
    """

    def __init__(self, module, direction, terms, maps, syzygies, length, certificate,
                 summands):
        self.module = module
        self.direction = direction
        self.terms = terms
        self.maps = maps
        self.syzygies = syzygies
        self.length = length
        self.certificate = certificate
        self.summands = summands  # vertex indices of the indecomposable summands of each term

    @property
    def complete(self) -> bool:
        return isinstance(self.length, int)

    def term_labels(self) -> list[str]:
        A = self.module.algebra
        letter = "P" if self.direction == "projective" else "I"
        out = []
        for gens in self.summands:
            out.append("+".join(f"{letter}{A.vertices[g]}" for g in gens) or "0")
        return out

    def verify(self) -> bool:
        """Exactness and (for projective resolutions) minimality."""
        maps = self.maps
        if not maps:
            return self.module.is_zero()
        if self.direction == "projective":
            if not maps[0].is_surjective() and not self.module.is_zero():
                raise ArithmeticError("augmentation is not onto")
            for k in range(1, len(maps)):
                comp = maps[k - 1].compose(maps[k])
                if not comp.is_zero():
                    raise ArithmeticError("d o d != 0")
                ker = md.Factorization(maps[k - 1]).kernel.total_dim
                if maps[k].rank() != ker:
                    raise ArithmeticError(f"not exact at degree {k - 1}")
            if self.complete:
                last = maps[-1]
                if not last.is_injective():
                    raise ArithmeticError("last differential is not injective")
        else:
            if not maps[0].is_injective() and not self.module.is_zero():
                raise ArithmeticError("coaugmentation is not injective")
            for k in range(1, len(maps)):
                comp = maps[k].compose(maps[k - 1])
                if not comp.is_zero():
                    raise ArithmeticError("d o d != 0")
                ker = md.Factorization(maps[k]).kernel.total_dim
                if maps[k - 1].rank() != ker:
                    raise ArithmeticError(f"not exact at degree {k - 1}")
            if self.complete:
                if not maps[-1].is_surjective():
                    raise ArithmeticError("last differential is not onto")
        return True


_RES_CACHE: dict = {}


def clear_caches():
    _RES_CACHE.clear()


def _contains_as_summand(small: Module, big: Module) -> bool:
    if small.is_zero():
        return False
    if any(a > b for a, b in zip(small.dims, big.dims)):
        return False
    ds = md.decompose(small).pairs()
    db = md.decompose(big).pairs()
    for X, m in ds:
        have = 0
        for Y, n in db:
            if md.indecomposable_isomorphism(X, Y) is not None:
                have = n
                break
        if have < m:
            return False
    return True


def minimal_projective_resolution(M: Module, cap: int = DEFAULT_CAP, detect_repetition: bool = True,
                                  pad: int | None = None) -> Resolution:
    """Minimal projective resolution by iterated projective covers.

    Stops when a syzygy vanishes, when an earlier nonzero syzygy is
    isomorphic to a direct summand of the current one (then the
    resolution is infinite) or after ``cap`` covers.

    ``pad`` adds a superfluous summand ``P(pad)`` to the first term, which
    gives a non-minimal resolution used to test independence of choices.
    """
    key = (M.digest(), detect_repetition, pad)
    hit = _RES_CACHE.get(key)
    if hit is not None:
        if hit.stop_index <= cap and not isinstance(hit.length, AtLeast):
            return hit
        if hit.stop_index >= cap:
            return _truncate(hit, cap)
    A = M.algebra
    terms, maps, syz, summands = [], [], [M], []
    prev_incl = None
    length, cert = None, ""
    omega = M
    k = 0
    while True:
        if omega.is_zero():
            length = max(k - 1, 0)
            cert = f"syzygy {k} vanishes"
            break
        if detect_repetition:
            rep = None
            for m in range(k):
                if _contains_as_summand(syz[m], omega):
                    rep = m
                    break
            if rep is not None:
                length = INF
                cert = f"syzygy {rep} is a direct summand of syzygy {k}"
                break
        if k >= cap:
            length = AtLeast(cap)
            cert = "cap reached"
            break
        P, pi = md.projective_cover(omega)
        if pad is not None and k == 0:
            gens = list(P.gens) + [pad]
            Pp = ProjectiveModule(A, gens)
            F = A.field
            images = []
            for gi in range(len(P.gens)):
                images.append(pi.blocks[P.gens[gi]] * P.generator_vector(gi))
            images.append(F.zeros(omega.dims[pad], 1))
            P = Pp
            pi = P.map_from_images(omega, images)
        fac = md.Factorization(pi)
        d = pi if prev_incl is None else prev_incl.compose(pi)
        terms.append(P)
        maps.append(d)
        summands.append(list(P.gens))
        prev_incl = fac.kernel_inclusion
        omega = fac.kernel
        syz.append(omega)
        k += 1
    res = Resolution(M, "projective", terms, maps, syz, length, cert, summands)
    res.stop_index = k
    _RES_CACHE[key] = res
    return res


def _truncate(res: Resolution, cap: int) -> Resolution:
    out = Resolution(res.module, res.direction, res.terms[:cap], res.maps[:cap],
                     res.syzygies[:cap + 1], AtLeast(cap), "cap reached", res.summands[:cap])
    out.stop_index = cap
    return out


def minimal_injective_coresolution(M: Module, cap: int = DEFAULT_CAP,
                                   detect_repetition: bool = True) -> Resolution:
    """Minimal injective coresolution, transported from the opposite algebra."""
    key = ("injres", cap, detect_repetition)
    if key in M._cache:
        return M._cache[key]
    DM = md.dualize(M)
    pr = minimal_projective_resolution(DM, cap, detect_repetition)
    terms = [md.dualize(P) for P in pr.terms]
    maps = []
    for k, d in enumerate(pr.maps):
        Dd = md.dualize_map(d)
        src = M if k == 0 else terms[k - 1]
        maps.append(ModuleMap(src, terms[k], Dd.blocks))
    syz = [M] + [md.dualize(S) for S in pr.syzygies[1:]]
    res = Resolution(M, "injective", terms, maps, syz, pr.length,
                     pr.certificate.replace("syzygy", "cosyzygy"), pr.summands)
    res.stop_index = pr.stop_index
    M._cache[key] = res
    return res


def projective_dimension(M: Module, cap: int = DEFAULT_CAP):
    return minimal_projective_resolution(M, cap).length


def injective_dimension(M: Module, cap: int = DEFAULT_CAP):
    return minimal_injective_coresolution(M, cap).length


# ---------------------------------------------------------------------------
# Ext through the projective resolution of the first argument


def _dual_differential(Pk: ProjectiveModule, Pk1: ProjectiveModule, d: ModuleMap, N: Module):
    """Matrix of ``Hom(P_{k-1}, N) -> Hom(P_k, N)`` induced by ``d: P_k -> P_{k-1}``.

    ``Hom(P, N)`` is identified with the sum over generators ``g`` of ``e_g N``.
    """
    F = N.field
    col_off, o = [], 0
    for g in Pk1.gens:
        col_off.append(o)
        o += N.dims[g]
    ncols = o
    row_off, o = [], 0
    for g in Pk.gens:
        row_off.append(o)
        o += N.dims[g]
    nrows = o
    out = F.zeros(nrows, ncols)
    for gi, v in enumerate(Pk.gens):
        if N.dims[v] == 0:
            continue
        col = d.blocks[v] * Pk.generator_vector(gi)
        vec = col.entries()
        for gj, el in Pk1.coefficients(vec, v).items():
            src = Pk1.gens[gj]
            if N.dims[src] == 0:
                continue
            blk = N.act(el, src)
            if blk is not None:
                la.place(out, blk, row_off[gi], col_off[gj])
    return out


def _resolution_through(M: Module, k: int, cap: int, resolution: Resolution | None) -> Resolution:
    """A resolution with terms up to degree ``k``, or a complete one.

    A resolution stopped by the repetition certificate is extended without
    the repetition test when more terms are needed.
    """
    res = resolution or minimal_projective_resolution(M, max(cap, k))
    if res.complete or len(res.terms) > k:
        return res
    if res.length is INF:
        return minimal_projective_resolution(M, k + 1, detect_repetition=False)
    return res


def ext_dim(M: Module, N: Module, i: int, cap: int = DEFAULT_CAP, resolution: Resolution | None = None) -> int:
    """``dim Ext^i_A(M, N)``."""
    if i < 0:
        raise ValueError("negative degree")
    res = _resolution_through(M, i + 1, cap, resolution)
    terms = res.terms
    if i >= len(terms):
        if res.complete:
            return 0
        raise ArithmeticError(f"resolution truncated before degree {i}")
    Pi = terms[i]
    dim_hom = sum(N.dims[g] for g in Pi.gens)
    r_out = 0
    if i + 1 < len(terms):
        r_out = la.rank(_dual_differential(terms[i + 1], Pi, res.maps[i + 1], N))
    elif not res.complete:
        raise ArithmeticError(f"resolution truncated before degree {i + 1}")
    r_in = 0
    if i >= 1:
        r_in = la.rank(_dual_differential(Pi, terms[i - 1], res.maps[i], N))
    return dim_hom - r_out - r_in


def ext_dim_injective(M: Module, N: Module, i: int, cap: int = DEFAULT_CAP) -> int:
    """``dim Ext^i_A(M, N)`` from the injective coresolution of ``N``.

    Independent of :func:`ext_dim`; used to cross-check it.
    """
    res = minimal_injective_coresolution(N, max(cap, i + 2))
    if not res.complete and len(res.terms) <= i + 1 and res.length is INF:
        res = minimal_injective_coresolution(N, i + 2, detect_repetition=False)
    terms = res.terms
    if i >= len(terms):
        if res.complete:
            return 0
        raise ArithmeticError("coresolution truncated")

    def hom_matrix(k):
        # Hom(M, I^k) -> Hom(M, I^{k+1})
        src = md.hom_space(M, terms[k])
        dst = md.hom_space(M, terms[k + 1])
        if not src or not dst:
            return None, len(src)
        coords = md.HomCoordinates(dst, M, terms[k + 1])
        cols = [coords.coords(res.maps[k + 1].compose(f)) for f in src]
        return M.field.from_rows(cols, len(dst)).transpose(), len(src)

    if i + 1 >= len(terms) and not res.complete:
        raise ArithmeticError(f"coresolution truncated before degree {i + 1}")
    mat_out, dim_hom = hom_matrix(i) if i + 1 < len(terms) else (None, md.hom_dim(M, terms[i]))
    r_out = la.rank(mat_out) if mat_out is not None else 0
    r_in = 0
    if i >= 1:
        mat_in, _ = hom_matrix(i - 1)
        r_in = la.rank(mat_in) if mat_in is not None else 0
    return dim_hom - r_out - r_in


def ext_vanishes(M: Module, N: Module, degrees, cap: int = DEFAULT_CAP) -> bool:
    return all(ext_dim(M, N, i, cap) == 0 for i in degrees)


# ---------------------------------------------------------------------------
# tensor products and Tor


class TensorProduct:
    """``R (x)_B Y`` for a right module ``R`` (a module over ``B^op``) and left ``Y``.

    The space is a quotient of ``V = sum_v R_v (x) Y_v``.  ``projection``
    maps ``V`` onto the quotient coordinates, ``section`` is a right
    inverse.
    """

    def __init__(self, R: Module, Y: Module):
        B = Y.algebra
        if not R.algebra.same_structure(B.opposite()):
            raise ValueError("first factor must be a module over the opposite algebra")
        F = Y.field
        self.R, self.Y = R, Y
        offs, o = [], 0
        for v in range(B.n_vertices):
            offs.append(o)
            o += R.dims[v] * Y.dims[v]
        self.offsets = offs
        n = o
        self.ambient_dim = n
        rows = []
        zero = F.zero()
        for b in B.generators:
            s, t = B.source[b], B.target[b]
            dRt, dRs, dYs, dYt = R.dims[t], R.dims[s], Y.dims[s], Y.dims[t]
            if dRt == 0 or dYs == 0:
                continue
            rR = R.action[b].tolist()   # R_t -> R_s
            rY = Y.action[b].tolist()   # Y_s -> Y_t
            for r in range(dRt):
                for y in range(dYs):
                    row = [zero] * n
                    for r2 in range(dRs):
                        v = rR[r2][r]
                        if v != 0:
                            row[offs[s] + r2 * dYs + y] += v
                    for y2 in range(dYt):
                        v = rY[y2][y]
                        if v != 0:
                            row[offs[t] + r * dYt + y2] -= v
                    rows.append(row)
        if rows and n:
            Rm, piv = la.rref(F.from_rows(rows, n))
        else:
            Rm, piv = None, []
        pivset = set(piv)
        free = [j for j in range(n) if j not in pivset]
        self.dim = len(free)
        P = F.zeros(self.dim, n)
        S = F.zeros(n, self.dim)
        for k, j in enumerate(free):
            P[k, j] = F.one()
            S[j, k] = F.one()
            for i, p in enumerate(piv):
                v = Rm[i, j]
                if v != 0:
                    P[k, p] = -v
        self.projection = P
        self.section = S

    def index(self, v: int, r: int, y: int) -> int:
        return self.offsets[v] + r * self.Y.dims[v] + y


def tensor_over(R: Module, Y: Module) -> TensorProduct:
    return TensorProduct(R, Y)


def tor_dim(R: Module, Y: Module, i: int, cap: int = DEFAULT_CAP,
            resolution: Resolution | None = None) -> int:
    """``dim Tor_i^B(R, Y)``; ``R`` is a right ``B``-module (module over ``B^op``)."""
    res = _resolution_through(Y, i + 1, cap, resolution)
    terms = res.terms
    if i >= len(terms):
        if res.complete:
            return 0
        raise ArithmeticError("resolution truncated")

    def boundary(k):
        # C_k -> C_{k-1}
        return _tor_boundary(terms[k], terms[k - 1], res.maps[k], R)

    dim_c = sum(R.dims[g] for g in terms[i].gens)
    r_in = la.rank(boundary(i + 1)) if i + 1 < len(terms) else 0
    if i + 1 >= len(terms) and not res.complete:
        raise ArithmeticError("resolution truncated")
    r_out = la.rank(boundary(i)) if i >= 1 else 0
    return dim_c - r_in - r_out


def _tor_boundary(Pk: ProjectiveModule, Pk1: ProjectiveModule, d: ModuleMap, R: Module):
    """``R (x) P_k -> R (x) P_{k-1}``, with ``R (x)_B B e_g = R e_g``."""
    F = R.field
    row_off, o = [], 0
    for g in Pk1.gens:
        row_off.append(o)
        o += R.dims[g]
    nrows = o
    col_off, o = [], 0
    for g in Pk.gens:
        col_off.append(o)
        o += R.dims[g]
    out = F.zeros(nrows, o)
    for gi, v in enumerate(Pk.gens):
        if R.dims[v] == 0:
            continue
        col = d.blocks[v] * Pk.generator_vector(gi)
        for gj, el in Pk1.coefficients(col.entries(), v).items():
            tgt = Pk1.gens[gj]
            if R.dims[tgt] == 0:
                continue
            blk = R.act(el, v)  # basis indices of B act on R from vertex v in B^op
            if blk is not None:
                la.place(out, blk, row_off[gj], col_off[gi])
    return out


class Bimodule:
    """An ``A``-module ``X = sum_k X_k`` with a right action of ``B = End_A(X)^op``.

    ``summands`` are the modules ``X_k``; ``ring`` is the Peirce graded
    algebra ``B`` whose vertex ``k`` corresponds to ``X_k`` and whose basis
    elements are maps between summands (see :mod:`relaus.endo`).  The
    element ``h: X_k -> X_l`` acts on the right by ``x . h = h(x)``.
    """

    def __init__(self, summands, ring: Algebra, maps):
        self.summands = list(summands)
        self.ring = ring
        self.maps = maps  # basis index of ring -> ModuleMap X_k -> X_l
        self.algebra = self.summands[0].algebra
        self.module = md.direct_sum_module(self.summands, algebra=self.algebra)

    def slice(self, u: int) -> Module:
        """``e_u X`` as a right ``B``-module, i.e. a module over ``B^op``."""
        Bop = self.ring.opposite()
        F = self.algebra.field
        dims = [X.dims[u] for X in self.summands]
        action = []
        for b in range(Bop.dim):
            action.append(self.maps[b].blocks[u])
        return Module(Bop, dims, action)

    def right_module(self) -> Module:
        """``X`` as a right ``B``-module, forgetting the ``A``-grading."""
        Bop = self.ring.opposite()
        dims = [X.total_dim for X in self.summands]
        action = [self.maps[b].matrix() for b in range(Bop.dim)]
        return Module(Bop, dims, action)


def tensor_bimodule(X: Bimodule, Y: Module):
    """``X (x)_B Y`` as an ``A``-module, with the per vertex tensor data."""
    A = X.algebra
    F = A.field
    pieces = [TensorProduct(X.slice(u), Y) for u in range(A.n_vertices)]
    dims = [p.dim for p in pieces]
    action = []
    for a in range(A.dim):
        u, w = A.source[a], A.target[a]
        # block diagonal over k of rho_{X_k}(a) (x) id_{Y_k}
        blocks = [la.kron(Xk.action[a], F.identity(Y.dims[k])) for k, Xk in enumerate(X.summands)]
        big = la.block_diag(blocks, field=F)
        action.append(pieces[w].projection * big * pieces[u].section)
    return Module(A, dims, action), pieces


def tor_bimodule(X: Bimodule, Y: Module, i: int, cap: int = DEFAULT_CAP) -> int:
    return tor_dim(X.right_module(), Y, i, cap)


# ---------------------------------------------------------------------------
# homological dimensions of an algebra


@dataclass
class HomologicalSummary:
    projective_dims: dict
    injective_dims: dict
    global_dimension: object
    id_regular: object
    pd_dual: object
    certificates: dict = field(default_factory=dict)

    @property
    def gorenstein(self) -> bool:
        return isinstance(self.id_regular, int) and isinstance(self.pd_dual, int)

    @property
    def gorenstein_parameter(self):
        if self.gorenstein:
            return max(self.id_regular, self.pd_dual)
        return None


def homological_dimensions(A: Algebra, cap: int = DEFAULT_CAP) -> HomologicalSummary:
    key = ("homdims", cap)
    if key in A._cache:
        return A._cache[key]
    pds, ids, certs = {}, {}, {}
    for i in range(A.n_vertices):
        S = md.simple(A, i)
        r = minimal_projective_resolution(S, cap)
        c = minimal_injective_coresolution(S, cap)
        pds[A.vertices[i]] = r.length
        ids[A.vertices[i]] = c.length
        certs[f"pd S{A.vertices[i]}"] = r.certificate
        certs[f"id S{A.vertices[i]}"] = c.certificate
    gl = vmax(*pds.values())
    id_reg = vmax(*(minimal_injective_coresolution(md.projective(A, i), cap).length
                    for i in range(A.n_vertices)))
    pd_dual = vmax(*(minimal_projective_resolution(md.injective(A, i), cap).length
                     for i in range(A.n_vertices)))
    res = HomologicalSummary(pds, ids, gl, id_reg, pd_dual, certs)
    A._cache[key] = res
    return res


def global_dimension(A: Algebra, cap: int = DEFAULT_CAP):
    return homological_dimensions(A, cap).global_dimension
