"""Schur functors ``Hom_A(Q, -)``, double centralizers and Ext comparisons.

``B = End_A(Q)^op`` and ``F_Q = Hom_A(Q, -)`` lands in ``B``-modules.
Relative codominant dimension has a homological description through
``Q (x)_B F_Q M -> M`` and ``Tor^B(Q, F_Q M)``; the cover checks compare
Ext over ``A`` with Ext over ``B``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import homology as hm
from . import linalg as la
from . import modules as md
from . import reldim as rd
from . import tilting as tl
from .algebra import Algebra
from .endo import HomFunctor
from .modules import Module
from .values import at_least

DEFAULT_CAP = 64

_FUNCTORS: dict = {}


def schur_functor(Q: Module, seed: int = 0) -> HomFunctor:
    """The functor ``Hom_A(Q, -)``; cached per module."""
    key = (Q.digest(), seed)
    if key not in _FUNCTORS:
        _FUNCTORS[key] = HomFunctor(Q, seed, name="B")
    return _FUNCTORS[key]


def schur_functor_image(Q: Module, M: Module, seed: int = 0) -> Module:
    """``F_Q M = Hom_A(Q, M)`` as a module over ``End_A(Q)^op``.

    ``Q`` is replaced by its basic part, which gives a Morita equivalent
    ring and the same dimension data up to multiplicities.
    """
    return schur_functor(Q, seed).apply(M, name=f"F({M.name})" if M.name else None)


# ---------------------------------------------------------------------------


@dataclass
class TorCriterion:
    n: int
    evaluation_bijective: bool
    tor_dims: dict                  # degree -> dim Tor_i^B(Q, F_Q M)
    verdict: bool
    codominant_value: object = None
    agrees: object = None


def codominant_via_tor(M: Module, Q: Module, n: int, cap: int = DEFAULT_CAP, seed: int = 0,
                       cross_check: bool = True) -> TorCriterion:
    """``Q``-codominant dimension of ``M`` is at least ``n`` iff evaluation is bijective and Tor vanishes.

    The Tor groups ``Tor_i^B(Q, Hom_A(Q, M))`` are checked for
    ``1 <= i <= n - 2``.  With ``cross_check`` the verdict is compared with
    the approximation based value.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    F = schur_functor(Q, seed)
    FM = F.apply(M)
    _, ev = F.evaluation(M)
    bij = ev.is_isomorphism()
    tors = {}
    ok = bij
    if bij:
        R = F.bimodule().right_module()
        for i in range(1, n - 1):
            tors[i] = hm.tor_dim(R, FM, i, cap)
            if tors[i]:
                ok = False
                break
    out = TorCriterion(n, bij, tors, ok)
    if cross_check:
        v, _ = rd.relative_codominant_dimension(M, Q, cap, seed)
        out.codominant_value = v
        out.agrees = at_least(v, n) == ok
    return out


# ---------------------------------------------------------------------------


@dataclass
class CentralizerCheck:
    label: str
    source_dim: int         # dim End_A(Y)
    target_dim: int         # dim End over End_A(X)^op of Hom_A(X, Y)
    rank: int               # rank of the canonical map

    @property
    def injective(self) -> bool:
        return self.rank == self.source_dim

    @property
    def bijective(self) -> bool:
        return self.injective and self.source_dim == self.target_dim


def _canonical_centralizer(X: Module, Y: Module, label: str, seed: int) -> CentralizerCheck:
    """``End_A(Y) -> End(Hom_A(X, Y))`` over ``End_A(X)^op``, ``phi -> Hom_A(X, phi)``."""
    Fx = schur_functor(X, seed)
    FY = Fx.apply(Y)
    ends = md.hom_space(FY, FY)
    src = md.hom_space(Y, Y)
    coords = md.HomCoordinates(ends, FY, FY)
    cols = [coords.coords(Fx.apply_map(phi)) for phi in src]
    rank = la.rank(Y.field.from_rows(cols, len(ends))) if cols and ends else 0
    return CentralizerCheck(label, len(src), len(ends), rank)


@dataclass
class DoubleCentralizer:
    b_side: CentralizerCheck    # B -> End_E(Hom_A(T, Q))^op
    e_side: CentralizerCheck    # E -> End_B(Hom_A(Q, T))^op

    @property
    def passed(self) -> bool:
        return self.b_side.bijective and self.e_side.bijective


def double_centralizer_check(T: Module, Q: Module, seed: int = 0) -> DoubleCentralizer:
    """Both canonical maps between ``B = End_A(Q)^op`` and ``E = End_A(T)^op`` and the centralizers.

    Each map is an algebra homomorphism by functoriality, so bijectivity is
    tested as injectivity plus equal dimensions.
    """
    return DoubleCentralizer(
        _canonical_centralizer(T, Q, "B -> End_E(Hom(T,Q))^op", seed),
        _canonical_centralizer(Q, T, "E -> End_B(Hom(Q,T))^op", seed),
    )


def classical_double_centralizer(Q: Module, seed: int = 0) -> CentralizerCheck:
    """``A -> End_B(Q)`` with ``B = End_A(Q)``, tested as ``End_A(DA) -> End_B(Hom_A(Q, DA))``."""
    return _canonical_centralizer(Q, md.dual_regular(Q.algebra), "A -> End_B(Q)", seed)


# ---------------------------------------------------------------------------


@dataclass
class ExtRow:
    M: str
    N: str
    degree: int
    dim_A: int
    dim_B: int
    canonical_bijective: object = None   # degree 0 only

    @property
    def ok(self) -> bool:
        return self.dim_A == self.dim_B and self.canonical_bijective is not False


@dataclass
class CoverReport:
    algebra: Algebra
    d: int
    vacuous: bool
    label: str
    B: Algebra | None = None
    E: Algebra | None = None
    T: Module | None = None
    testset: list = field(default_factory=list)
    skipped: list = field(default_factory=list)      # (name, reason)
    rows: list = field(default_factory=list)
    tor_side: list = field(default_factory=list)     # (name, {degree: dim Tor^E(T, F_T M)})
    centralizer: DoubleCentralizer | None = None

    @property
    def degree0_passed(self) -> bool:
        return all(r.ok for r in self.rows if r.degree == 0)

    @property
    def passed(self) -> bool:
        if self.vacuous:
            return True
        tor_ok = all(all(v == 0 for v in t.values()) for _, t in self.tor_side)
        return all(r.ok for r in self.rows) and tor_ok and \
            (self.centralizer is None or self.centralizer.passed)


def _hom_comparison(FQ: HomFunctor, M: Module, N: Module, FM: Module, FN: Module):
    homA = md.hom_space(M, N)
    homB = md.hom_space(FM, FN)
    if not homA:
        return len(homB) == 0
    coords = md.HomCoordinates(homB, FM, FN)
    if not homB:
        return False
    cols = [coords.coords(FQ.apply_map(f)) for f in homA]
    r = la.rank(M.field.from_rows(cols, len(homB)))
    return r == len(homA) == len(homB)


def cover_ext_comparison(A: Algebra, Q: Module, d: int, testset, cap: int = DEFAULT_CAP,
                         seed: int = 0) -> CoverReport:
    """Compare ``Ext_A^i(M, N)`` with ``Ext_B^i(F_Q M, F_Q N)`` for ``0 <= i <= d - 2``.

    ``M, N`` run over the members of ``testset`` lying in ``T^perp`` for
    the canonical ``T``; the others are reported and skipped.  The
    ``Tor^E(T, F_T M)`` vanishing for ``E = End_A(T)^op`` is reported per
    member.
    """
    testset = list(testset)
    if d <= 1:
        return CoverReport(A, d, True, f"vacuous range: degrees 0..{d - 2} are empty for d = {d}",
                           testset=[M.name for M in testset])
    pair = tl.classify_pair(A, Q, cap, seed)
    if pair.is_auslander_pair(2 * d) is not True:
        raise tl.PreconditionError(f"not a relative {2 * d}-Auslander pair: {pair.classification}")
    ct = tl.construct_canonical_tilt(A, Q, d, cap, seed)
    T = ct.module
    FQ = schur_functor(Q, seed)
    FT = schur_functor(T, seed)
    rep = CoverReport(A, d, False, f"degrees 0..{d - 2}", B=FQ.ring, E=FT.ring, T=T)
    members = []
    for k, M in enumerate(testset):
        name = M.name or f"#{k}"
        perp = tl.in_perp(M, T, cap)
        if perp is not True:
            rep.skipped.append((name, "not in T^perp" if perp is False else "undetermined"))
            continue
        members.append((name, M, FQ.apply(M)))
        rep.testset.append(name)
    for nm, M, FM in members:
        for nn, N, FN in members:
            for i in range(0, d - 1):
                a = hm.ext_dim(M, N, i, cap)
                b = hm.ext_dim(FM, FN, i, cap)
                canon = _hom_comparison(FQ, M, N, FM, FN) if i == 0 else None
                rep.rows.append(ExtRow(nm, nn, i, a, b, canon))
    R = FT.bimodule().right_module()
    for nm, M, _ in members:
        Z = FT.apply(M)
        res = hm.minimal_projective_resolution(Z, cap)
        top = res.length if isinstance(res.length, int) else cap
        rep.tor_side.append((nm, {i: hm.tor_dim(R, Z, i, cap, res) for i in range(1, top + 1)}))
    rep.centralizer = double_centralizer_check(T, Q, seed)
    return rep
