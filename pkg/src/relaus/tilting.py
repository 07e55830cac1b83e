"""Tilting and cotilting modules, relative Auslander-Gorenstein pairs.

A module ``T`` is ``d``-tilting when it has projective dimension at most
``d``, no self-extensions, and the regular module has a finite coresolution
by ``add(T)``.  Cotilting is the dual notion, checked through ``D T`` over
the opposite algebra.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import homology as hm
from . import modules as md
from . import reldim as rd
from .algebra import Algebra
from .modules import Module
from .values import INF, AtLeast, at_least, at_most, encode, is_finite

DEFAULT_CAP = 64


class PreconditionError(ValueError):
    """An operation was called outside its hypotheses.  ``value`` holds the offending quantity."""

    def __init__(self, message: str, value=None):
        super().__init__(message)
        self.value = value


class SearchTooLarge(ValueError):
    pass


# ---------------------------------------------------------------------------
# tilting / cotilting


@dataclass
class TiltingReport:
    module: Module
    kind: str                       # "tilting" or "cotilting"
    dimension: object               # pd (tilting) or id (cotilting)
    self_orthogonal: object         # True / False / None
    max_degree: int                 # highest Ext degree examined
    coresolution: object            # ApproxSequence of A by add(T) (of DA by add(DT) for cotilting)
    verdict: object                 # True / False / None (undetermined at cap)
    reason: str = ""

    @property
    def parameter(self):
        return self.dimension if self.verdict else None

    def is_d(self, d: int):
        """``d``-tilting (``d``-cotilting): the verdict together with dimension at most ``d``."""
        if self.verdict is None:
            return None
        if not self.verdict:
            return False
        return at_most(self.dimension, d)


def _tilting_core(T: Module, cap: int, seed: int) -> TiltingReport:
    A = T.algebra
    pd = hm.projective_dimension(T, cap)
    if not is_finite(pd):
        verdict = False if pd is INF else None
        return TiltingReport(T, "tilting", pd, None, 0, None, verdict,
                             f"projective dimension {pd}")
    bad = [i for i in range(1, pd + 1) if hm.ext_dim(T, T, i, cap) != 0]
    if bad:
        return TiltingReport(T, "tilting", pd, False, pd, None, False,
                             f"Ext^{bad[0]}(T, T) != 0")
    if T.is_zero():
        ok = A.dim == 0
        return TiltingReport(T, "tilting", pd, True, pd, None, ok, "zero module")
    value, seq = rd.relative_dominant_dimension(md.regular(A), T, cap, seed)
    if value is INF:
        return TiltingReport(T, "tilting", pd, True, pd, seq, True, seq.certificate)
    if isinstance(value, AtLeast):
        return TiltingReport(T, "tilting", pd, True, pd, seq, None,
                             "coresolution of A undetermined at cap")
    return TiltingReport(T, "tilting", pd, True, pd, seq, False,
                         f"A has no finite add(T)-coresolution: {seq.certificate}")


def is_tilting(T: Module, cap: int = DEFAULT_CAP, seed: int = 0) -> TiltingReport:
    """Check that ``T`` is tilting.

    The self-extension check only goes up to ``pd T``, since higher Ext
    groups vanish anyway.  For a self-orthogonal module of finite projective
    dimension, ``A`` has a finite ``add(T)``-coresolution exactly when the
    iterated minimal left approximations of ``A`` reach ``add(T)``.
    """
    return _tilting_core(T, cap, seed)


def is_cotilting(T: Module, cap: int = DEFAULT_CAP, seed: int = 0) -> TiltingReport:
    """``T`` is cotilting when ``D T`` is tilting over the opposite algebra."""
    rep = _tilting_core(md.dualize(T), cap, seed)
    reason = rep.reason.replace("projective", "injective").replace("A has", "DA has")
    return TiltingReport(T, "cotilting", rep.dimension, rep.self_orthogonal, rep.max_degree,
                         rep.coresolution, rep.verdict, reason)


@dataclass
class TiltingCotiltingReport:
    tilting: TiltingReport
    cotilting: TiltingReport
    d: int

    @property
    def verdict(self):
        a = self.tilting.is_d(self.d)
        b = self.cotilting.is_d(self.d)
        if a is False or b is False:
            return False
        if a is None or b is None:
            return None
        return True


def is_tilting_cotilting(T: Module, d: int, cap: int = DEFAULT_CAP, seed: int = 0):
    return TiltingCotiltingReport(is_tilting(T, cap, seed), is_cotilting(T, cap, seed), d)


# ---------------------------------------------------------------------------
# perpendicular categories and finite add(T)-(co)resolutions


def _degree_bound(*candidates, cap):
    for c in candidates:
        if is_finite(c):
            return c, True
    return cap, False


def in_perp(M: Module, T: Module, cap: int = DEFAULT_CAP):
    """``M`` in ``T^perp``: ``Ext^i(T, M) = 0`` for all ``i > 0``.

    Degrees up to ``pd T`` (or ``id M``) suffice; if both are infinite the
    check runs up to ``cap`` and a pass is reported as ``None``.
    """
    bound, exact = _degree_bound(hm.projective_dimension(T, cap),
                                 hm.injective_dimension(M, cap), cap=cap)
    for i in range(1, bound + 1):
        if hm.ext_dim(T, M, i, cap) != 0:
            return False
    return True if exact else None


def in_left_perp(M: Module, T: Module, cap: int = DEFAULT_CAP):
    """``M`` in ``^perp T``: ``Ext^i(M, T) = 0`` for all ``i > 0``."""
    bound, exact = _degree_bound(hm.injective_dimension(T, cap),
                                 hm.projective_dimension(M, cap), cap=cap)
    for i in range(1, bound + 1):
        if hm.ext_dim(M, T, i, cap) != 0:
            return False
    return True if exact else None


@dataclass
class MembershipWitness:
    verdict: object
    steps: list = field(default_factory=list)   # multiplicities of the add(T) terms
    reason: str = ""


def hat_add_membership(M: Module, T: Module, cap: int = DEFAULT_CAP, seed: int = 0,
                       perp=None) -> MembershipWitness:
    """Does ``M`` have a finite resolution ``0 -> T_n -> ... -> T_0 -> M -> 0`` in ``add(T)``?

    ``T`` is assumed self-orthogonal.  Such modules lie in ``T^perp``, and
    there the kernels of minimal right approximations stay in the class, so
    it is enough to iterate minimal right approximations.  A kernel that
    contains an earlier kernel as a direct summand can never reach
    ``add(T)``.
    """
    if perp is None:
        perp = in_perp(M, T, cap)
    if perp is False:
        return MembershipWitness(False, [], "not in T^perp")
    addt = rd.add_category(T, seed)
    seen = []
    X = M
    steps = []
    for n in range(cap + 1):
        if X.is_zero():
            return MembershipWitness(True, steps, f"kernel {n} is zero")
        if addt.contains(X):
            return MembershipWitness(True, steps, f"kernel {n} lies in add(T)")
        for j, Y in enumerate(seen):
            if hm._contains_as_summand(Y, X):
                return MembershipWitness(False, steps,
                                         f"kernel {j} is a direct summand of kernel {n}")
        if n == cap:
            break
        f, mult, _ = addt.right_approximation(X)
        if not f.is_surjective():
            return MembershipWitness(False, steps, f"approximation {n + 1} is not onto")
        seen.append(X)
        steps.append(mult)
        X, _ = md.kernel(f)
    return MembershipWitness(None, steps, "cap reached")


def check_add_membership(M: Module, T: Module, cap: int = DEFAULT_CAP, seed: int = 0,
                         perp=None) -> MembershipWitness:
    """Finite coresolution ``0 -> M -> T_0 -> ... -> T_m -> 0`` in ``add(T)``, by duality."""
    return hat_add_membership(md.dualize(M), md.dualize(T), cap, seed, perp)


def hat_check_membership(M: Module, T: Module, cap: int = DEFAULT_CAP, seed: int = 0) -> dict:
    """The four memberships of ``M``: ``T^perp``, hat add T, check add T, ``^perp T``."""
    perp = in_perp(M, T, cap)
    lperp = in_left_perp(M, T, cap)
    return {
        "T_perp": perp,
        "hat_add": hat_add_membership(M, T, cap, seed, perp).verdict,
        "check_add": check_add_membership(M, T, cap, seed, lperp).verdict,
        "perp_T": lperp,
    }


# ---------------------------------------------------------------------------
# canonical tilting-cotilting module


@dataclass
class CanonicalTilt:
    module: Module          # basic part of Q + X
    X: Module
    d: int
    faithful_value: object
    witness: object          # ApproxSequence of A by add(Q)
    q_domdim: object
    q_codomdim: object
    summands: list

    @property
    def conditions_hold(self):
        a = at_least(self.q_domdim, self.d)
        b = at_least(self.q_codomdim, self.d)
        if a is False or b is False:
            return False
        if a is None or b is None:
            return None
        return True


def construct_canonical_tilt(A: Algebra, Q: Module, d: int, cap: int = DEFAULT_CAP,
                             seed: int = 0) -> CanonicalTilt:
    """``T = Q + X`` where ``X`` is the ``d``-th cokernel of the ``add(Q)``-coresolution of ``A``.

    Requires ``Q``-dominant dimension of ``A`` at least ``2d``.  If the
    coresolution stops earlier (a cokernel is zero or lies in ``add(Q)``)
    the last cokernel is used.
    """
    if d < 1:
        raise PreconditionError("d must be at least 1", d)
    if Q.algebra is not A:
        raise PreconditionError("Q is not a module over the given algebra")
    value, seq = rd.relative_dominant_dimension(md.regular(A), Q, cap, seed)
    ok = at_least(value, 2 * d)
    if ok is not True:
        msg = "undetermined at cap" if ok is None else "too small"
        raise PreconditionError(f"Q-dominant dimension of A is {value}: {msg} for d = {d}", value)
    steps = seq.exact_steps
    X = seq.module_after(min(d, len(steps)))
    T = md.basic_part(md.direct_sum_module([Q, X], algebra=A), seed, name="T")
    qdom = rd.relative_dominant_dimension(T, Q, cap, seed)[0]
    qcodom = rd.relative_codominant_dimension(T, Q, cap, seed)[0]
    summands = md.decompose(T, seed).representatives
    return CanonicalTilt(T, X, d, value, seq, qdom, qcodom, summands)


# ---------------------------------------------------------------------------
# pair classification


@dataclass
class PairReport:
    algebra: Algebra
    Q: Module
    pd_q: object
    id_q: object
    self_orthogonal: object
    faithful_dimension: object
    id_regular: object
    pd_dual: object
    global_dimension: object
    certificates: dict

    @property
    def gorenstein(self):
        a, b = self.id_regular, self.pd_dual
        if is_finite(a) and is_finite(b):
            return True
        if a is INF or b is INF:
            return False
        return None

    @property
    def n_min(self):
        if self.gorenstein:
            return max(self.id_regular, self.pd_dual)
        return None

    @property
    def n_max(self):
        return self.faithful_dimension

    def is_gorenstein_pair(self, n: int):
        """Relative ``n``-Auslander-Gorenstein pair?  ``None`` when undetermined."""
        if self.self_orthogonal is False:
            return False
        g = self.gorenstein
        if g is False:
            return False
        if g is None or self.self_orthogonal is None:
            return None
        if self.n_min > n:
            return False
        return at_least(self.faithful_dimension, n)

    def is_auslander_pair(self, n: int):
        base = self.is_gorenstein_pair(n)
        if base is False:
            return False
        gl = self.global_dimension
        fin = True if is_finite(gl) else (False if gl is INF else None)
        if fin is False:
            return False
        if base is None or fin is None:
            return None
        return True

    def valid_n(self, limit: int = 8):
        """The ``n <= limit`` for which the pair is Auslander-Gorenstein."""
        return [n for n in range(limit + 1) if self.is_gorenstein_pair(n)]

    @property
    def classification(self) -> str:
        if self.self_orthogonal is False:
            return "Q is not self-orthogonal"
        g = self.gorenstein
        if g is False:
            return "no pair: A is not Gorenstein"
        if g is None or self.self_orthogonal is None:
            return "inconclusive at cap"
        lo, hi = self.n_min, self.faithful_dimension
        if at_least(hi, lo) is False:
            return "no pair: faithful dimension below the Gorenstein parameter"
        gl = self.global_dimension
        kind = "Auslander" if is_finite(gl) else ("Auslander-Gorenstein" if gl is INF else None)
        if kind is None or isinstance(hi, AtLeast):
            return "inconclusive at cap"
        if hi is INF:
            return f"relative n-{kind} pair for every n >= {lo}"
        ns = ", ".join(str(n) for n in range(lo, hi + 1))
        return f"relative {ns}-{kind} pair"

    def to_dict(self) -> dict:
        return {
            "pd_Q": encode(self.pd_q),
            "id_Q": encode(self.id_q),
            "self_orthogonal": self.self_orthogonal,
            "faithful_dimension": encode(self.faithful_dimension),
            "id_A_A": encode(self.id_regular),
            "pd_DA": encode(self.pd_dual),
            "gldim": encode(self.global_dimension),
            "gorenstein": self.gorenstein,
            "n_min": self.n_min,
            "n_max": encode(self.faithful_dimension),
            "classification": self.classification,
        }


def self_orthogonality(Q: Module, cap: int = DEFAULT_CAP):
    """``Ext^i(Q, Q) = 0`` for ``i > 0``, checked up to ``pd Q`` or ``id Q``."""
    return in_perp(Q, Q, cap)


def classify_pair(A: Algebra, Q: Module, cap: int = DEFAULT_CAP, seed: int = 0) -> PairReport:
    summary = hm.homological_dimensions(A, cap)
    pd_q = hm.projective_dimension(Q, cap)
    id_q = hm.injective_dimension(Q, cap)
    so = self_orthogonality(Q, cap)
    fd = rd.faithful_dimension(Q, cap, seed)
    return PairReport(A, Q, pd_q, id_q, so, fd, summary.id_regular, summary.pd_dual,
                      summary.global_dimension, dict(summary.certificates))


# ---------------------------------------------------------------------------
# main theorem round trip


@dataclass
class Check:
    name: str
    ok: object
    detail: str = ""


@dataclass
class MainTheoremReport:
    d: int
    preconditions: list
    forward: list
    backward: list
    T: object = None
    pair: object = None
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok is True for c in self.preconditions + self.forward + self.backward)

    def failures(self) -> list:
        return [c for c in self.preconditions + self.forward + self.backward if c.ok is not True]


def _tilt_conditions(T: Module, Q: Module, d: int, testset, cap: int, seed: int):
    """(tilting-cotilting, (i), (ii), (iii*)) checks for a candidate ``T``."""
    A = T.algebra
    out = []
    tc = is_tilting_cotilting(T, d, cap, seed)
    out.append(Check("T is d-tilting", tc.tilting.is_d(d), f"pd T = {tc.tilting.dimension}"))
    out.append(Check("T is d-cotilting", tc.cotilting.is_d(d), f"id T = {tc.cotilting.dimension}"))
    qd = rd.relative_dominant_dimension(T, Q, cap, seed)[0]
    qc = rd.relative_codominant_dimension(T, Q, cap, seed)[0]
    out.append(Check("(i) Q-domdim T >= d", at_least(qd, d), str(qd)))
    out.append(Check("(ii) Q-codomdim T >= d", at_least(qc, d), str(qc)))
    gl = hm.global_dimension(A, cap)
    out.append(Check("(iii) gldim A finite", True if is_finite(gl) else (False if gl is INF else None),
                     str(gl)))
    bad = []
    for M in testset:
        h = hat_check_membership(M, T, cap, seed)
        if h["T_perp"] != h["hat_add"] or h["perp_T"] != h["check_add"]:
            bad.append(M.name or "?")
    out.append(Check("(iii) T^perp = hat add T on testset", not bad,
                     "disagree: " + ", ".join(bad) if bad else f"{len(testset)} modules"))
    return out


def verify_main_theorem(A: Algebra, Q: Module, d: int, testset=(), cap: int = DEFAULT_CAP,
                        seed: int = 0, T: Module | None = None) -> MainTheoremReport:
    """Check both directions of the characterization of relative ``2d``-Auslander pairs.

    Forward: if the pair is a relative ``2d``-Auslander pair, the canonical
    ``T`` is ``d``-tilting-cotilting with (i), (ii) and (iii).  Backward: if
    ``T`` (given, or the canonical one) satisfies these, the pair is a
    relative ``2d``-Auslander pair, ``Q``-domdim ``A >= 2d`` and
    ``gldim A <= d + id T``.  Condition (iii) is checked as finiteness of
    the global dimension plus agreement of the classes on ``testset``.
    """
    testset = list(testset)
    pre = [
        Check("pd Q <= d", at_most(hm.projective_dimension(Q, cap), d)),
        Check("id Q <= d", at_most(hm.injective_dimension(Q, cap), d)),
        Check("Q self-orthogonal", self_orthogonality(Q, cap)),
    ]
    rep = MainTheoremReport(d, pre, [], [])
    if any(c.ok is not True for c in pre):
        return rep
    pair = classify_pair(A, Q, cap, seed)
    rep.pair = pair
    is_pair = pair.is_auslander_pair(2 * d)
    rep.notes.append(f"classification: {pair.classification}")
    if is_pair is None:
        rep.forward.append(Check("classification decided", None, "inconclusive at cap"))
        return rep
    canonical = None
    if is_pair:
        try:
            canonical = construct_canonical_tilt(A, Q, d, cap, seed)
        except PreconditionError as e:
            rep.forward.append(Check("canonical T constructed", False, str(e)))
            return rep
        rep.forward.append(Check("canonical T constructed", True,
                                 f"{len(canonical.summands)} summands"))
        rep.forward.append(Check("Q in add T", md.in_add(Q, canonical.module)))
        rep.forward.extend(_tilt_conditions(canonical.module, Q, d, testset, cap, seed))
    else:
        rep.notes.append("forward direction vacuous: not a relative 2d-Auslander pair")
    cand = T if T is not None else (canonical.module if canonical else None)
    rep.T = cand
    if cand is None:
        rep.notes.append("backward direction vacuous: no candidate T")
        return rep
    conds = _tilt_conditions(cand, Q, d, testset, cap, seed)
    if all(c.ok is True for c in conds):
        rep.backward.extend(conds)
        rep.backward.append(Check("pair is relative 2d-Auslander", is_pair is True,
                                  pair.classification))
        fd = pair.faithful_dimension
        rep.backward.append(Check("Q-domdim A >= 2d", at_least(fd, 2 * d), str(fd)))
        gl = pair.global_dimension
        idt = hm.injective_dimension(cand, cap)
        ok = is_finite(gl) and is_finite(idt) and gl <= d + idt
        rep.backward.append(Check("gldim A <= d + id T", ok, f"{gl} <= {d} + {idt}"))
        rep.backward.append(Check("summand count of T equals that of A",
                                  len(md.decompose(cand, seed).classes) == len(A.vertex_classes())))
    else:
        failed = [c.name for c in conds if c.ok is not True]
        rep.notes.append("backward direction vacuous: T fails " + "; ".join(failed))
        if is_pair:
            # the canonical T must satisfy everything when the pair is Auslander
            rep.backward.append(Check("candidate satisfies the conditions", False, ", ".join(failed)))
    return rep


# ---------------------------------------------------------------------------
# uniqueness search


def standard_catalog(A: Algebra) -> dict:
    """Named indecomposables: ``P_i``, ``I_i``, ``S_i``, ``radP_i`` and ``I_i/S_i``."""
    out = {}
    for i, v in enumerate(A.vertices):
        P = md.projective(A, i, name=f"P{v}")
        I = md.injective(A, i, name=f"I{v}")
        out[f"S{v}"] = md.simple(A, i, name=f"S{v}")
        out[f"P{v}"] = P
        out[f"I{v}"] = I
        out[f"radP{v}"] = md.radical(P)[0].renamed(f"radP{v}")
        soc, incl = md.socle(I)
        q, _ = md.cokernel(incl)
        out[f"I{v}/S{v}"] = q.renamed(f"I{v}/S{v}")
    return out


def dedupe(pool, seed: int = 0):
    """Drop zero modules and isomorphic repeats, keeping the first of each class."""
    pool = [M for M in pool if not M.is_zero()]
    classes = md.isomorphism_classes(pool, seed)
    return [pool[c[0]] for c in sorted(classes, key=lambda c: c[0])]


def default_pool(A: Algebra, Q: Module | None = None, d: int = 1, cap: int = DEFAULT_CAP,
                 seed: int = 0, depth: int = 3):
    """Simples, projectives, injectives, summands of (co)syzygies of simples, summands of the canonical T."""
    mods = []
    for i, v in enumerate(A.vertices):
        mods += [md.simple(A, i, name=f"S{v}"), md.projective(A, i, name=f"P{v}"),
                 md.injective(A, i, name=f"I{v}")]
    for i in range(A.n_vertices):
        S = md.simple(A, i)
        r = hm.minimal_projective_resolution(S, depth)
        c = hm.minimal_injective_coresolution(S, depth)
        for X in r.syzygies[1:depth + 1] + c.syzygies[1:depth + 1]:
            if not X.is_zero():
                mods += md.decompose(X, seed).representatives
    if Q is not None:
        try:
            mods += construct_canonical_tilt(A, Q, d, cap, seed).summands
        except PreconditionError:
            pass
    named = dedupe(standard_catalog(A).values(), seed)
    out = []
    for M in dedupe(mods, seed):
        if not md.is_indecomposable(M, seed):
            continue
        if not M.name:
            hit = [X.name for X in named if md.indecomposable_isomorphism(M, X) is not None]
            dims = "".join(str(k) for k in M.dims)
            M = M.renamed(hit[0] if hit else f"M{dims}")
        out.append(M)
    return out


@dataclass
class SearchResult:
    qualifiers: list        # list of lists of pool indices
    modules: list           # basic direct sums
    pool: list
    candidates: list        # pool indices surviving the per-module filters
    examined: int

    @property
    def unique(self) -> bool:
        return len(self.qualifiers) == 1

    def names(self):
        return [[self.pool[i].name or f"#{i}" for i in q] for q in self.qualifiers]


def uniqueness_search(A: Algebra, Q: Module, d: int, pool, mode: str = "tilting-cotilting",
                      cap: int = DEFAULT_CAP, seed: int = 0, max_subsets: int = 1 << 16,
                      conditions: bool = True) -> SearchResult:
    """All subsets of ``pool`` whose direct sum is ``d``-tilting (and cotilting) with (i), (ii).

    ``pool`` must consist of pairwise non-isomorphic indecomposables.
    Modules failing a condition that passes to direct summands are dropped
    first, and only subsets with vanishing pairwise ``Ext^{1..d}`` are tested.
    """
    if mode not in ("tilting", "tilting-cotilting"):
        raise ValueError(f"unknown mode {mode!r}")
    pool = list(pool)
    for k, M in enumerate(pool):
        if M.is_zero() or not md.is_indecomposable(M, seed):
            raise PreconditionError(f"pool member {M.name or k} is not indecomposable")
    if len(md.isomorphism_classes(pool, seed)) != len(pool):
        raise PreconditionError("pool members are not pairwise non-isomorphic")
    cands = []
    for k, M in enumerate(pool):
        if at_most(hm.projective_dimension(M, cap), d) is not True:
            continue
        if mode == "tilting-cotilting" and at_most(hm.injective_dimension(M, cap), d) is not True:
            continue
        if conditions:
            if at_least(rd.relative_dominant_dimension(M, Q, cap, seed)[0], d) is not True:
                continue
            if at_least(rd.relative_codominant_dimension(M, Q, cap, seed)[0], d) is not True:
                continue
        cands.append(k)
    if (1 << len(cands)) > max_subsets:
        raise SearchTooLarge(f"{len(cands)} candidates exceed the subset bound {max_subsets}")
    compatible = {}
    for a in cands:
        for b in cands:
            compatible[a, b] = all(hm.ext_dim(pool[a], pool[b], i, cap) == 0
                                   for i in range(1, d + 1))
    quals, mods = [], []
    examined = 0
    for size in range(1, len(cands) + 1):
        for sub in combinations(cands, size):
            if not all(compatible[a, b] for a in sub for b in sub):
                continue
            examined += 1
            T = md.direct_sum_module([pool[k] for k in sub], algebra=A,
                                     name="+".join(pool[k].name or f"#{k}" for k in sub))
            rep = is_tilting(T, cap, seed)
            if rep.is_d(d) is not True:
                continue
            if mode == "tilting-cotilting" and is_cotilting(T, cap, seed).is_d(d) is not True:
                continue
            quals.append(list(sub))
            mods.append(T)
    return SearchResult(quals, mods, pool, cands, examined)
