"""The bundled example checks, runnable as ``relaus reproduce``."""
from __future__ import annotations

import time
from dataclasses import dataclass
from pathlib import Path

from . import cover as cv
from . import formats as fm
from . import homology as hm
from . import modules as md
from . import reldim as rd
from . import tilting as tl
from .values import INF

FIXTURE_DIR = Path(__file__).parent / "fixtures"

FIXTURE_DIMS = {"ss": 2, "a2": 3, "a3": 6, "sq": 9, "sq_op": 9, "loops": 6, "six": 13}

SQ_POOL = ["S1", "S2", "S3", "S4", "P1", "P2", "P3", "P4", "I1", "I2", "I3", "I4",
           "I4/S4", "radP1"]


@dataclass
class CheckResult:
    id: str
    name: str
    status: str         # pass, fail or xfail
    detail: str
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {"id": self.id, "name": self.name, "status": self.status, "detail": self.detail}


class Fixtures:
    def __init__(self, directory=None, field_spec=None):
        self.dir = Path(directory) if directory else FIXTURE_DIR
        self.field_spec = field_spec
        self._algs = {}

    def algebra(self, name):
        if name not in self._algs:
            self._algs[name] = fm.load_algebra(self.dir / f"{name}.alg", self.field_spec)
        return self._algs[name]

    def module(self, name, expr):
        return fm.module_expression(self.algebra(name), expr, base_dir=self.dir)


def same_add(M, names, fx, alg):
    return md.same_additive_closure(M, md.direct_sum_module([fx.module(alg, n) for n in names],
                                                            algebra=M.algebra))


# ---------------------------------------------------------------------------
# criteria; each returns a list of (name, ok, detail)


def crit_sq(fx, cap, seed):
    A = fx.algebra("sq")
    Q = fx.module("sq", "I2+I3+I4")
    out = [("dim A = 9", A.dim == 9, str(A.dim))]
    gl = hm.global_dimension(A, cap)
    out.append(("gldim = 2", gl == 2, str(gl)))
    pd = hm.projective_dimension(Q, cap)
    out.append(("pd Q = 1", pd == 1, str(pd)))
    v = rd.relative_dominant_dimension(fx.module("sq", "P4"), Q, cap, seed)[0]
    out.append(("Q-domdim P4 = 2", v == 2, str(v)))
    v = rd.relative_dominant_dimension(fx.module("sq", "P1+P2+P3"), Q, cap, seed)[0]
    out.append(("Q-domdim P1+P2+P3 = inf", v is INF, str(v)))
    p = tl.classify_pair(A, Q, cap, seed)
    out.append(("relative 2-Auslander pair", p.classification == "relative 2-Auslander pair",
                p.classification))
    T = tl.construct_canonical_tilt(A, Q, 1, cap, seed).module
    out.append(("add T = add(Q + I4/S4)", same_add(T, ["I2", "I3", "I4", "I4/S4"], fx, "sq"),
                "+".join(fm_names(T))))
    t, c = tl.is_tilting(T, cap, seed), tl.is_cotilting(T, cap, seed)
    out.append(("T is 1-tilting", t.verdict is True and t.dimension == 1, f"pd {t.dimension}"))
    out.append(("T is 1-cotilting", c.verdict is True and c.dimension == 1, f"id {c.dimension}"))
    return out


def fm_names(M):
    cat = tl.standard_catalog(M.algebra)
    out = []
    for X in md.decompose(M).representatives:
        hit = [n for n, Y in cat.items() if md.is_isomorphic(X, Y)]
        out.append("=".join(hit) if hit else str(X.dims))
    return out


def crit_sq_op(fx, cap, seed):
    A = fx.algebra("sq_op")
    Q = fx.module("sq_op", "P1+P2+P3")
    p = tl.classify_pair(A, Q, cap, seed)
    T = tl.construct_canonical_tilt(A, Q, 1, cap, seed).module
    iso = md.is_isomorphic(T, fx.module("sq_op", "P1+P2+P3+radP1"))
    return [("relative 2-Auslander pair", p.classification == "relative 2-Auslander pair",
             p.classification),
            ("T = P1+P2+P3+radP1", iso, "+".join(fm_names(T)))]


def crit_six(fx, cap, seed):
    A = fx.algebra("six")
    Q = fx.module("six", "I3+I2+S5+I5+I4")
    pd, idq = hm.projective_dimension(Q, cap), hm.injective_dimension(Q, cap)
    out = [("pd Q = id Q = 1", pd == 1 and idq == 1, f"pd {pd}, id {idq}")]
    v = rd.relative_dominant_dimension(fx.module("six", "S4+P5"), Q, cap, seed)[0]
    out.append(("Q-domdim S4+P5 = 2", v == 2, str(v)))
    others = {n: rd.relative_dominant_dimension(fx.module("six", n), Q, cap, seed)[0]
              for n in ("P1", "P2", "P3", "P6")}
    out.append(("other projectives inf", all(x is INF for x in others.values()),
                ", ".join(f"{k}: {x}" for k, x in others.items())))
    p = tl.classify_pair(A, Q, cap, seed)
    out.append(("relative 2-Auslander pair", p.classification == "relative 2-Auslander pair",
                p.classification))
    out.append(("Q not projective", not md.in_add(Q, md.regular(A)), ""))
    out.append(("Q not injective", not md.in_add(Q, md.dual_regular(A)), ""))
    return out


def crit_loops(fx, cap, seed):
    A = fx.algebra("loops")
    out = [("dim A = 6", A.dim == 6, str(A.dim))]
    s = hm.homological_dimensions(A, cap)
    out.append(("Gorenstein parameter 1", s.gorenstein_parameter == 1,
                f"id A = {s.id_regular}, pd DA = {s.pd_dual}"))
    r = hm.minimal_projective_resolution(fx.module("loops", "S1"), cap)
    out.append(("gldim infinite, S1 repetition certificate",
                s.global_dimension is INF and r.length is INF and "summand" in r.certificate,
                r.certificate))
    T = fx.module("loops", "I1+I2")
    tc = tl.is_tilting_cotilting(T, 1, cap, seed)
    out.append(("T = DA is 1-tilting-cotilting",
                tc.verdict is True and tc.tilting.dimension == 1 and tc.cotilting.dimension == 0,
                f"pd {tc.tilting.dimension}, id {tc.cotilting.dimension}"))
    e = hm.ext_dim(T, fx.module("loops", "I1"), 1, cap)
    out.append(("Ext^1(T, I1) = 0", e == 0, str(e)))
    S1 = fx.module("loops", "S1")
    perp = all(hm.ext_dim(T, S1, i, cap) == 0 for i in range(1, cap + 1))
    hat = tl.hat_add_membership(S1, T, cap, seed)
    out.append(("S1 in T^perp up to the cap", perp, f"degrees 1..{cap}"))
    out.append(("S1 not in hat add T", hat.verdict is False, hat.reason))
    return out


def crit_ss(fx, cap, seed):
    A = fx.algebra("ss")
    R = md.regular(A)
    p = tl.classify_pair(A, R, cap, seed)
    pairs = [p.is_auslander_pair(d) for d in range(1, 9)]
    tilts = [md.is_isomorphic(tl.construct_canonical_tilt(A, R, d, cap, seed).module, R)
             for d in range(1, 9)]
    return [("relative d-Auslander pair, d = 1..8", all(x is True for x in pairs),
             p.classification),
            ("canonical T = A, d = 1..8", all(tilts), "")]


MAIN_CASES = [("sq", "Q", 1), ("sq_op", "Q", 1), ("six", "Q", 1), ("a3", "Q", 1), ("a3", "Q", 2)]


def crit_main(fx, cap, seed):
    out = []
    for name, q, d in MAIN_CASES:
        A = fx.algebra(name)
        Q = fx.module(name, q)
        testset = tl.default_pool(A, Q, d, cap, seed)
        rep = tl.verify_main_theorem(A, Q, d, testset, cap, seed)
        gl = [c for c in rep.backward if c.name == "gldim A <= d + id T"]
        both = bool(rep.forward) and bool(gl)
        detail = gl[0].detail if gl else "; ".join(rep.notes)
        bad = ", ".join(c.name for c in rep.failures())
        out.append((f"{name} d={d} both directions", rep.passed and both,
                    detail + (f" [failed: {bad}]" if bad else "")))
    return out


DUALITY_Q = ["Q", "A", "DA"]


def duality_instances(fx, names=None, cap=64, seed=0):
    """``(fixture, Q, M, value over A, value over A^op)`` for the standard test sets.

    ``Q`` runs over the fixture's ``Q``, ``A``, ``DA`` and every pool member.
    """
    rows = []
    for name in names or FIXTURE_DIMS:
        A = fx.algebra(name)
        pool = tl.default_pool(A, None, 1, cap, seed)
        qs = [(q, fx.module(name, q)) for q in DUALITY_Q] + [(X.name, X) for X in pool]
        for q, Q in qs:
            DQ = md.dualize(Q)
            for M in pool:
                lhs = rd.relative_dominant_dimension(M, Q, cap, seed)[0]
                rhs = rd.relative_codominant_dimension_direct(md.dualize(M), DQ, cap, seed)[0]
                rows.append((name, q, M.name, lhs, rhs))
    return rows


def crit_duality(fx, cap, seed):
    rows = duality_instances(fx, cap=cap, seed=seed)
    bad = [r for r in rows if r[3] != r[4]]
    return [(f"{len(rows)} instances (need >= 200), all equal", len(rows) >= 200 and not bad,
             f"{len(rows)} instances, {len(bad)} mismatches")]


def crit_additivity(witnesses, cap, seed):
    tested = held = 0
    for seq in witnesses:
        if seq.side != "left":
            continue
        for t, applicable, holds in rd.check_additivity(seq, cap, seed):
            if applicable:
                tested += 1
                held += bool(holds)
    return [("additivity on witness truncations", tested > 0 and tested == held,
             f"{held}/{tested} truncations from {len(witnesses)} witnesses")]


def crit_unique(fx, cap, seed):
    out = []
    A = fx.algebra("sq")
    Q = fx.module("sq", "Q")
    pool = tl.dedupe([fx.module("sq", n) for n in SQ_POOL], seed)
    r = tl.uniqueness_search(A, Q, 1, pool, "tilting-cotilting", cap, seed)
    ok = r.unique and md.is_isomorphic(r.modules[0], fx.module("sq", "I2+I3+I4+I4/S4"))
    out.append(("FIX-SQ unique qualifier T_Q", ok,
                f"pool {len(SQ_POOL)} -> {len(pool)} up to isomorphism; {r.names()}"))
    A = fx.algebra("a2")
    pool = [fx.module("a2", n) for n in ("S1", "S2", "P1")]
    r = tl.uniqueness_search(A, md.dual_regular(A), 1, pool, "tilting-cotilting", cap, seed)
    ok = r.unique and md.is_isomorphic(r.modules[0], md.dual_regular(A))
    out.append(("FIX-A2 unique qualifier DA", ok, str(r.names())))
    A = fx.algebra("ss")
    pool = [fx.module("ss", "S1"), fx.module("ss", "S2")]
    r = tl.uniqueness_search(A, md.regular(A), 1, pool, "tilting-cotilting", cap, seed)
    ok = r.unique and md.is_isomorphic(r.modules[0], md.regular(A))
    out.append(("FIX-SS unique qualifier A", ok, str(r.names())))
    return out


A3_SIX = ["S1", "S2", "S3", "P1", "P2", "I2"]


def crit_cover(fx, cap, seed):
    out = []
    A = fx.algebra("sq")
    Q = fx.module("sq", "Q")
    T = tl.construct_canonical_tilt(A, Q, 1, cap, seed).module
    dc = cv.double_centralizer_check(T, Q, seed)
    b, e = dc.b_side, dc.e_side
    out.append(("double centralizer (T_Q, Q) on FIX-SQ, B side", b.bijective,
                f"dim {b.source_dim} -> {b.target_dim}, rank {b.rank}"))
    out.append(("double centralizer (T_Q, Q) on FIX-SQ, E side", e.bijective,
                f"dim {e.source_dim} -> {e.target_dim}, rank {e.rank}"))
    A3 = fx.algebra("a3")
    Q3 = fx.module("a3", "DA")
    T3 = tl.construct_canonical_tilt(A3, Q3, 2, cap, seed).module
    dc3 = cv.double_centralizer_check(T3, Q3, seed)
    out.append(("double centralizer on FIX-A3, d = 2", dc3.passed, ""))
    n_ok = n_all = 0
    for name in FIXTURE_DIMS:
        Af = fx.algebra(name)
        Qf = fx.module(name, "Q")
        for M in tl.default_pool(Af, None, 1, cap, seed):
            for n in (2, 3, 4):
                n_all += 1
                n_ok += bool(cv.codominant_via_tor(M, Qf, n, cap, seed).agrees)
    out.append(("Tor criterion agrees with codominant dimension", n_ok == n_all,
                f"{n_ok}/{n_all}"))
    six = [fx.module("a3", n) for n in A3_SIX]
    rep = cv.cover_ext_comparison(A3, Q3, 2, six, cap, seed)
    deg0 = [r for r in rep.rows if r.degree == 0]
    out.append(("FIX-A3 d = 2 degree-0 comparisons", bool(deg0) and rep.degree0_passed,
                f"{len(deg0)} pairs on {rep.testset}; skipped {[s[0] for s in rep.skipped]}"))
    rep = cv.cover_ext_comparison(A, Q, 1, [], cap, seed)
    out.append(("FIX-SQ d = 1 vacuous range", rep.vacuous and "vacuous" in rep.label, rep.label))
    return out


# the E side check on FIX-SQ fails for a mathematical reason: I4/S4 has
# Q-codominant dimension 1, so Hom(Q, -) is not full on add T
EXPECTED_FAILURES = {("10", "double centralizer (T_Q, Q) on FIX-SQ, E side")}


def run_all(fixtures=None, field_spec=None, cap=64, seed=0):
    fx = Fixtures(fixtures, field_spec)
    results = []

    def record(cid, checks, t0):
        dt = time.perf_counter() - t0
        for name, ok, detail in checks:
            status = "pass" if ok else "fail"
            if not ok and (cid, name) in EXPECTED_FAILURES:
                status = "xfail"
            results.append(CheckResult(cid, name, status, detail, dt))

    t0 = time.perf_counter()
    dims = []
    for name, dim in FIXTURE_DIMS.items():
        try:
            got = fx.algebra(name).dim
        except Exception as e:  # a broken fixture is reported, not raised
            got = f"error: {e}"
        dims.append((f"fixture {name} dimension {dim}", got == dim, str(got)))
    record("0", dims, t0)
    if any(not ok for _, ok, _ in dims):
        return results
    with rd.collect_witnesses() as witnesses:
        for cid, fn in (("1", crit_sq), ("2", crit_sq_op), ("3", crit_six), ("4", crit_loops),
                        ("5", crit_ss), ("6", crit_main)):
            t0 = time.perf_counter()
            record(cid, fn(fx, cap, seed), t0)
    seen = {}
    for w in witnesses:
        seen[id(w)] = w
    for cid, fn in (("7", crit_duality),):
        t0 = time.perf_counter()
        record(cid, fn(fx, cap, seed), t0)
    t0 = time.perf_counter()
    record("8", crit_additivity(list(seen.values()), cap, seed), t0)
    for cid, fn in (("9", crit_unique), ("10", crit_cover)):
        t0 = time.perf_counter()
        record(cid, fn(fx, cap, seed), t0)
    return results
