from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from relaus import homology as hm
from relaus import modules as md
from relaus import tilting as tl
from relaus.reproduce import Fixtures
from relaus.values import INF

A3 = ["S1", "S2", "S3", "P1", "P2", "I2"]


def test_regular_and_dual_regular(fx):
    for name in ("sq", "six", "a3"):
        A = fx.algebra(name)
        assert tl.is_tilting(md.regular(A)).is_d(0) is True
        assert tl.is_cotilting(md.dual_regular(A)).is_d(0) is True


def test_apr_tilt_a3(fx):
    T = fx.module("a3", "P1+P2+S2")
    rep = tl.is_tilting(T)
    assert rep.verdict is True and rep.dimension == 1


def test_not_self_orthogonal(fx):
    # Ext^1(S1, S2) != 0 over the square
    rep = tl.is_tilting(fx.module("sq", "S1+S2+P3+P4"))
    assert rep.verdict is False


def test_too_few_summands(fx):
    rep = tl.is_tilting(fx.module("a3", "P1+P2"))
    assert rep.verdict is False
    assert "coresolution" in rep.reason


def test_infinite_pd(fx):
    rep = tl.is_tilting(fx.module("loops", "S1+S2"))
    assert rep.verdict is False and rep.dimension is INF


@pytest.mark.parametrize("size", [1, 2, 3, 4])
def test_tilting_count_oracle_a3(fx, size):
    # over a hereditary algebra with 3 vertices: tilting iff Ext^1(T, T) = 0 and 3 summands
    for sub in combinations(A3, size):
        T = fx.module("a3", "+".join(sub))
        rigid = hm.ext_dim(T, T, 1) == 0
        assert tl.is_tilting(T).verdict is (rigid and size == 3)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sampled_from(["S1", "S2", "S3", "S4", "P1", "P2", "P3", "I2", "I3", "I4/S4",
                                 "radP1"]), min_size=1, max_size=4, unique=True))
def test_tilting_iff_dual_cotilting(names):
    fx = Fixtures()
    T = fx.module("sq", "+".join(names))
    t = tl.is_tilting(T)
    c = tl._tilting_core(md.dualize(md.dualize(T)), 64, 0)
    assert t.verdict == c.verdict
    # cotilting of T is tilting of DT over the opposite algebra
    assert tl.is_cotilting(T).verdict == tl.is_tilting(md.dualize(T)).verdict


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sampled_from(["S1", "S2", "S3", "S4", "P1", "P2", "P3", "I2", "I3", "I4/S4",
                                 "radP1"]), min_size=1, max_size=4, unique=True))
def test_tilting_has_n_summands(names):
    fx = Fixtures()
    T = fx.module("sq", "+".join(names))
    if tl.is_tilting(T).verdict:
        assert len(md.decompose(T).classes) == fx.algebra("sq").n_vertices


def test_perp_checks(fx):
    T = fx.module("sq", "Q+I4/S4")
    assert tl.in_perp(fx.module("sq", "I2"), T) is True
    assert tl.in_perp(fx.module("sq", "P4"), T) is False


def test_hat_add_sq(fx):
    T = fx.module("sq", "Q+I4/S4")
    # A has a finite add(T)-coresolution, DA trivially lies in add T
    w = tl.hat_add_membership(fx.module("sq", "I2"), T)
    assert w.verdict is True
    r = tl.hat_check_membership(fx.module("sq", "P4"), T)
    assert r["T_perp"] is False and r["hat_add"] is False
    assert r["check_add"] is True


def test_canonical_tilt_sq(fx):
    A, Q = fx.algebra("sq"), fx.module("sq", "Q")
    ct = tl.construct_canonical_tilt(A, Q, 1)
    assert md.same_additive_closure(ct.module, fx.module("sq", "Q+I4/S4"))
    assert ct.conditions_hold


def test_canonical_tilt_precondition(fx):
    A, Q = fx.algebra("sq"), fx.module("sq", "Q")
    with pytest.raises(tl.PreconditionError) as e:
        tl.construct_canonical_tilt(A, Q, 2)
    assert e.value.value == 2
    with pytest.raises(tl.PreconditionError):
        tl.construct_canonical_tilt(A, Q, 0)


def test_classify_pairs(fx):
    assert tl.classify_pair(fx.algebra("sq"), fx.module("sq", "Q")).valid_n() == [2]
    p = tl.classify_pair(fx.algebra("loops"), fx.module("loops", "DA"))
    assert p.is_gorenstein_pair(1) is True
    assert p.is_auslander_pair(1) is False
    # A with Q = S4 is not faithful enough
    p = tl.classify_pair(fx.algebra("sq"), fx.module("sq", "S4"))
    assert p.is_auslander_pair(2) is False


def test_verify_main_theorem_sq(fx):
    A, Q = fx.algebra("sq"), fx.module("sq", "Q")
    rep = tl.verify_main_theorem(A, Q, 1, tl.default_pool(A, Q, 1))
    assert rep.passed
    assert rep.forward and rep.backward


def test_uniqueness_refuses_large_search(fx):
    A, Q = fx.algebra("sq"), fx.module("sq", "Q")
    pool = tl.default_pool(A, Q, 1)
    with pytest.raises(tl.SearchTooLarge):
        tl.uniqueness_search(A, Q, 1, pool, conditions=False, max_subsets=4)


def test_uniqueness_rejects_isomorphic_pool(fx):
    A, Q = fx.algebra("sq"), fx.module("sq", "Q")
    with pytest.raises(tl.PreconditionError):
        tl.uniqueness_search(A, Q, 1, [fx.module("sq", "P1"), fx.module("sq", "I4")])


def test_uniqueness_without_conditions_finds_more(fx):
    A, Q = fx.algebra("a3"), fx.module("a3", "DA")
    pool = [fx.module("a3", n) for n in A3]
    r = tl.uniqueness_search(A, Q, 1, pool, mode="tilting", conditions=False)
    # linear A3 has 5 basic tilting modules
    assert len(r.qualifiers) == 5
