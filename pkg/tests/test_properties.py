"""Invariants checked on random representations of linear A3."""
import random

from hypothesis import given, settings, strategies as st

from relaus import homology as hm
from relaus import modules as md
from relaus import reldim as rd
from relaus import tilting as tl
from relaus.modules import Module
from relaus.reproduce import Fixtures

FX = Fixtures()


@st.composite
def a3_modules(draw):
    A = FX.algebra("a3")
    dims = [draw(st.integers(0, 2)) for _ in range(3)]
    if sum(dims) == 0:
        dims[0] = 1
    rng = random.Random(draw(st.integers(0, 10**6)))
    F = A.field
    mats = {}
    for lab, b in A.arrows:
        s, t = A.source[b], A.target[b]
        if dims[s] and dims[t]:
            mats[lab] = F.from_rows([[rng.randint(-1, 1) for _ in range(dims[s])]
                                     for _ in range(dims[t])], dims[s])
    return Module.from_arrow_matrices(A, dims, mats)


@settings(max_examples=25, deadline=None)
@given(a3_modules())
def test_decomposition_preserves_dimension(M):
    dec = md.decompose(M)
    assert dec.verify()
    assert sum(S.module.total_dim for S in dec.summands) == M.total_dim


@settings(max_examples=25, deadline=None)
@given(a3_modules(), a3_modules())
def test_ext_routes_random(M, N):
    for i in (0, 1, 2):
        assert hm.ext_dim(M, N, i) == hm.ext_dim_injective(M, N, i)


@settings(max_examples=25, deadline=None)
@given(a3_modules(), st.sampled_from(["DA", "A", "P1", "P1+S2", "I2+S1"]))
def test_duality_random(M, q):
    Q = FX.module("a3", q)
    lhs = rd.relative_dominant_dimension(M, Q)[0]
    rhs = rd.relative_codominant_dimension_direct(md.dualize(M), md.dualize(Q))[0]
    assert lhs == rhs


@settings(max_examples=25, deadline=None)
@given(a3_modules())
def test_double_dual(M):
    assert md.is_isomorphic(md.dualize(md.dualize(M)), M)


@settings(max_examples=20, deadline=None)
@given(a3_modules())
def test_tilting_dual_random(M):
    assert tl.is_tilting(M).verdict == tl.is_cotilting(md.dualize(M)).verdict


@settings(max_examples=20, deadline=None)
@given(a3_modules())
def test_additivity_random(M):
    _, seq = rd.relative_dominant_dimension(M, FX.module("a3", "P1+S2"))
    assert seq.verify()
    for _, applicable, holds in rd.check_additivity(seq):
        assert holds or not applicable
