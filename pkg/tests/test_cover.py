import pytest

from relaus import cover as cv
from relaus import homology as hm
from relaus import modules as md
from relaus import tilting as tl
from relaus.values import INF


def test_schur_functor_on_projective_summand(fx):
    # Hom(Q, Q) is the regular B-module
    Q = fx.module("sq", "Q")
    FQ = cv.schur_functor_image(Q, Q)
    B = cv.schur_functor(Q).ring
    assert FQ.total_dim == B.dim == md.hom_dim(Q, Q)


def test_schur_functor_dimensions(fx):
    Q = fx.module("sq", "Q")
    for expr in ("S1", "P4", "I4/S4"):
        M = fx.module("sq", expr)
        assert cv.schur_functor_image(Q, M).total_dim == md.hom_dim(Q, M)


def test_tor_criterion_agrees(fx):
    Q = fx.module("six", "Q")
    for expr in ("S1", "S4", "P5", "I4", "I6"):
        for n in (2, 3, 4):
            r = cv.codominant_via_tor(fx.module("six", expr), Q, n)
            assert r.agrees is True


def test_tor_criterion_needs_n_two(fx):
    with pytest.raises(ValueError):
        cv.codominant_via_tor(fx.module("sq", "S1"), fx.module("sq", "Q"), 1)


def test_classical_double_centralizer(fx):
    for name in ("sq", "a3"):
        c = cv.classical_double_centralizer(fx.module(name, "Q"))
        assert c.bijective


def test_double_centralizer_sq(fx):
    A, Q = fx.algebra("sq"), fx.module("sq", "Q")
    T = tl.construct_canonical_tilt(A, Q, 1).module
    dc = cv.double_centralizer_check(T, Q)
    assert dc.b_side.bijective
    assert (dc.e_side.source_dim, dc.e_side.target_dim, dc.e_side.rank) == (9, 10, 9)


def test_e_side_failure_oracle(fx):
    # Hom_B(F(I4/S4), F(P1)) is one dimensional while Hom_A(I4/S4, P1) = 0,
    # so Hom(Q, -) is not full on add T
    Q = fx.module("sq", "Q")
    X, P1 = fx.module("sq", "I4/S4"), fx.module("sq", "P1")
    F = cv.schur_functor(Q)
    assert md.hom_dim(X, P1) == 0
    assert md.hom_dim(F.apply(X), F.apply(P1)) == 1
    from relaus import reldim as rd
    assert rd.relative_codominant_dimension(X, Q)[0] == 1


def test_cover_a3(fx):
    A, Q = fx.algebra("a3"), fx.module("a3", "DA")
    six = [fx.module("a3", n) for n in ("S1", "S2", "S3", "P1", "P2", "I2")]
    rep = cv.cover_ext_comparison(A, Q, 2, six)
    assert not rep.vacuous
    assert sorted(s[0] for s in rep.skipped) == ["P2", "S2", "S3"]
    assert rep.testset == ["S1", "P1", "I2"]
    assert rep.degree0_passed
    assert len([r for r in rep.rows if r.degree == 0]) == 9


def test_cover_vacuous(fx):
    rep = cv.cover_ext_comparison(fx.algebra("sq"), fx.module("sq", "Q"), 1, [])
    assert rep.vacuous and rep.passed
    assert "vacuous" in rep.label


def test_cover_requires_pair(fx):
    with pytest.raises(tl.PreconditionError):
        cv.cover_ext_comparison(fx.algebra("sq"), fx.module("sq", "Q"), 2, [])
