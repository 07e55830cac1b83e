import pytest
from hypothesis import given, settings, strategies as st

from relaus import modules as md
from relaus.modules import Module


def test_standard_modules_sq(fx):
    A = fx.algebra("sq")
    assert md.dimension_vector(md.projective(A, 0)) == (1, 1, 1, 1)
    assert md.dimension_vector(md.injective(A, 3)) == (1, 1, 1, 1)
    assert md.dimension_vector(md.simple(A, 2)) == (0, 0, 1, 0)
    assert md.is_isomorphic(md.projective(A, 0), md.injective(A, 3))
    assert md.regular(A).total_dim == 9 == md.dual_regular(A).total_dim


def test_hom_dimensions_sq(fx):
    P = [fx.module("sq", f"P{i}") for i in range(1, 5)]
    S = [fx.module("sq", f"S{i}") for i in range(1, 5)]
    # Hom(P_i, M) = M e_i
    for i, Pi in enumerate(P):
        for j, Sj in enumerate(S):
            assert md.hom_dim(Pi, Sj) == (1 if i == j else 0)
    assert md.hom_dim(P[3], P[0]) == 1
    assert md.hom_dim(P[0], P[3]) == 0


def test_hom_space_maps_are_module_maps(fx):
    M, N = fx.module("sq", "P1+S4"), fx.module("sq", "I4/S4+P4")
    for f in md.hom_space(M, N):
        assert f.verify()


def test_decompose_regular(fx):
    for name, n in (("sq", 4), ("six", 6), ("loops", 2)):
        dec = md.decompose(md.regular(fx.algebra(name)))
        assert len(dec.summands) == n
        assert dec.verify()


def test_decompose_multiplicities(fx):
    M = fx.module("sq", "2*S1+P2+S1")
    dec = md.decompose(M)
    assert sorted(dec.multiplicities) == [1, 3]


def test_radical_and_socle(fx):
    P1 = fx.module("sq", "P1")
    rad, _ = md.radical(P1)
    assert md.dimension_vector(rad) == (0, 1, 1, 1)
    assert md.is_isomorphic(fx.module("sq", "radP1"), rad)
    soc = md.socle(P1)[0]
    assert md.dimension_vector(soc) == (0, 0, 0, 1)


def test_add_membership(fx):
    Q = fx.module("sq", "Q")
    assert md.in_add(fx.module("sq", "2*I2+I4"), Q)
    assert not md.in_add(fx.module("sq", "S4"), Q)
    assert md.in_add(md.zero_module(fx.algebra("sq")), Q)


def test_dualize_twice(fx):
    for expr in ("P1", "I4/S4", "radP1", "S2+P3"):
        M = fx.module("sq", expr)
        assert md.is_isomorphic(md.dualize(md.dualize(M)), M)


def test_from_arrow_matrices_checks_relations(fx):
    A = fx.algebra("sq")
    F = A.field
    one = F.from_rows([[1]], 1)
    zero = F.from_rows([[0]], 1)
    # commutativity needs n a = g b
    with pytest.raises(md.ModuleError):
        Module.from_arrow_matrices(A, [1, 1, 1, 1], {"b": one, "a": one, "g": one, "n": zero})
    M = Module.from_arrow_matrices(A, [1, 1, 1, 1], {"b": one, "a": one, "g": one, "n": one})
    assert md.is_isomorphic(M, fx.module("sq", "P1"))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(["S1", "S2", "S3", "S4", "P1", "P2", "P3", "I2", "I3", "I4/S4"]),
                min_size=1, max_size=4))
def test_decomposition_recovers_summands(names):
    from relaus.reproduce import Fixtures
    fx = Fixtures()
    M = fx.module("sq", "+".join(names))
    assert len(md.decompose(M).summands) == len(names)
    assert M.total_dim == sum(fx.module("sq", n).total_dim for n in names)
