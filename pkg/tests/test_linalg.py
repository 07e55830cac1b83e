import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from relaus import linalg as la
from relaus.linalg import Field, FieldError

QQ = Field()
GF2 = Field(2)
GF7 = Field(7)


def test_field_parse():
    assert Field.parse("QQ") == QQ
    assert Field.parse("GF:7") == GF7
    assert Field.parse("GF 7") == GF7
    with pytest.raises(FieldError):
        Field.parse("GF:8")
    with pytest.raises(FieldError):
        Field.parse("RR")


def test_fraction_coercion():
    assert QQ.to_python(QQ("3/6")) == Fraction(1, 2)
    # 1/2 = 4 in GF(7)
    assert GF7.to_python(GF7("1/2")) == 4
    with pytest.raises(FieldError):
        GF7(Fraction(1, 7))


def _det_leibniz(rows, p):
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod *= rows[i][perm[i]]
        total += (-1) ** inv * prod
    return total % p


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 6), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_gf7_against_leibniz(rows):
    m = GF7.from_rows(rows, len(rows))
    assert int(la.det(m)) == _det_leibniz(rows, 7)


def test_kernel_gf2_brute_force():
    rng = random.Random(3)
    for _ in range(20):
        r, c = rng.randint(1, 4), rng.randint(1, 5)
        rows = [[rng.randint(0, 1) for _ in range(c)] for _ in range(r)]
        m = GF2.from_rows(rows, c)
        brute = sum(1 for v in itertools.product((0, 1), repeat=c)
                    if all(sum(a * b for a, b in zip(row, v)) % 2 == 0 for row in rows))
        K = la.kernel(m)
        assert 2 ** K.ncols() == brute
        assert la.is_zero(m * K)


def test_solve_membership_example():
    B = QQ.from_rows([[1, 0], [0, 1], [1, 1]], 2)
    t = QQ.from_rows([[2], [3], [5]], 1)
    x = la.solve_membership(B, t)
    assert QQ.to_python(x[0, 0]) == 2 and QQ.to_python(x[1, 0]) == 3
    assert la.solve_membership(B, QQ.from_rows([[1], [1], [0]], 1)) is None


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 10**6))
def test_rank_nullity(r, c, seed):
    m = QQ.random_matrix(r, c, random.Random(seed))
    K = la.kernel(m)
    assert la.rank(m) + K.ncols() == c
    assert la.is_zero(m * K)
    assert la.image(m).ncols() == la.rank(m)


def test_rref_is_canonical():
    m = QQ.from_rows([[2, 4, 6], [1, 2, 4]], 3)
    R, piv = la.rref(m)
    assert piv == [0, 2]
    assert [QQ.to_python(R[0, j]) for j in range(3)] == [1, 2, 0]


def test_empty_shapes():
    z = QQ.zeros(0, 3)
    assert la.rank(z) == 0
    assert la.kernel(z).ncols() == 3
    assert QQ.to_python(la.det(QQ.zeros(0, 0))) == 1
