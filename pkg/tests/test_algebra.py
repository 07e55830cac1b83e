import pytest

from relaus.algebra import PresentationError, path_algebra
from relaus.linalg import Field

QQ = Field()


def a_n(n, field=QQ):
    arrows = [(f"x{i}", str(i), str(i + 1)) for i in range(1, n)]
    return path_algebra(field, [str(i) for i in range(1, n + 1)], arrows)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_linear_quiver_dimension(n):
    # paths in A_n: n(n+1)/2
    assert a_n(n).dim == n * (n + 1) // 2


def test_square_commutative_and_zero(fx):
    A = fx.algebra("sq")
    assert A.dim == 9
    assert A.verify()
    sq0 = path_algebra(QQ, "1 2 3 4".split(),
                       [("b", "1", "2"), ("a", "1", "3"), ("g", "2", "4"), ("n", "3", "4")],
                       [[(1, ("n", "a"))], [(1, ("g", "b"))]])
    assert sq0.dim == 8


def test_opposite_of_sq_matches_sq_op(fx):
    A = fx.algebra("sq")
    assert A.opposite().dim == fx.algebra("sq_op").dim
    assert A.opposite().opposite().dim == A.dim


def test_radical_of_path_algebra_is_arrow_ideal(fx):
    A = fx.algebra("sq")
    # arrow ideal of the square: 4 arrows + 1 path of length two
    assert A.radical().ncols() == 5


def test_loops_dimension(fx):
    assert fx.algebra("loops").dim == 6


def test_rejects_non_uniform():
    with pytest.raises(PresentationError) as e:
        path_algebra(QQ, ["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "1", "2"),
                                             ("d", "2", "3")],
                     [[(1, ("b", "a")), (1, ("d", "c"))], [(1, ("b", "a")), (-1, ("a",))]])
    assert e.value.code in ("non-uniform", "non-admissible", "non-homogeneous")


def test_rejects_unknown_vertex():
    with pytest.raises(PresentationError) as e:
        path_algebra(QQ, ["1"], [("a", "1", "2")])
    assert e.value.code == "unknown-vertex"


def test_not_finite_dimensional():
    # a free loop never becomes zero
    with pytest.raises(PresentationError):
        path_algebra(QQ, ["1"], [("a", "1", "1")], length_cap=6)


def test_digest_stable(fx):
    assert fx.algebra("sq").digest() == fx.algebra("sq").digest()
    assert fx.algebra("sq").digest() != fx.algebra("sq_op").digest()
