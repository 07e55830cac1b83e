import pytest

from relaus import formats as fm
from relaus import modules as md
from relaus.algebra import PresentationError

SQ = """\
# square
name sq
field GF 7
vertex 1 2 3 4
arrow b: 1 -> 2
arrow a: 1 -> 3
arrow g: 2 -> 4
arrow n: 3 -> 4
relation 1*n*a - 1*g*b
"""


def build(text, field=None):
    return fm.build_algebra(fm.parse_algebra_text(text), field)


def test_documented_grammar():
    A = build(SQ)
    assert A.dim == 9
    assert A.field.name == "GF:7"
    assert build(SQ, "QQ").field.name == "QQ"


def test_single_vertex_no_arrows():
    assert build("vertex 1\n").dim == 1


@pytest.mark.parametrize("text, code, line", [
    ("vertex 1\narrow a: 1 -> 2\n", "unknown-vertex", 2),
    ("vertex 1 2\narrow a: 1 -> 2\nrelation a\n", "non-admissible", 3),
    ("vertex 1 2\narrow a: 1 -> 2\nrelation z*a\n", "unknown-arrow", 3),
    ("field GF 8\nvertex 1\n", "bad-field", 1),
    ("vertex 1 1\n", "duplicate-label", 1),
    ("vertex 1\nfrobnicate\n", "syntax", 2),
])
def test_diagnostics(text, code, line):
    with pytest.raises(PresentationError) as e:
        fm.parse_algebra_text(text) if code == "syntax" else build(text)
    assert e.value.code == code
    assert e.value.line == line


def test_non_uniform_relation():
    text = "vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 1 -> 2\narrow d: 1 -> 3\n" \
           "relation b*a - b*c\nrelation b*a - d*d\n"
    with pytest.raises(PresentationError):
        build(text)


def test_non_homogeneous_rejected():
    text = "vertex 1\narrow x: 1 -> 1\nrelation x*x - x*x*x\n"
    with pytest.raises(PresentationError) as e:
        build(text)
    assert e.value.code == "non-homogeneous"


def test_module_roundtrip(fx):
    A = fx.algebra("sq")
    for expr in ("P1", "I4/S4", "radP1", "2*S2+P3"):
        M = fx.module("sq", expr)
        back = fm.parse_module_text(fm.format_module(M), A)
        assert md.is_isomorphic(back, M)


def test_module_file_with_fractions(fx, tmp_path):
    A = fx.algebra("a2")
    text = "module M over a2\ndim 1 = 1\ndim 2 = 1\nmap a = [[1/2]]\n"
    M = fm.parse_module_text(text, A)
    assert md.is_isomorphic(M, fx.module("a2", "P1"))
    p = tmp_path / "m.mod"
    p.write_text(text)
    N = fm.module_expression(A, "m.mod+S2", base_dir=tmp_path)
    assert N.total_dim == 3


@pytest.mark.parametrize("text, code", [
    ("module M over other\n", "algebra-mismatch"),
    ("module M over sq\ndim 1 = 1\ndim 2 = 1\nmap b = [[1,0]]\n", "shape"),
    ("module M over sq\nmap zz = [[1]]\n", "unknown-arrow"),
    ("module M over sq\ndim 1 = 1\ndim 2 = 1\ndim 3 = 1\ndim 4 = 1\n"
     "map b = [[1]]\nmap a = [[1]]\nmap g = [[1]]\nmap n = [[0]]\n", "relation-violated"),
])
def test_module_diagnostics(fx, text, code):
    with pytest.raises(PresentationError) as e:
        fm.parse_module_text(text, fx.algebra("sq"))
    assert e.value.code == code


def test_expressions(fx):
    A = fx.algebra("sq")
    assert fm.module_expression(A, "Q").total_dim == 2 + 2 + 4
    assert fm.module_expression(A, "A").total_dim == 9
    assert fm.module_expression(A, "3*S1").total_dim == 3
    assert fm.module_expression(A, "0").is_zero()
    for bad in ("P9", "I2/S3", "", "P1++P2", "Foo"):
        with pytest.raises(fm.ExpressionError):
            fm.module_expression(A, bad)
