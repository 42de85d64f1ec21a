import pytest

from conftest import EIGHT_VECTORS
from rankmetric.codes import gabidulin_example_code
from rankmetric.errors import FormatError
from rankmetric.ferrers import FerrersDiagram
from rankmetric.gf import field_new
from rankmetric.matfq import matrix
from rankmetric.textio import format_matrices, parse_matrices, read_matrices, write_matrices


def test_parse_basic():
    mf = parse_matrices("""
# two binary matrices
GF 2 1
1 1
1 1

1 0
0 1
""")
    assert mf.field.q == 2
    assert mf.shape == (2, 2)
    assert [A.rows() for A in mf.matrices] == [[[1, 1], [1, 1]], [[1, 0], [0, 1]]]


def test_round_trip(tmp_path):
    C = gabidulin_example_code()
    path = tmp_path / "g.txt"
    write_matrices(path, C.field, C.codewords)
    mf = read_matrices(path)
    assert mf.field == C.field
    assert [A.key() for A in mf.matrices] == [A.key() for A in C.codewords]


def test_header_has_modulus():
    F = field_new(2, 3, (1, 1, 0, 1))
    text = format_matrices(F, [matrix(F, [[1, 7]])])
    assert text.splitlines()[:2] == ["GF 2 3 11", "SHAPE 1 2"]
    assert parse_matrices(text).field == F


def test_diagram_header():
    F2 = field_new(2, 1)
    D = FerrersDiagram((2, 1))
    text = format_matrices(F2, [matrix(F2, [[1, 1], [0, 1]])], diagram=D)
    mf = parse_matrices(text)
    assert mf.diagram == D and mf.shape == (2, 2)


def test_empty_code_keeps_shape():
    F2 = field_new(2, 1)
    mf = parse_matrices(format_matrices(F2, [], shape=(3, 4)))
    assert mf.matrices == [] and mf.shape == (3, 4)


def test_eight_vectors_file():
    text = "GF 2 1\n" + "\n".join(" ".join(map(str, r)) for r in EIGHT_VECTORS) + "\n"
    mf = parse_matrices(text)
    assert mf.matrices[0].shape == (8, 7)


@pytest.mark.parametrize("text", [
    "1 0\n",
    "GF 2\n1 0\n",
    "GF 2 1\n1 2\n",
    "GF 2 1\n1 0\n1\n",
    "GF 2 1\nSHAPE 1 1\n1 0\n",
    "GF 2 1\nDIAGRAM 2,1\nSHAPE 3 3\n",
    "GF 2 1\nGF 3 1\n",
    "GF 2 1\n1 x\n",
    "GF 4 1\n",
])
def test_format_errors(text):
    with pytest.raises(Exception) as info:
        parse_matrices(text)
    assert isinstance(info.value, (FormatError, ValueError))
