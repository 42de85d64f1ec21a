import io
import json
import subprocess
import sys

import pytest

from conftest import EIGHT_VECTORS_RREF, EIGHT_VECTORS
from rankmetric import cli, codes, echelon, ferrers, matfq, search
from rankmetric.gf import field_new
from rankmetric.textio import format_matrices, read_matrices


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = cli.run(list(argv), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


@pytest.fixture
def eight_vectors_file(tmp_path):
    F2 = field_new(2, 1)
    path = tmp_path / "x.txt"
    path.write_text(format_matrices(F2, [matfq.matrix(F2, EIGHT_VECTORS)]))
    return str(path)


@pytest.fixture
def pair_code_file(tmp_path, pair_code):
    path = tmp_path / "c.txt"
    path.write_text(format_matrices(pair_code[0].field, pair_code))
    return str(path)


def test_bound_ferrers():
    status, out, _ = run("bound", "ferrers", "--diagram", "4,4,2", "--d", "2", "--q", "2")
    assert status == 0
    assert out.strip() == "v_0=7 v_1=6 min=6 bound=64"


def test_bound_classical():
    status, out, _ = run("bound", "classical", "--n", "7", "--d", "3", "--q", "2")
    assert status == 0
    assert out.strip() == "2^5 = 32 (exponent 5)"
    assert str(codes.classical_singleton_bound(7, 3, 2)) in out
    _, js, _ = run("bound", "classical", "--n", "7", "--d", "3", "--q", "2", "--json")
    assert json.loads(js)["bound"] == 32


def test_bound_rank():
    _, out, _ = run("bound", "rank", "--m", "3", "--n", "3", "--d", "2", "--q", "2", "--json")
    assert json.loads(out)["bound"] == codes.rank_singleton_bound(3, 3, 2, 2) == 64


def test_bound_domain_error():
    status, out, err = run("bound", "rank", "--m", "2", "--n", "2", "--d", "3", "--q", "2")
    assert status == 1 and out == "" and err.startswith("error:")


def test_usage_error():
    assert run("bound", "ferrers", "--d", "2", "--q", "2")[0] == 2
    assert run("ef", "--v", "10a")[0] == 2
    assert run()[0] == 2


def test_idvec(eight_vectors_file):
    status, out, _ = run("idvec", "--in", eight_vectors_file)
    assert status == 0 and out.strip() == "1010100"


def test_rank_and_count(eight_vectors_file):
    assert run("rank", "--in", eight_vectors_file)[1].strip() == "3"
    assert run("count-bases", "--in", eight_vectors_file)[1].strip() == "168"


def test_rref_golden(eight_vectors_file, tmp_path):
    status, out, _ = run("rref", "--in", eight_vectors_file)
    assert status == 0
    assert out.splitlines()[0] == "# pivots 0 2 4"
    path = tmp_path / "r.txt"
    path.write_text(out)
    assert read_matrices(path).matrices[0].rows() == EIGHT_VECTORS_RREF
    direct = matfq.rref(read_matrices(eight_vectors_file).matrices[0])
    _, js, _ = run("rref", "--in", eight_vectors_file, "--json")
    obj = json.loads(js)
    assert obj["rref"] == direct.base.rows() and obj["pivots"] == list(direct.pivots)


def test_ef():
    status, out, _ = run("ef", "--v", "1100100")
    ef = echelon.echelon_ferrers_form("1100100")
    assert status == 0
    assert out == ef.render() + "\ndiagram=4,4,2\n"


def test_distance_and_verify(pair_code_file):
    assert run("distance", "--in", pair_code_file)[1].strip() == "2"
    status, out, _ = run("verify", "--in", pair_code_file)
    assert status == 0
    assert out.splitlines()[-1] == "PASS"
    assert "bound=2^2 = 4 (exponent 2)" in out
    status, out, _ = run("verify", "--in", pair_code_file, "--d", "3")
    # declared distance larger than measured
    assert status != 0


def test_gabidulin_and_verify(tmp_path):
    path = str(tmp_path / "g.txt")
    status, out, _ = run("gabidulin", "--q", "2", "--e", "3", "--n", "3", "--k", "2", "--out", path)
    assert status == 0 and "64 codewords" in out
    direct = codes.gabidulin_construct(2, 3, 3, 2)
    assert [A.key() for A in read_matrices(path).matrices] == [A.key() for A in direct.codewords]
    status, out, _ = run("verify", "--in", path, "--json")
    obj = json.loads(out)
    assert status == 0 and obj["pass"] and obj["codewords"] == 64 and obj["min_distance"] == 2


def test_search_rank(tmp_path):
    path = str(tmp_path / "w.txt")
    status, out, _ = run("search", "rank", "--m", "2", "--n", "2", "--d", "2", "--q", "2", "--out", path)
    assert status == 0 and out.strip() == "size=4, bound=4, tight=yes"
    assert run("verify", "--in", path)[0] == 0
    direct = search.max_code(search.SearchProblem((2, 2), 2, 2))
    assert [A.key() for A in read_matrices(path).matrices] == [A.key() for A in direct.witness]


def test_search_ferrers_greedy_stable(tmp_path):
    args = ["search", "ferrers", "--diagram", "3,2", "--d", "2", "--q", "2", "--mode", "greedy", "--seed", "5"]
    first = run(*args)
    assert first == run(*args)
    direct = search.max_code(search.SearchProblem(ferrers.FerrersDiagram((3, 2)), 2, 2, "greedy", 5))
    assert first[1].strip() == direct.report()
    path = str(tmp_path / "f.txt")
    run(*args, "--out", path)
    mf = read_matrices(path)
    assert mf.diagram == ferrers.FerrersDiagram((3, 2))
    assert run("verify", "--in", path)[0] == 0


def test_ferrers_commands():
    _, out, _ = run("ferrers", "enumerate", "--rows", "4", "--cols", "4", "--dots", "4")
    assert out.split() == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
    _, out, _ = run("ferrers", "conjugate", "--diagram", "4,4,2")
    assert out.strip() == "3,3,2,2"


def test_missing_file():
    status, _, err = run("rank", "--in", "/nonexistent/file.txt")
    assert status == 1 and "error" in err


def test_console_entry_point(eight_vectors_file):
    out = subprocess.run([sys.executable, "-m", "rankmetric", "idvec", "--in", eight_vectors_file],
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "1010100"
