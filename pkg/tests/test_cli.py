import json

import pytest

from hosoya.cli import main
from hosoya.multigraph import parse_hgraph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def d3(tmp_path):
    path = tmp_path / "d3-2-3-3.json"
    path.write_text(json.dumps({"a0": 2, "terms": [[2, 3], [3, 3]]}))
    return str(path)


@pytest.fixture
def period1(tmp_path):
    node = {"pendants": 2}
    for _ in range(3):
        node = {"pendants": 2, "children": [[2, node], [2, node]]}
    path = tmp_path / "period1.json"
    path.write_text(json.dumps(node))
    return str(path)


@pytest.mark.parametrize(
    "spec, vertices",
    [("ring:n=3,m=1,r=2,s=1", 12), ("path:n=1", 1), ("dbond:xs=4,4,4,4;ys=6,3,3", 16)],
)
def test_build(capsys, tmp_path, spec, vertices):
    out_file = tmp_path / "g.hgraph"
    code, _, _ = run(capsys, "build", spec, "-o", str(out_file))
    assert code == 0
    assert parse_hgraph(out_file.read_text()).n_vertices == vertices


def test_build_to_stdout(capsys):
    code, out, _ = run(capsys, "build", "cycle:n=4")
    assert code == 0
    assert out.startswith("hgraph 1\nvertices 4\n")


@pytest.mark.parametrize(
    "spec, field",
    [("ring:n=x,m=1,r=2,s=1", "'n'"), ("comb:n=4,a=1", "'b'"), ("dbond:xs=1,2;zs=1", "zs"), ("blob:n=1", "blob")],
)
def test_build_rejects(capsys, spec, field):
    code, _, err = run(capsys, "build", spec)
    assert code == 2
    assert field in err


def test_z(capsys, d3):
    assert run(capsys, "z", "ring:n=3,m=1,r=2,s=1", "--method", "both")[1] == "301 301\n"
    assert run(capsys, "z", "path:n=1")[1] == "1\n"
    assert run(capsys, "z", f"radial:m=8,part={d3}", "--method", "cf")[1] == "5589762048\n"
    assert run(capsys, "z", "comb:n=4,a=2,b=1", "--method", "both")[1] == "119 119\n"


def test_z_on_hgraph_file(capsys, tmp_path):
    f = tmp_path / "c6.hgraph"
    run(capsys, "build", "cycle:n=6", "-o", str(f))
    assert run(capsys, "z", str(f))[1] == "18\n"
    code, _, err = run(capsys, "z", str(f), "--method", "cf")
    assert code == 3


def test_z_capability_error(capsys):
    assert run(capsys, "z", "naphthalene")[1] == "532\n"
    assert run(capsys, "z", "naphthalene", "--method", "both")[0] == 3


def test_cf(capsys, tmp_path, period1):
    neg = tmp_path / "neg.json"
    neg.write_text(json.dumps({"M": 7, "rs": 2, "n": 3}))
    assert run(capsys, "cf", str(neg), "--mode", "negative")[1] == "301/45\n"

    gen = tmp_path / "gen.json"
    gen.write_text(json.dumps({"a0": 5}))
    code, out, _ = run(capsys, "cf", str(gen))
    assert code == 0
    assert out.splitlines()[0] == "5/1"

    assert run(capsys, "cf", period1, "--mode", "tree")[1] == "143118495/35605089\n"


def test_cf_convergent_table(capsys, d3):
    _, out, _ = run(capsys, "cf", d3, "--mode", "general")
    assert out.splitlines() == ["30/12", "0 2 1", "1 8 3", "2 30 12"]


def test_cf_schema_errors(capsys, tmp_path, d3):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"a0": 0}))
    assert run(capsys, "cf", str(bad))[0] == 2
    bad.write_text("{not json")
    assert run(capsys, "cf", str(bad))[0] == 2
    assert run(capsys, "cf", d3, "--mode", "negative")[0] == 2


def test_seq(capsys):
    _, out, _ = run(capsys, "seq", "--r", "1", "--s", "2", "--m", "0", "--count", "11")
    assert out.split() == "2 4 12 40 136 464 1584 5408 18464 63040 215232".split()
    _, out, _ = run(capsys, "seq", "ring", "--r", "2", "--s", "1", "--m", "1", "--count", "4")
    assert out.split() == ["2", "7", "45", "301"]
    assert run(capsys, "seq", "--r", "3", "--s", "3", "--count", "1")[1] == "2\n"
    assert run(capsys, "seq", "--r", "0", "--s", "1")[0] == 2
    assert run(capsys, "seq", "--r", "1", "--s", "1", "--count", "0")[0] == 2


def rows(out):
    return [ln for ln in out.splitlines() if ln.endswith("PASS") or ln.endswith("FAIL")]


def test_verify_theorem1(capsys):
    code, out, _ = run(capsys, "verify", "theorem1", "--n", "1..4", "--m", "0..2", "--r", "1..3", "--s", "1..3")
    assert code == 0
    assert len(rows(out)) == 108
    assert all(r.endswith("PASS") for r in rows(out))


def test_verify_lemma1(capsys):
    code, out, _ = run(
        capsys, "verify", "lemma1", "--max-spine", "5", "--max-x", "3", "--max-y", "3", "--samples", "200"
    )
    assert code == 0 and len(rows(out)) == 200


def test_verify_transforms(capsys):
    code, out, _ = run(capsys, "verify", "transforms", "--cycle-n", "3..12")
    assert code == 0 and len(rows(out)) == 10
    code, out, _ = run(capsys, "verify", "transforms", "--cycle-n", "3", "--comb-n", "3..4")
    assert code == 0 and len(rows(out)) == 1 + 2 * 4 * 3


@pytest.mark.parametrize("suite", ["lemma2", "remark2", "radial"])
def test_verify_other_suites(capsys, suite):
    code, out, _ = run(capsys, "verify", suite, "--samples", "20")
    assert code == 0
    assert rows(out)


def test_verify_radial_custom_part(capsys, d3):
    code, out, _ = run(capsys, "verify", "radial", "--part", d3, "--m", "1..3")
    assert code == 0 and len(rows(out)) == 3


def test_output_is_deterministic(capsys):
    argv = ("verify", "lemma1", "--samples", "30", "--seed", "7")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]
