import json

import pytest

from tracelab import artinian as art
from tracelab.cli import main
from tracelab.formats import load_algebra, load_art_module, load_ideal, load_module_sum, load_semigroup
from tracelab.ideals import ModuleSum, maximal_ideal
from tracelab.polyparse import parse_matrix
from tracelab.semigroup import NumericalSemigroup


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sgp_trace_human(capsys, files):
    f = files("m.json", {"semigroup": {"generators": [3, 4, 5]}, "values": [3, 4, 5]})
    code, out, _ = run(capsys, "sgp", "trace", f)
    assert code == 0
    assert out.splitlines()[0] == "trace = {3,4,5,...} (= m) full-trace: yes"


def test_sgp_trace_json_roundtrip(capsys, files):
    sg = {"generators": [3, 4, 5]}
    f = files("mod.json", {"semigroup": sg, "summands": [{"values": [3, 4, 5]}, {"values": [6, 7, 8]}]})
    code, out, _ = run(capsys, "sgp", "trace", f, "--json")
    data = json.loads(out)
    mod = load_module_sum(data["module"])
    assert mod == load_module_sum(json.loads(open(f).read()))
    tr = load_ideal(data["trace"])
    assert tr == mod.trace() == maximal_ideal(NumericalSemigroup.from_generators([3, 4, 5]))
    assert data["full_trace"] and data["ulrich"]


def test_sgp_info(capsys, files):
    f = files("s.json", {"generators": [6, 9, 20]})
    code, out, _ = run(capsys, "sgp", "info", f, "--json")
    data = json.loads(out)
    assert data["frobenius"] == 43
    assert load_semigroup(data["semigroup"]).generators == (6, 9, 20)
    assert data["flags"] == {"minimal_multiplicity": False, "symmetric": True, "arf": False, "regular": False}
    code, out, _ = run(capsys, "sgp", "info", f)
    assert "frobenius            43" in out


def test_sgp_enum_and_canonical(capsys, files):
    f = files("s.json", {"generators": [3, 4, 5]})
    _, out, _ = run(capsys, "--json", "-", "sgp", "enum-ftu", f)
    data = json.loads(out)
    assert [load_ideal(d).format() for d in data["full_trace_ulrich"]] == ["{0,1,2,...}"]
    _, out, _ = run(capsys, "sgp", "canonical", f, "--json")
    data = json.loads(out)
    assert load_ideal(data["trace"]) == maximal_ideal(NumericalSemigroup.from_generators([3, 4, 5]))
    assert data["nearly_gorenstein"] and not data["symmetric"]


def test_art_resolve(capsys, files):
    alg = {"p": 101, "vars": ["x"], "monomial_relations": ["x^3"]}
    f = files("a.json", alg)
    code, out, _ = run(capsys, "art", "resolve", f, "--steps", "4")
    assert code == 0
    assert "Betti 1 1 1 1 1" in out.splitlines()
    _, out, _ = run(capsys, "art", "resolve", f, "--steps", "4", "--json")
    data = json.loads(out)
    a = load_algebra(data["algebra"])
    assert a == load_algebra(alg)
    res = art.minimal_resolution(art.PresentedModule.residue_field(a), 4)
    for text, mat in zip(data["matrices"], res.matrices):
        assert (parse_matrix(text, a) == mat).all()
    tr = load_art_module(data["syzygy_traces"][1], a)
    assert tr.dim == a.maximal_ideal.dim


def test_art_trace_and_check(capsys, files):
    a = files("b.json", {"p": 101, "vars": ["x", "y"], "monomial_relations": ["x^2", "y^2"]})
    m = files("m.json", {"kind": "presentation", "matrix": [["x", "y"], ["0", "x*y"]]})
    _, out, _ = run(capsys, "art", "trace", a, "--module", m, "--json")
    data = json.loads(out)
    assert data["trace"]["name"] == "R" and data["free_summand"]
    k = files("k.json", {"kind": "residue_field"})
    _, out, _ = run(capsys, "art", "trace", a, "--module", k)
    assert out.startswith("trace = m^2 full-trace: no")
    code, out, _ = run(capsys, "art", "check", a, "--module", m, "--json")
    assert code == 0 and json.loads(out)["matrix_lemma"]


def test_koszul_cmd(capsys):
    code, out, _ = run(capsys, "koszul", "--n", "4", "--check")
    assert code == 0
    assert "ranks 1 4 6 4 1" in out and "d^2 = 0: yes" in out
    assert out.count("(x1, x2, x3, x4)") == 4


def test_suite_cmd(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, out, _ = run(capsys, "suite", "run", "pir", "dvr", "koszul", "--json", str(out_file))
    assert code == 0 and "all suites passed" in out
    data = json.loads(out_file.read_text())
    assert data["passed"] and [s["suite"] for s in data["suites"]] == ["pir", "koszul", "dvr"]
    code, out, _ = run(capsys, "suite", "list")
    assert "decomposition" in out


def test_exit_codes(capsys, files):
    code, _, err = run(capsys, "suite", "run")
    assert code == 2
    code, _, _ = run(capsys, "suite", "run", "nonsense")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["sgp", "info", "--bogus"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "koszul", "--n", "12")
    assert code == 3 and "guard" in err
    big = files("a.json", {"p": 101, "vars": ["x", "y"], "monomial_relations": ["x^30", "y^30"]})
    code, _, _ = run(capsys, "art", "trace", big)
    assert code == 3
    bad = files("bad.json", {"semigroup": {"generators": [4, 6]}, "values": [0]})
    code, _, err = run(capsys, "sgp", "trace", bad)
    assert code == 2 and "not cofinite" in err
    mod = files("m.json", {"kind": "ideal", "generators": ["x + q"]})
    alg = files("b.json", {"p": 101, "vars": ["x"], "monomial_relations": ["x^2"]})
    code, _, err = run(capsys, "art", "trace", alg, "--module", mod)
    assert code == 2 and "unknown variable" in err


def test_quiet(capsys, files):
    f = files("s.json", {"generators": [2, 3]})
    code, out, _ = run(capsys, "sgp", "info", f, "--quiet")
    assert code == 0 and out == ""


def test_formats_errors():
    from tracelab.errors import ParseError
    from tracelab.formats import load_semigroup_input

    with pytest.raises(ParseError):
        load_semigroup_input({"nothing": 1})
    with pytest.raises(ParseError):
        load_semigroup({"generators": "3,4"})
    with pytest.raises(ParseError):
        load_art_module({"kind": "mystery"}, load_algebra({"p": 2, "vars": ["x"], "monomial_relations": ["x^2"]}))
