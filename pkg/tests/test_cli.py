import json

import pytest

from tautring.cli import main, parse_monomial, primitive
from tautring.coefficients import CoeffContext


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_present(capsys, tmp_path):
    code, out, _ = run(capsys, "present", "--n", "1", "--d", "2")
    assert code == 0
    data = json.loads(out)
    assert len(data["vars"]) == 4 and data["dim"] == 2
    assert set(data) == {"n", "d", "dim", "vars", "relations", "flags"}
    assert set(data["vars"][0]) == {"name", "kind", "degree"}
    code, out, _ = run(capsys, "present", "--n", "3", "--d", "1")
    assert len(json.loads(out)["vars"]) == 2


def test_bad_arguments(capsys):
    assert run(capsys, "present", "--n", "0", "--d", "2")[0] == 2
    assert run(capsys, "hilbert", "--n", "1")[0] == 2
    assert run(capsys, "hilbert", "--n", "1", "--d", "2", "--format", "xml")[0] == 2
    assert run(capsys, "verify", "--suite", "nonsense")[0] == 2


def test_validation_failure_names_relation(capsys):
    code, out, err = run(capsys, "present", "--n", "1", "--d", "3", "--rel5", "as-printed")
    assert code == 3
    assert "FF:" in err and out == ""


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", "--n", "1", "--d", "2", "--invariant")
    table = json.loads(out)
    assert [r["invariant"] for r in table["rows"]][:3] == [1, 1, 1]
    assert table["duality"]["ok"] and not table["warnings"]
    code, out, _ = run(capsys, "hilbert", "--n", "3", "--d", "1", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "degree,ambient,ideal_rank,quotient"
    assert [int(l.split(",")[3]) for l in lines[1:6]] == [1, 1, 2, 1, 1]


def test_hilbert_warns_below_dim(capsys):
    code, out, _ = run(capsys, "hilbert", "--n", "3", "--d", "1", "--max-degree", "2")
    assert code == 0
    assert json.loads(out)["warnings"]


def test_integrate(capsys):
    code, out, _ = run(capsys, "integrate", "--n", "3", "--d", "1", "--format", "csv", "k2^4 k2^2*k3 k3^2")
    assert (code, out.strip()) == (0, "2 1 1")
    mons = ["k2^8", "k2^6*k3", "k2^4*k3^2", "k2^2*k3^3", "k3^4"]
    code, out, _ = run(capsys, "integrate", "--n", "3", "--d", "2", "--format", "csv", *mons)
    assert out.strip() == "92 18 4 1 0"


def test_integrate_degree_mismatch(capsys):
    assert run(capsys, "integrate", "--n", "3", "--d", "1", "k2^3")[0] == 4


def test_monomial_grammar():
    ctx = CoeffContext(3)
    assert parse_monomial("D{23}", ctx) == ctx.D(ctx.partition_of((1,)))
    assert parse_monomial("D32^2*k2", ctx) == ctx.D(ctx.partition_of((1,))) ** 2 * ctx.k2
    assert parse_monomial("F{2,3}", ctx) == ctx.F((2, 3))
    with pytest.raises(Exception):
        parse_monomial("D4", ctx)


def test_primitive():
    assert primitive([-4, -2, 0]) == [2, 1, 0]
    assert primitive(["1/2", "1/3"]) == [3, 2]


def test_cache_is_byte_identical(capsys, tmp_path):
    args = ["hilbert", "--n", "2", "--d", "2", "--invariant", "--cache-dir", str(tmp_path)]
    cold = run(capsys, *args)[1]
    assert len(list(tmp_path.glob("*.pkl"))) == 1
    warm = run(capsys, *args)[1]
    assert cold == warm
    plain = run(capsys, *args[:-2])[1]
    assert plain == cold


def test_cache_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("TAUTRING_CACHE_DIR", str(tmp_path))
    run(capsys, "present", "--n", "1", "--d", "2")
    assert list(tmp_path.glob("*.pkl"))


def test_cache_keys_differ_by_flags(capsys, tmp_path):
    run(capsys, "hilbert", "--n", "1", "--d", "3", "--cache-dir", str(tmp_path))
    run(capsys, "hilbert", "--n", "1", "--d", "3", "--subsets", "inclusive", "--cache-dir", str(tmp_path))
    assert len(list(tmp_path.glob("*.pkl"))) == 2


def test_verify_single_suite(capsys):
    code, out, err = run(capsys, "verify", "--suite", "grassmannian")
    assert code == 0
    report = json.loads(out)
    assert report["ok"] and report["rel5"] == "derived"
    assert "seconds" in report["results"][0]


def test_verify_fails_on_corrupted_build(capsys):
    # inclusive chains are a wrong reading; duality must catch it
    code, out, err = run(capsys, "verify", "--suite", "duality", "--subsets", "inclusive")
    assert code == 1
    assert "FAIL" in err
