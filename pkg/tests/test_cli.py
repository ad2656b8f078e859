import io
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powersums import __version__, cli
from powersums import families as fam

TYPE11 = ["cm-check", "--family", "type11", "--cqt", "1,2,3", "--max-degree", "8"]


def run(argv, **kw):
    buf = io.BytesIO()
    code = cli.dispatch(argv, out=buf, **kw)
    return code, buf.getvalue()


def run_json(argv):
    code, out = run(argv + ["--format", "json"])
    assert code == 0
    return json.loads(out)


def assert_no_floats(obj):
    assert not isinstance(obj, float)
    if isinstance(obj, dict):
        for v in obj.values():
            assert_no_floats(v)
    elif isinstance(obj, list):
        for v in obj:
            assert_no_floats(v)


# -- reports ---------------------------------------------------------------------------


def test_cm_check_type11():
    rep = run_json(["cm-check", "--family", "type11", "--cqt", "1,2,3", "--max-degree", "12"])
    assert set(rep) == {"config", "results", "provenance"}
    res = rep["results"]
    assert res["verdict"] == "consistent_cm" and res["detail"] == "ConsistentCM(12)"
    assert res["dims"]["computed"] == res["dims"]["predicted"] == res["dims"]["conditions"]
    assert rep["config"] == {
        "command": "cm-check",
        "params": {"family": "type11", "cqt": ["1", "2", "3"]},
        "max_degree": 12,
        "seed": 0,
    }
    assert rep["provenance"]["version"] == __version__
    assert rep["provenance"]["screening"] == {"admissible": True, "rule": None}
    assert_no_floats(rep)


def test_refutation_exits_zero():
    rep = run_json(["cm-check", "--family", "type11", "--cqt", "1,2,3", "--a4", "1", "--max-degree", "8"])
    assert rep["results"]["verdict"] == "refuted"
    assert rep["results"]["degree"] == 4


def test_inadmissible_exits_two(capsys):
    code, out = run(["cm-check", "--family", "type11", "--a1", "1", "--a2", "-1"])
    assert code == 2 and out == b""
    assert "a2 = -a1^2" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["cm-check", "--family", "type11"],
        ["cm-check", "--family", "type-rs", "--a", "5"],
        ["cm-check", "--family", "type11", "--cqt", "1,2"],
        ["cm-check", "--family", "type11", "--cqt", "1,x,3"],
        ["hilbert", "--family", "type-rs", "--rs", "1,1", "--qt", "2,2"],
        ["hilbert", "--family", "mquasi", "--rs", "2,1", "--m", "1"],
        ["appendix", "--rs", "2,2", "--m", "2"],
        ["arrangement", "--lambda", "2,1", "--max-degree", "-1"],
        ["solve-cqt", "0", "1", "1"],
        ["nonsense"],
        ["merge-kernel", "--m", "1", "--n", "2"],
    ],
)
def test_bad_input_exits_two(argv):
    assert run(argv)[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["hilbert", "--family", "type11", "--cqt", "1,2,3", "--max-degree", "5"],
        ["hilbert", "--family", "type-rs", "--rs", "2,1", "--a", "5", "--max-degree", "5"],
        ["quasi-dim", "--family", "mquasi-trig", "--rs", "2,1", "--m", "2", "--max-degree", "4"],
        ["cm-check", "--family", "type-rs", "--rs", "1,1", "--qt", "random", "--max-degree", "5"],
        ["arrangement", "--lambda", "2,2", "--max-degree", "6"],
        ["arrangement", "--lambda", "2,1,1", "--max-degree", "3"],
        ["merge-kernel", "--m", "1", "--n", "3", "--max-degree", "5"],
        ["appendix", "--rs", "2,1", "--m", "2", "--max-degree", "6"],
        ["gorenstein", "--r", "1", "--m", "2"],
        ["solve-cqt", "-1/2", "-3/8", "-7/26"],
        ["conjecture-scan", "--n-max", "3", "--max-degree", "6"],
    ],
)
def test_valid_input_exits_zero(argv):
    for fmt in ("json", "csv", "pretty"):
        assert run(argv + ["--format", fmt])[0] == 0


def test_internal_error_exits_one(monkeypatch):
    def boom(cfg, prov):
        raise RuntimeError("boom")

    monkeypatch.setitem(cli.RUNNERS, "merge-kernel", boom)
    assert run(["merge-kernel", "--m", "1", "--n", "3"])[0] == 1


def test_solve_cqt_negative_values():
    rep = run_json(["solve-cqt", "-1/2", "-3/8", "-7/26"])
    assert rep["results"] == {"solutions": [["2/3", "1/2", "1/3"], ["1", "2", "3"]], "indicator": "rational"}


def test_arrangement_report():
    res = run_json(["arrangement", "--lambda", "2,1", "--max-degree", "6"])["results"]
    assert res["components"] == 3 and res["hilbert_function"][:3] == [1, 3, 6]
    assert res["cm"]["verdict"] == "consistent_cm" and res["conjectured_cm"] is True


def test_arrangement_window_note():
    res = run_json(["arrangement", "--lambda", "2,1,1,1,1", "--max-degree", "4"])["results"]
    assert res["cm"] is None and "raise D" in res["note"]


# -- csv -----------------------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv, header",
    [
        (TYPE11, "degree,dim_computed,dim_predicted,dim_conditions"),
        (["hilbert", "--family", "type11", "--cqt", "1,2,3"], "degree,dim_predicted"),
        (["quasi-dim", "--family", "mquasi", "--rs", "2,1", "--m", "2", "--max-degree", "3"], "degree,dim_conditions"),
        (["arrangement", "--lambda", "2,1", "--max-degree", "4"], "degree,dim,dim_quotient"),
        (["merge-kernel", "--m", "1", "--n", "3", "--max-degree", "4"], "degree,dim_kernel,dim_predicted"),
        (["appendix", "--rs", "2,2", "--m", "3", "--max-degree", "4"], "degree,hilbert_P"),
        (["appendix", "--rs", "2,1", "--m", "2", "--max-degree", "4"], "degree,hilbert_P,form2,form3"),
        (["gorenstein", "--r", "1", "--m", "2"], "degree,coefficient"),
        (["solve-cqt", "1", "2", "5"], "c,q,t"),
        (["conjecture-scan", "--n-max", "2", "--max-degree", "4"], "lambda,conjectured_cm,outcome,first_deviation"),
    ],
)
def test_csv_headers(argv, header):
    code, out = run(argv + ["--format", "csv"])
    assert code == 0
    assert out.decode().splitlines()[0] == header


def test_csv_rows_per_degree():
    lines = run(TYPE11 + ["--format", "csv"])[1].decode().splitlines()
    assert len(lines) == 10
    assert lines[1:5] == ["0,1,1,1", "1,1,1,1", "2,2,2,2", "3,3,3,3"]


# -- determinism and cache ---------------------------------------------------------------


@pytest.mark.parametrize("fmt", ["json", "csv", "pretty"])
def test_byte_identical(fmt):
    argv = ["cm-check", "--family", "type-rs", "--rs", "1,1", "--qt", "random", "--seed", "3", "--max-degree", "6"]
    assert run(argv + ["--format", fmt]) == run(argv + ["--format", fmt])


def test_cache_hit(tmp_path, monkeypatch):
    argv = TYPE11 + ["--format", "json", "--cache-dir", str(tmp_path)]
    first = run(argv)
    assert len(list(tmp_path.glob("*.json"))) == 1

    def boom(cfg, prov):
        raise AssertionError("cache should have been used")

    monkeypatch.setitem(cli.RUNNERS, "cm-check", boom)
    assert run(argv) == first


def test_cache_env_variable(tmp_path, monkeypatch):
    monkeypatch.setenv("POWERSUM_CACHE", str(tmp_path))
    run(TYPE11)
    assert len(list(tmp_path.glob("*.json"))) == 1


def test_corrupt_cache_recomputes(tmp_path):
    argv = TYPE11 + ["--format", "json", "--cache-dir", str(tmp_path)]
    first = run(argv)
    (entry,) = tmp_path.glob("*.json")
    entry.write_text("{not json")
    assert run(argv) == first
    assert json.loads(entry.read_text())["results"]


def test_unwritable_cache_warns(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    with pytest.warns(RuntimeWarning):
        code, out = run(TYPE11 + ["--format", "json", "--cache-dir", str(blocker / "sub")])
    assert code == 0 and json.loads(out)["results"]["verdict"] == "consistent_cm"


def test_cache_key_changes():
    base = cli.ExperimentConfig("cm-check", {"family": "type11", "cqt": ["1", "2", "3"]}, 8)
    other_D = cli.ExperimentConfig("cm-check", base.params, 9)
    assert base.cache_key() != other_D.cache_key()
    assert base.cache_key() == cli.ExperimentConfig("cm-check", dict(base.params), 8, format="csv").cache_key()


def test_cache_key_tracks_version(monkeypatch):
    cfg = cli.ExperimentConfig("cm-check", {"family": "type11"}, 8)
    before = cfg.cache_key()
    monkeypatch.setattr(cli, "__version__", "999")
    assert cfg.cache_key() != before


def test_config_round_trip():
    cfg = cli.ExperimentConfig("arrangement", {"lambda": [3, 2]}, 10, seed=4, format="csv", cache_dir="/tmp/x")
    assert cli.ExperimentConfig.from_json(cfg.to_json()) == cfg


def test_exact_rejects_floats():
    with pytest.raises(TypeError):
        cli.exact({"x": 0.5})


def test_short_explicit_sequence_is_usage_error(capsys):
    assert run(["cm-check", "--family", "type11", "--seq", "-1,2,5", "--max-degree", "4"])[0] == 2
    assert "needs a1..a4" in capsys.readouterr().err


small_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@settings(max_examples=40, deadline=None)
@given(small_rationals, small_rationals, small_rationals)
def test_exit_code_grid_type11(c, q, t):
    code, _ = run(["hilbert", "--family", "type11", "--cqt", f"{c},{q},{t}", "--max-degree", "4", "--format", "json"])
    assert code == (0 if fam.admissible(fam.Type11(fam.CQT(c, q, t))) else 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), small_rationals)
def test_exit_code_grid_classical(r, s, a):
    argv = ["hilbert", "--family", "type-rs", "--rs", f"{r},{s}", "--a", str(a), "--max-degree", "4"]
    assert run(argv)[0] == (0 if fam.admissible(fam.TypeRS(r, s, fam.Classical(a))) else 2)
