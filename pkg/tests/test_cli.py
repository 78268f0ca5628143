import json

from click.testing import CliRunner

from hopftrees.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_enumerate_count():
    r = run("enumerate", "gsp", "3", "--count-only")
    assert r.exit_code == 0 and r.output.strip() == "12"
    r = run("enumerate", "ptree", "5", "--count-only")
    assert r.output.strip() == "197"


def test_enumerate_listing_deterministic():
    r1 = run("enumerate", "pbt", "3")
    r2 = run("enumerate", "pbt", "3")
    assert r1.output == r2.output
    lines = r1.output.splitlines()
    assert lines == sorted(lines) and len(lines) == 5


def test_enumerate_pf0():
    r = run("enumerate", "pf", "0")
    assert r.output.strip() == "|L"


def test_cap_exit_code():
    r = run("enumerate", "perm", "99")
    assert r.exit_code == 2


def test_parse_error_exit_code():
    r = run("parse", "gsp", "212")
    assert r.exit_code == 1
    r = run("op", "SSym", "F", "frobnicate", "1")
    assert r.exit_code == 1


def test_op_product():
    r = run("op", "TSymB", "F", "product", "--", "(L (L L))", "(L L L)")
    assert r.exit_code == 0
    assert r.output.count("+") == 2


def test_op_antipode_json():
    r = run("--format", "json", "op", "SSym", "M", "antipode", "4231")
    body = json.loads(r.output)
    coefs = {t["key"]: t["coef"] for t in body["terms"]}
    assert coefs["2134"] == -2


def test_order_queries():
    assert run("order", "tamari", "hasse", "3").output.count("->") == 5
    assert run("order", "weak", "leq", "123", "123").output.strip() == "true"
    comps = run("order", "planar_weak", "components", "3").output.split()
    assert len(comps) == 13


def test_verify_cli():
    r = run("verify", "counts", "--max-degree", "3")
    assert r.exit_code == 0
    assert "PASS: counts" in r.output
    r = run("verify", "nosuchsuite")
    assert r.exit_code == 1


def test_verify_output_deterministic_across_jobs():
    a = run("--format", "json", "verify", "counts", "--max-degree", "3", "--jobs", "1")
    b = run("--format", "json", "verify", "counts", "--max-degree", "3", "--jobs", "2")
    assert a.output == b.output


def test_verify_all_degree0_passes():
    r = run("verify", "hopf", "--max-degree", "0")
    assert r.exit_code == 0


def test_env_cap_override(monkeypatch):
    monkeypatch.setenv("HOPFTREES_MAX_DEGREE", "3")
    r = run("enumerate", "perm", "4")
    assert r.exit_code == 2
    monkeypatch.delenv("HOPFTREES_MAX_DEGREE")
    assert run("enumerate", "perm", "4").exit_code == 0
