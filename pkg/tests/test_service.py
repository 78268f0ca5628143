import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from hopftrees.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health_and_config(client):
    assert client.get("/health").json() == {"status": "ok"}
    caps = client.get("/config").json()["caps"]
    assert caps["pf"] >= 5


def test_parse_endpoint(client):
    r = client.post("/parse", json={"kind": "gsp", "text": "1213"})
    assert r.status_code == 200 and r.json() == {"kind": "gsp", "text": "1213"}
    r = client.post("/parse", json={"kind": "gsp", "text": "212"})
    assert r.status_code == 400 and "212-avoiding" in r.json()["detail"]
    r = client.post("/parse", json={"kind": "nope", "text": "1"})
    assert r.status_code == 400


def test_enumerate_endpoint(client):
    r = client.post("/enumerate", json={"kind": "gsp", "degree": 3, "count_only": True})
    assert r.status_code == 200 and r.json()["count"] == 12 and r.json()["items"] is None
    r = client.post("/enumerate", json={"kind": "pf", "degree": 0})
    assert r.json()["items"] == [{"kind": "pf", "text": "|L"}]
    r = client.post("/enumerate", json={"kind": "perm", "degree": 40})
    assert r.status_code == 422


def test_op_endpoint(client):
    r = client.post(
        "/op",
        json={
            "algebra": "TSymB",
            "basis": "F",
            "operation": "product",
            "operands": ["(L (L L))", "(L L L)"],
        },
    )
    assert r.status_code == 200
    assert [t["key"] for t in r.json()["terms"]] == [
        "((L L L) (L L))",
        "(L ((L L L) L))",
        "(L (L (L L L)))",
    ]
    r = client.post(
        "/op",
        json={"algebra": "SSym", "basis": "M", "operation": "antipode", "operands": ["4231"]},
    )
    body = r.json()
    coefs = {t["key"]: t["coef"] for t in body["terms"]}
    assert coefs["2134"] == -2 and all(c < 0 for c in coefs.values())
    r = client.post(
        "/op", json={"algebra": "SSym", "basis": "F", "operation": "antipode", "operands": [""]}
    )
    assert r.json()["terms"] == [{"coef": 1, "key": ""}]
    r = client.post(
        "/op",
        json={
            "algebra": "SSym",
            "basis": "F",
            "operation": "tobasis",
            "operands": ["321"],
            "target_basis": "M",
        },
    )
    assert r.json()["terms"] == [{"coef": 1, "key": "321"}]
    r = client.post(
        "/op",
        json={
            "algebra": "STSym",
            "basis": "F",
            "operation": "dendriform",
            "operands": ["12", "11"],
            "which": "<<",
        },
    )
    assert r.status_code == 200
    r = client.post(
        "/op", json={"algebra": "TSymA", "basis": "M", "operation": "antipode", "operands": ["(L L)"]}
    )
    assert r.status_code == 400


def test_order_endpoint(client):
    r = client.post("/order", json={"order": "tamari", "query": "hasse", "degree": 3})
    dot = r.json()["dot"]
    assert dot.count("->") == 5
    r = client.post("/order", json={"order": "weak", "query": "leq", "x": "123", "y": "123"})
    assert r.json() == {"result": True}
    r = client.post("/order", json={"order": "planar_weak", "query": "components", "degree": 3})
    comps = r.json()["components"]
    assert sum(len(c) for c in comps) == 13
    r = client.post("/order", json={"order": "weak", "query": "join", "x": "213", "y": "132"})
    assert r.json()["result"] == "321"
    r = client.post("/order", json={"order": "weak", "query": "mobius", "x": "123", "y": "123"})
    assert r.json()["value"] == 1
    r = client.post("/order", json={"order": "weak", "query": "covers-list", "degree": 2})
    assert r.json()["covers"] == [["12", "21"]]
    r = client.post("/order", json={"order": "weak", "query": "leq", "x": "123", "y": "1234"})
    assert r.status_code == 400


def test_verify_endpoint(client):
    r = client.post("/verify", json={"suite": "counts", "max_degree": 4})
    body = r.json()
    assert body["passed"] is True
    assert all(e["status"] == "pass" for e in body["report"])
    r = client.post("/verify", json={"suite": "nope", "max_degree": 2})
    assert r.status_code == 400


def test_op_dualproduct(client):
    r = client.post(
        "/op",
        json={
            "algebra": "SSym",
            "basis": "Fdual",
            "operation": "dualproduct",
            "operands": ["21", "12"],
        },
    )
    assert r.status_code == 200
    keys = [t["key"] for t in r.json()["terms"]]
    assert keys[0] == "2134" and keys[-1] == "4312" and len(keys) == 6
