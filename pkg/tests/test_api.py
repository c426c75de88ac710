import pytest
from fastapi.testclient import TestClient

from Api.main import app
from tests.conftest import D3, VT, VT_CANONICAL


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json()["status"] == "ok"


def test_validate(client):
    r = client.post("/diagrams/validate", json={"gauss": VT})
    assert r.json() == {"valid": True, "violations": []}


def test_bad_diagram_is_rejected(client):
    r = client.post("/diagrams/validate", json={"gauss": "O1+ X"})
    assert r.status_code == 400
    assert "X" in r.json()["detail"]


def test_number(client):
    r = client.post("/diagrams/number", json={"gauss": VT, "mod": 0})
    body = r.json()
    assert body["solvable"] is False
    assert body["witness"]
    r = client.post("/diagrams/number", json={"gauss": D3, "mod": 2})
    assert r.json()["solvable"] is True
    assert client.post("/diagrams/number", json={"gauss": VT, "mod": -1}).status_code == 422


def test_cutsys(client):
    r = client.post("/diagrams/cutsys", json={"gauss": VT})
    assert r.json()["diagram"] == VT_CANONICAL
    r = client.post("/diagrams/cutsys", json={"gauss": VT_CANONICAL, "mode": "check"})
    assert r.json()["valid"] is True
    assert client.post("/diagrams/cutsys", json={"gauss": VT, "mode": "lift", "m": 2}).status_code == 400
    assert client.post("/diagrams/cutsys", json={"gauss": VT, "mode": "lift"}).status_code == 400


def test_cover(client):
    r = client.post("/diagrams/cover", json={"gauss": VT, "m": 2, "trace": True})
    body = r.json()
    assert body["diagram"] == "O1+ O4+ U2+ U3+\nO2+ O3+ U1+ U4+"
    assert body["components"] == 2
    assert body["trace"]["4"] == [2, 1]
    # marks that do not number the diagram
    r = client.post("/diagrams/cover", json={"gauss": "O1+ !+ O2+ U1+ U2+", "m": 2})
    assert r.status_code == 400


def test_invariants(client):
    r = client.post("/diagrams/invariants", json={"gauss": VT})
    assert r.json()["fingerprint"] == "c=1 lk=[[0]] ow=[2]"


def test_obstruct(client):
    r = client.post("/diagrams/obstruct", json={"gauss": VT, "m": 2})
    assert r.json()["verdict"] == "Obstructed"
    assert client.post("/diagrams/obstruct", json={"gauss": VT, "m": 1}).status_code == 422


def test_iso(client):
    r = client.post("/diagrams/iso", json={"first": "O1+ U2+\nU1+ O2+", "second": "U7+ O3+\nO7+ U3+"})
    assert r.json()["isomorphic"] is True
