import pytest
from fastapi.testclient import TestClient

from src.main import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json()["status"] == "ok"


def test_table(client):
    response = client.post("/table", json={"group": "S3"})
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "success"
    data = body["data"]
    assert data["kind"] == "table"
    assert [row["values"] for row in data["rows"]] == [
        ["1 @6", "1 @6", "1 @6"],
        ["1 @6", "-1 @6", "1 @6"],
        ["2 @6", "0 @6", "-1 @6"],
    ]


def test_galois(client):
    response = client.post("/galois", json={"group": "A5", "ell": 7})
    assert response.status_code == 200
    action = response.json()["data"]["actions"][0]
    assert action["row_cycles"] == "(ch3 ch3')"
    assert action["col_cycles"] == "(5a 5b)"
    assert action["compatible"] is True


def test_pairs(client):
    response = client.post("/pairs", json={"group": "A5"})
    data = response.json()["data"]
    assert data["pair_classes"] == 22
    assert data["oracle"] == 22
    assert data["center_trivial"] is True


def test_braid(client):
    response = client.post("/braid", json={"group": "S3", "word": "s1 s1^-1", "pair": "(1 2 3),()"})
    data = response.json()["data"]
    assert data["input"] == data["output"]


def test_cover(client):
    response = client.post("/cover", json={"kind": "cyclic", "n": 12, "ell": 7})
    assert response.status_code == 200
    images = {a["deck"]: a["image"] for a in response.json()["data"]["action"]}
    assert images["gamma_3"] == "gamma_9"


def test_tuples(client):
    response = client.post("/tuples", json={"group": "Z2", "n": 2})
    assert response.json()["data"]["tuple_classes"] == 3


def test_parse_error_is_400(client):
    response = client.post("/table", json={"group": "(1 2"})
    assert response.status_code == 400
    body = response.json()
    assert body["status"] == "error"
    assert body["code"] == 400
    assert "offset 3" in body["message"]


def test_domain_error_is_422(client):
    response = client.post("/galois", json={"group": "A5", "ell": 2})
    assert response.status_code == 422
    assert "not coprime" in response.json()["message"]


def test_request_validation(client):
    response = client.post("/cover", json={"kind": "elliptic", "n": 3})
    assert response.status_code == 422


def test_blank_group_is_400(client):
    response = client.post("/table", json={"group": "   "})
    assert response.status_code == 400
    assert "expected group spec" in response.json()["message"]


def test_cover_above_cap_is_422(client):
    response = client.post("/cover", json={"kind": "cyclic", "n": 100000})
    assert response.status_code == 422
    assert "cover cap" in response.json()["message"]
