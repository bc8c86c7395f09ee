import math
import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from plb.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app, raise_server_exceptions=False)


def test_bound_endpoint(client):
    resp = client.post(
        "/bound",
        json={"p": 2.0, "n": 3, "radius": 1.0, "method": "double_singular"},
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["method"] == "double_singular"
    assert body["value"] == pytest.approx(4.0, abs=1e-12)
    assert body["applicable"] is True
    assert body["R"] == 1.0


def test_bound_via_volume(client):
    volume = 4.0 * math.pi / 3.0
    resp = client.post(
        "/bound",
        json={"p": 2.0, "n": 3, "volume": volume, "method": "cheeger"},
    )
    assert resp.status_code == 200
    assert resp.json()["value"] == pytest.approx(2.25, rel=1e-10)


def test_bound_rejects_bad_p(client):
    resp = client.post(
        "/bound",
        json={"p": 0.5, "n": 3, "radius": 1.0, "method": "cheeger"},
    )
    assert resp.status_code == 422


def test_domain_requires_radius_xor_volume(client):
    for extra in ({}, {"radius": 1.0, "volume": 2.0}):
        resp = client.post(
            "/bound", json={"p": 2.0, "n": 3, "method": "cheeger", **extra}
        )
        assert resp.status_code == 422


def test_bound_family_point_requires_delta(client):
    resp = client.post(
        "/bound",
        json={"p": 2.0, "n": 3, "radius": 1.0, "method": "family_point"},
    )
    assert resp.status_code == 422
    resp = client.post(
        "/bound",
        json={
            "p": 2.0,
            "n": 3,
            "radius": 1.0,
            "method": "family_point",
            "delta": 1.0,
        },
    )
    assert resp.status_code == 200
    assert resp.json()["value"] == pytest.approx(4.8481, abs=5e-5)


def test_sweep_continues_past_inapplicable(client):
    resp = client.post(
        "/sweep",
        json={
            "p_start": 2.0,
            "p_stop": 4.0,
            "p_step": 1.0,
            "n_list": [3],
            "methods": ["hardy", "cheeger"],
            "radius": 1.0,
        },
    )
    assert resp.status_code == 200
    rows = resp.json()["rows"]
    assert len(rows) == 6
    hardy_at_3 = [
        r for r in rows if r["method"] == "hardy" and r["p"] == 3.0
    ]
    assert hardy_at_3 and hardy_at_3[0]["applicable"] is False
    cheeger = [r for r in rows if r["method"] == "cheeger"]
    assert all(r["applicable"] for r in cheeger)


def test_verify_endpoint(client):
    resp = client.post("/verify", json={"suite": "sharpness"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["all_passed"] is True
    assert body["reports"]


def test_verify_impossible_tolerance(client):
    resp = client.post("/verify", json={"suite": "all", "tol": 1e-20})
    assert resp.status_code == 200
    assert resp.json()["all_passed"] is False


def test_eig_endpoint(client):
    resp = client.post(
        "/eig",
        json={"p": 2.0, "n": 3, "radius": 1.0, "grid": 1024},
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["method"] == "eigen_solver"
    assert body["value"] == pytest.approx(math.pi ** 2, rel=1e-5)
    assert body["meta"]["iterations"] >= 1


def test_compare_endpoint(client):
    resp = client.post("/compare", json={"which": "p0n", "n": 2})
    assert resp.status_code == 200
    results = resp.json()["results"]
    assert results[0]["p_star"] == pytest.approx(1.5, abs=1e-9)

    resp = client.post("/compare", json={"which": "p3n", "n": 5})
    assert resp.status_code == 200
    result = resp.json()["results"][0]
    assert result["applicable"] is False


def test_tables_endpoint(client):
    resp = client.post("/tables", json={"which": "1"})
    assert resp.status_code == 200
    crossovers = resp.json()["crossovers"]
    assert len(crossovers) == 8


def test_unknown_method_rejected(client):
    resp = client.post(
        "/bound",
        json={"p": 2.0, "n": 3, "radius": 1.0, "method": "nope"},
    )
    assert resp.status_code == 422
