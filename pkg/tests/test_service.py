from fastapi.testclient import TestClient

from intvalpoly.service import app

client = TestClient(app)

EXAMPLE_POLY_JSON = ["0", "0", "1/2", "0", "1/2"]


def test_health_and_orders_index():
    assert client.get("/health").json() == {"status": "ok"}
    names = client.get("/orders").json()["builtins"]
    assert "hurwitz" in names and "quadratic(<int>)" in names


def test_minpoly_endpoint():
    r = client.post("/minpoly", json={"matrix": [["0", "1/2"], ["0", "0"]]})
    assert r.status_code == 200
    assert r.json() == {"coefficients": ["0", "0", "1"], "pretty": "X^2"}


def test_charpoly_endpoint():
    r = client.post("/charpoly", json={"matrix": [["1", "0"], ["0", "1"]]})
    assert r.json()["coefficients"] == ["1", "-2", "1"]


def test_integral_check_endpoint():
    r = client.post("/integral-check", json={"matrix": [["3/2", "1/2"], ["1/2", "1/2"]]})
    body = r.json()
    assert body["integral"] is False
    assert body["minimal_polynomial"]["coefficients"] == ["1/2", "-2", "1"]


def test_spectrum_endpoint():
    r = client.post("/spectrum", json={"matrix": [["1", "0"], ["0", "2"]]})
    assert r.json()["coefficients"] == ["2", "-3", "1"]


def test_companion_endpoint():
    r = client.post("/companion", json={"poly": ["1", "-1", "1"]})
    assert r.json()["matrix"] == [["0", "-1"], ["1", "1"]]
    r = client.post("/companion", json={"poly": ["1", "2"]})
    assert r.status_code == 400


def test_member_int_endpoint_verdict_schema():
    r = client.post(
        "/member-int", json={"poly": EXAMPLE_POLY_JSON, "order": "quadratic(-3)"}
    )
    body = r.json()
    assert body["verdict"] == "yes"
    assert body["checked_count"] == 4
    assert body["witness"] is None

    r = client.post(
        "/member-int", json={"poly": EXAMPLE_POLY_JSON, "order": "quadratic_half(-3)"}
    )
    body = r.json()
    assert body["verdict"] == "no"
    assert body["witness"] == ["0", "1"]
    assert body["witness_value"] == ["-1/2", "0"]


def test_member_int_custom_order_definition():
    # Z[s], s^2 = -3, shipped as an explicit order file body
    order_def = {
        "rank": 2,
        "labels": ["1", "s"],
        "unity": [1, 0],
        "structure_constants": [
            [[1, 0], [0, 1]],
            [[0, 1], [-3, 0]],
        ],
    }
    r = client.post("/member-int", json={"poly": EXAMPLE_POLY_JSON, "order": order_def})
    assert r.json()["verdict"] == "yes"


def test_custom_order_with_natural_rep():
    from intvalpoly import builtin

    data = builtin("matrix(2)").to_json()
    r = client.post("/member-int", json={"poly": ["0", "-1/2", "1/2"], "order": data})
    assert r.json()["verdict"] == "no"


def test_custom_order_rejects_bad_table():
    order_def = {
        "rank": 2,
        "labels": ["1", "s"],
        "unity": [1, 0],
        "structure_constants": [
            [[1, 0], [0, 1]],
            [[0, 2], [-3, 0]],
        ],
    }
    r = client.post("/member-int", json={"poly": ["0", "1"], "order": order_def})
    assert r.status_code == 400


def test_member_intval_endpoint():
    r = client.post(
        "/member-intval",
        json={
            "poly": EXAMPLE_POLY_JSON,
            "order": "hurwitz",
            "sample": {"elements": [["0", "0", "0", "1"]]},
        },
    )
    body = r.json()
    assert body["verdict"] == "no"
    assert body["witness"] == ["0", "0", "0", "1"]

    r = client.post(
        "/member-intval",
        json={
            "poly": ["0", "1"],
            "order": "lipschitz",
            "sample": {"mod": 2},
            "whole_algebra": True,
        },
    )
    assert r.json()["verdict"] == "unknown-bounded"
    assert r.json()["checked_count"] == 16


def test_member_intval_empty_sample_rejected():
    r = client.post(
        "/member-intval",
        json={"poly": ["0", "1"], "order": "lipschitz", "sample": {}},
    )
    assert r.status_code == 400


def test_pullback_endpoint():
    r = client.post("/pullback", json={"poly": ["0", "-1/2", "1/2"], "modulus": ["0", "-1", "1"]})
    assert r.json() == {
        "member": True,
        "remainder": {"coefficients": ["0"], "pretty": "0"},
    }
    r = client.post("/pullback", json={"poly": EXAMPLE_POLY_JSON, "modulus": ["1", "-1", "1"]})
    assert r.json()["member"] is False
    assert r.json()["remainder"]["coefficients"] == ["-1/2"]


def test_certificate_endpoints():
    r = client.post(
        "/certificate/build", json={"poly": EXAMPLE_POLY_JSON, "order": "quadratic(-3)"}
    )
    body = r.json()
    assert body["degree"] == 36
    assert body["factor_count"] == 20
    assert body["denominator"] == 2
    assert body["modulus"] == 4

    r = client.post(
        "/certificate/verify",
        json={
            "certificate": body["certificate"],
            "poly": EXAMPLE_POLY_JSON,
            "order": "quadratic(-3)",
            "sample": {"mod": 4},
        },
    )
    assert r.json()["ok"] is True
    assert r.json()["sample_size"] == 16


def test_chain_endpoint():
    r = client.post(
        "/chain",
        json={"poly": ["0", "-1/2", "1/2"], "order": "quadratic(-3)", "sample": {"mod": 3}},
    )
    body = r.json()
    assert body["member_int"] == "no"
    assert body["member_intval_sample"] == "yes"
    assert body["pullback_sample"] is False
    assert body["implications_ok"] is True


def test_three_squares_endpoint():
    assert client.get("/three-squares/11").json() == {"n": 11, "decomposition": [1, 1, 3]}
    assert client.get("/three-squares/7").json() == {"n": 7, "decomposition": None}


def test_hurwitz_match_endpoint():
    r = client.post("/hurwitz-match", json={"quaternion": ["0", "3/5", "4/5", "0"]})
    body = r.json()
    assert body["match_quaternion"] == ["0", "1", "0", "0"]
    assert body["minimal_polynomial"]["pretty"] == "X^2 + 1"
    r = client.post("/hurwitz-match", json={"quaternion": ["1/3", "0", "0", "0"]})
    assert r.status_code == 400


def test_density_endpoints():
    r = client.post(
        "/density/refute", json={"poly": EXAMPLE_POLY_JSON, "order": "quadratic(-3)"}
    )
    body = r.json()
    assert body["check"] == "density-refute"
    assert body["witness"] == ["1/2", "1/2"]

    r = client.post("/density/companion", json={"count": 10, "seed": 1})
    assert r.json()["failures"] == []
    r = client.post("/density/triangular", json={"count": 10, "seed": 1})
    assert r.json()["failures"] == []
    r = client.post("/density/spectrum-transfer", json={"count": 10, "seed": 1})
    assert r.json()["failures"] == []


def test_examples_endpoints():
    for name in ("zsqrt3", "lipschitz"):
        r = client.post(f"/examples/{name}", json={})
        assert r.status_code == 200
        assert r.json()["ok"] is True
    r = client.post("/examples/hurwitz", json={"count": 25, "seed": 3})
    assert r.json()["ok"] is True
    r = client.post("/examples/nope", json={})
    assert r.status_code == 400


def test_malformed_body_is_422():
    assert client.post("/minpoly", json={"matrix": "zzz"}).status_code == 422
    assert client.post("/member-int", json={"poly": 5, "order": "integers"}).status_code == 422


def test_dimension_mismatch_is_400():
    r = client.post("/minpoly", json={"matrix": [["0", "1/2"]]})
    assert r.status_code == 400
    r = client.post(
        "/member-intval",
        json={
            "poly": ["0", "1"],
            "order": "lipschitz",
            "sample": {"elements": [["1", "0"]]},
        },
    )
    assert r.status_code == 400
