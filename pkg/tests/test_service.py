"""HTTP service surface via the FastAPI test client."""
from __future__ import annotations

from fastapi.testclient import TestClient

from cubeplan.service import app

client = TestClient(app)

L_TROMINO = {"d": 2, "cells": [[0, 0], [1, 0], [0, 1]]}
STRAIGHT = {"d": 2, "cells": [[0, 0], [1, 0], [2, 0]]}


def test_canonicalize_endpoint():
    r = client.post("/canonicalize", json={"config": L_TROMINO})
    assert r.status_code == 200
    body = r.json()
    assert body["move_count"] == len(body["trace"]["moves"])
    assert body["chain"]["length"] == 3
    assert body["chain"]["anchor"] == [1, 0]


def test_plan_endpoint_round_trips_through_validate():
    r = client.post("/plan", json={"source": L_TROMINO, "target": STRAIGHT})
    assert r.status_code == 200
    trace = r.json()["trace"]
    v = client.post("/validate", json={"config": L_TROMINO, "trace": trace,
                                       "expect": STRAIGHT})
    assert v.status_code == 200
    body = v.json()
    assert body["ok"] is True
    assert sorted(map(tuple, body["final"]["cells"])) == sorted(map(tuple, STRAIGHT["cells"]))


def test_plan_mismatch_is_409_infeasible():
    r = client.post("/plan", json={"source": L_TROMINO,
                                   "target": {"d": 2, "cells": [[0, 0]]}})
    assert r.status_code == 409
    assert r.json()["detail"]["code"] == "infeasible"


def test_invalid_config_is_422():
    r = client.post("/canonicalize",
                    json={"config": {"d": 2, "cells": [[0, 0, 0]]}})
    assert r.status_code == 422
    assert r.json()["detail"]["code"] == "invalid"


def test_validate_reports_offending_move():
    bad_trace = {"d": 2, "moves": [
        {"kind": "R", "src": [1, 0], "dst": [0, 1], "pivot": [0, 0]},
        {"kind": "R", "src": [1, 0], "dst": [0, 1], "pivot": [0, 0]},
    ]}
    r = client.post("/validate", json={"config": {"d": 2, "cells": [[0, 0], [1, 0]]},
                                       "trace": bad_trace})
    assert r.status_code == 200
    body = r.json()
    assert body["ok"] is False
    assert body["error_index"] == 1
    assert body["error_kind"] == "illegal-geometry"


def test_validate_dimension_mismatch():
    r = client.post("/validate", json={"config": {"d": 2, "cells": [[0, 0], [1, 0]]},
                                       "trace": {"d": 3, "moves": []}})
    body = r.json()
    assert body["ok"] is False and body["error_kind"] == "malformed"


def test_validate_expectation_mismatch():
    r = client.post("/validate", json={
        "config": {"d": 2, "cells": [[0, 0], [1, 0]]},
        "trace": {"d": 2, "moves": []},
        "expect": {"d": 2, "cells": [[0, 0], [0, 1]]}})
    body = r.json()
    assert body["ok"] is False and body["error_kind"] == "expectation"


def test_analyze_endpoint():
    ring = {"d": 2, "cells": [[x, y] for x in range(3) for y in range(3)
                              if x in (0, 2) or y in (0, 2)]}
    r = client.post("/analyze", json={"config": ring})
    body = r.json()
    assert body == {"n": 8, "d": 2, "boundary_count": 8, "hole_count": 1,
                    "articulation": [], "nonarticulate_count": 8}


def test_generate_endpoint_deterministic():
    req = {"n": 15, "d": 2, "seed": 9, "style": "blob"}
    a = client.post("/generate", json=req).json()
    b = client.post("/generate", json=req).json()
    assert a == b
    assert len(a["config"]["cells"]) == 15


def test_generate_rejects_bad_style():
    r = client.post("/generate", json={"n": 5, "d": 2, "seed": 0, "style": "spiral"})
    assert r.status_code == 422


def test_oracle_endpoint():
    r = client.post("/oracle", json={"source": L_TROMINO, "target": STRAIGHT})
    body = r.json()
    assert body["reachable"] is True
    assert body["min_moves"] >= 1
    assert body["exhausted"] is False


def test_stats_endpoint():
    r = client.post("/stats", json={"d": 2, "n_list": [4, 6], "trials": 1, "seed": 2})
    body = r.json()
    assert [row["n"] for row in body["rows"]] == [4, 6]
    assert body["csv"].startswith("n,trial,moves,elapsed_ms\n")
