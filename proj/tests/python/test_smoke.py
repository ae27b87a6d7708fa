import json
import math
import os
import subprocess

import pytest

import ctxgraph


def cycle(n):
    return ctxgraph.Graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_chordality():
    cert = ctxgraph.is_chordal(cycle(5))
    assert cert["verdict"] == "nonchordal"
    assert len(cert["induced_cycle"]) == 5

    k4 = ctxgraph.Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    cert = ctxgraph.is_chordal(k4)
    assert cert["verdict"] == "chordal"
    assert ctxgraph.find_induced_cycle(k4) is None


def test_classify():
    assert ctxgraph.classify(cycle(4))["label"] == "a"
    assert ctxgraph.classify(cycle(5))["label"] == "c"
    with pytest.raises(ctxgraph.NoContextualityPossible):
        ctxgraph.classify(ctxgraph.Graph(3, [(0, 1), (1, 2), (0, 2)]))


def test_canonical_form_invariance():
    g = ctxgraph.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    h = ctxgraph.Graph(5, [(1, 2), (2, 3), (3, 4), (0, 4), (0, 1)])
    assert ctxgraph.canonical_form(g) == ctxgraph.canonical_form(h)


def test_enumerate_census():
    records = ctxgraph.enumerate_scenarios(6)
    assert len(records) == 24
    counts = {}
    for rec in records:
        label = rec["class"]["label"]
        counts[label] = counts.get(label, 0) + 1
    assert counts == {"a": 5, "b": 8, "c": 11}


def path_marginals():
    return {
        "graph": {"n": 3, "edges": [[0, 1], [1, 2]]},
        "outcomes": {"0": ["0", "1"], "1": ["0", "1"], "2": ["0", "1"]},
        "tables": [
            {"clique": [0, 1], "p": {"0,0": 0.4, "0,1": 0.2, "1,0": 0.2, "1,1": 0.2}},
            {"clique": [1, 2], "p": {"0,0": 0.3, "0,1": 0.3, "1,0": 0.2, "1,1": 0.2}},
        ],
    }


def test_extension():
    joint = ctxgraph.extend(path_marginals())
    assert joint["clique"] == [0, 1, 2]
    assert math.isclose(joint["p"]["0,0,0"], 0.4 * 0.3 / 0.6, rel_tol=1e-9)
    assert math.isclose(sum(joint["p"].values()), 1.0, rel_tol=1e-9)


def pr_box():
    corr = {"0,0": 0.5, "1,1": 0.5}
    anti = {"0,1": 0.5, "1,0": 0.5}
    return {
        "graph": {"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [0, 3]]},
        "outcomes": {str(v): ["0", "1"] for v in range(4)},
        "tables": [
            {"clique": [0, 1], "p": corr},
            {"clique": [1, 2], "p": corr},
            {"clique": [2, 3], "p": corr},
            {"clique": [0, 3], "p": anti},
        ],
    }


def test_membership():
    result = ctxgraph.membership(pr_box())
    assert result["verdict"] == "contextual"
    assert result["witness"]["value"] > result["witness"]["classical_bound"]


def test_realize():
    result = ctxgraph.realize(cycle(5))
    assert result["membership"]["verdict"] == "contextual"
    assert result["cycle_witness"]["classical_bound"] == 3
    assert math.isclose(result["cycle_witness"]["value"], 3.9443, abs_tol=1e-3)
    assert result["compatibility_graph"]["n"] == 5


def test_seesaw():
    value = ctxgraph.seesaw_cycle_max(4, dim=4, restarts=12, iterations=250)
    assert math.isclose(value, 2 * math.sqrt(2), abs_tol=1e-3)


def test_cli():
    cli = os.environ.get("CTXGRAPH_CLI")
    if not cli:
        pytest.skip("CLI path not provided")
    proc = subprocess.run([cli, "check-chordal", "/dev/stdin"],
                          input="5: 0-1,1-2,2-3,3-4,0-4", text=True,
                          capture_output=True)
    assert proc.returncode == 10
    cert = json.loads(proc.stdout)
    assert cert["verdict"] == "nonchordal"

    proc = subprocess.run([cli, "enumerate", "--max-n", "5"], text=True,
                          capture_output=True)
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["counts"] == {"a": 2, "b": 1, "c": 1}
