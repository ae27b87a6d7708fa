"""Contextuality toolkit for compatibility graphs.

Thin wrapper over the native module; structured results cross the boundary
as JSON and are handed back as plain dicts and lists.
"""

import json

try:
    from . import _ctxgraph as _core
except ImportError:  # running against a build tree
    import _ctxgraph as _core

Graph = _core.Graph
NoContextualityPossible = _core.NoContextualityPossible
NotChordalError = _core.NotChordalError
InconsistentMarginalsError = _core.InconsistentMarginalsError
InconsistentBehaviorError = _core.InconsistentBehaviorError


def is_chordal(graph):
    return json.loads(_core.is_chordal_json(graph))


def find_induced_cycle(graph):
    return _core.find_induced_cycle_ge4(graph)


def classify(graph):
    return json.loads(_core.classify_json(graph))


def canonical_form(graph):
    return _core.canonical_form(graph)


def enumerate_scenarios(n_max, mode="induced"):
    return json.loads(_core.enumerate_scenarios_json(n_max, mode))


def check_consistency(marginals, tol=1e-9):
    return json.loads(_core.check_consistency_json(json.dumps(marginals), tol))


def extend(marginals, tol=1e-9):
    return json.loads(_core.vorobyev_extend_json(json.dumps(marginals), tol))


def membership(behavior, tol=1e-8):
    return json.loads(_core.membership_json(json.dumps(behavior), tol))


def realize(graph, seed=1):
    return json.loads(_core.realize_nonchordal_json(graph, seed))


def seesaw_cycle_max(n, dim=4, restarts=10, iterations=200, seed=1):
    return _core.seesaw_cycle_max(n, dim, restarts, iterations, seed)
