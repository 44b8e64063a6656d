"""Python access to the mdrlab core."""

import json

from ._mdrlab import (
    ConfigError,
    DimensionError,
    DomainError,
    Error,
    ZeroProbabilityError,
    bell_state,
    chsh_composite,
    cnot_u13,
    evaluate_cnot,
    evaluate_scenario,
    pauli_op,
    post_interaction_cnot,
    project_prepare,
    theorem2_bound,
    vertex_min_radius,
)

__all__ = [
    "ConfigError",
    "DimensionError",
    "DomainError",
    "Error",
    "ZeroProbabilityError",
    "bell_state",
    "chsh_composite",
    "cnot_u13",
    "evaluate_cnot",
    "evaluate_scenario",
    "pauli_op",
    "post_interaction_cnot",
    "project_prepare",
    "run",
    "theorem2_bound",
    "vertex_min_radius",
]


def run(mode, **options):
    """Run a mode and return (report dict, csv text, exit code).

    Options use the configuration-file keys: seed, trials, grid_points,
    tol_identity, tol_inequality, out_csv, out_json.
    """
    from ._mdrlab import _run

    config = dict(options, mode=mode)
    code, report, csv = _run(json.dumps(config))
    return json.loads(report), csv, code
