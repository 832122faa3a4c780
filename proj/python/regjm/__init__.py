"""Python access to the regjm core."""

import json

from ._regjm import (
    DEFAULT_PRIME,
    BudgetExceeded,
    HypothesisFailure,
    InvalidInput,
    betti_ascii,
    build_jm,
    hypothesis_check,
    max_jump,
    module_from_presentation,
    power_ideal_betti,
    predicted_betti_jm,
    predicted_degree_sequence,
    pure_module,
    regularity,
    resolve_ideal,
    scan,
    verify_json,
)


def verify(n, k, d, N, **kwargs):
    """Certificate for the pure module (n, k, d) in codimension N, as a dict."""
    return json.loads(verify_json(n, k, d, N, **kwargs))


__all__ = [
    "DEFAULT_PRIME",
    "BudgetExceeded",
    "HypothesisFailure",
    "InvalidInput",
    "betti_ascii",
    "build_jm",
    "hypothesis_check",
    "max_jump",
    "module_from_presentation",
    "power_ideal_betti",
    "predicted_betti_jm",
    "predicted_degree_sequence",
    "pure_module",
    "regularity",
    "resolve_ideal",
    "scan",
    "verify",
    "verify_json",
]
