"""Exact p-adic workbench: orbit classification, local orbital integrals and
transfer constants, computed in exact rational arithmetic.

The heavy lifting lives in the C++ extension ``orbw._orbw``; this package adds
small JSON conveniences on top.
"""

import json as _json

from ._orbw import (  # noqa: F401
    charpoly,
    lfactor_central,
    minimal_recurrence,
    orbital_central_unit,
    run,
    valuation,
    verify,
)

__all__ = [
    "charpoly",
    "lfactor_central",
    "minimal_recurrence",
    "orbital_central_unit",
    "run",
    "run_verb",
    "valuation",
    "verify",
    "verify_report",
]


def run_verb(verb, payload=None, config=None):
    """Dispatch a workbench verb with dict payloads and results."""
    cfg = _json.dumps(config) if config is not None else ""
    pl = _json.dumps(payload) if payload is not None else ""
    return _json.loads(run(verb, cfg, pl))


def verify_report(suite="all", seed=1):
    """Run an acceptance suite and return the report as a dict."""
    return _json.loads(verify(suite, seed))
