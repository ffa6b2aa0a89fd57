"""Bounds for Hilbert coefficients and regularity of parameter ideals."""

import json

from ._gcmwb import (
    REPORT_VERSION,
    CapExceeded,
    EngineError,
    ParseError,
    colength,
    invariants,
    normalize_job,
    run_job,
)

__all__ = [
    "REPORT_VERSION",
    "CapExceeded",
    "EngineError",
    "ParseError",
    "colength",
    "invariants",
    "normalize_job",
    "run_job",
    "run_job_json",
]


def run_job_json(text, **overrides):
    """Run a job and decode its json report; returns (exit_code, report)."""
    code, out = run_job(text, format="json", **overrides)
    return code, json.loads(out)
