"""Slice functions over the quaternions: star products, star exponentials, square roots."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import SliceFunction, run_job as _run_job


def parse(expr):
    """Slice function from an expression tree given as a dict, list, number or JSON text."""
    return SliceFunction.parse(expr if isinstance(expr, str) else _json.dumps(expr))


def run(job):
    """Run a job (dict or JSON text); returns (exit_code, report dict)."""
    code, report = _run_job(job if isinstance(job, str) else _json.dumps(job))
    return code, _json.loads(report)
