"""JSON analysis reports.

Reports are plain dicts of JSON types. Floats are written with Python's
shortest round-trip repr, so ``loads(dumps(r)) == r`` holds exactly.
"""

from __future__ import annotations

import json

import numpy as np

from . import __version__
from .components import AssumptionReport

SCHEMA_VERSION = 1
TIMESTAMP_KEY = "generated_at"


def to_builtin(obj):
    """Recursively convert numpy scalars/arrays and tuples into JSON-native types."""
    if isinstance(obj, dict):
        return {str(k): to_builtin(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_builtin(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [to_builtin(v) for v in obj.tolist()]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def new_report(command: str, parameters: dict, timestamp: str) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "modcomp", "version": __version__},
        "command": command,
        TIMESTAMP_KEY: timestamp,
        "parameters": dict(parameters),
        "warnings": [],
        "notes": [],
    }


def assumption_dict(rep: AssumptionReport) -> dict:
    return {
        "k": rep.k,
        "positive_alpha_count": rep.positive_alpha_count,
        "beta_count": rep.beta_count,
        "passed": rep.passed,
        "violations": [{"i": v.i, "kind": v.kind, "gap": v.gap} for v in rep.violations],
        "advisories": list(rep.advisories),
    }


def dumps(report: dict) -> str:
    return json.dumps(to_builtin(report), indent=2, sort_keys=True, allow_nan=False) + "\n"


def loads(text: str) -> dict:
    report = json.loads(text)
    if report.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema version {report.get('schema_version')!r}")
    return report


def without_timestamp(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != TIMESTAMP_KEY}
