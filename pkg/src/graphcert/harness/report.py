"""Deterministic JSON/TSV reports of verdicts."""

import json
import re
from collections import Counter

from ..errors import InternalConsistencyError, InvalidArgument
from .verify import COUNTEREXAMPLE, EXHAUSTED, recheck

TSV_COLUMNS = ("graph_id", "statement", "roles", "satisfied_disjunct", "nodes", "detail", "graph6", "certificate")


def natural_key(text):
    return [(0, int(t), "") if t.isdigit() else (1, 0, t) for t in re.split(r"(\d+)", text) if t]


def sort_key(v):
    return natural_key(v.graph_id), v.statement, json.dumps(v.roles, sort_keys=True)


def summarize(verdicts):
    outcomes = Counter((v.statement, v.satisfied_disjunct) for v in verdicts)
    return {
        "total": len(verdicts),
        "outcomes": {f"{s}:{d}": n for (s, d), n in sorted(outcomes.items())},
        "counterexamples": [v.graph_id for v in sorted(verdicts, key=sort_key)
                            if v.satisfied_disjunct == COUNTEREXAMPLE],
        "budget_exhausted": [v.graph_id for v in sorted(verdicts, key=sort_key)
                             if v.satisfied_disjunct == EXHAUSTED],
    }


def emit_report(verdicts, fmt="json", meta=None):
    """Render verdicts after re-validating every certificate.

    Raises :class:`InternalConsistencyError` if any certificate fails.
    """
    if fmt not in ("json", "tsv"):
        raise InvalidArgument(f"unknown report format {fmt!r}")
    ordered = sorted(verdicts, key=sort_key)
    for v in ordered:
        bad = recheck(v)
        if bad:
            raise InternalConsistencyError(
                f"certificate for {v.graph_id}/{v.statement} failed re-validation: " + "; ".join(bad))
    meta = dict(meta or {})
    meta["summary"] = summarize(ordered)
    if fmt == "json":
        doc = {"meta": meta, "results": [v.to_json() for v in ordered]}
        return json.dumps(doc, sort_keys=True, indent=1) + "\n"
    lines = ["# " + json.dumps(meta, sort_keys=True), "\t".join(TSV_COLUMNS)]
    for v in ordered:
        row = v.to_json()
        cells = []
        for col in TSV_COLUMNS:
            x = row[col]
            cells.append(x if isinstance(x, str) else json.dumps(x, sort_keys=True, separators=(",", ":")))
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"
