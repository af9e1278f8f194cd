"""Reference tables of generic residual orbits and confluence data for F4 and G2."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from ..linform import LinForm, Q

_FILES = {
    ("orbits", "F4"): "f4_orbits.json",
    ("orbits", "G2"): "g2_orbits.json",
    ("confluence", "F4"): "f4_confluence.json",
    ("confluence", "G2"): "g2_confluence.json",
}


@lru_cache(maxsize=None)
def _load(kind: str, tag: str) -> dict:
    name = _FILES[(kind, tag)]
    return json.loads(resources.files(__package__).joinpath(name).read_text())


def has_reference(tag: str) -> bool:
    return ("orbits", tag) in _FILES


def reference_orbits(tag: str) -> list[dict]:
    """Rows ``{"label", "values": LinForms, "factors": LinForms}`` for ``tag``."""
    rows = []
    for row in _load("orbits", tag)["families"]:
        rows.append({
            "label": row["label"],
            "values": tuple(LinForm.parse(v) for v in row["values"]),
            "factors": tuple(LinForm.parse(v) for v in row["factors"]),
        })
    return rows


def reference_confluence(tag: str) -> list[dict]:
    """Cases ``{"k": (k1, k2), "rows": [(diagram, fiber labels), ...]}`` for ``tag``."""
    cases = []
    for case in _load("confluence", tag)["cases"]:
        rows = [
            (tuple(Q(x) for x in row["diagram"]), tuple(row["fiber"]))
            for row in case["rows"]
        ]
        cases.append({"k": tuple(Q(x) for x in case["k"]), "rows": rows})
    return cases
