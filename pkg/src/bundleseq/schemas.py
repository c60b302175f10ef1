"""JSON Schemas (draft 2020-12) for the reports written by the CLI."""

from __future__ import annotations

_INT_OR_NULL = {"type": ["integer", "null"]}

INVARIANT_REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "InvariantReport",
    "type": "object",
    "required": ["sequence", "t", "w", "c2_defect", "z", "j", "epsilon", "split"],
    "properties": {
        "sequence": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        },
        "t": {"type": "integer", "minimum": 1},
        # null only in enumeration rows whose terminal pair is below -1
        "w": {"type": ["integer", "null"], "minimum": 0},
        "c2_defect": {"type": "integer"},
        "z": _INT_OR_NULL,
        "j": _INT_OR_NULL,
        "epsilon": {"enum": [0, -1, None]},
        "split": {"type": "boolean"},
        "cech_w": {"type": "integer", "minimum": 0},
        "agree": {"type": "boolean"},
    },
    "additionalProperties": False,
}

AUDIT_REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "AuditReport",
    "type": "object",
    "required": ["claim", "j", "epsilon", "claimed", "attained", "missing", "extra", "holds"],
    "properties": {
        "claim": {"type": "string"},
        "j": {"type": "integer", "minimum": 1},
        "epsilon": {"enum": [0, -1]},
        "claimed": {"type": "object"},
        "attained": {"type": "array"},
        "missing": {"type": "array"},
        "extra": {"type": "array"},
        "holds": {"type": "boolean"},
        "details": {"type": "object"},
        "parts": {"type": "array", "items": {"$ref": "#"}},
    },
    "additionalProperties": False,
}

ENUMERATE_SUMMARY = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "EnumerateSummary",
    "type": "object",
    "required": ["start", "count"],
    "properties": {
        "start": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        "count": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}
