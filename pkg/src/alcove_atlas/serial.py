"""Serialization helpers shared by the library and the CLI.

All on-disk artifacts (JSON-lines alcove sets, graph exports, verification
reports) carry ``schema_version`` so downstream readers can detect format
drift. Python-side data is tuple-heavy for hashability; ``jsonify`` converts
it to plain lists/dicts that ``json.dumps`` accepts.
"""

from __future__ import annotations

SCHEMA_VERSION = "1"


def jsonify(value):
    """Recursively convert tuples to lists so the value is JSON-ready."""
    if isinstance(value, tuple):
        return [jsonify(v) for v in value]
    if isinstance(value, list):
        return [jsonify(v) for v in value]
    if isinstance(value, dict):
        return {key: jsonify(val) for key, val in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(jsonify(v) for v in value)
    return value


def label_text(label) -> str:
    """Render a label (int tuple, or nested tuple of them) compactly.

    Tuples of single digits render as digit strings (``(3,5,4,5)`` ->
    ``"3545"``); anything with a multi-digit entry falls back to
    comma-separated. Nested tuples render as ``(..., ...)``.
    """
    if isinstance(label, tuple) and label and all(
        isinstance(v, tuple) for v in label
    ):
        return "(" + ", ".join(label_text(v) for v in label) + ")"
    if isinstance(label, tuple):
        if all(isinstance(v, int) and 0 <= v <= 9 for v in label):
            return "".join(str(v) for v in label)
        return ",".join(str(v) for v in label)
    return str(label)
