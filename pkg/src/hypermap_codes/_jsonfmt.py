"""Compact JSON emission for the file formats: one top-level key per line."""

from __future__ import annotations

import json


def compact_json(data: dict) -> str:
    lines = ["{"]
    items = list(data.items())
    for idx, (key, value) in enumerate(items):
        comma = "," if idx < len(items) - 1 else ""
        lines.append(f'  "{key}": {json.dumps(value)}{comma}')
    lines.append("}")
    return "\n".join(lines) + "\n"
