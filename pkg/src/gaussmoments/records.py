"""Key/value text records: one line per record, ``key=value`` tokens.

Floats are written with 17 significant digits so they re-parse to the same
double; strings containing spaces are shell-quoted.
"""

from __future__ import annotations

import re
import shlex
from typing import Mapping

_INT_RE = re.compile(r"[+-]?\d+")


def format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        text = format(value, ".17g")
        if text.lstrip("+-").isdigit():
            text += ".0"
        return text
    return str(value)


def _coerce(text: str):
    if text in ("true", "false"):
        return text == "true"
    if _INT_RE.fullmatch(text):
        return int(text)
    try:
        return float(text)
    except ValueError:
        return text


def format_record(record: Mapping) -> str:
    return " ".join(f"{key}={shlex.quote(format_value(value))}"
                    for key, value in record.items())


def parse_record(line: str) -> dict:
    record = {}
    for token in shlex.split(line):
        key, sep, text = token.partition("=")
        if not sep:
            raise ValueError(f"malformed token {token!r}")
        record[key] = _coerce(text)
    return record


def format_pretty(records: list[Mapping]) -> str:
    """Aligned columns for humans; keys of the first record form the header."""
    if not records:
        return ""
    keys = list(records[0])
    rows = [[format_value(r.get(k, "")) for k in keys] for r in records]
    widths = [max(len(k), *(len(row[i]) for row in rows)) for i, k in enumerate(keys)]
    lines = ["  ".join(k.rjust(w) for k, w in zip(keys, widths))]
    for row in rows:
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    return "\n".join(lines)
