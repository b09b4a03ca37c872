"""Reading and writing distributions, samples and reports.

JSON distribution::

    {"variables": [{"name": "X1", "alphabet": ["0", "1"]}, ...],
     "pmf": [{"outcome": ["0", "1"], "p": 0.25}, ...]}

CSV samples: a header row of variable names, then one observation per row.
Symbols are kept as verbatim strings.
"""
from __future__ import annotations

import csv
import io
import json
import math
from typing import Any

from .errors import InputError, ParseError
from .table import JointTable, SampleSet, from_pmf, from_samples

DECIMALS = 9


def table_to_json(table: JointTable) -> dict:
    return {
        "variables": [{"name": n, "alphabet": list(a)} for n, a in zip(table.names, table.alphabets)],
        "pmf": [{"outcome": list(o), "p": p} for o, p in sorted(table.pmf.items())],
    }


def table_from_json(obj: Any, normalize: bool = False) -> JointTable:
    try:
        variables = obj["variables"]
        names = [v["name"] for v in variables]
        alphabets = [v["alphabet"] for v in variables] if all("alphabet" in v for v in variables) else None
        entries = [(tuple(e["outcome"]), e["p"]) for e in obj["pmf"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"not a distribution document: missing or malformed {exc}") from None
    for _, p in entries:
        if isinstance(p, bool) or not isinstance(p, (int, float)):
            raise ParseError(f"probability {p!r} is not a number")
    return from_pmf(entries, names=names, alphabets=alphabets, normalize=normalize)


def samples_from_csv(text: str) -> SampleSet:
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if not rows:
        raise ParseError("empty CSV")
    header, body = rows[0], rows[1:]
    if len(set(header)) != len(header):
        raise ParseError(f"duplicate column names in {header}")
    try:
        return SampleSet(header, body)
    except InputError as exc:
        raise ParseError(str(exc)) from None


def samples_to_csv(names, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(names)
    w.writerows(rows)
    return buf.getvalue()


def parse_table(text: str, normalize: bool = False) -> JointTable:
    """Parse JSON distribution or CSV samples, sniffing by the first character."""
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("empty input")
    if stripped[0] in "{[":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed JSON: {exc}") from None
        return table_from_json(obj, normalize=normalize)
    return from_samples(samples_from_csv(text))


def fmt_float(x: float, decimals: int = DECIMALS) -> str:
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"cannot serialize {x!r}")
    s = f"{x:.{decimals}f}"
    if s.lstrip("-").strip("0.") == "":
        s = s.lstrip("-")
    return s


def canonical_json(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON with sorted keys and fixed-decimal floats, so outputs diff cleanly."""
    pad, inner = " " * (indent * _level), " " * (indent * (_level + 1))
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {canonical_json(v, indent, _level + 1)}"
                 for k, v in sorted(obj.items(), key=lambda kv: str(kv[0]))]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [inner + canonical_json(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, float):
        return fmt_float(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")
