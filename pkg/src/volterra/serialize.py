"""JSON formats for algebra specs and subspaces.

Spec files look like

    {"dimension": 4,
     "p": [{"i": 1, "j": 2, "value": "1/2"}, ...]}

with every pair i < j present exactly once, ordered lexicographically on
output.  Rationals travel as strings "num/den" in lowest terms with a
positive denominator (plain integers may drop the "/den").  Parsing is
strict: unknown keys, floats, or malformed rationals are rejected with a
message, never coerced.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .algebra import AlgebraSpec
from .linalg import Subspace

Q = Fraction

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


class ParseError(Exception):
    """Malformed input file or JSON structure."""


def format_rational(q: Fraction) -> str:
    return str(q)


def parse_rational(s: Any, where: str) -> Fraction:
    if isinstance(s, int) and not isinstance(s, bool):
        return Q(s)
    if not isinstance(s, str) or not _RATIONAL_RE.match(s):
        raise ParseError(f'{where}: expected a rational string like "1/2", got {s!r}')
    return Q(s)


def spec_to_json(spec: AlgebraSpec) -> dict:
    return {
        "dimension": spec.dimension,
        "p": [
            {"i": i, "j": j, "value": format_rational(v)} for (i, j), v in spec.pairs()
        ],
    }


def spec_from_json(obj: Any) -> AlgebraSpec:
    if not isinstance(obj, dict):
        raise ParseError("top level must be a JSON object")
    extra = set(obj) - {"dimension", "p"}
    if extra:
        raise ParseError(f"unknown keys: {sorted(extra)}")
    if "dimension" not in obj or "p" not in obj:
        raise ParseError('required keys: "dimension", "p"')
    n = obj["dimension"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f'"dimension" must be a positive integer, got {n!r}')
    items = obj["p"]
    if not isinstance(items, list):
        raise ParseError('"p" must be a list of pair entries')
    values: dict[tuple[int, int], Fraction] = {}
    for k, item in enumerate(items):
        where = f'"p" entry {k}'
        if not isinstance(item, dict) or set(item) != {"i", "j", "value"}:
            raise ParseError(f'{where}: expected keys {{"i","j","value"}}')
        i, j = item["i"], item["j"]
        for name, v in (("i", i), ("j", j)):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParseError(f'{where}: "{name}" must be an integer')
        if not (1 <= i < j <= n):
            raise ParseError(f"{where}: need 1 <= i < j <= {n}, got ({i},{j})")
        if (i, j) in values:
            raise ParseError(f"{where}: duplicate pair ({i},{j})")
        values[(i, j)] = parse_rational(item["value"], where)
    try:
        return AlgebraSpec.from_pairs(n, values)
    except ValueError as e:
        raise ParseError(str(e)) from None


def load_spec(path: str) -> AlgebraSpec:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as e:
        raise ParseError(f"{path}: {e.strerror or e}") from None
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})") from None
    return spec_from_json(obj)


def space_to_json(space: Subspace) -> dict:
    return {
        "dim": space.dim,
        "basis": [[format_rational(e) for e in v] for v in space.vectors],
    }


def dumps(obj: Any) -> str:
    """Canonical textual JSON: stable key order, trailing newline."""
    return json.dumps(obj, indent=2) + "\n"
