"""Seeded construction of algebra instances, case-targeted or random.

Non-half weights are drawn from a fixed pool: all lowest-term fractions
p/q with 3 <= q <= 12 and 0 < p < q, ordered by (q, p).  The pool contains
no 1/2 (only denominator 2 could produce it) and no boundary values, so a
drawn weight never creates an unintended half edge.  Random specs used by
the cross-check batteries extend the pool with 0 and 1, which are legal
weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .algebra import HALF, AlgebraSpec, all_pairs
from .derivations import CANONICAL_EDGES, CaseLabel
from .prng import Lcg

Q = Fraction

POOL: tuple[Fraction, ...] = tuple(
    Q(p, q) for q in range(3, 13) for p in range(1, q) if gcd(p, q) == 1
)
assert HALF not in POOL

RANDOM_POOL: tuple[Fraction, ...] = POOL + (Q(0), Q(1))


class UsageError(ValueError):
    """Request that is syntactically fine but semantically not servable."""


@dataclass(frozen=True)
class GenRequest:
    case: CaseLabel
    mode: str  # "generic" | "coincident"
    seed: int


# Groups of non-half pairs forced equal in coincident mode, canonical labeling.
_COINCIDENT_GROUPS: dict[CaseLabel, tuple[tuple[tuple[int, int], ...], ...]] = {
    CaseLabel.A: (((1, 3), (2, 3)), ((1, 4), (2, 4))),
    CaseLabel.B: (((1, 3), (1, 4), (2, 3), (2, 4)),),
    CaseLabel.D: (((1, 4), (2, 4), (3, 4)),),
    CaseLabel.G: (((2, 3), (2, 4)),),
}


def generate(req: GenRequest) -> AlgebraSpec:
    """Deterministic instance with the requested canonical half-edge pattern.

    generic: every non-half weight is a fresh, pairwise distinct pool draw.
    coincident: the case's equality groups share one draw each; only cases
    with stated equality groups accept it (J and EMPTY have nothing to
    coincide and return the generic instance unchanged).
    """
    if req.mode not in ("generic", "coincident"):
        raise UsageError(f"unknown mode {req.mode!r}")
    if req.case in (CaseLabel.GENERIC,):
        raise UsageError("gen needs a concrete 4-dim case label")
    edges = CANONICAL_EDGES[req.case]
    coincident_ok = req.case in _COINCIDENT_GROUPS or req.case in (CaseLabel.J, CaseLabel.EMPTY)
    if req.mode == "coincident" and not coincident_ok:
        raise UsageError(f"case {req.case} has no coincident form")
    lcg = Lcg(req.seed)
    used: set[Fraction] = set()

    def draw() -> Fraction:
        while True:
            v = POOL[lcg.below(len(POOL))]
            if v not in used:
                used.add(v)
                return v

    values: dict[tuple[int, int], Fraction] = {p: HALF for p in edges}
    free = [p for p in all_pairs(4) if p not in edges]
    if req.mode == "coincident" and req.case in _COINCIDENT_GROUPS:
        for group in _COINCIDENT_GROUPS[req.case]:
            v = draw()
            for p in group:
                values[p] = v
        for p in free:
            if p not in values:
                values[p] = draw()
    else:
        for p in free:
            values[p] = draw()
    return AlgebraSpec.from_pairs(4, values)


def random_spec(n: int, lcg: Lcg) -> AlgebraSpec:
    """Uniform half-edge pattern; non-half weights drawn from RANDOM_POOL."""
    values: dict[tuple[int, int], Fraction] = {}
    for p in all_pairs(n):
        if lcg.below(2):
            values[p] = HALF
        else:
            values[p] = RANDOM_POOL[lcg.below(len(RANDOM_POOL))]
    return AlgebraSpec.from_pairs(n, values)
