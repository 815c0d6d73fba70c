"""Full verification pipeline for one algebra, and its JSON report.

A report bundles everything the tool can say about an instance: the case
classification, the computed derivation space, the structural checks, the
sampled local-derivation comparison, and whether the observed result agrees
with the stated nontriviality criterion for the case.  Disagreement with
the stated criterion is recorded (`coincidence_consistent`, plus a note)
but is never a verification failure by itself: the computed space is the
ground truth.

Reports contain no timestamps; identical inputs yield byte-identical JSON.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import __version__
from .algebra import AlgebraSpec, half_graph
from .derivations import (
    CaseLabel,
    CoincidenceReport,
    FamilyCheck,
    check_family_containment,
    check_nonedge_zeros,
    check_row_sums,
    coincidence_report,
    derivation_space,
)
from .linalg import Subspace
from .localder import DEFAULT_SEED, LocalCheck, local_equals_der
from .serialize import format_rational, space_to_json, spec_to_json


@dataclass(frozen=True)
class CaseReport:
    spec: AlgebraSpec
    case: CaseLabel
    signature: tuple[int, ...]
    sigma: tuple[int, ...]
    der: Subspace
    nonedge_zeros_ok: bool
    row_sums_ok: bool
    family: Optional[FamilyCheck]
    coincidences: Optional[CoincidenceReport]
    coincidence_consistent: Optional[bool]
    local: Optional[LocalCheck]
    note: Optional[str]

    @property
    def containment_ok(self) -> Optional[bool]:
        return self.family.contained if self.family else None

    @property
    def inconclusive(self) -> bool:
        return self.local is not None and not self.local.stabilized

    @property
    def ok(self) -> bool:
        """Hard checks only; stated-criterion disagreement does not fail a run."""
        if not (self.nonedge_zeros_ok and self.row_sums_ok):
            return False
        if self.family is not None and not self.family.contained:
            return False
        if self.local is not None and self.local.stabilized and not self.local.equals:
            return False
        return True


def build_report(spec: AlgebraSpec, seed: int = DEFAULT_SEED, with_local: bool = True) -> CaseReport:
    der = derivation_space(spec)
    g = half_graph(spec)
    nonedge_ok = check_nonedge_zeros(spec, der)
    rows_ok = check_row_sums(der)
    family = None
    coin = None
    consistent = None
    note = None
    if spec.dimension == 4:
        family = check_family_containment(spec, der)
        coin = coincidence_report(spec)
        observed = der.dim > 0
        consistent = coin.claimed_nontrivial == observed
        if not consistent:
            held = ", ".join(f"{p.name}={'yes' if p.holds else 'no'}" for p in coin.predicates)
            note = (
                f"case {family.label}: stated criterion predicts "
                f"{'nontrivial' if coin.claimed_nontrivial else 'trivial'} derivations, "
                f"computed dimension is {der.dim}"
            )
            if family.label is CaseLabel.D:
                note += (
                    "; known divergence for the triangle case, whose space is nontrivial "
                    f"only when p14_1 = p24_2 = p34_3 (observed: {held})"
                )
    local = local_equals_der(spec, seed) if with_local else None
    sig = g.signature()
    if spec.dimension == 4:
        case, sigma = family.label, family.sigma
    else:
        case, sigma = CaseLabel.GENERIC, tuple(range(1, spec.dimension + 1))
    return CaseReport(
        spec=spec,
        case=case,
        signature=sig,
        sigma=sigma,
        der=der,
        nonedge_zeros_ok=nonedge_ok,
        row_sums_ok=rows_ok,
        family=family,
        coincidences=coin,
        coincidence_consistent=consistent,
        local=local,
        note=note,
    )


def local_to_json(check: LocalCheck) -> dict:
    return {
        "locder_dim": check.local.space.dim,
        "samples_used": check.local.samples_used,
        "stabilized": check.local.stabilized,
        "equals_der": check.equals,
        "seed": check.local.seed,
    }


def report_to_json(r: CaseReport) -> dict:
    local_flag: object
    if r.local is None:
        local_flag = None
    elif not r.local.stabilized:
        local_flag = "inconclusive"
    else:
        local_flag = r.local.equals
    out: dict = {
        "tool": {"name": "volterra", "version": __version__},
        "input": spec_to_json(r.spec),
        "case": r.case.value,
        "signature": list(r.signature),
        "permutation": list(r.sigma),
        "derivations": space_to_json(r.der),
        "local": local_to_json(r.local) if r.local else None,
        "checks": {
            "nonedge_zeros_ok": r.nonedge_zeros_ok,
            "row_sums_ok": r.row_sums_ok,
            "containment_ok": r.containment_ok,
            "coincidence_consistent": r.coincidence_consistent,
            "local_equals_der": local_flag,
        },
        "coincidences": None,
        "note": r.note,
    }
    if r.coincidences is not None:
        out["coincidences"] = {
            "predicates": [
                {
                    "name": p.name,
                    "left": format_rational(p.left),
                    "right": format_rational(p.right),
                    "holds": p.holds,
                }
                for p in r.coincidences.predicates
            ],
            "claimed_nontrivial": r.coincidences.claimed_nontrivial,
        }
    return out
