"""Certification that a two-parameter flype family is transversally rigid.

For admissible parameters the two words of the negative-flype pair close
to the same topological knot with equal self-linking number, yet lie in
distinct conjugacy classes and dodge every move that could carry one
braiding to the other transversally.  The checks below mechanize each
exclusion step and accumulate into a machine-readable verdict.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .b3 import (
    GenericUnique,
    TorusKnot2k,
    UnknotClass,
    classify_closure,
    conjugate_in_B3,
    kolee_both_signs,
)
from .links import alexander_polynomial
from .templates import (
    BraidingAssignment,
    Flype,
    builtin_template,
    instantiate,
    per_component_beta_delta,
)
from .words import BraidWord, format_word, parse_word, sigma_power

VERDICT_CERTIFIED = "CERTIFIED_NOT_TRANSVERSALLY_SIMPLE"

# the two-component link assignment whose component table exhibits the
# swapped self-linking numbers; deliberately parameter-independent: one
# bad braiding poisons the template for every braiding
OBSTRUCTION_ASSIGNMENT: Tuple[Tuple[str, str], ...] = (
    ("P", "s1^3"),
    ("Q", "s1^-5"),
    ("R", "s1^4"),
)


@dataclass(frozen=True)
class FamilyParams:
    """Parameters (p, q, r) selecting one flype pair of the family."""

    p: int
    q: int
    r: int

    def violations(self) -> Tuple[str, ...]:
        found = []
        if self.p <= 1:
            found.append("p <= 1")
        if self.q <= 1:
            found.append("q <= 1")
        if self.r <= 1:
            found.append("r <= 1")
        if self.q == self.r:
            found.append("q = r")
        if self.p + 1 == self.q:
            found.append("p+1 = q")
        return tuple(found)

    def admissible(self) -> bool:
        return not self.violations()


@dataclass(frozen=True)
class ObstructionChecks:
    assignment: Tuple[Tuple[str, str], ...]
    component_table: Tuple[Tuple[int, int, int], ...]
    swap_detected: bool


@dataclass(frozen=True)
class CertificationChecks:
    conditions_ok: bool
    beta_plus: int
    beta_minus: int
    beta_formula_ok: bool
    alexander_equal: bool
    conjugacy_distinct: bool
    not_unknot: bool
    not_torus: bool
    kolee_single_sign: bool
    obstruction: ObstructionChecks


@dataclass(frozen=True)
class CertificationReport:
    params: FamilyParams
    tx_plus: BraidWord
    tx_minus: BraidWord
    checks: CertificationChecks
    verdict: str

    @property
    def certified(self) -> bool:
        return self.verdict == VERDICT_CERTIFIED


def family_assignment(params: FamilyParams) -> BraidingAssignment:
    """Braiding assignment putting the family's twist regions in the blocks."""
    return BraidingAssignment.from_mapping(
        {
            "P": sigma_power(2, 1, 2 * params.p + 1),
            "R": sigma_power(2, 1, 2 * params.q),
            "Q": sigma_power(2, 1, 2 * params.r),
        }
    )


def family_words(params: FamilyParams) -> Tuple[BraidWord, BraidWord]:
    """The flype pair at (p, q, r): exponents (2p+1, 2q, 2r) and one
    negative crossing, as instantiations of the negative-flype template."""
    template = builtin_template(Flype(-1))
    assignment = family_assignment(params)
    return instantiate(template.plus, assignment), instantiate(template.minus, assignment)


def _obstruction_checks() -> ObstructionChecks:
    template = builtin_template(Flype(-1))
    assignment = BraidingAssignment.from_mapping(
        {bid: parse_word(text) for bid, text in OBSTRUCTION_ASSIGNMENT}
    )
    table = tuple(per_component_beta_delta(template, assignment))
    swap = any(bp != bm for _, bp, bm in table)
    return ObstructionChecks(OBSTRUCTION_ASSIGNMENT, table, swap)


_OBSTRUCTION_CACHE: List[ObstructionChecks] = []


def certify(params: FamilyParams) -> CertificationReport:
    """Run every exclusion check on the pair at (p, q, r).

    All checks run regardless of earlier failures; the verdict is
    CERTIFIED only when every one of them passes, otherwise FAILED with
    the first failing check as the reason.
    """
    tx_plus, tx_minus = family_words(params)
    violations = params.violations()
    beta_plus = tx_plus.bennequin()
    beta_minus = tx_minus.bennequin()
    expected_beta = 2 * params.p + 2 * params.q + 2 * params.r - 3
    class_plus = classify_closure(tx_plus)
    class_minus = classify_closure(tx_minus)
    if not _OBSTRUCTION_CACHE:
        _OBSTRUCTION_CACHE.append(_obstruction_checks())
    checks = CertificationChecks(
        conditions_ok=not violations,
        beta_plus=beta_plus,
        beta_minus=beta_minus,
        beta_formula_ok=beta_plus == expected_beta and beta_minus == expected_beta,
        alexander_equal=alexander_polynomial(tx_plus) == alexander_polynomial(tx_minus),
        conjugacy_distinct=not conjugate_in_B3(tx_plus, tx_minus),
        not_unknot=not isinstance(class_plus, UnknotClass)
        and not isinstance(class_minus, UnknotClass),
        not_torus=not isinstance(class_plus, TorusKnot2k)
        and not isinstance(class_minus, TorusKnot2k),
        kolee_single_sign=not kolee_both_signs(
            2 * params.p + 1, 2 * params.q, 2 * params.r, -1
        ),
        obstruction=_OBSTRUCTION_CACHE[0],
    )
    verdict = VERDICT_CERTIFIED
    if violations:
        verdict = f"FAILED(conditions: {violations[0]})"
    elif not checks.beta_formula_ok:
        verdict = "FAILED(beta_formula)"
    elif not checks.alexander_equal:
        verdict = "FAILED(alexander_equal)"
    elif not checks.conjugacy_distinct:
        verdict = "FAILED(conjugacy_distinct)"
    elif not checks.not_unknot:
        verdict = "FAILED(not_unknot)"
    elif not checks.not_torus:
        verdict = "FAILED(not_torus)"
    elif not checks.kolee_single_sign:
        verdict = "FAILED(kolee_single_sign)"
    elif not checks.obstruction.swap_detected:
        verdict = "FAILED(obstruction)"
    return CertificationReport(params, tx_plus, tx_minus, checks, verdict)


def sweep(p_max: int, q_max: int, r_max: int) -> List[CertificationReport]:
    """Certify every admissible triple with 2 <= p,q,r <= the bounds."""
    if min(p_max, q_max, r_max) < 2:
        raise ValueError("sweep bounds must be >= 2")
    reports = []
    for p in range(2, p_max + 1):
        for q in range(2, q_max + 1):
            for r in range(2, r_max + 1):
                params = FamilyParams(p, q, r)
                if params.admissible():
                    reports.append(certify(params))
    return reports


def report_to_dict(report: CertificationReport) -> Dict:
    checks = report.checks
    return {
        "params": {"p": report.params.p, "q": report.params.q, "r": report.params.r},
        "tx_plus": format_word(report.tx_plus),
        "tx_minus": format_word(report.tx_minus),
        "checks": {
            "conditions_ok": checks.conditions_ok,
            "beta_plus": checks.beta_plus,
            "beta_minus": checks.beta_minus,
            "beta_formula_ok": checks.beta_formula_ok,
            "alexander_equal": checks.alexander_equal,
            "conjugacy_distinct": checks.conjugacy_distinct,
            "not_unknot": checks.not_unknot,
            "not_torus": checks.not_torus,
            "kolee_single_sign": checks.kolee_single_sign,
            "obstruction": {
                "assignment": dict(checks.obstruction.assignment),
                "component_table": [list(row) for row in checks.obstruction.component_table],
                "swap_detected": checks.obstruction.swap_detected,
            },
        },
        "verdict": report.verdict,
    }


def report_to_json(report: CertificationReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, sort_keys=True)
