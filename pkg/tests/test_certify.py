import json
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidcalc.certify import (
    VERDICT_CERTIFIED,
    CertificationReport,
    FamilyParams,
    certify,
    family_words,
    report_to_json,
    sweep,
)
from braidcalc.templates import BraidingAssignment, Flype, builtin_template, instantiate
from braidcalc.words import BraidWord, format_word, parse_word, sigma_power


def test_family_words_frozen():
    plus, minus = family_words(FamilyParams(2, 3, 4))
    assert format_word(plus) == "s1^5 s2^6 s1^8 s2^-1"
    assert format_word(minus) == "s1^5 s2^-1 s1^8 s2^6"


def test_family_words_match_direct_construction():
    for p, q, r in [(2, 4, 3), (3, 2, 5), (5, 7, 2)]:
        plus, minus = family_words(FamilyParams(p, q, r))
        u, v, w = 2 * p + 1, 2 * q, 2 * r
        direct_plus = (
            sigma_power(3, 1, u) * sigma_power(3, 2, v)
            * sigma_power(3, 1, w) * sigma_power(3, 2, -1)
        )
        direct_minus = (
            sigma_power(3, 1, u) * sigma_power(3, 2, -1)
            * sigma_power(3, 1, w) * sigma_power(3, 2, v)
        )
        assert plus == direct_plus
        assert minus == direct_minus


def test_family_beta_formula():
    for p, q, r in [(2, 4, 3), (4, 2, 6), (6, 8, 7)]:
        plus, minus = family_words(FamilyParams(p, q, r))
        assert plus.bennequin() == minus.bennequin() == 2 * p + 2 * q + 2 * r - 3


def test_admissibility():
    assert FamilyParams(2, 4, 3).admissible()
    assert not FamilyParams(2, 3, 3).admissible()
    assert not FamilyParams(1, 3, 4).admissible()
    assert not FamilyParams(2, 3, 4).admissible()  # p+1 = q
    assert FamilyParams(2, 3, 3).violations()[0] == "q = r"
    assert FamilyParams(1, 3, 4).violations()[0] == "p <= 1"


def test_certify_admissible_triple():
    report = certify(FamilyParams(2, 4, 3))
    assert report.verdict == VERDICT_CERTIFIED
    assert report.certified
    checks = report.checks
    assert checks.beta_plus == checks.beta_minus == 15
    assert checks.conjugacy_distinct
    assert checks.not_unknot and checks.not_torus
    assert checks.kolee_single_sign
    assert checks.obstruction.component_table == ((1, -1, -3), (2, -3, -1))
    assert checks.obstruction.swap_detected


def test_certify_condition_failures():
    assert certify(FamilyParams(2, 3, 3)).verdict == "FAILED(conditions: q = r)"
    assert certify(FamilyParams(1, 3, 4)).verdict == "FAILED(conditions: p <= 1)"
    # all checks still run on inadmissible input
    report = certify(FamilyParams(2, 3, 3))
    assert report.checks.beta_plus == report.checks.beta_minus


def test_certify_conjugate_diagonal_fails_honestly():
    # q = p+1 collapses the pair to one conjugacy class, so certification
    # must fail even though the betas and Alexander polynomials agree
    report = certify(FamilyParams(2, 3, 4))
    assert not report.checks.conjugacy_distinct
    assert report.verdict == "FAILED(conditions: p+1 = q)"
    forced = certify(FamilyParams(3, 4, 2))
    assert not forced.checks.conjugacy_distinct


def test_sweep_small_bounds():
    assert sweep(2, 2, 2) == []
    reports = sweep(3, 3, 3)
    admissible = [
        (p, q, r)
        for p in (2, 3)
        for q in (2, 3)
        for r in (2, 3)
        if FamilyParams(p, q, r).admissible()
    ]
    assert [(rep.params.p, rep.params.q, rep.params.r) for rep in reports] == admissible
    assert all(rep.certified for rep in reports)
    with pytest.raises(ValueError):
        sweep(1, 5, 5)


def test_sweep_five_all_certified():
    reports = sweep(5, 5, 5)
    assert reports and all(rep.verdict == VERDICT_CERTIFIED for rep in reports)
    for rep in reports:
        expected = 2 * (rep.params.p + rep.params.q + rep.params.r) - 3
        assert rep.checks.beta_plus == rep.checks.beta_minus == expected
        assert rep.checks.obstruction.component_table[0] == (1, -1, -3)


def test_report_json_deterministic():
    a = report_to_json(certify(FamilyParams(2, 4, 3)))
    b = report_to_json(certify(FamilyParams(2, 4, 3)))
    assert a == b
    payload = json.loads(a)
    assert payload["verdict"] == VERDICT_CERTIFIED
    assert payload["tx_plus"] == "s1^5 s2^8 s1^6 s2^-1"
    assert payload["checks"]["obstruction"]["component_table"] == [[1, -1, -3], [2, -3, -1]]


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=-1, max_value=7),
    st.integers(min_value=-1, max_value=7),
    st.integers(min_value=-1, max_value=7),
)
def test_certified_verdict_iff_every_check_passes(p, q, r):
    report = certify(FamilyParams(p, q, r))
    checks = report.checks
    all_pass = (
        checks.conditions_ok
        and checks.beta_formula_ok
        and checks.alexander_equal
        and checks.conjugacy_distinct
        and checks.not_unknot
        and checks.not_torus
        and checks.kolee_single_sign
        and checks.obstruction.swap_detected
    )
    assert report.certified == all_pass
    assert (report.verdict == VERDICT_CERTIFIED) == all_pass
