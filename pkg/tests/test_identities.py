"""Tests for the identity registry, the helpers and the verification engine."""

import pytest
from pydantic import ValidationError

from catalantri.core.exact import catalan
from catalantri.exceptions import DomainError, UnknownIdentityError
from catalantri.identities import helpers
from catalantri.identities.engine import (
    describe_values,
    certify,
    polynomial_identity_check,
    polynomial_mismatch,
    resolve_box,
    verify,
    verify_all,
)
from catalantri.identities.registry import REGISTRY, get_identity, identity_ids
from catalantri.models.schema import Counterexample, VerificationReport

CORE_IDS = [
    "row_sum_B", "shapiro_convolution", "eplett", "thm_1_1",
    "thm_2_1_det_a", "thm_2_1_det_b", "thm_2_1_sum_a", "thm_2_1_sum_b",
    "cor_2_2_a", "cor_2_2_b", "cor_2_2_c", "cor_2_3_a", "cor_2_3_b", "cor_2_3_c",
    "cor_2_4_a", "cor_2_4_b", "cor_2_5_a", "cor_2_5_b",
    "thm_3_1_sum", "thm_3_1_alt", "cor_3_2_a", "cor_3_2_b", "cor_3_2_c",
    "thm_4_1", "thm_4_2_a", "thm_4_2_b",
    "cor_4_3_a", "cor_4_3_b", "cor_4_3_c", "cor_4_3_d", "cor_4_4_a", "cor_4_4_b",
    "thm_4_4", "cor_4_5_a", "cor_4_5_b",
]


def test_registry_holds_every_identity():
    for identity_id in CORE_IDS:
        assert identity_id in REGISTRY
    assert identity_ids()[: len(CORE_IDS)] == CORE_IDS


@pytest.mark.parametrize("identity_id", identity_ids())
def test_default_box_passes(identity_id):
    report = verify(identity_id)
    assert report.passed, report.summary()
    assert report.cases > 0


def test_shapiro_convolution_small_box():
    report = verify("shapiro_convolution", {"n": range(11), "m": range(11)})
    assert report.cases == 121
    assert report.summary() == "shapiro_convolution: 121 cases, pass"
    assert report.domain == {"n": "0..10", "m": "0..10"}


def test_spot_values():
    assert get_identity("shapiro_convolution").lhs({"n": 1, "m": 1}) == 5
    assert get_identity("thm_3_1_alt").lhs({"n": 3, "m": 2}) == 0
    assert get_identity("eplett").lhs({"n": 6}) == 132 == catalan(6)


def test_tails_vanish():
    assert get_identity("thm_2_1_det_a").tail({"n": 2, "m": 3, "l": 1}) == 0
    assert get_identity("thm_4_2_a").tail({"n": 1, "m": 3, "p": -1}) == 0
    assert get_identity("thm_1_1").tail({"n": 1, "m": 2, "l": 0, "r": 2, "x": 2, "y": -1}) == 0


def test_helpers():
    assert helpers.catalan_g(3, 2, 0) == 0
    assert helpers.catalan_g(1, 1, 1) == 1
    assert helpers.catalan_g(3, 0, -2) == -4
    assert helpers.catalan_f(1, 2, 2) == catalan(1) * catalan(3) + catalan(2) * catalan(2)
    assert helpers.catalan_f(2, 2, -1) == -catalan(1) * catalan(1)
    assert helpers.motzkin_h(2, 2, 2, 2) == 140
    assert helpers.motzkin_h(3, 3, 0, 5) == 0


def test_specializations_match_general_forms():
    for (name, shift, l), closed in helpers.SPECIALIZATIONS.items():
        general = getattr(helpers, name)
        for n in range(10):
            for k in range(n + 1):
                assert general(n, k, n + shift, l) == closed(n, k)


def test_empty_box_is_a_vacuous_pass():
    report = verify("shapiro_convolution", {"n": [], "m": [0, 1]})
    assert report.passed
    assert report.cases == 0


def test_constraint_filters_points():
    # only l <= m counts
    report = verify("thm_2_1_det_a", {"n": [0], "m": [0, 1], "l": [0, 1]})
    assert report.cases == 3


def test_max_size_caps_integer_params():
    assert verify("row_sum_B", max_size=3).cases == 4
    report = verify("thm_1_1", {"x": [1], "y": [2]}, max_size=1)
    assert report.passed
    assert report.domain["r"] == "0,1"


def test_unknown_identity():
    with pytest.raises(UnknownIdentityError):
        verify("no_such_identity")
    with pytest.raises(KeyError):
        get_identity("no_such_identity")


def test_box_outside_domain():
    with pytest.raises(DomainError):
        verify("row_sum_B", {"n": [-1]})
    with pytest.raises(DomainError):
        verify("cor_2_5_a", {"n": [0]})
    with pytest.raises(DomainError):
        verify("row_sum_B", {"n": [1], "m": [1]})
    with pytest.raises(DomainError):
        verify("row_sum_B", {"n": [1.5]})


def test_resolve_box_defaults():
    resolved = resolve_box(get_identity("thm_4_2_a"))
    assert resolved["p"] == tuple(range(-5, 6))
    assert resolved["n"] == tuple(range(26))
    assert get_identity("thm_4_1").param("m").default == tuple(range(26))
    assert get_identity("thm_1_1").param("r").default == tuple(range(6))


def test_describe_values():
    assert describe_values([0, 1, 2, 3]) == "0..3"
    assert describe_values([0, 2]) == "0,2"
    assert describe_values([]) == ""


def test_wrong_lambda_is_caught(monkeypatch):
    real = helpers.lam
    monkeypatch.setattr(helpers, "lam", lambda n, k, m, l: real(n, k, m, l) + 1)
    report = verify("thm_2_1_sum_a", {"n": range(3), "m": range(3), "l": range(3)})
    assert not report.passed
    assert report.counterexample.params == {"n": "0", "m": "1", "l": "0"}


def test_wrong_g_is_caught(monkeypatch):
    real = helpers.catalan_g
    monkeypatch.setattr(helpers, "catalan_g", lambda n, m, p: real(n, m, p) + 1)
    report = verify("thm_3_1_alt")
    assert not report.passed
    assert report.cases == 1


def test_wrong_h_is_caught(monkeypatch):
    real = helpers.motzkin_h
    monkeypatch.setattr(helpers, "motzkin_h", lambda n, m, r, y: real(n, m, r, y) + 1)
    assert not verify("thm_4_1", {"n": [1], "m": [2], "r": [1], "y": [1]}).passed


def test_verify_all_keeps_registry_order():
    ids = ["eplett", "row_sum_B", "thm_3_1_sum", "cor_4_3_c"]
    sequential = verify_all(ids=ids, max_size=6)
    threaded = verify_all(ids=ids, max_workers=4, max_size=6)
    assert [r.id for r in sequential] == ids
    assert [r.model_dump() for r in threaded] == [r.model_dump() for r in sequential]
    assert all(r.passed for r in threaded)


def test_verify_all_quick_run():
    reports = verify_all(max_size=2, max_workers=2)
    assert [r.id for r in reports] == identity_ids()
    assert all(r.passed for r in reports)


def test_polynomial_identity_check():
    descriptor = get_identity("thm_1_1")
    fixed = {"n": 2, "m": 2, "l": 0, "r": 1}
    assert polynomial_identity_check(descriptor.lhs, descriptor.rhs, 6, fixed=fixed)
    assert polynomial_identity_check(lambda a: 0, lambda a: 0, 3)
    assert not polynomial_identity_check(lambda a: a["x"], lambda a: a["x"] + 1, 1, variables=("x",))
    with pytest.raises(DomainError):
        polynomial_identity_check(lambda a: 0, lambda a: 0, -1)


def test_report_json_uses_pass_alias():
    dumped = verify("eplett", {"n": [2]}).model_dump(by_alias=True, mode="json")
    assert dumped["pass"] is True
    assert dumped["counterexample"] is None
    assert dumped["cases"] == 1


def test_report_requires_consistent_pass_flag():
    with pytest.raises(ValidationError):
        VerificationReport(id="x", passed=True, counterexample=Counterexample(params={}, lhs="1", rhs="2"))
    with pytest.raises(ValidationError):
        VerificationReport(id="x", passed=False)


@pytest.mark.parametrize(
    "helper, identity_id",
    [
        ("mu", "thm_2_1_sum_b"),
        ("eta", "cor_4_4_a"),
        ("nu", "cor_4_5_a"),
        ("catalan_f", "thm_4_2_a"),
    ],
)
def test_perturbed_helper_is_caught(monkeypatch, helper, identity_id):
    real = getattr(helpers, helper)
    monkeypatch.setattr(helpers, helper, lambda *args: real(*args) + 1)
    report = verify(identity_id, max_size=3)
    assert not report.passed
    assert report.counterexample is not None


def test_polynomial_mismatch_reports_the_point():
    assert polynomial_mismatch(lambda a: a["x"] ** 2, lambda a: a["x"], 2, variables=("x",)) == {"x": 2}
    assert polynomial_mismatch(lambda a: a["y"], lambda a: a["y"], 3, variables=("y",)) is None


@pytest.mark.parametrize("identity_id, max_size", [("thm_1_1", 2), ("thm_4_1", 3)])
def test_certify_weighted_identities(identity_id, max_size):
    report = certify(identity_id, max_size=max_size)
    assert report.passed, report.summary()
    assert report.id == f"{identity_id}_polynomial"
    assert report.cases > 0
    assert "x" not in report.domain and "y" not in report.domain


def test_certify_catches_a_wrong_h(monkeypatch):
    real = helpers.motzkin_h
    monkeypatch.setattr(helpers, "motzkin_h", lambda n, m, r, y: real(n, m, r, y) + 1)
    report = certify("thm_4_1", {"n": [1], "m": [2], "r": [1]})
    assert not report.passed
    assert report.cases == 1
    assert report.counterexample.params == {"n": "1", "m": "2", "r": "1", "y": "0"}


def test_certify_needs_a_degree_bound():
    with pytest.raises(DomainError):
        certify("shapiro_convolution")
