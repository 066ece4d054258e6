import numpy as np
import pytest

from olab import (
    AdamsSetup,
    DomainError,
    ParameterError,
    PowerGrowth,
    PowerYoung,
    UnrepresentableBallError,
    check_condition,
    check_membership,
    check_pointwise_inequalities,
    estimate_operator_norm,
    growth_from_lambda,
    necessity_witness,
    sample_function,
    function_family,
)
from olab.characterize import CONDITION_KINDS
from olab.errors import ConfigError
from olab.sampled import default_grid

P2 = PowerYoung(2)
PHI_L0 = growth_from_lambda(P2, 0.0)  # t^{-1/2} for p=2, n=1


def balanced_setup(q=4):
    return AdamsSetup(P2, PHI_L0, alpha=0.25, beta=2.0 / q, n=1)


def test_growth_from_lambda_power_algebra():
    varphi = growth_from_lambda(P2, 0.5, n=1)
    assert varphi(4.0) == pytest.approx(4.0 ** -0.25)
    ts = np.geomspace(0.01, 100, 17)
    assert np.allclose(varphi(ts), ts ** ((0.5 - 1) / 2), rtol=1e-9)


def test_growth_from_lambda_edge_cases():
    lam0 = growth_from_lambda(P2, 0.0)
    ts = np.geomspace(0.01, 100, 9)
    assert np.allclose(lam0(ts), P2.inverse(ts**-1.0) / P2.inverse(1.0))
    lam_n = growth_from_lambda(P2, 1.0, n=1)
    assert np.allclose(lam_n(ts), 1.0)


def test_adams_setup_validation():
    with pytest.raises(DomainError):
        AdamsSetup(P2, PHI_L0, alpha=1.5, beta=0.5, n=1)
    with pytest.raises(ParameterError):
        AdamsSetup(P2, PHI_L0, alpha=0.25, beta=1.0, n=1)


def test_adams_setup_derived_spaces():
    s = balanced_setup(4)
    ts = np.geomspace(0.1, 10, 9)
    assert np.allclose(s.psi(ts), ts**4)
    assert np.allclose(s.eta(ts), PHI_L0(ts) ** 0.5)


def test_membership_examples():
    assert check_membership(PowerGrowth(-0.5), P2, "g").verdict == "holds-stable"
    assert check_membership(PowerGrowth(0.5), P2, "g").verdict == "diverges"
    assert check_membership(PowerGrowth(-0.5), P2, "omega").verdict == "holds-stable"


def test_membership_omega_divergence_directions():
    # varphi too small near 0: the reciprocal sup blows up as r_min shrinks
    rep = check_membership(PowerGrowth(0.5), P2, "omega")
    assert rep.verdict == "diverges"
    assert rep.details["lower"]["verdict"] == "diverges"
    # varphi decaying much faster than phi_inv(|B|^-1): the upper sup blows up
    rep = check_membership(PowerGrowth(-2.0), P2, "omega")
    assert rep.verdict == "diverges"
    assert rep.details["upper"]["verdict"] == "diverges"


def test_membership_rejects_unknown_class():
    with pytest.raises(ConfigError):
        check_membership(PowerGrowth(-0.5), P2, "sigma")


@pytest.mark.parametrize("q, expected", [(4, "holds-stable"), (3, "diverges"), (6, "diverges")])
def test_adams_necessary_exponent_criterion(q, expected):
    rep = check_condition("adams-necessary", balanced_setup(q))
    assert rep.verdict == expected


def test_adams_necessary_balanced_constant_is_one():
    rep = check_condition("adams-necessary", balanced_setup(4))
    assert rep.constant == pytest.approx(1.0, rel=1e-9)
    assert max(rep.constants) / min(rep.constants) < 1.05


def test_lambda_conditions_match_adams_for_lambda_growth():
    # with a lambda-flavored growth the two necessity conditions coincide
    rep_a = check_condition("adams-necessary", balanced_setup(4))
    rep_l = check_condition("lambda-necessary", balanced_setup(4))
    assert np.allclose(rep_a.constants, rep_l.constants, rtol=1e-9)


def test_adams_sufficient_balanced():
    rep = check_condition("adams-sufficient", balanced_setup(4))
    assert rep.verdict == "holds-stable"
    assert rep.constant == pytest.approx(2.0, rel=0.02)


def test_riesz_sufficient_balanced():
    rep = check_condition("riesz-sufficient", balanced_setup(4),
                          schedule=[2.0**k for k in range(4, 15)])
    assert rep.verdict == "holds-stable"
    assert rep.constant == pytest.approx(5.0, rel=0.02)


def test_riesz_regularity_closed_form():
    rep = check_condition("riesz-regularity", balanced_setup(4),
                          schedule=[2.0**k for k in range(4, 15)])
    assert rep.verdict == "holds-stable"
    assert rep.constant == pytest.approx(4.0, rel=0.02)


@pytest.mark.parametrize("lam, expected", [(0.0, "holds-stable"), (0.5, "diverges")])
def test_supremal_condition_as_printed(lam, expected):
    setup = AdamsSetup(P2, growth_from_lambda(P2, lam), alpha=0.25, beta=0.5, n=1)
    rep = check_condition("supremal-maximal", setup)
    assert rep.verdict == expected


@pytest.mark.parametrize("lam, expected", [(0.0, "holds-stable"), (0.25, "holds-stable"), (0.75, "diverges")])
def test_lambda_sufficient_threshold(lam, expected):
    # stable iff lam < n - alpha * p = 1/2 for the power model
    setup = AdamsSetup(P2, growth_from_lambda(P2, lam), alpha=0.25, beta=0.5, n=1)
    rep = check_condition("lambda-sufficient", setup)
    assert rep.verdict == expected


@pytest.mark.parametrize("kind", CONDITION_KINDS)
def test_constants_nondecreasing(kind):
    setup = AdamsSetup(P2, growth_from_lambda(P2, 0.5), alpha=0.25, beta=1.0 / 3.0, n=1)
    rep = check_condition(kind, setup)
    cs = np.array(rep.constants)
    assert np.all(np.diff(cs) >= -1e-12)


def test_unknown_condition_rejected():
    with pytest.raises(ConfigError):
        check_condition("adams-magic", balanced_setup(4))


def test_estimate_operator_norm_balanced_family():
    rows = estimate_operator_norm(balanced_setup(4), family="indicators")
    ratios = np.array([r.ratio for r in rows])
    assert len(rows) == 9
    assert ratios.max() / ratios.min() <= 4.0


def test_estimate_operator_norm_skips_zero_members(grid64):
    zero = sample_function(grid64, {"type": "gaussian", "scale": 1.0}).scaled(0.0)
    rows = estimate_operator_norm(balanced_setup(4), family=[("zero", zero)])
    assert rows[0].note.startswith("skipped")
    assert np.isnan(rows[0].ratio)


def test_estimate_operator_norm_riesz_route():
    fam = function_family("indicators", default_grid(1))[3:6]
    rows = estimate_operator_norm(balanced_setup(4), operator="riesz", family=fam)
    assert all(np.isfinite(r.ratio) for r in rows)


def test_necessity_witness_balanced():
    out = necessity_witness(balanced_setup(4), [2.0**k for k in range(-3, 4)])
    lowers = [r["lower_bound"] for r in out["rows"]]
    measured = [r["measured_ratio"] for r in out["rows"]]
    assert np.allclose(lowers, 1.0)  # exponent cancellation in the balanced case
    assert max(measured) / min(measured) <= 4.0
    assert all(m >= lb / out["K"] - 1e-12 for m, lb in zip(measured, lowers))


def test_necessity_witness_unbalanced_direction():
    # q = 6: the lower bound is proportional to t0^(-1/12), so it decreases in t0
    out = necessity_witness(balanced_setup(6), [2.0**k for k in range(-3, 4)])
    lowers = [r["lower_bound"] for r in out["rows"]]
    measured = [r["measured_ratio"] for r in out["rows"]]
    assert np.allclose(np.diff(np.log(lowers)), -np.log(2) / 12, rtol=1e-6)
    assert np.all(np.diff(measured) < 0)


def test_necessity_witness_unrepresentable_ball():
    with pytest.raises(UnrepresentableBallError):
        necessity_witness(balanced_setup(4), [32.0])


def test_pointwise_inequality_bounded_over_family(grid64):
    setup = balanced_setup(4)
    fam = function_family("indicators", grid64) + function_family("random", grid64, seed=7, count=10)
    maxima = [check_pointwise_inequalities(setup, f)["max_ratio"] for _, f in fam]
    assert np.all(np.isfinite(maxima))
    assert max(maxima) <= 2.0  # frozen from the dense-grid sweep; continuum value ~1.19


def test_pointwise_inequality_vacuous_for_zero(grid64, unit_indicator):
    rep = check_pointwise_inequalities(balanced_setup(4), unit_indicator.scaled(0.0))
    assert rep["vacuous"]
