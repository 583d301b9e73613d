import json
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xresponse.errors import NonConvergence, TooFewPoints
from xresponse.fit import PowerLawFit, fit_power_law, initial_guess, model_eval, table_row

# reference fits of averaged passive sign correlators (AAPL exc-0, XOM inc-0)
AAPL_EXC = (0.05, 0.88, 0.73)
XOM_INC = (0.27, 0.06, 1.32)
TAU30 = np.geomspace(1, 1000, 30)


@given(st.floats(-1, 1), st.floats(0.01, 100), st.floats(0, 3))
def test_model_at_zero_is_theta(theta, tau0, gamma):
    assert model_eval((theta, tau0, gamma), 0.0) == theta


def test_model_examples():
    assert model_eval((1, 1, 2), 1) == 0.5
    theta, tau0, gamma = XOM_INC
    assert model_eval(XOM_INC, 1) == theta / (1 + (1 / tau0) ** 2) ** (gamma / 2)
    assert model_eval(XOM_INC, 1) == pytest.approx(0.006569, rel=1e-3)


def test_model_rejects_negative_lag():
    with pytest.raises(ValueError):
        model_eval(AAPL_EXC, -1)


def rel_err(fit, truth):
    return max(abs(a - b) / abs(b) for a, b in zip((fit.theta, fit.tau0, fit.gamma), truth))


def test_noiseless_round_trip_aapl():
    fit = fit_power_law(taus=TAU30, values=model_eval(AAPL_EXC, TAU30))
    assert fit.converged
    assert rel_err(fit, AAPL_EXC) < 0.01
    assert fit.chi2 < 1e-12
    assert fit.memory_class == "long"
    assert fit.n_points == 30


@settings(max_examples=30, deadline=None)
@given(st.floats(0.01, 1), st.floats(0.1, 10), st.floats(0.5, 2))
def test_noiseless_round_trip_well_conditioned(theta, tau0, gamma):
    truth = (theta, tau0, gamma)
    fit = fit_power_law(taus=TAU30, values=model_eval(truth, TAU30))
    assert rel_err(fit, truth) < 0.01


def test_constant_series_is_degenerate():
    fit = fit_power_law(taus=TAU30, values=np.full(30, 0.2))
    assert fit.converged and fit.degenerate
    assert fit.theta == pytest.approx(0.2, rel=1e-9)
    assert abs(fit.gamma) < 1e-8


def test_too_few_points():
    with pytest.raises(TooFewPoints):
        fit_power_law(taus=[1, 2, 3], values=[1, 0.5, 0.2])
    with pytest.raises(TooFewPoints):
        fit_power_law(taus=TAU30, values=model_eval(AAPL_EXC, TAU30), tau_range=(1, 2))


def test_non_convergence_warns():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        fit = fit_power_law(taus=TAU30, values=model_eval(AAPL_EXC, TAU30), max_iter=1)
    assert not fit.converged
    assert any(issubclass(w.category, NonConvergence) for w in caught)


def test_chi2_modes():
    y = model_eval(AAPL_EXC, TAU30) + np.random.default_rng(0).normal(0, 1e-3, 30)
    mean = fit_power_law(taus=TAU30, values=y, chi2="mean")
    total = fit_power_law(taus=TAU30, values=y, chi2="sum")
    assert total.chi2 == pytest.approx(30 * mean.chi2, rel=1e-9)


def test_initial_guess_reads_asymptotes():
    theta, tau0, gamma = initial_guess(TAU30, model_eval((0.1, 5.0, 1.2), TAU30))
    assert theta == pytest.approx(0.1, rel=0.05)
    assert gamma == pytest.approx(1.2, rel=0.05)
    assert tau0 == pytest.approx(5.0, rel=0.5)


def test_json_and_table_row():
    f = PowerLawFit(0.05, 0.88, 0.73, 1e-7, True, 30)
    doc = json.loads(f.to_json())
    assert {"theta", "tau0", "gamma", "chi2", "converged", "n_points",
            "memory_class"} <= set(doc)
    assert doc["memory_class"] == "long"
    row = table_row("AAPL", PowerLawFit(0.01, 0.47, 0.68), f).split(",")
    assert row[0] == "AAPL" and len(row) == 9
    assert float(row[1]) == 0.01 and float(row[2]) == 0.05


@pytest.mark.parametrize("gamma, cls", [(0.7, "long"), (0.999, "long"), (1.0, "short"),
                                        (1.3, "short")])
def test_memory_class_boundary(gamma, cls):
    assert PowerLawFit(0.1, 1.0, gamma).memory_class == cls
