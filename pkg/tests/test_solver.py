import numpy as np
import pytest

from jmfit import RootConfig, find_root, numeric_derivative, prefix
from jmfit.estimators import mle_equation


def linear(c):
    return (lambda x: np.asarray(x, float) - c), (lambda x: np.ones_like(np.asarray(x, float)))


def test_linear_root_reasonable():
    f, df = linear(42.0)
    res = find_root(f, df, k=5.0)
    assert res.kind == "reasonable"
    assert res.n0 == pytest.approx(42.0, abs=1e-12)
    assert res.bracket is not None
    a, b = res.bracket
    assert a <= res.n0 <= b


def test_bracket_soundness():
    f, df = linear(977.5)
    cfg = RootConfig()
    res = find_root(f, df, k=3.0, cfg=cfg)
    a, b = res.bracket
    assert f(a) * f(b) <= 0
    assert (b - a) <= cfg.step_tolerance * max(1.0, abs(res.n0)) * 10


def test_determinism():
    f, df = linear(123.456)
    r1 = find_root(f, df, k=2.0)
    r2 = find_root(f, df, k=2.0)
    assert r1.n0 == r2.n0
    assert r1.bracket == r2.bracket
    assert r1.iterations == r2.iterations


def test_asymptotic_mode_never_reasonable():
    f, df = linear(42.0)  # genuine root exists
    res = find_root(f, df, k=5.0, mode="asymptotic")
    assert res.kind == "asymptotic"


def test_rootless_falls_back_to_asymptotic():
    # strictly positive, decaying to zero: no root anywhere
    f = lambda x: 1.0 / np.asarray(x, float) ** 2
    df = lambda x: -2.0 / np.asarray(x, float) ** 3
    res = find_root(f, df, k=1.0, mode="reasonable")
    assert res.kind == "asymptotic"
    assert res.trace["sign_changes"] == 0
    assert res.n0 > 1e6


def test_cap_is_flagged():
    f = lambda x: 1.0 / np.asarray(x, float) ** 2
    df = lambda x: -2.0 / np.asarray(x, float) ** 3
    cfg = RootConfig(n0_cap=1e9)
    res = find_root(f, df, k=1.0, cfg=cfg, mode="asymptotic")
    assert res.kind == "asymptotic"
    assert res.n0 == 1e9
    assert res.trace["cap_hit"] is True


def test_nonfinite_function_fails():
    f = lambda x: np.full_like(np.asarray(x, float), np.nan)
    df = lambda x: np.full_like(np.asarray(x, float), np.nan)
    res = find_root(f, df, k=1.0)
    assert res.kind == "failed"


def test_domain_respected():
    f, df = linear(10.0)
    cfg = RootConfig()
    res = find_root(f, df, k=3.0, cfg=cfg, mode="asymptotic")
    assert res.n0 > 3.0 + cfg.lower_margin


def test_mle_equation_root(ntds):
    eq = mle_equation(prefix(ntds, 26))
    res = find_root(eq.value, eq.derivative, 26)
    assert res.kind == "reasonable"
    assert res.n0 == pytest.approx(31.2159, abs=1e-3)
    assert abs(res.residual) < 1e-9


def test_numeric_derivative():
    assert numeric_derivative(lambda x: x * x, 3.0) == pytest.approx(6.0, abs=1e-5)
    assert numeric_derivative(lambda x: 7.0, 10.0) == pytest.approx(0.0, abs=1e-9)


def test_numeric_derivative_matches_analytic(ntds):
    eq = mle_equation(prefix(ntds, 26))
    num = numeric_derivative(lambda t: eq.value(float(t)), 40.0)
    ana = eq.derivative(40.0)
    assert num == pytest.approx(ana, rel=1e-4)


def test_numeric_derivative_nonfinite():
    with pytest.raises(ValueError):
        numeric_derivative(lambda x: float("nan"), 1.0)


def test_config_validation():
    with pytest.raises(ValueError):
        RootConfig(step_tolerance=0)
    with pytest.raises(ValueError):
        RootConfig(scan_points=1)
    with pytest.raises(ValueError):
        RootConfig(max_iterations=0)


def test_trace_records_curvature(ntds):
    eq = mle_equation(prefix(ntds, 26))
    res = find_root(eq.value, eq.derivative, 26)
    assert res.trace["slope_sign"] in (-1, 0, 1)
    assert res.trace["curvature_sign"] in (-1, 0, 1)
    assert "relative step" in res.trace["step_criterion"]
