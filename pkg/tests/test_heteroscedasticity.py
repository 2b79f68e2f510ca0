import numpy as np
import pytest

from jmfit import JmParams, f_cdf, f_quantile, goldfeld_quandt, prefix, residuals


def test_residuals_perfect_fit():
    p = JmParams(5.0, 0.5)
    x = [1.0 / (p.phi * (p.n0 - i + 1)) for i in range(1, 4)]
    assert residuals(x, p) == pytest.approx([0.0, 0.0, 0.0], abs=1e-15)


def test_residuals_single_point():
    p = JmParams(2.0, 0.5)  # prediction 1/(0.5*2) = 1
    assert residuals([2.0], p) == pytest.approx([1.0])


def test_residuals_ntds_lse(ntds):
    eps = residuals(prefix(ntds, 26), JmParams(32.0564, 0.006209))
    assert eps[0] == pytest.approx(3.9758, abs=1e-3)


def test_residuals_invalid_regime():
    with pytest.raises(ValueError):
        residuals([1.0, 1.0, 1.0], JmParams(2.0, 0.5))


def test_gq_flat_residuals():
    res = goldfeld_quandt(np.ones(16))
    assert res.applicable
    assert res.statistic == pytest.approx(1.0)
    assert not res.heteroscedastic


def test_gq_too_short_inapplicable():
    res = goldfeld_quandt(np.ones(5))
    assert not res.applicable
    assert not res.heteroscedastic


def test_gq_hand_worked_example():
    # 14 residuals; the middle two are dropped (omit fraction 1/7), each
    # subgroup keeps 6 values with 4 degrees of freedom; the ratio is
    # (6*9)/(6*1) = 9 against a critical value of about 6.39
    eps = np.array([1, 1, 1, 1, 1, 1, 100, 200, 3, 3, 3, 3, 3, 3], dtype=float)
    res = goldfeld_quandt(eps, alpha=0.05, omit_fraction=1 / 7)
    assert res.applicable
    assert res.omitted == 2
    assert res.dof == (4, 4)
    assert res.statistic == pytest.approx(9.0)
    assert res.critical_value == pytest.approx(6.3882, abs=1e-3)
    assert res.heteroscedastic


def test_gq_scale_invariance():
    rng = np.random.default_rng(3)
    eps = rng.standard_normal(24)
    base = goldfeld_quandt(eps)
    for c in (1e-6, -2.0, 1e6):
        scaled = goldfeld_quandt(c * eps)
        assert scaled.statistic == pytest.approx(base.statistic, rel=1e-12)
        assert scaled.heteroscedastic == base.heteroscedastic


def test_gq_parity_adjustment_shrinks_first():
    # 13 observations, omit 1/4 -> d = 3, leaves 10 (even): unchanged
    res = goldfeld_quandt(np.ones(13))
    assert res.omitted == 3
    # 15 observations, omit 1/4 -> d = 4, leaves 11 (odd): shrink to 3
    res = goldfeld_quandt(np.ones(15))
    assert res.omitted == 3


def test_gq_validation():
    with pytest.raises(ValueError):
        goldfeld_quandt([1.0, 2.0], alpha=1.5)
    with pytest.raises(ValueError):
        goldfeld_quandt([1.0, 2.0], omit_fraction=1.0)
    with pytest.raises(ValueError):
        goldfeld_quandt([])


def test_f_quantile_median_symmetry():
    for d in (1, 2, 5, 13, 40):
        assert f_quantile(0.5, d, d) == pytest.approx(1.0, rel=1e-9)


def test_f_quantile_reference_points():
    # frozen from adaptive quadrature of the density
    assert f_quantile(0.95, 10, 10) == pytest.approx(2.978237, rel=1e-5)
    assert f_quantile(0.95, 4, 4) == pytest.approx(6.388233, rel=1e-5)


def test_f_quantile_monotone_in_p():
    qs = [f_quantile(p, 7, 9) for p in (0.05, 0.25, 0.5, 0.9, 0.95, 0.99)]
    assert all(b > a for a, b in zip(qs, qs[1:]))


def test_f_cdf_quantile_round_trip():
    for p in (0.1, 0.5, 0.9, 0.975):
        for d1, d2 in ((2, 5), (10, 3), (30, 30)):
            x = f_quantile(p, d1, d2)
            assert f_cdf(x, d1, d2) == pytest.approx(p, abs=1e-9)


def test_reciprocal_symmetry():
    for d1, d2 in ((2, 7), (4, 4), (10, 30)):
        for x in (0.2, 0.5, 1.0, 2.5, 10.0):
            total = f_cdf(x, d1, d2) + f_cdf(1.0 / x, d2, d1)
            assert total == pytest.approx(1.0, abs=1e-9)


def test_f_quantile_validation():
    with pytest.raises(ValueError):
        f_quantile(0.0, 4, 4)
    with pytest.raises(ValueError):
        f_quantile(0.5, 0, 4)
