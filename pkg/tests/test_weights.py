import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from jmfit import (
    JmParams,
    WeightScheme,
    empirical_weights,
    interval_moments,
    inverse_residual_weights,
    optimal_weights,
    prefix,
    squared,
    unit_weights,
)


def scheme(idx, beta=0.5):
    return WeightScheme("empirical", idx, beta)


def test_scheme_5_is_index():
    w = empirical_weights(scheme(5), [4.0, 4.0, 4.0])
    assert list(w) == [1.0, 2.0, 3.0]


def test_scheme_7_is_cumulative_time(ntds):
    w = empirical_weights(scheme(7), prefix(ntds, 3))
    assert list(w) == [9.0, 21.0, 32.0]


def test_power_law_pair():
    # scheme 4 is i**beta and scheme 3 its reciprocal, matching the
    # published result tables (the accompanying listing order swaps them)
    w4 = empirical_weights(scheme(4), np.ones(4))
    assert w4 == pytest.approx([1.0, math.sqrt(2), math.sqrt(3), 2.0])
    w3 = empirical_weights(scheme(3), np.ones(4))
    assert w3 == pytest.approx([1.0, 1 / math.sqrt(2), 1 / math.sqrt(3), 0.5])


@pytest.mark.parametrize("a,b", [(1, 2), (3, 4), (5, 6), (7, 8)])
def test_reciprocal_pairs(a, b, musa2):
    wa = empirical_weights(scheme(a), musa2)
    wb = empirical_weights(scheme(b), musa2)
    assert wa * wb == pytest.approx(np.ones(len(musa2)))


def test_squared_power_law_collapses():
    data = np.ones(6)
    assert squared(empirical_weights(scheme(4), data)) == pytest.approx(
        empirical_weights(scheme(5), data)
    )
    assert squared(empirical_weights(scheme(3), data)) == pytest.approx(
        empirical_weights(scheme(6), data)
    )


def test_squared_basics():
    assert list(squared([1.0, 2.0, 3.0])) == [1.0, 4.0, 9.0]
    assert list(squared(unit_weights(3))) == [1.0, 1.0, 1.0]


def test_optimal_weights():
    w = optimal_weights(JmParams(3.0, 1.0), 2)
    assert list(w) == [9.0, 4.0]
    w = optimal_weights(JmParams(5.5, 2.0), 5)
    assert w[-1] == pytest.approx((2.0 * 1.5) ** 2)  # i=k leaves n0-k+1 = 1.5
    assert all(b < a for a, b in zip(w, w[1:]))


def test_optimal_weights_are_inverse_variance():
    p = JmParams(9.25, 0.125)
    w = optimal_weights(p, 8)
    for i in range(1, 9):
        _, var = interval_moments(p, i)
        assert w[i - 1] == pytest.approx(1.0 / var, rel=1e-12)


def test_optimal_weights_domain():
    with pytest.raises(ValueError):
        optimal_weights(JmParams(3.0, 1.0), 4)


def test_inverse_residual_weights():
    assert list(inverse_residual_weights([1.0, 2.0])) == [1.0, 0.25]
    w = inverse_residual_weights([-3.0, 3.0])
    assert w == pytest.approx([1 / 9, 1 / 9])


def test_inverse_residual_floor():
    w = inverse_residual_weights([0.0, 2.0], floor=0.5)
    assert w[0] == 2.0
    assert np.isfinite(inverse_residual_weights([0.0, 0.0])).all()
    # default floor scales with the mean absolute residual
    w = inverse_residual_weights([0.0, 2.0])
    assert w[0] == pytest.approx(1e12)


def test_scheme_validation():
    with pytest.raises(ValueError):
        WeightScheme("empirical", 9)
    with pytest.raises(ValueError):
        WeightScheme("empirical", 1, beta=0.0)
    with pytest.raises(ValueError):
        WeightScheme("nope")


@given(
    idx=st.integers(1, 8),
    data=st.lists(st.floats(0.01, 1e6), min_size=1, max_size=50),
)
def test_weights_positive_and_finite(idx, data):
    w = empirical_weights(scheme(idx), np.asarray(data))
    assert np.all(np.isfinite(w))
    assert np.all(w > 0)
