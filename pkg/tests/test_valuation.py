"""Value function scoring and the fix/defer decision."""

import numpy as np
import pytest

from hubroster.shifts import Segment, Shift
from hubroster.valuation import ValueWeights, shift_value, should_fix

W = ValueWeights()  # 0.4 / 0.3 / 0.3, fix lead 4 h, threshold 0.9
RHO = 8


def _shift(start, working, resting=0):
    segs = [Segment(0, start, start + working, "working")]
    if resting:
        segs.append(Segment(0, start + working, start + working + resting, "resting"))
    return Shift(segs)


def test_full_continuous_shift_scores_one():
    assert shift_value(_shift(4, 8), 0, W, RHO) == pytest.approx(1.0, abs=1e-9)


def test_short_rest_heavy_far_shift():
    value = shift_value(_shift(16, 2, resting=6), 0, W, RHO)
    assert value == pytest.approx(0.275, abs=1e-9)


def test_imminent_full_shift_caps_at_one():
    assert shift_value(_shift(1, 8), 0, W, RHO) == pytest.approx(1.0, abs=1e-9)


def test_should_fix_examples():
    assert should_fix(1.0, 0.9)
    assert not should_fix(0.275, 0.9)
    assert should_fix(0.9, 0.9)  # boundary inclusive


def test_urgency_monotone_as_start_approaches():
    values = [shift_value(_shift(start, 4), 0, W, RHO) for start in range(20, 1, -1)]
    assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))


def test_utilization_monotone_in_working_hours():
    values = [shift_value(_shift(10, w), 0, W, RHO) for w in range(1, 9)]
    assert all(b >= a for a, b in zip(values, values[1:]))


def test_value_bounded_zero_one():
    rng = np.random.default_rng(0)
    for _ in range(300):
        start = int(rng.integers(1, 24))
        working = int(rng.integers(1, 9))
        resting = int(rng.integers(0, 12))
        v = shift_value(_shift(start, working, resting), 0, W, RHO)
        assert 0.0 <= v <= 1.0 + 1e-12


def test_rest_free_shift_maximizes_continuity_term():
    rested = shift_value(_shift(10, 4, resting=5), 0, W, RHO)
    continuous = shift_value(_shift(10, 4), 0, W, RHO)
    assert continuous > rested


def test_zero_working_rejected():
    bad = Shift([Segment(0, 0, 2, "resting")])
    with pytest.raises(ValueError):
        shift_value(bad, 0, W, RHO)


def test_weight_validation():
    with pytest.raises(ValueError):
        ValueWeights(urgency=0.5, utilization=0.5, continuity=0.5)
    with pytest.raises(ValueError):
        ValueWeights(urgency=-0.1, utilization=0.6, continuity=0.5)
    with pytest.raises(ValueError):
        ValueWeights(fix_threshold=1.5)
    with pytest.raises(ValueError):
        ValueWeights(fix_lead_h=0)
