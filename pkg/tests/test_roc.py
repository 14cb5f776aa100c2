"""Tests for ROC-space analysis."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bookmaker import (
    CostModel,
    DomainError,
    RocPoint,
    UndefinedMeasureError,
    auc_single,
    best_operating_point,
    cost_gain,
    curve_auc,
    distance_to_optimum,
    from_counts,
    from_labels,
    informedness,
    nearest_to_optimum,
    normalize,
    roc_point,
    sweep,
)

cells = st.integers(min_value=1, max_value=1000)


class TestSinglePoint:
    """Test quantities of one classifier."""

    def test_worked_table(self, worked_table):
        point = roc_point(worked_table)
        assert point.fpr == pytest.approx(0.25, abs=1e-12)
        assert point.tpr == pytest.approx(2 / 3, abs=1e-12)
        assert auc_single(point) == pytest.approx(0.708333, abs=1e-6)
        assert distance_to_optimum(point) == pytest.approx(0.4167, abs=1e-4)

    def test_corners(self, perfect_table, worst_table):
        assert roc_point(perfect_table) == RocPoint(fpr=0.0, tpr=1.0)
        assert roc_point(worst_table) == RocPoint(fpr=1.0, tpr=0.0)
        assert auc_single(RocPoint(fpr=0.0, tpr=1.0)) == 1.0
        assert distance_to_optimum(RocPoint(fpr=0.0, tpr=1.0)) == 0.0
        assert distance_to_optimum(RocPoint(fpr=1.0, tpr=0.0)) == pytest.approx(
            math.sqrt(2)
        )

    def test_diagonal_is_chance(self):
        point = RocPoint(fpr=0.3, tpr=0.3)
        assert auc_single(point) == 0.5
        assert cost_gain(point, CostModel.insensitive()) == 0.0

    def test_undefined_without_both_classes(self):
        with pytest.raises(UndefinedMeasureError):
            roc_point(normalize(from_counts(0, 4, 0, 6)))

    def test_cost_gain(self, worked_table):
        point = roc_point(worked_table)
        assert cost_gain(point, CostModel.insensitive()) == pytest.approx(
            5 / 12, abs=1e-12
        )
        assert cost_gain(point, CostModel(value_ratio=2.0)) == pytest.approx(
            1 / 6, abs=1e-12
        )

    @given(cells, cells, cells, cells)
    def test_auc_tracks_informedness(self, a, b, c, d):
        rates = normalize(from_counts(a, b, c, d))
        point = roc_point(rates)
        assert auc_single(point) == pytest.approx(
            (informedness(rates) + 1.0) / 2.0, abs=1e-12
        )
        assert cost_gain(point, CostModel.insensitive()) == pytest.approx(
            informedness(rates), abs=1e-12
        )

    @pytest.mark.parametrize("gain", [0.0, 0.2, 0.5, 0.8])
    def test_distance_minimized_where_error_rates_balance(self, gain):
        """At fixed tpr - fpr the optimum distance sits at fpr == fnr."""
        fprs = np.linspace(0.0, 1.0 - gain, 101)
        distances = [
            distance_to_optimum(RocPoint(fpr=float(fpr), tpr=min(1.0, float(fpr) + gain)))
            for fpr in fprs
        ]
        best = int(np.argmin(distances))
        assert best == 50
        fpr = fprs[best]
        fnr = 1.0 - (fpr + gain)
        assert fpr == pytest.approx(fnr, abs=1e-12)


class TestSweep:
    """Test threshold sweeps over scored instances."""

    def test_worked_example(self):
        curve = sweep([True, False, True, False], [0.9, 0.8, 0.4, 0.1])
        points = [(entry.point.fpr, entry.point.tpr) for entry in curve]
        assert points == [(0.0, 0.0), (0.0, 0.5), (0.5, 0.5), (0.5, 1.0), (1.0, 1.0)]
        assert [entry.threshold for entry in curve] == [math.inf, 0.9, 0.8, 0.4, 0.1]
        assert curve_auc(curve) == 0.75

    def test_entry_auc_is_single_point_auc(self):
        curve = sweep([True, False, True, False], [0.9, 0.8, 0.4, 0.1])
        for entry in curve:
            assert entry.auc == auc_single(entry.point)

    def test_separable(self):
        curve = sweep([True, True, False, False, False], [5.0, 4.0, 3.0, 2.0, 1.0])
        assert RocPoint(fpr=0.0, tpr=1.0) in [entry.point for entry in curve]
        assert curve_auc(curve) == pytest.approx(1.0, abs=1e-12)

    def test_constant_scores(self):
        curve = sweep([True, False, False, True], [0.5] * 4)
        assert [entry.point for entry in curve] == [
            RocPoint(fpr=0.0, tpr=0.0),
            RocPoint(fpr=1.0, tpr=1.0),
        ]
        assert curve_auc(curve) == 0.5

    def test_ties_share_a_threshold(self):
        curve = sweep([True, False, True, False], [0.7, 0.7, 0.2, 0.1])
        assert [entry.threshold for entry in curve] == [math.inf, 0.7, 0.2, 0.1]
        assert curve[1].point == RocPoint(fpr=0.5, tpr=0.5)

    @given(
        st.lists(
            st.tuples(st.booleans(), st.integers(min_value=0, max_value=20)),
            min_size=2,
            max_size=60,
        ).filter(lambda rows: len({gold for gold, _ in rows}) == 2)
    )
    def test_staircase_matches_thresholded_labels(self, rows):
        gold = [g for g, _ in rows]
        scores = [float(s) for _, s in rows]
        curve = sweep(gold, scores)

        assert curve[0].point == RocPoint(fpr=0.0, tpr=0.0)
        assert curve[-1].point == RocPoint(fpr=1.0, tpr=1.0)
        for earlier, later in zip(curve, curve[1:]):
            assert later.threshold < earlier.threshold
            assert later.point.fpr >= earlier.point.fpr
            assert later.point.tpr >= earlier.point.tpr

        for entry in curve[1:]:
            pred = [score >= entry.threshold for score in scores]
            expected = roc_point(normalize(from_labels(gold, pred)))
            assert entry.point.fpr == pytest.approx(expected.fpr, abs=1e-12)
            assert entry.point.tpr == pytest.approx(expected.tpr, abs=1e-12)
        assert 0.0 <= curve_auc(curve) <= 1.0

    def test_single_class_rejected(self):
        with pytest.raises(DomainError, match="both classes"):
            sweep([True, True], [0.1, 0.2])

    def test_length_mismatch(self):
        with pytest.raises(DomainError, match="differ in length"):
            sweep([True, False], [0.1])

    def test_non_finite_scores(self):
        with pytest.raises(DomainError, match="finite"):
            sweep([True, False], [0.1, math.nan])


class TestOperatingPoints:
    """Test choosing a threshold from a swept curve."""

    def test_best_operating_point(self):
        curve = sweep([True, False, True, False], [0.9, 0.8, 0.4, 0.1])
        # tpr - fpr is 0.5 at both 0.9 and 0.4; the earlier entry wins
        assert best_operating_point(curve).threshold == 0.9

    @pytest.fixture
    def ladder(self):
        return sweep(
            [True, True, False, True, True, False, False, False],
            [0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2],
        )

    def test_cost_shifts_the_operating_point(self, ladder):
        assert best_operating_point(ladder).threshold == 0.5
        expensive_false_alarms = CostModel(value_ratio=10.0)
        assert best_operating_point(ladder, expensive_false_alarms).threshold == 0.8

    def test_nearest_to_optimum(self, ladder):
        nearest = nearest_to_optimum(ladder)
        assert nearest.threshold == 0.5
        assert nearest.point == RocPoint(fpr=0.25, tpr=1.0)

    def test_empty_curve(self):
        with pytest.raises(DomainError):
            best_operating_point([])
        with pytest.raises(DomainError):
            nearest_to_optimum([])
