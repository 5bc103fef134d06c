"""Sweep runners and the verification grid."""

import math

import pytest

from circenergy.sweep import (
    SweepConfig,
    relative_spread,
    run_config,
    run_gamma_sweep,
    run_knh_sweep,
    run_n_sweep,
    run_verify_grid,
)


def check_row_invariants(row):
    assert row.abs_diff == abs(row.energy_closed - row.energy_direct)
    assert row.kn_energy == 2.0 * (row.n - 1)
    assert row.hyperenergetic is (row.energy_closed > row.kn_energy)


class TestRunNSweep:
    def test_figure_range(self):
        rows = run_n_sweep(8, 17, 300)
        assert len(rows) == 284
        assert [row.n for row in rows] == list(range(17, 301))
        assert all(not row.hyperenergetic for row in rows)
        assert max(row.abs_diff for row in rows) < 1e-9
        for row in rows:
            check_row_invariants(row)

    def test_single_point_k5(self):
        (row,) = run_n_sweep(2, 5, 5)
        assert row.energy_closed == pytest.approx(8.0, abs=1e-12)
        assert row.energy_direct == pytest.approx(8.0, abs=1e-12)
        assert row.gamma == 2

    def test_step(self):
        rows = run_n_sweep(2, 5, 11, step=2)
        assert [row.n for row in rows] == [5, 7, 9, 11]

    def test_rejects_invalid(self):
        with pytest.raises(ValueError):
            run_n_sweep(1, 5, 10)
        with pytest.raises(ValueError):
            run_n_sweep(8, 16, 300)  # below 2*gamma+1
        with pytest.raises(ValueError):
            run_n_sweep(2, 10, 5)
        with pytest.raises(ValueError):
            run_n_sweep(2, 5, 10, step=0)


class TestRunGammaSweep:
    def test_full_range_at_150(self):
        rows = run_gamma_sweep(150, 2, 74)
        assert len(rows) == 73
        assert [row.gamma for row in rows] == list(range(2, 75))
        assert max(row.abs_diff for row in rows) < 1e-9
        for row in rows:
            check_row_invariants(row)

    def test_consistent_with_n_sweep(self):
        (from_gamma,) = run_gamma_sweep(150, 8, 8)
        from_n = run_n_sweep(8, 17, 150)[-1]
        assert from_gamma == from_n

    def test_spread_is_recorded_not_pinned(self):
        # the profile is "more or less constant"; assert only sanity bounds
        spread = relative_spread(run_gamma_sweep(150, 2, 74))
        assert math.isfinite(spread)
        assert 0.0 < spread < 1.0

    def test_rejects_invalid(self):
        with pytest.raises(ValueError):
            run_gamma_sweep(150, 1, 10)
        with pytest.raises(ValueError):
            run_gamma_sweep(150, 2, 75)  # 2*75+1 > 150
        with pytest.raises(ValueError):
            run_gamma_sweep(150, 10, 5)


class TestRunKnhSweep:
    def test_single_point(self):
        (row,) = run_knh_sweep(3, 3)
        assert row.energy_closed == pytest.approx(0.0, abs=1e-12)
        assert row.hyperenergetic is False
        assert row.gamma == 0

    def test_threshold_flips_once(self):
        rows = run_knh_sweep(3, 100)
        flags = [row.hyperenergetic for row in rows]
        assert flags == [n >= 10 for n in range(3, 101)]
        assert max(row.abs_diff for row in rows) < 1e-9

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            run_knh_sweep(2, 10)


class TestRelativeSpread:
    def test_constant_rows_have_zero_spread(self):
        rows = run_n_sweep(2, 5, 5) * 3
        assert relative_spread(rows) == 0.0

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            relative_spread([])


class TestRunVerifyGrid:
    def test_small_grid_passes(self):
        summary = run_verify_grid(5, 60, 1e-9)
        assert summary.failures == ()
        assert summary.passed
        assert summary.worst_diff < 1e-9

    def test_minimal_grid_counts_one_pair(self):
        summary = run_verify_grid(2, 5, 1e-9)
        assert summary.checked == 1  # only (gamma=2, n=5)
        assert summary.corollary_checked == 0
        assert summary.knh_checked == 3
        assert summary.passed

    def test_zero_tolerance_is_unattainable(self):
        summary = run_verify_grid(3, 40, 0.0)
        assert summary.failures != ()
        assert not summary.passed

    def test_corollary_pairs_enter_the_grid(self):
        # gamma=3, alpha=1 -> n=16 fits under n_max=20
        summary = run_verify_grid(3, 20, 1e-9)
        assert summary.corollary_checked == 1
        assert summary.passed

    def test_determinism(self):
        assert run_verify_grid(4, 50, 1e-9) == run_verify_grid(4, 50, 1e-9)

    def test_rejects_invalid(self):
        with pytest.raises(ValueError):
            run_verify_grid(1, 60, 1e-9)
        with pytest.raises(ValueError):
            run_verify_grid(5, 10, 1e-9)
        with pytest.raises(ValueError):
            run_verify_grid(5, 60, -1.0)


class TestSweepConfig:
    def test_dispatch_all_modes(self):
        rows = run_config(SweepConfig(mode="vary-n", fixed=2, lo=5, hi=10))
        assert len(rows) == 6
        rows = run_config(SweepConfig(mode="vary-gamma", fixed=30, lo=2, hi=5))
        assert len(rows) == 4
        rows = run_config(SweepConfig(mode="knh", lo=3, hi=10))
        assert len(rows) == 8
        summary = run_config(SweepConfig(mode="verify-grid", fixed=2, lo=5, hi=20))
        assert summary.passed

    def test_determinism(self):
        config = SweepConfig(mode="vary-n", fixed=3, lo=7, hi=40)
        assert run_config(config) == run_config(config)

    def test_rejects_invalid(self):
        with pytest.raises(ValueError):
            SweepConfig(mode="vary-k", lo=1, hi=2)
        with pytest.raises(ValueError):
            SweepConfig(mode="knh", lo=10, hi=3)
        with pytest.raises(ValueError):
            SweepConfig(mode="knh", lo=3, hi=10, step=0)
        with pytest.raises(ValueError):
            SweepConfig(mode="knh", lo=3, hi=10, tolerance=0.0)
        with pytest.raises(ValueError):
            SweepConfig(mode="knh", lo=3, hi=10, fmt="xml")
