"""Batch runners: parameter sweeps and the method-agreement grid.

Each sweep row carries the closed-form energy and the direct
(cosine-spectrum) energy side by side, so the emitted tables double as
verification artifacts.  Rows are produced in ascending order of the
varied parameter and the runners are deterministic: identical configs
yield identical row lists.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import closed_form, spectrum

__all__ = [
    "SWEEP_MODES",
    "SweepRow",
    "SweepConfig",
    "VerifyFailure",
    "VerifySummary",
    "run_n_sweep",
    "run_gamma_sweep",
    "run_knh_sweep",
    "run_verify_grid",
    "run_config",
    "relative_spread",
]

SWEEP_MODES = ("vary-n", "vary-gamma", "knh", "verify-grid")


@dataclass(frozen=True)
class SweepRow:
    """One sweep record: inputs, per-method energies, discrepancy."""

    n: int
    gamma: int  # 0 for K_n - H rows
    energy_closed: float
    energy_direct: float
    abs_diff: float
    kn_energy: float
    hyperenergetic: bool


@dataclass(frozen=True)
class SweepConfig:
    """A sweep request: mode, fixed parameter, range, tolerance, format."""

    mode: str
    fixed: int = 0
    lo: int = 0
    hi: int = 0
    step: int = 1
    tolerance: float = 1e-9
    fmt: str = "csv"

    def __post_init__(self) -> None:
        if self.mode not in SWEEP_MODES:
            raise ValueError(f"mode must be one of {SWEEP_MODES}, got {self.mode!r}")
        if self.lo > self.hi:
            raise ValueError(f"empty range: lo={self.lo} > hi={self.hi}")
        if self.step < 1:
            raise ValueError(f"step must be >= 1, got {self.step}")
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be > 0, got {self.tolerance}")
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.fmt!r}")


def _circulant_row(n: int, gamma: int) -> SweepRow:
    closed = closed_form.circulant_energy(n, gamma)
    direct = spectrum.energy_direct(spectrum.CirculantSpec(n, (1, gamma))).energy
    return SweepRow(
        n=n,
        gamma=gamma,
        energy_closed=closed,
        energy_direct=direct,
        abs_diff=abs(closed - direct),
        kn_energy=spectrum.kn_energy(n),
        hyperenergetic=closed_form.is_hyperenergetic(closed, n),
    )


def _knh_row(n: int) -> SweepRow:
    closed = closed_form.energy_knh_closed(n)
    direct = spectrum.knh_energy_direct(n).energy
    return SweepRow(
        n=n,
        gamma=0,
        energy_closed=closed,
        energy_direct=direct,
        abs_diff=abs(closed - direct),
        kn_energy=spectrum.kn_energy(n),
        hyperenergetic=closed_form.is_hyperenergetic(closed, n),
    )


def run_n_sweep(gamma: int, n_lo: int, n_hi: int, step: int = 1) -> list[SweepRow]:
    """Energy of C(1,gamma; n) for n over an inclusive range, ascending."""
    if gamma < 2:
        raise ValueError(f"gamma must be >= 2, got {gamma}")
    if n_lo < 2 * gamma + 1:
        raise ValueError(
            f"n range must start at 2*gamma+1 = {2 * gamma + 1} or above, got {n_lo}"
        )
    if n_lo > n_hi:
        raise ValueError(f"empty range: {n_lo} > {n_hi}")
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    return [_circulant_row(n, gamma) for n in range(n_lo, n_hi + 1, step)]


def run_gamma_sweep(
    n: int, gamma_lo: int, gamma_hi: int, step: int = 1
) -> list[SweepRow]:
    """Energy of C(1,gamma; n) at fixed n for gamma over an inclusive range."""
    if gamma_lo < 2:
        raise ValueError(f"gamma range must start at 2 or above, got {gamma_lo}")
    if gamma_lo > gamma_hi:
        raise ValueError(f"empty range: {gamma_lo} > {gamma_hi}")
    if gamma_hi > (n - 1) // 2:
        raise ValueError(
            f"gamma range exceeds the validity constraint n >= 2*gamma+1: "
            f"max gamma for n={n} is {(n - 1) // 2}, got {gamma_hi}"
        )
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    return [_circulant_row(n, g) for g in range(gamma_lo, gamma_hi + 1, step)]


def run_knh_sweep(n_lo: int, n_hi: int, step: int = 1) -> list[SweepRow]:
    """Energy of K_n - H for n over an inclusive range (gamma column is 0)."""
    if n_lo < 3:
        raise ValueError(f"K_n - H needs n >= 3, got {n_lo}")
    if n_lo > n_hi:
        raise ValueError(f"empty range: {n_lo} > {n_hi}")
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    return [_knh_row(n) for n in range(n_lo, n_hi + 1, step)]


@dataclass(frozen=True)
class VerifyFailure:
    """One grid cell whose closed/direct discrepancy exceeded tolerance."""

    kind: str  # "circulant" | "corollary" | "knh"
    n: int
    gamma: int
    alpha: int
    diff: float


@dataclass(frozen=True)
class VerifySummary:
    """Outcome of a verification grid run; empty failures means pass."""

    checked: int  # circulant (gamma, n) grid cells
    corollary_checked: int
    knh_checked: int
    worst_diff: float
    failures: tuple[VerifyFailure, ...]

    @property
    def total_checked(self) -> int:
        return self.checked + self.corollary_checked + self.knh_checked

    @property
    def passed(self) -> bool:
        return not self.failures


def run_verify_grid(gamma_max: int, n_max: int, tolerance: float) -> VerifySummary:
    """Compare every closed form against its oracle over a parameter grid.

    Covers the full circulant grid 2 <= gamma <= gamma_max,
    2*gamma+1 <= n <= n_max, the telescoped-family pairs whose vertex
    count fits in n_max, and K_n - H for 3 <= n <= n_max.  Discrepancies
    above tolerance are collected as failures, not raised.
    """
    if gamma_max < 2:
        raise ValueError(f"gamma_max must be >= 2, got {gamma_max}")
    if n_max < 2 * gamma_max + 1:
        raise ValueError(
            f"n_max must be >= 2*gamma_max+1 = {2 * gamma_max + 1}, got {n_max}"
        )
    if tolerance < 0:
        raise ValueError(f"tolerance must be >= 0, got {tolerance}")

    checked = 0
    corollary_checked = 0
    knh_checked = 0
    worst = 0.0
    failures: list[VerifyFailure] = []

    def record(kind: str, n: int, gamma: int, alpha: int, diff: float) -> None:
        nonlocal worst
        worst = max(worst, diff)
        if diff > tolerance:
            failures.append(VerifyFailure(kind, n, gamma, alpha, diff))

    for gamma in range(2, gamma_max + 1):
        for n in range(2 * gamma + 1, n_max + 1):
            row = _circulant_row(n, gamma)
            checked += 1
            record("circulant", n, gamma, 0, row.abs_diff)

    for gamma in range(3, gamma_max + 1):
        alpha = 1
        while closed_form.corollary_vertex_count(gamma, alpha) <= n_max:
            n = closed_form.corollary_vertex_count(gamma, alpha)
            diff = abs(
                closed_form.energy_corollary(gamma, alpha)
                - closed_form.energy_c1_gamma(n, gamma)
            )
            corollary_checked += 1
            record("corollary", n, gamma, alpha, diff)
            alpha += 1

    for n in range(3, n_max + 1):
        row = _knh_row(n)
        knh_checked += 1
        record("knh", n, 0, 0, row.abs_diff)

    return VerifySummary(
        checked=checked,
        corollary_checked=corollary_checked,
        knh_checked=knh_checked,
        worst_diff=worst,
        failures=tuple(failures),
    )


def run_config(config: SweepConfig) -> list[SweepRow] | VerifySummary:
    """Dispatch a SweepConfig to the matching runner."""
    if config.mode == "vary-n":
        return run_n_sweep(config.fixed, config.lo, config.hi, config.step)
    if config.mode == "vary-gamma":
        return run_gamma_sweep(config.fixed, config.lo, config.hi, config.step)
    if config.mode == "knh":
        return run_knh_sweep(config.lo, config.hi, config.step)
    return run_verify_grid(config.fixed, config.hi, config.tolerance)


def relative_spread(rows: list[SweepRow]) -> float:
    """(max - min) / mean of the closed-form energies in a row list."""
    if not rows:
        raise ValueError("relative_spread needs at least one row")
    energies = [row.energy_closed for row in rows]
    mean = sum(energies) / len(energies)
    if mean == 0.0:
        return 0.0
    return (max(energies) - min(energies)) / mean
