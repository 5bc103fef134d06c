"""Closed-form graph energies built from Dirichlet kernel values.

Three families are covered:

* C(1,2; n), the circulant graph generated by 1 and 2:
      E = 4 * (D_{floor(n/6)}(2*pi/n) + D_{floor(n/6)}(4*pi/n))

* C(1,g; n) for g >= 3, via a double sum of kernels whose orders are the
  integer parts of (2l+1)*n / (2(g +/- 1)):
      E = 4 * sum_{m in {1,g}} ( sum_{l=0}^{ceil(g/2)-1} D_{floor((2l+1)n/(2(g+1)))}(2*pi*m/n)
                               - sum_{l=0}^{ceil(g/2)-2} D_{floor((2l+1)n/(2(g-1)))}(2*pi*m/n) )

* K_n minus a Hamilton cycle, for all n >= 3:
      E = 2*(n - 3 - (floor(2n/3) - floor(n/3)))
          + 2*(D_{floor(n/3)}(2*pi/n) - D_{floor(2n/3)}(2*pi/n))

  The last line is the sine-ratio form routed through the hardened
  kernel path, since sin((N + 1/2)*2*pi/n)/sin(pi/n) = D_N(2*pi/n).

When the vertex count is n = 2*alpha*(g-1)*(g+1) the double sum for
C(1,g; n) telescopes into two sine products; see energy_corollary.

All floor/ceil index expressions are computed by exact integer division,
never through floating-point floors: a one-off kernel order silently
breaks the telescoping.  The formulas are served for n >= 2g + 1, the
smallest vertex count where the graph is simple and non-degenerate;
smaller n is rejected rather than returning unverified values.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .kernel import RationalAngle, dirichlet_eval, sum_odd_indexed_kernels

__all__ = [
    "circulant_energy",
    "energy_c1_2",
    "energy_c1_gamma",
    "energy_corollary",
    "corollary_vertex_count",
    "energy_knh_closed",
    "cos_sum_roots",
    "cos_sum_root_fractions",
    "is_hyperenergetic",
]


def energy_c1_2(n: int) -> float:
    """Energy of the circulant graph generated by {1, 2} on n vertices."""
    if n < 5:
        raise ValueError(f"C(1,2; n) needs n >= 5, got n={n}")
    order = n // 6
    return 4.0 * (
        dirichlet_eval(order, RationalAngle(1, n))
        + dirichlet_eval(order, RationalAngle(2, n))
    )


def energy_c1_gamma(n: int, gamma: int) -> float:
    """Energy of the circulant graph generated by {1, gamma}, gamma >= 3."""
    if gamma < 3:
        raise ValueError(f"this branch needs gamma >= 3, got {gamma}")
    if n < 2 * gamma + 1:
        raise ValueError(
            f"n must be >= 2*gamma+1 = {2 * gamma + 1} for the closed form, got n={n}"
        )
    half_up = (gamma + 1) // 2  # ceil(gamma / 2)
    total = 0.0
    for m in (1, gamma):
        angle = RationalAngle(m, n)
        plus = sum(
            dirichlet_eval(((2 * l + 1) * n) // (2 * (gamma + 1)), angle)
            for l in range(half_up)
        )
        minus = sum(
            dirichlet_eval(((2 * l + 1) * n) // (2 * (gamma - 1)), angle)
            for l in range(half_up - 1)
        )
        total += plus - minus
    return 4.0 * total


def circulant_energy(n: int, gamma: int) -> float:
    """Closed-form energy of the circulant graph generated by {1, gamma}.

    Dispatches gamma = 2 and gamma >= 3 to their respective formulas.
    """
    if gamma < 2:
        raise ValueError(f"gamma must be >= 2, got {gamma}")
    if n < 2 * gamma + 1:
        raise ValueError(
            f"n must be >= 2*gamma+1 = {2 * gamma + 1} for the closed form, got n={n}"
        )
    if gamma == 2:
        return energy_c1_2(n)
    return energy_c1_gamma(n, gamma)


def corollary_vertex_count(gamma: int, alpha: int) -> int:
    """Vertex count 2*alpha*(gamma-1)*(gamma+1) of the telescoped family."""
    return 2 * alpha * (gamma - 1) * (gamma + 1)


def energy_corollary(gamma: int, alpha: int) -> float:
    """Telescoped energy of C(1,gamma) on 2*alpha*(gamma-1)*(gamma+1) vertices.

    At this vertex count every kernel order (2l+1)*n / (2(gamma +/- 1)) is
    an exact odd multiple of a = alpha*(gamma -/+ 1), so each kernel sum
    collapses into the closed sine product of sum_odd_indexed_kernels.
    """
    if gamma < 3:
        raise ValueError(f"the telescoped family needs gamma >= 3, got {gamma}")
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    n = corollary_vertex_count(gamma, alpha)
    half_up = (gamma + 1) // 2
    total = 0.0
    for m in (1, gamma):
        angle = RationalAngle(m, n)
        total += sum_odd_indexed_kernels(alpha * (gamma - 1), half_up - 1, angle)
        total -= sum_odd_indexed_kernels(alpha * (gamma + 1), half_up - 2, angle)
    return 4.0 * total


def energy_knh_closed(n: int) -> float:
    """Closed-form energy of K_n minus a Hamilton cycle, n >= 3."""
    if n < 3:
        raise ValueError(f"K_n - H needs n >= 3, got n={n}")
    lo = n // 3
    hi = (2 * n) // 3
    angle = RationalAngle(1, n)
    return 2.0 * (n - 3 - (hi - lo)) + 2.0 * (
        dirichlet_eval(lo, angle) - dirichlet_eval(hi, angle)
    )


def cos_sum_root_fractions(gamma: int) -> list[Fraction]:
    """Roots of cos(x) + cos(gamma*x) = 0 in (0, pi], as exact multiples of pi.

    The roots interleave odd multiples of pi/(gamma+1) and pi/(gamma-1):

        gamma = 2:    1/3, 1
        odd gamma:    1/(g+1), 1/(g-1), 3/(g+1), 3/(g-1), ..., g/(g+1)
        even gamma:   1/(g+1), 1/(g-1), 3/(g+1), ..., (g-1)/(g+1), 1

    Exactly gamma values, strictly increasing.
    """
    if gamma < 2:
        raise ValueError(f"gamma must be >= 2, got {gamma}")
    if gamma == 2:
        return [Fraction(1, 3), Fraction(1, 1)]
    if gamma % 2 == 1:
        plus = [Fraction(2 * j + 1, gamma + 1) for j in range((gamma + 1) // 2)]
        minus = [Fraction(2 * j + 1, gamma - 1) for j in range((gamma - 1) // 2)]
        return sorted(plus + minus)
    plus = [Fraction(2 * j + 1, gamma + 1) for j in range(gamma // 2)]
    minus = [Fraction(2 * j + 1, gamma - 1) for j in range(gamma // 2 - 1)]
    return sorted(plus + minus) + [Fraction(1, 1)]


def cos_sum_roots(gamma: int) -> list[float]:
    """Roots of cos(x) + cos(gamma*x) = 0 in (0, pi], in radians, ascending."""
    return [float(f) * math.pi for f in cos_sum_root_fractions(gamma)]


def is_hyperenergetic(energy: float, n: int) -> bool:
    """Whether an energy strictly exceeds the complete-graph energy 2(n-1)."""
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got n={n}")
    if energy < 0:
        raise ValueError(f"energy must be >= 0, got {energy}")
    return energy > 2.0 * (n - 1)
