"""Dirichlet kernel evaluation at exact rational angles.

Every angle entering this module is a rational multiple of 2*pi, carried
as an integer pair (p, q) meaning x = 2*pi*p/q.  The Dirichlet kernel

    D_N(x) = 1 + 2*sum_{k=1..N} cos(k*x) = sin((N + 1/2)*x) / sin(x/2)

is evaluated through exact integer reduction of the sine arguments: the
multiplier (2N+1)*p is reduced mod 2q (and folded into the first quadrant)
before any floating-point call.  This keeps the kernel's lattice values
exact -- D vanishes bit-exactly where the identity says it vanishes, and
equals +/-1 bit-exactly at the half-period points -- which naive evaluation
of sin((N+1/2)x) destroys for large N.

Singularities (x a multiple of 2*pi, or sin(a*x) = 0 in the summed-kernel
product) are decided exactly on the integers, never by a float-epsilon
test.  Python integers make the reductions overflow-free for any index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "RationalAngle",
    "dirichlet_eval",
    "dirichlet_partial_sum",
    "sum_odd_indexed_kernels",
]


@dataclass(frozen=True)
class RationalAngle:
    """The angle 2*pi*p/q radians, stored as an exact integer pair.

    p may exceed q; operations reduce mod q (i.e. mod one full turn)
    themselves, so equal angles always evaluate identically.
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValueError(f"denominator must be >= 1, got q={self.q}")
        if self.p < 0:
            raise ValueError(f"numerator must be >= 0, got p={self.p}")

    @property
    def radians(self) -> float:
        return 2.0 * math.pi * self.p / self.q


def _sin_pi_frac(r: int, q: int) -> float:
    """sin(pi * r / q) with the argument folded exactly into [0, pi/2].

    Integer folding first applies sin(pi + t) = -sin(t), then
    sin(pi - t) = sin(t), so the float sine is only ever called on a
    small argument and lattice zeros come out as exact 0.0.
    """
    r %= 2 * q
    sign = 1.0
    if r >= q:
        r -= q
        sign = -1.0
    if 2 * r > q:
        r = q - r
    return sign * math.sin(math.pi * r / q)


def dirichlet_eval(order: int, angle: RationalAngle) -> float:
    """Dirichlet kernel D_order at a rational angle.

    Returns sin((order + 1/2)*x) / sin(x/2) for x = 2*pi*p/q, or the
    limit value 2*order + 1 when x is a multiple of 2*pi.
    """
    if order < 0:
        raise ValueError(f"kernel order must be >= 0, got {order}")
    p = angle.p % angle.q
    if p == 0:
        return float(2 * order + 1)
    q = angle.q
    r = ((2 * order + 1) * p) % (2 * q)
    return _sin_pi_frac(r, q) / _sin_pi_frac(p, q)


def dirichlet_partial_sum(lo: int, hi: int, angle: RationalAngle) -> float:
    """Telescoped consecutive-cosine sum 2*sum_{k=lo+1..hi} cos(k*x).

    Equals D_hi(x) - D_lo(x); an empty range (lo == hi) gives 0.
    """
    if lo < 0:
        raise ValueError(f"lower kernel order must be >= 0, got {lo}")
    if lo > hi:
        raise ValueError(f"kernel orders out of order: lo={lo} > hi={hi}")
    return dirichlet_eval(hi, angle) - dirichlet_eval(lo, angle)


def sum_odd_indexed_kernels(stride: int, k_max: int, angle: RationalAngle) -> float:
    """Sum of Dirichlet kernels of odd multiples of a stride.

    Computes sum_{k=0..k_max} D_{(2k+1)*stride}(x) through the closed
    product

        sin(((2*k_max + 2)*stride + 1)*x/2) * sin((k_max + 1)*stride*x)
        -----------------------------------------------------------------
                         sin(x/2) * sin(stride*x)

    The product path requires sin(x/2) != 0 and sin(stride*x) != 0; both
    conditions are decided exactly on the integers (q | p, respectively
    q | 2*stride*p).  Singular angles fall back to term-by-term summation
    of dirichlet_eval, where each term handles its own limit -- the closed
    product never divides by a near-zero float.
    """
    if stride < 1:
        raise ValueError(f"stride must be >= 1, got {stride}")
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    p = angle.p % angle.q
    q = angle.q
    if p == 0 or (2 * stride * p) % q == 0:
        return sum(
            dirichlet_eval((2 * k + 1) * stride, angle) for k in range(k_max + 1)
        )
    r_half = (((2 * k_max + 2) * stride + 1) * p) % (2 * q)
    r_mid = (2 * (k_max + 1) * stride * p) % (2 * q)
    r_stride = (2 * stride * p) % (2 * q)
    num = _sin_pi_frac(r_half, q) * _sin_pi_frac(r_mid, q)
    den = _sin_pi_frac(p, q) * _sin_pi_frac(r_stride, q)
    return num / den
