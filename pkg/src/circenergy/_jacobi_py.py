"""Pure-Python cyclic Jacobi sweeps, fallback twin of _jacobi_cy.

Same contract as the compiled module; selected at import time when the
extension is unavailable.  Works on nested lists internally -- scalar
indexing into numpy arrays is several times slower under the interpreter.
"""

from __future__ import annotations

import math

__all__ = ["jacobi_cycles", "off_diagonal_norm"]


def _off_norm_rows(rows: list[list[float]]) -> float:
    n = len(rows)
    acc = 0.0
    for i in range(n):
        row = rows[i]
        for j in range(i + 1, n):
            acc += row[j] * row[j]
    return math.sqrt(2.0 * acc)


def off_diagonal_norm(a) -> float:
    """Frobenius norm of the off-diagonal part of a symmetric matrix."""
    return _off_norm_rows([list(map(float, row)) for row in a])


def jacobi_cycles(a, off_threshold: float, max_sweeps: int) -> int:
    """Run cyclic Jacobi rotation sweeps on a symmetric matrix in place.

    Mirrors _jacobi_cy.jacobi_cycles: returns the number of sweeps used,
    or -1 if max_sweeps was exhausted before the off-diagonal Frobenius
    norm dropped below off_threshold.
    """
    n = a.shape[0]
    rows = [[float(a[i, j]) for j in range(n)] for i in range(n)]
    if _off_norm_rows(rows) <= off_threshold:
        return 0
    sweeps_used = -1
    for sweep in range(max_sweeps):
        for p in range(n - 1):
            row_p = rows[p]
            for q in range(p + 1, n):
                apq = row_p[q]
                if apq == 0.0:
                    continue
                row_q = rows[q]
                tau = (row_q[q] - row_p[p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                for row in rows:
                    aip = row[p]
                    aiq = row[q]
                    row[p] = c * aip - s * aiq
                    row[q] = s * aip + c * aiq
                for i in range(n):
                    aip = row_p[i]
                    aiq = row_q[i]
                    row_p[i] = c * aip - s * aiq
                    row_q[i] = s * aip + c * aiq
                row_p[q] = 0.0
                row_q[p] = 0.0
        if _off_norm_rows(rows) <= off_threshold:
            sweeps_used = sweep + 1
            break
    for i in range(n):
        for j in range(n):
            a[i, j] = rows[i][j]
    return sweeps_used
