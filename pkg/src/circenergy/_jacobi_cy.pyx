# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi sweeps for symmetric matrices.

Hot kernel of the dense eigensolver: the pure-Python twin lives in
_jacobi_py with the identical contract, selected at import time when
this extension is not built.
"""

from libc.math cimport sqrt


cdef double _off_norm(double[:, ::1] a) noexcept nogil:
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j
    cdef double acc = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            acc += a[i, j] * a[i, j]
    return sqrt(2.0 * acc)


def off_diagonal_norm(double[:, ::1] a):
    """Frobenius norm of the off-diagonal part of a symmetric matrix."""
    return _off_norm(a)


def jacobi_cycles(double[:, ::1] a, double off_threshold, int max_sweeps):
    """Run cyclic Jacobi rotation sweeps on a symmetric matrix in place.

    Sweeps row by row over all (p, q) pairs, zeroing a[p, q] with a Givens
    rotation, until the off-diagonal Frobenius norm drops below
    off_threshold.  Returns the number of sweeps used, or -1 if
    max_sweeps was exhausted first.  The eigenvalues are the diagonal of
    the converged matrix.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, i
    cdef int sweep
    cdef double apq, tau, t, c, s, aip, aiq

    if _off_norm(a) <= off_threshold:
        return 0
    for sweep in range(max_sweeps):
        with nogil:
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                    if tau >= 0.0:
                        t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    # A <- A J (columns p, q), then A <- J^T A (rows p, q)
                    for i in range(n):
                        aip = a[i, p]
                        aiq = a[i, q]
                        a[i, p] = c * aip - s * aiq
                        a[i, q] = s * aip + c * aiq
                    for i in range(n):
                        aip = a[p, i]
                        aiq = a[q, i]
                        a[p, i] = c * aip - s * aiq
                        a[q, i] = s * aip + c * aiq
                    # pin the rotated pair to exact symmetry
                    a[p, q] = 0.0
                    a[q, p] = 0.0
        if _off_norm(a) <= off_threshold:
            return sweep + 1
    return -1
