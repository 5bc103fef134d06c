"""Self-contained dense symmetric eigensolver (cyclic Jacobi).

Kept deliberately free of LAPACK so it can serve as an independent
oracle for the cosine-formula spectra.  The rotation sweeps run in the
compiled extension when it is built; otherwise the pure-Python twin is
selected at import.
"""

from __future__ import annotations

import numpy as np

try:
    from . import _jacobi_cy as _impl

    JACOBI_BACKEND = "cython"
except ImportError:  # extension not built; fall back to the interpreter
    from . import _jacobi_py as _impl

    JACOBI_BACKEND = "python"

from . import _jacobi_py

__all__ = ["JACOBI_BACKEND", "MATRIX_CAP", "MAX_SWEEPS", "jacobi_eigenvalues"]

MATRIX_CAP = 512
MAX_SWEEPS = 100

# relative floor of the convergence threshold: off-diagonal Frobenius norm
# must fall below REL_TOL * (1 + ||A||_F)
REL_TOL = 1e-12


def _backend(name: str | None):
    if name is None:
        return _impl
    if name == "python":
        return _jacobi_py
    if name == "cython":
        if JACOBI_BACKEND != "cython":
            raise RuntimeError("compiled jacobi backend is not available")
        return _impl
    raise ValueError(f"unknown jacobi backend {name!r}")


def jacobi_eigenvalues(
    matrix,
    cap: int = MATRIX_CAP,
    max_sweeps: int = MAX_SWEEPS,
    backend: str | None = None,
) -> np.ndarray:
    """All eigenvalues of a symmetric real matrix by cyclic Jacobi sweeps.

    Returns the diagonal of the converged matrix, in no particular order.
    Convergence means the off-diagonal Frobenius norm is below
    1e-12 * (1 + ||A||_F); hitting ``max_sweeps`` first raises
    RuntimeError (this must not happen for symmetric input within the
    size cap and is treated as an internal failure).
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    n = a.shape[0]
    if n > cap:
        raise ValueError(f"matrix side {n} exceeds the solver cap {cap}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be symmetric")
    work = np.array(a, dtype=np.float64, order="C", copy=True)
    threshold = REL_TOL * (1.0 + float(np.sqrt((a * a).sum())))
    sweeps = _backend(backend).jacobi_cycles(work, threshold, max_sweeps)
    if sweeps < 0:
        raise RuntimeError(
            f"jacobi sweep did not converge within {max_sweeps} sweeps "
            f"(side {n}, threshold {threshold:.3e})"
        )
    return np.diagonal(work).copy()
