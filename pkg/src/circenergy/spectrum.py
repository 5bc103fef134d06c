"""Ground-truth spectra and energies of circulant graphs and K_n - H.

Everything here is brute force on purpose: eigenvalues come either from
the circulant cosine formula evaluated term by term, or from the
self-contained Jacobi eigensolver applied to an explicitly built
adjacency matrix.  No closed-form shortcut enters this module, so its
outputs can certify the closed forms independently.

The circulant graph on n vertices with generator set {g_1, ..., g_d}
connects v to v +/- g_i (mod n); its adjacency eigenvalues are

    lambda_k = sum_i 2*cos(2*pi*g_i*k/n),    k = 0..n-1,

where a degenerate generator g = n/2 (even n) contributes cos(pi*k)
once, not twice, because +g and -g coincide mod n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .jacobi import MATRIX_CAP, jacobi_eigenvalues

__all__ = [
    "METHOD_COSINE",
    "METHOD_EIGENSOLVER",
    "CirculantSpec",
    "Spectrum",
    "EnergyReport",
    "kn_energy",
    "circulant_eigenvalues",
    "energy_direct",
    "energy_matrix",
    "build_adjacency",
    "knh_adjacency",
    "knh_eigenvalues",
    "knh_energy_direct",
]

METHOD_COSINE = "cosine-formula"
METHOD_EIGENSOLVER = "eigensolver"


def kn_energy(n: int) -> float:
    """Energy of the complete graph K_n: eigenvalues n-1 and -1 (x n-1)."""
    return 2.0 * (n - 1)


@dataclass(frozen=True)
class CirculantSpec:
    """A circulant graph instance: vertex count and generator set.

    Generators are normalized at construction: g and n - g define the
    same edges, so each is reduced mod n into 1..n//2.  Generator sets
    that collide after normalization would describe a multigraph and are
    rejected.  A largest generator equal to n/2 (even n) is degenerate:
    it contributes a single edge per vertex, giving degree 2d - 1.
    """

    n: int
    generators: tuple[int, ...]

    def __init__(self, n: int, generators) -> None:
        if n < 3:
            raise ValueError(f"vertex count must be >= 3, got n={n}")
        norm = []
        for g in generators:
            r = g % n
            if r == 0:
                raise ValueError(f"generator {g} is 0 mod n={n} (self-loop)")
            norm.append(min(r, n - r))
        if not norm:
            raise ValueError("generator set must be non-empty")
        if len(set(norm)) != len(norm):
            raise ValueError(
                f"generators {tuple(generators)} collide mod +/- on n={n} "
                "(multigraphs are not supported)"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "generators", tuple(sorted(norm)))

    @property
    def degree_count(self) -> int:
        """Number of generators d; the graph is 2d-regular unless degenerate."""
        return len(self.generators)

    @property
    def degenerate(self) -> bool:
        """True when the largest generator is n/2, i.e. +g = -g mod n."""
        return self.n % 2 == 0 and self.generators[-1] == self.n // 2


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Ordered eigenvalue list (index k = 0..n-1) with provenance tag."""

    values: np.ndarray = field(repr=False)
    method: str

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class EnergyReport:
    """Graph energy together with the complete-graph baseline."""

    energy: float
    method: str
    n: int
    kn_energy: float
    hyperenergetic: bool


def _report(energy: float, method: str, n: int) -> EnergyReport:
    baseline = kn_energy(n)
    return EnergyReport(
        energy=energy,
        method=method,
        n=n,
        kn_energy=baseline,
        hyperenergetic=energy > baseline,
    )


def _folded_cosines(multiplier: int, n: int) -> np.ndarray:
    """cos(2*pi*multiplier*k/n) for k = 0..n-1, with exact index folding.

    The index multiplier*k is reduced mod n and folded to min(j, n-j)
    before the float cosine, so the argument never leaves [0, pi] and
    reflected generators produce bit-identical values.
    """
    j = (multiplier * np.arange(n)) % n
    j = np.minimum(j, n - j)
    return np.cos((2.0 * math.pi / n) * j)


def circulant_eigenvalues(spec: CirculantSpec) -> Spectrum:
    """Eigenvalues of a circulant graph from the cosine formula."""
    n = spec.n
    values = np.zeros(n)
    for g in spec.generators:
        coeff = 1.0 if 2 * g == n else 2.0
        values += coeff * _folded_cosines(g, n)
    return Spectrum(values=values, method=METHOD_COSINE)


def energy_direct(spec: CirculantSpec) -> EnergyReport:
    """Energy as the plain absolute sum over the cosine-formula spectrum."""
    spectrum = circulant_eigenvalues(spec)
    energy = float(np.abs(spectrum.values).sum())
    return _report(energy, METHOD_COSINE, spec.n)


def build_adjacency(spec: CirculantSpec, cap: int = MATRIX_CAP) -> np.ndarray:
    """Dense 0/1 adjacency matrix of a circulant graph.

    Feeds the dense eigensolver, hence the side cap.
    """
    n = spec.n
    if n > cap:
        raise ValueError(f"adjacency side {n} exceeds the dense cap {cap}")
    a = np.zeros((n, n))
    idx = np.arange(n)
    for g in spec.generators:
        a[idx, (idx + g) % n] = 1.0
        a[idx, (idx - g) % n] = 1.0
    return a


def knh_adjacency(n: int, cap: int = MATRIX_CAP) -> np.ndarray:
    """Adjacency of K_n minus a Hamilton cycle (all-ones - I - cycle)."""
    if n < 3:
        raise ValueError(f"K_n - H needs n >= 3, got n={n}")
    if n > cap:
        raise ValueError(f"adjacency side {n} exceeds the dense cap {cap}")
    cycle = build_adjacency(CirculantSpec(n, (1,)), cap=cap)
    return np.ones((n, n)) - np.eye(n) - cycle


def energy_matrix(spec: CirculantSpec, cap: int = MATRIX_CAP) -> EnergyReport:
    """Energy via the dense route: build the adjacency, diagonalize, sum.

    Fully independent of the cosine formula; limited to n <= cap.
    """
    eigenvalues = jacobi_eigenvalues(build_adjacency(spec, cap=cap), cap=cap)
    energy = float(np.abs(eigenvalues).sum())
    return _report(energy, METHOD_EIGENSOLVER, spec.n)


def knh_eigenvalues(n: int) -> Spectrum:
    """Spectrum of K_n - H: n-3 once, then -1 - 2*cos(2*pi*k/n), k >= 1."""
    if n < 3:
        raise ValueError(f"K_n - H needs n >= 3, got n={n}")
    values = np.empty(n)
    values[0] = n - 3
    values[1:] = -1.0 - 2.0 * _folded_cosines(1, n)[1:]
    return Spectrum(values=values, method=METHOD_COSINE)


def knh_energy_direct(n: int) -> EnergyReport:
    """Energy of K_n - H by absolute summation of its spectrum."""
    spectrum = knh_eigenvalues(n)
    energy = float(np.abs(spectrum.values).sum())
    return _report(energy, METHOD_COSINE, n)
