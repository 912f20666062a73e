"""Seeded sampling of sum spectra under rotated complex structures.

Everything numerical here is self-contained and deterministic: a SplitMix64
generator drives Box-Muller Gaussians, rotations are Gram-Schmidt
orthonormalizations of Gaussian matrices (sign-fixed, then one column flip
if the determinant is negative), and eigenvalues come from a cyclic Jacobi
iteration. numpy supplies only matrix plumbing.

The object of study: with S = diag(sigma) of size 2p and J a rotated copy
R^T J0 R of the standard block structure J0 = [[0, -I], [I, 0]], the matrix
S + J^-1 S J has a spectrum of p doubled values; collapsing the pairs gives
a point that should land in the convex hull of the p1 lattice points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """64-bit SplitMix generator with Box-Muller Gaussians on top.

    The stream is a pure function of the seed, so every sample in a run can
    be reproduced from (seed, index) via ``stream``.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK
        self._spare: float | None = None

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return _mix(self._state)

    def uniform(self) -> float:
        """Uniform in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def gaussian(self) -> float:
        if self._spare is not None:
            out, self._spare = self._spare, None
            return out
        # 1 - uniform() keeps the log argument away from zero
        r = np.sqrt(-2.0 * np.log(1.0 - self.uniform()))
        theta = 2.0 * np.pi * self.uniform()
        self._spare = r * np.sin(theta)
        return r * np.cos(theta)

    def gaussian_matrix(self, n: int) -> np.ndarray:
        return np.array([[self.gaussian() for _ in range(n)] for _ in range(n)])


def stream(seed: int, index: int) -> SplitMix64:
    """Generator for sample ``index`` of a run seeded with ``seed``.

    States are mixed from seed and index separately, so distinct indexes
    give unrelated streams and a run can be reproduced point by point.
    """
    return SplitMix64(_mix((seed & _MASK) ^ _mix((index + 1) * _GOLDEN & _MASK)))


def random_rotation(n: int, seed: int | None = None, rng: SplitMix64 | None = None
                    ) -> np.ndarray:
    """Haar-distributed rotation: orthonormalize a Gaussian matrix column by
    column (positive diagonal makes the factorization unique, hence Haar on
    the orthogonal group), then flip the last column if the determinant is
    negative to land in the rotation group."""
    if rng is None:
        if seed is None:
            raise ValueError("pass a seed or an rng")
        rng = SplitMix64(_mix(seed & _MASK))
    while True:
        g = rng.gaussian_matrix(n)
        q = np.empty_like(g)
        ok = True
        for j in range(n):
            v = g[:, j].copy()
            for i in range(j):
                v -= (q[:, i] @ v) * q[:, i]
            norm = np.linalg.norm(v)
            if norm < 1e-12:  # essentially never; resample the whole matrix
                ok = False
                break
            q[:, j] = v / norm
        if ok:
            break
    if np.linalg.det(q) < 0:
        q[:, -1] = -q[:, -1]
    return q


def is_orthogonal(m: np.ndarray, tol: float = 1e-12) -> bool:
    n = m.shape[0]
    return m.shape == (n, n) and bool(
        np.max(np.abs(m.T @ m - np.eye(n))) <= tol
    )


def is_complex_structure(j: np.ndarray, tol: float = 1e-12) -> bool:
    """Orthogonal with square minus identity."""
    n = j.shape[0]
    return is_orthogonal(j, tol) and bool(
        np.max(np.abs(j @ j + np.eye(n))) <= tol
    )


def standard_j0(p: int) -> np.ndarray:
    """The block structure [[0, -I], [I, 0]] of size 2p."""
    z = np.zeros((p, p))
    eye = np.eye(p)
    return np.block([[z, -eye], [eye, z]])


def j_from_rotation(rho: np.ndarray) -> np.ndarray:
    """The complex structure [[0, -rho^T], [rho, 0]] built from a rotation."""
    p = rho.shape[0]
    z = np.zeros((p, p))
    return np.block([[z, -rho.T], [rho, z]])


def jacobi_eigenvalues(matrix: np.ndarray, max_sweeps: int = 100,
                       tol_factor: float = 1e-13) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
    descending. Converged when the off-diagonal Frobenius norm drops below
    tol_factor times max(1, largest absolute entry of the input)."""
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if n == 0:
        return np.array([])
    if a.shape != (n, n) or np.max(np.abs(a - a.T)) > 1e-10 * max(1.0, np.max(np.abs(a))):
        raise ValueError("needs a symmetric matrix")
    a = (a + a.T) / 2.0
    scale = max(1.0, float(np.max(np.abs(a))) if n else 1.0)
    threshold = tol_factor * scale
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.square(a - np.diag(np.diag(a)))))
        if off <= threshold:
            return np.sort(np.diag(a))[::-1].copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= threshold / (n * n):
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rot_p = c * a[:, p] - s * a[:, q]
                rot_q = s * a[:, p] + c * a[:, q]
                a[:, p], a[:, q] = rot_p, rot_q
                rot_p = c * a[p, :] - s * a[q, :]
                rot_q = s * a[p, :] + c * a[q, :]
                a[p, :], a[q, :] = rot_p, rot_q
                a[p, q] = a[q, p] = 0.0
    raise ArithmeticError(f"no convergence within {max_sweeps} sweeps")


@dataclass(frozen=True)
class SpectrumSample:
    """One sampled spectrum: descending raw values, the pair-collapsed
    point, and how far the pairing is from exact."""

    index: int
    raw: tuple[float, ...]
    collapsed: tuple[float, ...]
    pairing_defect: float
    block_defect: float | None = None


def sum_spectrum(sigma, j: np.ndarray, index: int = 0) -> SpectrumSample:
    """Spectrum of diag(sigma) + J^-1 diag(sigma) J for an orthogonal
    complex structure J (so its inverse is its transpose)."""
    sig = np.asarray(sigma, dtype=float)
    if not is_complex_structure(j, tol=1e-10):
        raise ValueError("J must be an orthogonal complex structure")
    s = np.diag(sig)
    m = s + j.T @ s @ j
    raw = jacobi_eigenvalues((m + m.T) / 2.0)
    return _pair_sample(raw, index)


def _pair_sample(raw: np.ndarray, index: int, block_defect: float | None = None
                 ) -> SpectrumSample:
    vals = [float(x) for x in raw]
    collapsed = tuple((vals[2 * i] + vals[2 * i + 1]) / 2.0 for i in range(len(vals) // 2))
    defect = max(
        (abs(vals[2 * i] - vals[2 * i + 1]) for i in range(len(vals) // 2)), default=0.0
    )
    return SpectrumSample(index, tuple(vals), collapsed, float(defect), block_defect)


def block_identity_check(sigma, rho: np.ndarray) -> tuple[float, float, tuple]:
    """Exact block form of the sum under J built from a rotation rho:
    D + J^-1 D J equals blockdiag(A, rho A rho^T) with
    A = diag(minus) + rho^T diag(plus) rho, D = blockdiag(minus, plus).

    Returns (matrix discrepancy, spectrum doubling defect, spectrum): the
    largest entrywise gap between the two sides, the largest gap between
    the sorted 2p spectrum and the doubled sorted p spectrum of A, and the
    2p spectrum itself, descending.
    """
    sig = np.asarray(sigma, dtype=float)
    p = len(sig) // 2
    minus, plus = np.diag(sig[0::2]), np.diag(sig[1::2])
    j = j_from_rotation(rho)
    d = np.block([[minus, np.zeros((p, p))], [np.zeros((p, p)), plus]])
    lhs = d + j.T @ d @ j
    a = minus + rho.T @ plus @ rho
    rhs = np.block(
        [[a, np.zeros((p, p))], [np.zeros((p, p)), rho @ a @ rho.T]]
    )
    discrepancy = float(np.max(np.abs(lhs - rhs)))
    full = jacobi_eigenvalues((lhs + lhs.T) / 2.0)
    small = jacobi_eigenvalues((a + a.T) / 2.0)
    doubled_small = np.sort(np.repeat(small, 2))[::-1]
    defect = float(np.max(np.abs(full - doubled_small)))
    return discrepancy, defect, tuple(float(x) for x in full)


def monte_carlo_q(sigma, samples: int, seed: int, mode: str = "random"
                  ) -> list[SpectrumSample]:
    """Sample the spectral set point by point.

    mode "random": J = R^T J0 R for Haar rotations R of size 2p.
    mode "rotation": no complex structure, spectrum of S + R^T S R (the
    wider set whose projections the full polytope describes).
    mode "block": J built from a p-dimensional rotation rho; the sample
    also records how far the 2p spectrum is from the doubled p spectrum.
    """
    sig = np.asarray(sigma, dtype=float)
    if len(sig) % 2:
        raise ValueError("sigma needs an even number of entries")
    if sorted(sig, reverse=True) != list(sig):
        raise ValueError("sigma must be weakly decreasing")
    p = len(sig) // 2
    if mode not in ("random", "rotation", "block"):
        raise ValueError(f"unknown mode {mode!r}")
    j0 = standard_j0(p)
    s = np.diag(sig)
    out = []
    for index in range(samples):
        rng = stream(seed, index)
        if mode == "random":
            r = random_rotation(2 * p, rng=rng)
            j = r.T @ j0 @ r
            m = s + j.T @ s @ j
            raw = jacobi_eigenvalues((m + m.T) / 2.0)
            out.append(_pair_sample(raw, index))
        elif mode == "rotation":
            r = random_rotation(2 * p, rng=rng)
            m = s + r.T @ s @ r
            raw = tuple(float(x) for x in jacobi_eigenvalues((m + m.T) / 2.0))
            out.append(SpectrumSample(index, raw, raw, 0.0, None))
        else:
            rho = random_rotation(p, rng=rng)
            minus, plus = np.diag(sig[0::2]), np.diag(sig[1::2])
            d = np.block(
                [[minus, np.zeros((p, p))], [np.zeros((p, p)), plus]]
            )
            j = j_from_rotation(rho)
            m = d + j.T @ d @ j
            raw = jacobi_eigenvalues((m + m.T) / 2.0)
            small = jacobi_eigenvalues(minus + rho.T @ plus @ rho)
            doubled_small = np.sort(np.repeat(small, 2))[::-1]
            block_defect = float(np.max(np.abs(raw - doubled_small)))
            out.append(_pair_sample(raw, index, block_defect))
    return out
