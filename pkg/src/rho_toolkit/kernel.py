"""Operatorial rho-kernels and disc positivity tests.

The kernel of a matrix T at a point z of the closed unit disc is

    K_z^rho(T) = (I - conj(z) T)^-1 + (I - z T*)^-1 + (rho - 2) I,

Hermitian by construction.  Membership of T in the class of rho-contractions
is equivalent to sigma(T) inside the closed disc together with positivity of
the kernel on the open disc; positivity is sampled on a DiscGrid, with
boundary sampling added when T has no spectrum on the unit circle (for such T
the kernel extends continuously to the closed disc, and for shifts the
boundary is exactly where positivity is binding).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import SingularError, TorusSpectrumError
from .linalg import NULLSPACE_TOL, as_cmatrix, nullspace

# An eigenvalue this close (absolutely) to the unit circle counts as torus
# spectrum; boundary kernel evaluation is then refused.
TORUS_MARGIN = 1e-8

DEFAULT_PSD_TOL = 1e-9


@dataclass(frozen=True)
class DiscGrid:
    """Sampling grid for "for all z in the disc" statements.

    radii are the interior sampling circles (strictly increasing, < 1), each
    sampled at angles_per_radius equispaced angles; torus_angles boundary
    points are used when the operator has no unit-circle spectrum.
    """

    radii: tuple = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99, 0.999)
    angles_per_radius: int = 64
    torus_angles: int = 256

    def __post_init__(self):
        r = np.asarray(self.radii, dtype=float)
        if r.size == 0 or np.any(np.diff(r) <= 0) or r[-1] >= 1.0 or r[0] <= 0.0:
            raise ValueError("radii must be strictly increasing inside (0, 1)")
        if self.angles_per_radius < 1 or self.torus_angles < 1:
            raise ValueError("angle counts must be positive")

    def interior_points(self) -> np.ndarray:
        """All interior samples, radius-major, angle 0 first on each ring."""
        theta = 2.0 * np.pi * np.arange(self.angles_per_radius) / self.angles_per_radius
        ring = np.exp(1j * theta)
        return np.concatenate([r * ring for r in self.radii])

    def torus_points(self) -> np.ndarray:
        theta = 2.0 * np.pi * np.arange(self.torus_angles) / self.torus_angles
        return np.exp(1j * theta)


def default_grid() -> DiscGrid:
    return DiscGrid()


@dataclass(frozen=True)
class KernelEval:
    """One kernel evaluation: the Hermitian matrix and its smallest eigenvalue."""

    z: complex
    rho: float
    matrix: np.ndarray
    min_eigenvalue: float


def _resolvent_sum(t: np.ndarray, zs: np.ndarray, rho: float) -> np.ndarray:
    """Stacked kernels K_z^rho(T) for a 1-d array of points zs."""
    d = t.shape[0]
    eye = np.eye(d, dtype=complex)
    pencil = eye[None, :, :] - np.conj(zs)[:, None, None] * t[None, :, :]
    try:
        res = np.linalg.inv(pencil)
    except np.linalg.LinAlgError as exc:
        raise SingularError(f"I - conj(z) T is singular on the sample set: {exc}") from exc
    k = res + np.conj(np.swapaxes(res, -1, -2)) + (rho - 2.0) * eye[None, :, :]
    if not np.all(np.isfinite(k.view(float))):
        raise SingularError("kernel evaluation overflowed (I - conj(z) T nearly singular)")
    return k


def rho_kernel(t, z: complex, rho: float) -> KernelEval:
    """Evaluate the kernel of T at one point z (|z| <= 1).

    Raises SingularError when I - conj(z) T is numerically singular.  For
    |z| = 1 the caller is responsible for the torus-spectrum precondition
    (see torus_nullspace, which checks it).
    """
    a = as_cmatrix(t)
    k = _resolvent_sum(a, np.asarray([z], dtype=complex), rho)[0]
    return KernelEval(z=complex(z), rho=float(rho), matrix=k, min_eigenvalue=float(np.linalg.eigvalsh(k)[0]))


def _min_eigs(t: np.ndarray, zs: np.ndarray, rho: float) -> np.ndarray:
    k = _resolvent_sum(t, zs, rho)
    return np.linalg.eigvalsh(k)[:, 0]


def congruence_factor(n: int, a: float, rho: float, z: complex) -> np.ndarray:
    """Middle factor of the resolvent congruence of a shift kernel.

    For the truncated shift S of size n+1 with weight a, the kernel factors as
    K_z^rho(S) = (I - z S*)^-1 M (I - conj(z) S)^-1 with M the Hermitian
    tridiagonal matrix returned here: first diagonal entry rho, the remaining
    diagonal rho + (rho-2) a^2 |z|^2, off-diagonals (1-rho) a conj(z) above and
    (1-rho) a z below.
    """
    d = n + 1
    m = np.zeros((d, d), dtype=complex)
    r2 = abs(z) ** 2
    diag = rho + (rho - 2.0) * a * a * r2
    m[np.arange(d), np.arange(d)] = diag
    m[0, 0] = rho
    idx = np.arange(d - 1)
    m[idx, idx + 1] = (1.0 - rho) * a * np.conj(z)
    m[idx + 1, idx] = (1.0 - rho) * a * z
    return m


def has_torus_spectrum(t, margin: float = TORUS_MARGIN) -> bool:
    """True when some eigenvalue of T lies within ``margin`` of the unit circle."""
    eigs = np.linalg.eigvals(as_cmatrix(t))
    return bool(np.any(np.abs(np.abs(eigs) - 1.0) <= margin))


@dataclass(frozen=True)
class ContractionReport:
    """Outcome of a grid positivity test, with the worst sample as witness."""

    ok: bool
    witness_z: complex
    witness_min_eig: float
    spectral_radius: float
    rho: float
    tol: float
    boundary_sampled: bool
    grid: DiscGrid = field(repr=False, default_factory=default_grid)

    def __bool__(self) -> bool:
        return self.ok


def is_rho_contraction(t, rho: float, grid: DiscGrid | None = None,
                       tol: float = DEFAULT_PSD_TOL) -> ContractionReport:
    """Grid-certified membership test for the class of rho-contractions.

    True iff the spectral radius is at most 1 + tol and the smallest kernel
    eigenvalue over all sampled z is at least -tol.  Boundary circles are
    sampled only when T has no unit-circle spectrum.  One refinement pass
    re-samples the witness ring at doubled angular resolution anchored at the
    witness angle.
    """
    if rho < 1:
        raise ValueError("rho must be >= 1")
    a = as_cmatrix(t)
    grid = grid or default_grid()
    eigs = np.linalg.eigvals(a)
    srad = float(np.max(np.abs(eigs))) if a.size else 0.0

    boundary = not np.any(np.abs(np.abs(eigs) - 1.0) <= TORUS_MARGIN)
    zs = grid.interior_points()
    if boundary:
        zs = np.concatenate([grid.torus_points(), zs])

    def first_min(points: np.ndarray, values: np.ndarray) -> tuple[complex, float]:
        # deterministic witness: ties at roundoff level go to the earliest
        # sample (angle 0 first), so rotation-invariant operators report a
        # real positive witness
        vmin = float(np.min(values))
        tie = vmin + 1e-12 * max(1.0, abs(vmin))
        i = int(np.argmax(values <= tie))
        return complex(points[i]), float(values[i])

    worst_z, worst = first_min(zs, _min_eigs(a, zs, rho))

    # refinement: double the angular resolution on the witness ring
    r = abs(worst_z)
    count = 2 * (grid.torus_angles if boundary and r > grid.radii[-1] else grid.angles_per_radius)
    theta0 = np.angle(worst_z)
    ring = r * np.exp(1j * (theta0 + 2.0 * np.pi * np.arange(count) / count))
    ring_z, ring_min = first_min(ring, _min_eigs(a, ring, rho))
    if ring_min < worst - 1e-12 * max(1.0, abs(worst)):
        worst_z, worst = ring_z, ring_min

    ok = srad <= 1.0 + tol and worst >= -tol
    return ContractionReport(ok=ok, witness_z=worst_z, witness_min_eig=worst,
                             spectral_radius=srad, rho=float(rho), tol=float(tol),
                             boundary_sampled=boundary, grid=grid)


def torus_nullspace(t, rho: float, z: complex, tol: float = NULLSPACE_TOL) -> list[np.ndarray]:
    """Orthonormal basis of the kernel's null space at a unit-circle point.

    Requires |z| = 1 and an empty unit-circle spectrum for T (checked;
    TorusSpectrumError otherwise).  GapTooSmallError propagates from the
    null-space extraction when the nullity is ill-determined.
    """
    if abs(abs(z) - 1.0) > 1e-12:
        raise ValueError(f"z must lie on the unit circle, got |z| = {abs(z)}")
    a = as_cmatrix(t)
    if has_torus_spectrum(a):
        raise TorusSpectrumError("T has spectrum within tolerance of the unit circle")
    k = rho_kernel(a, z, rho)
    return nullspace(k.matrix, tol)
