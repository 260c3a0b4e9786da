"""Dense complex linear-algebra substrate.

All operations work on square complex numpy arrays ("CMatrix" values) and are
pure functions; nothing here mutates its inputs.  Eigen/inverse work is
delegated to LAPACK through numpy, behind the contracts below:

* Hermitian input is required (and checked) wherever the operation only makes
  sense for Hermitian matrices; after the check the matrix is symmetrized to
  remove roundoff drift.
* ``nullspace`` refuses to answer when the spectral gap above the null cluster
  is too small to trust in double precision (GapTooSmallError).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GapTooSmallError, NotHermitianError, SingularError

# Default tolerances (relative): eigen residual, Hermitian symmetry check,
# null-space threshold.  The null-space default matches the conditioning of
# the shift kernels up to dimension ~24 in double precision.
EIGEN_RESIDUAL_RTOL = 1e-10
HERMITIAN_RTOL = 1e-12
NULLSPACE_TOL = 1e-8
MAX_CONDITION = 1e12


def as_cmatrix(m) -> np.ndarray:
    """Validate and coerce ``m`` to a square complex matrix.

    Raises ValueError if the input is not square or contains NaN/Inf.
    """
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.view(float))):
        raise ValueError("matrix entries must be finite")
    return a


def adjoint(m: np.ndarray) -> np.ndarray:
    return np.conj(m).T


def spectral_norm(m) -> float:
    """Largest singular value."""
    a = as_cmatrix(m)
    if a.shape[0] == 0:
        return 0.0
    return float(np.linalg.svd(a, compute_uv=False)[0])


def spectral_radius(m) -> float:
    """Largest eigenvalue modulus."""
    a = as_cmatrix(m)
    return float(np.max(np.abs(np.linalg.eigvals(a))))


def _require_hermitian(a: np.ndarray, rtol: float = HERMITIAN_RTOL) -> np.ndarray:
    """Check the symmetry residual and return the symmetrized matrix."""
    scale = max(np.max(np.abs(a)), 1e-300)
    resid = np.max(np.abs(a - adjoint(a)))
    if resid > rtol * scale:
        raise NotHermitianError(
            f"matrix is not Hermitian: residual {resid:.3e} exceeds {rtol:.1e} * {scale:.3e}"
        )
    return 0.5 * (a + adjoint(a))


@dataclass(frozen=True)
class EigenResult:
    """Full spectral decomposition of a Hermitian matrix.

    values are real and ascending; vectors holds the matching orthonormal
    eigenvectors as columns.
    """

    values: np.ndarray
    vectors: np.ndarray


def hermitian_eigen(m, rtol: float = HERMITIAN_RTOL) -> EigenResult:
    """Spectral decomposition of a Hermitian matrix, eigenvalues ascending."""
    a = _require_hermitian(as_cmatrix(m), rtol)
    values, vectors = np.linalg.eigh(a)
    return EigenResult(values=values, vectors=vectors)


def min_eig(m) -> float:
    """Smallest eigenvalue of a Hermitian matrix."""
    a = _require_hermitian(as_cmatrix(m))
    return float(np.linalg.eigvalsh(a)[0])


def inverse(m) -> np.ndarray:
    """Matrix inverse, guarded by a condition-number ceiling.

    Raises SingularError when the condition number exceeds 1e12 or the
    inversion residual ||M M^-1 - I|| is above 1e-10 (relative).
    """
    a = as_cmatrix(m)
    svals = np.linalg.svd(a, compute_uv=False)
    if svals[-1] == 0.0 or svals[0] / svals[-1] > MAX_CONDITION:
        raise SingularError(
            f"condition number {svals[0] / max(svals[-1], 1e-300):.3e} exceeds {MAX_CONDITION:.1e}"
        )
    inv = np.linalg.inv(a)
    eye = np.eye(a.shape[0])
    resid = spectral_norm(a @ inv - eye)
    if resid > EIGEN_RESIDUAL_RTOL:
        raise SingularError(f"inversion residual {resid:.3e} exceeds {EIGEN_RESIDUAL_RTOL:.1e}")
    return inv


def nullspace(m, tol: float = NULLSPACE_TOL) -> list[np.ndarray]:
    """Orthonormal basis of the (numerical) null space of a Hermitian matrix.

    Eigenvectors whose eigenvalue modulus is at most tol*||M|| are returned.
    Requires a spectral gap: the first eigenvalue above the null cluster must
    exceed 10*tol*||M||, otherwise the nullity is ill-determined and
    GapTooSmallError is raised.
    """
    eig = hermitian_eigen(m)
    scale = max(float(np.max(np.abs(eig.values))), 1e-300)
    null_mask = np.abs(eig.values) <= tol * scale
    kept = np.abs(eig.values) >= 10.0 * tol * scale
    if np.any(~null_mask & ~kept):
        offenders = eig.values[~null_mask & ~kept]
        raise GapTooSmallError(
            f"eigenvalues {offenders} fall between the null threshold "
            f"{tol * scale:.3e} and the gap floor {10.0 * tol * scale:.3e}"
        )
    return [eig.vectors[:, i].copy() for i in np.nonzero(null_mask)[0]]
