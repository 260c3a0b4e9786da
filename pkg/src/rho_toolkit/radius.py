"""Computation of the rho-numerical radius w_rho.

Four routes, cross-checkable against each other:

* ``radius_bisect`` — generic bisection on gamma of the grid positivity
  predicate for T/gamma; works for any matrix.
* ``shift_radius`` — for truncated shifts; dispatches between the angle
  system (1 < rho < n+2, n >= 2), the closed form n/(n+2) at rho = n+2, and
  the determinant route elsewhere.
* ``determinant_radius`` — first positive root of the kernel determinant in
  the weight, computed twice (recurrence and smallest-eigenvalue bisection)
  with agreement asserted.
* closed forms where they exist (rho = 1, rho = n + 2).

The angle system for x = w_rho(S_{n+1}) with intermediate angle w:

    sin(n w) / sin(w) = rho x,
    cos(w) = (rho x^2 + rho - 2) / (2 x (rho - 1)).

Eliminating x = sin(n w)/(rho sin w) gives the scalar equation g(w) = 0 with
g(w) = rho x(w)^2 - 2 (rho-1) cos(w) x(w) + (rho - 2).  Two traps, both
handled below: near one exceptional rho*(n) per n the equation has a PAIR of
nearly coincident roots both satisfying the full system inside the stated
windows (so the system alone does not identify w_rho there), and at
(n, rho) = (2, 2) the two equations coincide, making g identically zero.  The
solver therefore splits near-tangent root pairs, solves n = 2 by the exact
elimination x = 1/sqrt(rho), and selects among candidates by a positive-
semidefiniteness boundary certificate on the kernel at z = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .determinants import kernel_det, kernel_det_matrix
from .errors import BracketInvalidError, NoRootError, NotNilpotentError
from .kernel import DiscGrid, default_grid, is_rho_contraction
from .linalg import as_cmatrix, spectral_norm, spectral_radius

BISECT_MAX_ITER = 200


@dataclass(frozen=True)
class RadiusResult:
    """A computed radius with its provenance.

    value     -- the computed w_rho
    method    -- one of bisection | omega_system | determinant_oracle | closed_form
    omega     -- auxiliary angle when the angle system was used, else None
    residual  -- defining-equation residual of the returned value
    bracket   -- final enclosing interval for the value
    """

    value: float
    method: str
    omega: float | None
    residual: float
    bracket: tuple[float, float]


def critical_rho(n: int) -> tuple[float, float]:
    """The parameter value where the recurrence discriminant vanishes at the
    normalized weight: (rho0, a0) = (n + 2, (n + 2)/n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return float(n + 2), (n + 2.0) / n


def _boundary_min_eig(n: int, a: float, rho: float) -> float:
    """Smallest eigenvalue of the shift kernel at z = 1 and weight a."""
    return float(np.linalg.eigvalsh(kernel_det_matrix(n, a, rho))[0])


def determinant_radius(n: int, rho: float, tol: float = 1e-10) -> RadiusResult:
    """w_rho of the unit-weight shift via the first kernel singularity.

    The reciprocal weight a* is the smallest a > 1 with a singular kernel at
    z = 1; it is computed both as the first sign change of the determinant
    recurrence and by bisection on the smallest eigenvalue, and the two must
    agree.  The bracket [1, rho] is guaranteed: the order-2 leading principal
    minor rho^2 - a^2 goes negative beyond a = rho.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not rho > 1:
        raise ValueError("determinant route requires rho > 1")

    def det(a: float) -> float:
        return kernel_det(n, a, rho)

    # locate the first sign change of the determinant on [1, rho]; the root
    # spacing shrinks roughly like 1/n^2 near weight 1 for large rho, so the
    # scan densifies with n (a missed first root would be caught loudly by
    # the eigenvalue cross-check below, which then sees no sign change)
    samples = np.linspace(1.0, rho, max(2001, 400 * n + 1))
    vals = np.array([det(a) for a in samples])
    if vals[0] <= 0:
        raise BracketInvalidError("kernel determinant not positive at a = 1")
    crossings = np.nonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))[0]
    if crossings.size == 0:
        raise BracketInvalidError(
            f"kernel determinant has no sign change on [1, {rho}]; "
            "the weight bound a <= rho is violated"
        )
    i = int(crossings[0])

    def bisect(f, lo: float, hi: float) -> float:
        flo = f(lo)
        for _ in range(BISECT_MAX_ITER):
            if hi - lo < tol * max(1.0, hi):
                break
            mid = 0.5 * (lo + hi)
            if np.sign(f(mid)) == np.sign(flo):
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    a_rec = bisect(det, samples[i], samples[i + 1])
    a_eig = bisect(lambda a: _boundary_min_eig(n, a, rho), samples[i], samples[i + 1])
    if abs(a_rec - a_eig) > 100.0 * tol * max(1.0, a_rec):
        raise AssertionError(
            f"determinant and eigenvalue routes disagree: {a_rec!r} vs {a_eig!r}"
        )
    a_star = float(a_rec)
    value = 1.0 / a_star
    resid = abs(_boundary_min_eig(n, a_star, rho))
    return RadiusResult(value=value, method="determinant_oracle", omega=None,
                        residual=resid,
                        bracket=(float(1.0 / samples[i + 1]), float(1.0 / samples[i])))


def _system_residual(n: int, rho: float, x: float, w: float) -> float:
    """Worst residual of the two original angle-system equations."""
    r1 = abs(math.sin(n * w) / math.sin(w) - rho * x)
    r2 = abs(math.cos(w) - (rho * x * x + rho - 2.0) / (2.0 * x * (rho - 1.0)))
    return max(r1, r2)


def _angle_candidates(n: int, rho: float, samples: int = 4001) -> list[float]:
    """All candidate roots of g on (0, pi/n): sign-change brackets plus
    near-tangent pairs split by a local quadratic fit."""

    def x_of(w: float) -> float:
        return math.sin(n * w) / (rho * math.sin(w))

    def g(w: float) -> float:
        x = x_of(w)
        return rho * x * x - 2.0 * (rho - 1.0) * math.cos(w) * x + (rho - 2.0)

    def g_prime(w: float) -> float:
        x = x_of(w)
        sw, cw = math.sin(w), math.cos(w)
        dx = (n * math.cos(n * w) * sw - math.sin(n * w) * cw) / (rho * sw * sw)
        return 2.0 * rho * x * dx - 2.0 * (rho - 1.0) * (dx * cw - x * sw)

    lo_edge, hi_edge = 1e-9, math.pi / n - 1e-9
    ws = np.linspace(lo_edge, hi_edge, samples)
    gs = np.array([g(w) for w in ws])

    def polish(w: float) -> float:
        for _ in range(60):
            gw = g(w)
            dg = g_prime(w)
            if dg == 0.0:
                break
            step = gw / dg
            w_new = w - step
            if not lo_edge <= w_new <= hi_edge:
                break
            w = w_new
            if abs(step) < 1e-16:
                break
        return w

    cands: list[float] = []
    for i in np.nonzero(np.sign(gs[:-1]) != np.sign(gs[1:]))[0]:
        lo, hi = float(ws[i]), float(ws[i + 1])
        flo = g(lo)
        for _ in range(BISECT_MAX_ITER):
            mid = 0.5 * (lo + hi)
            if np.sign(g(mid)) == np.sign(flo):
                lo = mid
            else:
                hi = mid
            if hi - lo < 1e-15:
                break
        cands.append(polish(0.5 * (lo + hi)))

    # near-tangent pairs: local minima of |g| without a sign change
    h = float(ws[1] - ws[0])
    for i in range(1, samples - 1):
        if np.sign(gs[i - 1]) != np.sign(gs[i]) or np.sign(gs[i]) != np.sign(gs[i + 1]):
            continue
        if not (abs(gs[i]) <= abs(gs[i - 1]) and abs(gs[i]) <= abs(gs[i + 1])):
            continue
        if abs(gs[i]) > 1e-3 * max(abs(gs[0]), abs(gs[-1]), 1e-12):
            continue
        # quadratic through the three points, roots if the parabola crosses 0
        c = gs[i]
        b = (gs[i + 1] - gs[i - 1]) / (2.0 * h)
        aa = (gs[i + 1] - 2.0 * gs[i] + gs[i - 1]) / (h * h)
        if aa == 0.0:
            continue
        disc = b * b - 2.0 * aa * c
        if disc <= 0.0:
            cands.append(polish(float(ws[i])))
            continue
        for s in (-1.0, 1.0):
            dw = (-b + s * math.sqrt(disc)) / aa
            w0 = float(ws[i]) + dw
            if lo_edge < w0 < hi_edge:
                cands.append(polish(w0))

    out: list[float] = []
    for w in sorted(cands):
        if not out or abs(w - out[-1]) > 1e-12:
            out.append(w)
    return out


def shift_radius(n: int, rho: float, tol: float = 1e-9) -> RadiusResult:
    """w_rho of the unit-weight truncated shift of size n + 1, any rho >= 1.

    Dispatch: rho = 1 gives the operator norm 1 exactly; rho = n + 2 gives
    the closed form n/(n+2); 1 < rho < n+2 with n >= 2 solves the angle
    system; everything else (n = 1, or rho > n+2 where no angle formula
    exists) uses the determinant route.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if rho < 1:
        raise ValueError("rho must be >= 1")

    if rho == 1.0:
        return RadiusResult(value=1.0, method="closed_form", omega=None,
                            residual=0.0, bracket=(1.0, 1.0))
    if rho == float(n + 2):
        value = n / (n + 2.0)
        resid = abs(kernel_det(n, 1.0 / value, rho)) / rho ** n
        return RadiusResult(value=value, method="closed_form", omega=None,
                            residual=resid, bracket=(value, value))
    if n == 1 or rho > n + 2:
        return determinant_radius(n, rho)

    if n == 2:
        # the two system equations eliminate exactly: x = 1/sqrt(rho)
        x = 1.0 / math.sqrt(rho)
        w = math.acos(math.sqrt(rho) / 2.0)
        resid = _system_residual(n, rho, x, w)
        return RadiusResult(value=x, method="omega_system", omega=w,
                            residual=resid, bracket=(x, x))

    cands = []
    for w in _angle_candidates(n, rho):
        x = math.sin(n * w) / (rho * math.sin(w))
        if not (1.0 / rho + 1e-12 < x < 1.0 - 1e-12):
            continue
        cands.append((abs(_boundary_min_eig(n, 1.0 / x, rho)), x, w))
    if not cands:
        raise NoRootError(f"angle system has no admissible root for n={n}, rho={rho}")
    certificate, x, w = min(cands)
    if certificate > 1e-6 * rho:
        raise NoRootError(
            f"no angle-system root sits on the kernel positivity boundary "
            f"(best certificate {certificate:.3e}) for n={n}, rho={rho}"
        )
    resid = _system_residual(n, rho, x, w)
    if resid > tol:
        raise NoRootError(f"angle-system residual {resid:.3e} exceeds {tol:.1e}")
    return RadiusResult(value=x, method="omega_system", omega=w,
                        residual=resid, bracket=(x, x))


def radius_bisect(t, rho: float, grid: DiscGrid | None = None,
                  tol: float = 1e-8) -> RadiusResult:
    """w_rho(T) by bisection on gamma of the membership predicate for T/gamma.

    The bracket starts at [max(spectral radius, norm/rho), norm].  When the
    predicate already holds at the lower endpoint the infimum is attained
    there (e.g. normal T) and that endpoint is returned exactly.
    """
    a = as_cmatrix(t)
    grid = grid or default_grid()
    norm = spectral_norm(a)
    if norm == 0.0:
        raise ValueError("radius_bisect requires T != 0")
    lo = max(spectral_radius(a), norm / rho)
    hi = norm

    def member(gamma: float) -> bool:
        return bool(is_rho_contraction(a / gamma, rho, grid))

    if lo >= hi or member(lo):
        return RadiusResult(value=lo, method="bisection", omega=None,
                            residual=0.0, bracket=(lo, lo))
    if not member(hi):
        raise BracketInvalidError(
            f"T/||T|| fails the membership predicate at rho={rho}; "
            "w_rho <= ||T|| is violated, which signals a bug"
        )
    for _ in range(BISECT_MAX_ITER):
        if hi - lo < tol * max(1.0, abs(hi)):
            break
        mid = 0.5 * (lo + hi)
        if member(mid):
            hi = mid
        else:
            lo = mid
    return RadiusResult(value=0.5 * (lo + hi), method="bisection", omega=None,
                        residual=hi - lo, bracket=(lo, hi))


def nilpotent_bound(m: int, t, tol: float = 1e-5) -> bool:
    """Check w_{m+1}(T) <= (m-1)/(m+1) ||T|| for a matrix with T^m = 0.

    Raises NotNilpotentError when ||T^m|| exceeds 1e-10 ||T||^m.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    a = as_cmatrix(t)
    norm = spectral_norm(a)
    if norm == 0.0:
        return True
    power = np.linalg.matrix_power(a, m)
    if spectral_norm(power) > 1e-10 * norm ** m:
        raise NotNilpotentError(f"||T^{m}|| = {spectral_norm(power):.3e} is not ~0")
    w = radius_bisect(a, float(m + 1)).value
    return w <= (m - 1.0) / (m + 1.0) * norm + tol


def omega_of_rho_curve(n: int, rho_samples) -> list[tuple[float, float]]:
    """Angle of the radius system at each sample; strict decrease in rho is
    asserted (samples must lie in (1, n+2), n >= 2)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    samples = [float(r) for r in rho_samples]
    if any(not 1.0 < r < n + 2 for r in samples):
        raise ValueError("samples must lie inside (1, n+2)")
    curve = []
    for r in samples:
        res = shift_radius(n, r)
        if res.omega is None:
            raise NoRootError(f"no angle at rho={r}")
        curve.append((r, res.omega))
    ordered = sorted(curve)
    for (r1, w1), (r2, w2) in zip(ordered, ordered[1:]):
        if r2 > r1 and not w2 < w1:
            raise AssertionError(
                f"angle failed to decrease: omega({r1})={w1!r}, omega({r2})={w2!r}"
            )
    return curve
