"""The operatorial kernel and grid-certified class membership.

K_z(T) = (I - conj(z) T)^-1 + (I - z T*)^-1 + (rho - 2) I is Hermitian and
its positivity over the open unit disc characterizes membership of T in the
rho-contraction class.  For shifts the kernel spectrum depends only on |z|,
so the binding constraint sits on the boundary circle; the radius-normalized
shift is the exact boundary case (smallest kernel eigenvalue 0 at |z| = 1).
"""

import numpy as np

from rho_toolkit import (is_rho_contraction, make_shift, normalized_shift,
                         rho_kernel)

rho = 2.5
n = 3
s = normalized_shift(n, rho)
print(f"radius-normalized shift, n={n}, rho={rho}: weight = {s[0, 1].real:.8f}")
print()
print("smallest kernel eigenvalue along the radius (angle irrelevant):")
for r in (0.2, 0.5, 0.8, 0.95, 0.999, 1.0):
    ev = rho_kernel(s, r, rho)
    print(f"  |z| = {r:5.3f}:  min eig = {ev.min_eigenvalue:12.8f}")

print()
print("rotation covariance: spectra at r*e^{i theta} match the spectrum at z=r")
z1 = 0.7 * np.exp(1.1j)
spec_rot = np.linalg.eigvalsh(rho_kernel(s, z1, rho).matrix)
spec_rad = np.linalg.eigvalsh(rho_kernel(s, 0.7, rho).matrix)
print(f"  max spectral gap between the two: {np.max(np.abs(spec_rot - spec_rad)):.2e}")

print()
print("membership tests (grid-certified):")
report = is_rho_contraction(s, rho)
print(f"  normalized shift:      member={bool(report)}  "
      f"worst min-eig {report.witness_min_eig:+.2e} at z = {report.witness_z:.4f}")

too_big = make_shift(1, rho + 0.1)
report = is_rho_contraction(too_big, rho)
print(f"  oversized 2x2 shift:   member={bool(report)}  "
      f"worst min-eig {report.witness_min_eig:+.2e} at z = {report.witness_z:.4f}")

report = is_rho_contraction(np.zeros((4, 4)), rho)
print(f"  zero matrix:           member={bool(report)}  (kernel is rho*I everywhere)")

# matrices with unit-circle spectrum skip the boundary circles: positivity is
# then certified on interior samples only
u = np.diag([np.exp(0.4j), np.exp(-0.9j)])
report = is_rho_contraction(u, rho)
print(f"  diagonal unitary:      member={bool(report)}  "
      f"boundary sampled: {report.boundary_sampled}")
