"""Harnack parts: who shares the part of the normalized shift?

Two class members are Harnack equivalent when each kernel dominates the other
up to a constant across the disc; for torus-spectrum-free compacts with
constant boundary nullity this reduces to their kernels having the SAME null
space at every circle point.  The toolkit decides the null-space condition and
attaches grid domination constants as corroborating evidence.

Dimension parity matters at rho = 2: in odd dimension the canonical family
with two conjugate middle phases stays in the shift's part for every phase,
while in even dimension every nontrivial single-coordinate twist leaves it.
"""

import math

import numpy as np

from rho_toolkit import (DiscGrid, are_harnack_equivalent, canonical_form_c2,
                         domination_constant, make_shift, normalized_shift,
                         unitary_orbit_predicate)

rho = 2.0

print("odd dimension (n = 2): the canonical family is phase-free")
s = make_shift(2, math.sqrt(2))
for theta in (0.0, 0.7, math.pi / 2, math.pi):
    t = canonical_form_c2(2, theta)
    verdict, ev = are_harnack_equivalent(t, s, rho, torus_angles=64)
    print(f"  theta={theta:4.2f}: equivalent={verdict}  "
          f"c^2 forward {ev.forward.c_squared:8.4f}  "
          f"backward {ev.backward.c_squared:8.4f}")

print()
print("even dimension (n = 1): the part is phase-rigid")
s = make_shift(1, 1.0 / math.cos(math.pi / 3))
for theta in (0.0, 0.3, 1.5):
    d = np.diag([1.0, np.exp(1j * theta)])
    t = d.conj().T @ s @ d
    verdict, ev = are_harnack_equivalent(t, s, rho, torus_angles=64)
    print(f"  theta={theta:4.2f}: equivalent={verdict}  "
          f"c^2 forward {ev.forward.c_squared:10.4f}")

print()
print("a failing pair blows up as the sampling grid approaches the boundary:")
t = np.diag([1.0, np.exp(0.9j)]).conj().T @ s @ np.diag([1.0, np.exp(0.9j)])
for rmax in (0.9, 0.99, 0.999):
    radii = tuple(r for r in (0.3, 0.6, 0.9, 0.99, 0.999) if r <= rmax)
    grid = DiscGrid(radii=radii, angles_per_radius=32, torus_angles=16)
    cert = domination_constant(t, s, rho, grid)
    print(f"  max radius {rmax:5.3f}: c^2 = {cert.c_squared:12.4f}")

print()
print("diagonal-unitary orbit predicate vs the sampled verdict (n = 2):")
grid = DiscGrid(radii=(0.2, 0.5, 0.8, 0.95), angles_per_radius=16, torus_angles=16)
s = normalized_shift(2, rho)
for label, u in (("global phase", np.exp(0.8j) * np.eye(3)),
                 ("middle-coordinate phase", np.diag([1.0, np.exp(1.1j), 1.0])),
                 ("edge-coordinate phase", np.diag([np.exp(1.1j), 1.0, 1.0]))):
    predicted = unitary_orbit_predicate(u, 2, rho)
    verdict, _ = are_harnack_equivalent(u.conj().T @ s @ u, s, rho, grid,
                                        torus_angles=32)
    print(f"  {label:26s}: predicate={predicted}  sampled verdict={verdict}")
