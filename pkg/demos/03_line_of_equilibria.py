"""Constructing a system with a whole line segment of coexistence equilibria.

Given any supercritical first-virus matrix B1, choose a nonnegative
irreducible C that fixes the endemic profile z (C z = z) and set
B2 = (I - Z)^{-1} C.  Every mixture (alpha z, (1 - alpha) z) is then an
equilibrium: the two viruses share the same shape and only their split
varies.  Scaling B2 by mu != 1 collapses the line and moves the endpoint
through a bifurcation.

Run:  python3 demos/03_line_of_equilibria.py
"""

import numpy as np

import bivirus as bv
from bivirus.model import State

rng = np.random.default_rng(5)
B1 = rng.uniform(0.2, 1.0, size=(4, 4))
B1 *= 1.8 / bv.spectral_radius(B1)  # supercritical, rho = 1.8

system, family = bv.construct_equilibrium_line(B1, mu=1.0)
print("endemic profile z =", np.round(family.z, 6))
print("rho(C) =", f"{bv.spectral_radius(family.C):.12f}  (unit by design)")
print()

print("residuals along the segment (alpha z, (1-alpha) z):")
for alpha in (0.0, 0.25, 0.5, 0.75, 1.0):
    s = family.line_state(alpha)
    print(f"  alpha = {alpha:4.2f} -> residual {bv.residual(system, s):.2e}")
print()

# The transformed Jacobian on the line has a single eigenvalue at zero
# (the direction along the segment) and everything else strictly stable,
# so the segment attracts nearby trajectories.
s_mid = family.line_state(0.5)
lams = np.sort(np.linalg.eigvals(bv.transformed_jacobian(system, s_mid)).real)
print("eigenvalue real parts at alpha = 0.5:", np.round(lams, 6))
print()

# A trajectory started nearby parks on the segment, not at an endpoint:
traj = bv.integrate(system, State(0.4 * family.z, 0.45 * family.z))
limit = traj.final_state
alpha_hat = float(np.mean(limit.x1 / family.z))
print(f"nearby start converged to alpha = {alpha_hat:.4f} on the segment "
      f"(residual {bv.residual(system, limit):.1e})")
print()

# mu sweep: the (z, 0) endpoint flips from attractor to saddle through
# the mu = 1 bifurcation where the line exists.
for mu in (0.9, 1.0, 1.1):
    sys_mu, fam_mu = bv.construct_equilibrium_line(B1, mu=mu)
    verdict, _ = bv.boundary_stability(sys_mu)
    print(f"mu = {mu:3.1f}: (z, 0) is {verdict.verdict} "
          f"(rho_cross = {verdict.rho_cross:.4f})")
