"""Bose-Einstein criticality in 3d and its absence in 2d.

The critical temperature and density come out independent of the coupling
(they only see zeta(d/2)), while the critical free energy carries a
first-order coupling correction. At d = 2 the pole of zeta at 1 makes the
critical density infinite: the request raises the documented error.
"""
from gastba import CouplingSpec, DimensionError, ThermoState, bec_critical

state = ThermoState(T=1.0, d=3)
n_phys = 1.0

print("d = 3, physical density 1, across couplings h_T:")
print(f"{'h_T':>6} {'mu_c':>12} {'n_c':>12} {'T_c':>12} {'F_c':>14}")
for h in (0.0, 0.25, 0.5, 1.0):
    rep = bec_critical(3, CouplingSpec(mode="h_T", value=h, d=3), n_phys, state)
    print(f"{h:6.2f} {rep.mu_c:12.6f} {rep.n_c:12.6f} {rep.T_c:12.6f} {rep.F_c:14.6f}")

print()
print("T_c and n_c do not move with h_T; mu_c and F_c do.")

print()
try:
    bec_critical(2, CouplingSpec(mode="h_2d", value=0.5, d=2), n_phys,
                 ThermoState(T=1.0, d=2))
except DimensionError as exc:
    print(f"d = 2 request raises DimensionError:\n  {exc}")
