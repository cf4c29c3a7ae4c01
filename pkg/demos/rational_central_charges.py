"""Rational central charges of 2d gases at special couplings.

The 2d fixed-point equations z = (1 -+ z)**(+-h) close in terms of the
golden-mean root of z**2 + z = 1, and the Rogers dilogarithm's functional
equations turn the free-energy coefficient c (from F = -c pi T**2 / 24)
into rational numbers.
"""
import math

from gastba import (
    BOSON,
    FERMION,
    SpeciesSpec,
    central_charge,
    solve_2d_boson,
    solve_2d_fermion,
)

print("bosons: z solves z = (1 - z)**h at unit fugacity")
print(f"{'h':>6} {'z':>20} {'c':>20}")
for h in (0.0, 0.5, 1.0, 2.0):
    sol = solve_2d_boson(h)
    c = central_charge([sol], [SpeciesSpec(statistics=BOSON)])
    print(f"{h:6.2f} {sol.z_delta:20.15f} {c:20.15f}")

print()
print("fermions: z solves z = (1 + z)**(-h); attractive h < 0 stays regular")
print(f"{'h':>6} {'z':>20} {'c':>20}")
for h in (-0.5, 0.0, 1.0):
    sol = solve_2d_fermion(h)
    c = central_charge([sol], [SpeciesSpec(statistics=FERMION)])
    print(f"{h:6.2f} {sol.z_delta:20.15f} {c:20.15f}")

print()
print("h -> -1+ limit (z runs away, c -> 1):")
for h in (-0.9, -0.99, -0.999, -0.9999):
    sol = solve_2d_fermion(h)
    c = central_charge([sol], [SpeciesSpec(statistics=FERMION)])
    print(f"  h = {h:8.4f}: z = {sol.z_delta:12.3f}, c = {c:.8f}")

golden = (math.sqrt(5) - 1) / 2
print()
print(f"golden mean r = {golden:.15f}; the tables above hit z = r, r**2, 1/r")
