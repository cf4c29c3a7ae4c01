"""A boson-fermion pair with unit couplings: c = 3/4.

With equal masses 1/2 and h_ab = 1 the coupled 2d fixed point
z_a = prod_b (1 - s_b z_b)**(h_ab s_b) collapses to z(1 + z) = 1 - z,
solved by z = sqrt(2) - 1 for both species.
"""
import math

import numpy as np

from gastba import BOSON, FERMION, SpeciesSpec, central_charge, solve_2d_multispecies

species = [
    SpeciesSpec(name="boson", statistics=BOSON),
    SpeciesSpec(name="fermion", statistics=FERMION),
]
solutions = solve_2d_multispecies(species, np.ones((2, 2)))

for sp, sol in zip(species, solutions):
    print(f"{sp.name:>8}: z = {sol.z_delta:.15f} (sqrt(2)-1 = {math.sqrt(2)-1:.15f}), "
          f"residual {sol.residual:.1e} after {sol.iterations} iterations")

c = central_charge(solutions, species)
print(f"total central charge c = {c:.15f} (exact 3/4)")
