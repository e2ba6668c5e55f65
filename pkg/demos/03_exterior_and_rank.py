"""Exterior powers, invariant factors and the rank map.

For a flat module the n-th invariant factor Ann(wedge^n M) is generated by
an idempotent, and the support of wedge^n M is where the rank is at least n.
"""

from flatcheck.exterior import exterior_power, fitting_ideal, invariant_factor, support_formula_check
from flatcheck.modules import PresentedModule, direct_sum
from flatcheck.rings import ZMod
from flatcheck.spectrum import rank_map

z6 = ZMod(6)
m = direct_sum(PresentedModule.free(z6, 1), PresentedModule.cyclic(z6, 2))
print("M = R + R/(2) over Z/6,", m.cardinality, "elements")
for n in range(4):
    w = exterior_power(m, n)
    print(f"  wedge^{n}: {w.cardinality} elements, I_{n} = {invariant_factor(m, n)}, "
          f"Fitt_{n} = {fitting_ideal(m, n)}, support formula holds: {support_formula_check(m, n)}")

for site, rank in rank_map(m).items():
    print(f"  rank at {site}: {rank}")
