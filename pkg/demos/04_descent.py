"""Descent of projectivity and pointwise localization.

Projectivity can be tested after an injective ring extension, after
reducing modulo an ideal inside the Jacobson radical, or after pointwise
localization, which adjoins a quasi-inverse x_s with s x_s^2 = x_s and
s^2 x_s = s for each s in S.
"""

from flatcheck.decide import (extension_descent_check, pointwise_descent_check,
                              pointwise_localization, radical_descent_check)
from flatcheck.ideals import Ideal
from flatcheck.modules import PresentedModule
from flatcheck.rings import ZMod, diagonal_embedding

z12 = ZMod(12)
m = PresentedModule.cyclic(z12, 3)
d = diagonal_embedding(z12)
print("Z/12 -> Z/12 x Z/12 descent:", extension_descent_check(z12, d.target, d, m))
print("mod (6) descent:", radical_descent_check(z12, Ideal(z12, [6]), m))

for ring, s in ((ZMod(4), 2), (ZMod(6), 3), (z12, 6)):
    loc = pointwise_localization(ring, [s])
    print(f"{ring} at S = {{{s}}}: kernel {loc.kernel}, result has {loc.result.size} elements, "
          f"x_s = {loc.inverses[s]}, relations hold: {loc.verify()}")
print("pointwise descent for Z/12 / (3):", pointwise_descent_check(z12, [6], m))
