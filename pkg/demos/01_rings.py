"""Finite rings, their idempotents and local factors.

A finite commutative ring splits as a product of local rings, one for each
primitive idempotent.  Z/12 = Z/4 x Z/3 through e = 9 and e = 4.
"""

from flatcheck.ideals import Ideal, idempotent_generator, jacobson_radical, local_decomposition
from flatcheck.rings import PolyQuotient, ProductRing, ZMod, classify_element

for ring in (ZMod(12), PolyQuotient(2, (0, 1, 1)), ProductRing((ZMod(2), ZMod(4)))):
    print(ring, f"({ring.size} elements)")
    for f in local_decomposition(ring):
        print(f"  factor via idempotent {f.idempotent}: {f.ring} with {f.ring.size} elements")
    print("  Jacobson radical:", jacobson_radical(ring))

z6 = ZMod(6)
print("4 in Z/6:", classify_element(z6, 4))
print("2 in Z/4:", classify_element(ZMod(4), 2))

# (2) in Z/6 is idempotent, so it is generated by an idempotent
print("idempotent generator of (2) in Z/6:", idempotent_generator(z6, Ideal(z6, [2])))
