"""Flatness, projectivity and the equational flatness witness.

Z/6 / (2) is projective (it is the Z/2 factor), while Z/4 / (2) is not even
flat: tensoring the inclusion (2) -> Z/4 with it gives a map that is not
injective.
"""

from flatcheck.decide import is_projective
from flatcheck.documents import analysis_report, render_analysis
from flatcheck.modules import PresentedModule, flatness_obstruction, flatness_witness
from flatcheck.rings import ZMod

for n in (6, 4):
    m = PresentedModule.cyclic(ZMod(n), 2)
    print(render_analysis(analysis_report(m)))
    print()

# a relation 2 * x = 0 in the free module Z/6 factors through relations in R
m = PresentedModule.free(ZMod(6), 1)
w = flatness_witness(m, (2,), ((3,),))
print("relation 2 * 3 = 0 in Z/6")
print("  r =", w.factor_matrix, " y =", w.new_vectors, " verifies:", w.verify(m))

bad = PresentedModule.cyclic(ZMod(4), 2)
print("obstructing ideal for Z/4 / (2):", flatness_obstruction(bad))
print("verdict:", is_projective(bad).reason)
