"""A finitely generated flat module that is not projective.

R is the ring of eventually constant sequences over Z/2 and I the ideal of
finitely supported ones.  R/I is flat (each f in I has g with g f = 0 and
1 - g in I) but I has no idempotent generator, so R/I is not projective.
"""

from flatcheck.decide import is_s_ring
from flatcheck.rings import SeqRing, ZMod
from flatcheck.seqring import example1_certificate, example1_flat_witness, refute_idempotent_generator

ring = SeqRing(ZMod(2))
f = ring.make([1, 0, 1], 0)
g, h = example1_flat_witness(ring, f)
print(f"f = {f}: g = {g}, h = {h}")

for e in (ring.one, ring.make([1, 1], 0)):
    ref = refute_idempotent_generator(ring, e)
    print(f"e = {e}: {ref.reason}" + (f", witness {ref.witness}" if ref.witness is not None else ""))

cert = example1_certificate(ZMod(2), samples=200, seed=7)
print(f"certificate: {len(cert.flatness.triples)} triples, {len(cert.refutations)} refutations, "
      f"{cert.status} ({cert.adaptation})")
print("seq(Z/2) is an S-ring:", is_s_ring(ring).verdict)
