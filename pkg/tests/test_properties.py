"""Randomized invariants over the finite ring family and the seq ring."""

from math import comb

from hypothesis import given, settings
from hypothesis import strategies as st

from flatcheck.decide import is_projective, pointwise_localization
from flatcheck.exterior import exterior_power, invariant_factor
from flatcheck.ideals import Ideal, all_ideals, idempotent_generator, is_idempotent_ideal, nilradical
from flatcheck.modules import (PresentedModule, annihilator, base_change, direct_sum,
                               flatness_oracle, is_locally_free, tensor)
from flatcheck.rings import PolyQuotient, ProductRing, SeqRing, ZMod, diagonal_embedding
from flatcheck.spectrum import rank_map

RINGS = [ZMod(4), ZMod(6), ZMod(8), ZMod(9), ZMod(12), PolyQuotient(2, (0, 0, 1)),
         PolyQuotient(2, (1, 1, 1)), ProductRing((ZMod(2), ZMod(4)))]

rings = st.sampled_from(RINGS)


@st.composite
def ring_and_elements(draw, count=3):
    r = draw(rings)
    return r, [draw(st.sampled_from(r.elements)) for _ in range(count)]


@st.composite
def modules(draw, max_k=2, max_rels=2, ring=None):
    r = ring if ring is not None else draw(rings)
    k = draw(st.integers(0, max_k))
    nrel = draw(st.integers(0, max_rels))
    rels = [[draw(st.sampled_from(r.elements)) for _ in range(k)] for _ in range(nrel)]
    return PresentedModule(r, k, rels)


@st.composite
def module_pairs(draw):
    r = draw(rings)
    return draw(modules(ring=r, max_k=1)), draw(modules(ring=r, max_k=1))


@given(ring_and_elements())
def test_ring_axioms(data):
    r, (x, y, z) = data
    assert r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z))
    assert r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z))
    assert r.add(x, r.neg(x)) == r.zero and r.mul(x, r.one) == x


@given(rings, st.data())
def test_ideal_laws(r, data):
    ideals = all_ideals(r)
    i, j, k = (data.draw(st.sampled_from(ideals)) for _ in range(3))
    assert i * (j + k) == i * j + i * k
    assert i * j <= i & j
    assert (i + j) + k == i + (j + k)
    if is_idempotent_ideal(r, i):
        e = idempotent_generator(r, i)
        assert r.mul(e, e) == e and Ideal(r, [e]) == i


@settings(max_examples=60)
@given(modules())
def test_cardinality_times_relation_submodule(m):
    assert m.cardinality * len(m.submodule) == m.ring.size ** m.k


@settings(max_examples=60)
@given(module_pairs())
def test_annihilator_of_direct_sum(pair):
    a, b = pair
    assert annihilator(direct_sum(a, b)) == annihilator(a) & annihilator(b)
    assert tensor(a, b).cardinality == tensor(b, a).cardinality


@given(rings, st.integers(0, 3), st.integers(0, 4))
def test_wedge_of_free_is_free(r, k, n):
    w = exterior_power(PresentedModule.free(r, k), n)
    assert w.cardinality == r.size ** comb(k, n)


@settings(max_examples=80)
@given(modules())
def test_flatness_agrees_with_local_freeness(m):
    assert flatness_oracle(m) == is_locally_free(m) == is_projective(m).projective


@settings(max_examples=80)
@given(modules())
def test_flat_modules_have_idempotent_invariant_factors(m):
    if flatness_oracle(m):
        r = m.ring
        assert is_idempotent_ideal(r, annihilator(m))
        for n in range(m.k + 1):
            idempotent_generator(r, invariant_factor(m, n))


@settings(max_examples=60)
@given(modules())
def test_base_change_functoriality(m):
    # along the diagonal, M (x) (R x R) has size |M|^2 and keeps projectivity
    d = diagonal_embedding(m.ring)
    b = base_change(m, d)
    assert b.cardinality == m.cardinality ** 2
    assert is_projective(b).projective == is_projective(m).projective


@settings(max_examples=60)
@given(modules())
def test_rank_bounded_by_generators(m):
    if flatness_oracle(m):
        assert all(0 <= rk <= m.k for rk in rank_map(m).ranks)


@given(ring_and_elements(2))
def test_pointwise_localization_relations(data):
    r, subset = data
    loc = pointwise_localization(r, subset)
    assert loc.verify() and loc.kernel <= nilradical(r)


S2 = SeqRing(ZMod(2))
seq_elements = st.builds(lambda p, t: S2.make(p, t), st.lists(st.integers(0, 1), max_size=8),
                         st.integers(0, 1))


@given(seq_elements, seq_elements, seq_elements)
def test_seq_ring_axioms(x, y, z):
    assert S2.mul(S2.mul(x, y), z) == S2.mul(x, S2.mul(y, z))
    assert S2.mul(x, S2.add(y, z)) == S2.add(S2.mul(x, y), S2.mul(x, z))
    assert S2.add(x, y) == S2.add(y, x)


@given(st.lists(st.integers(0, 1), max_size=10), st.integers(0, 1))
def test_seq_canonical_idempotent(prefix, tail):
    x = S2.make(prefix, tail)
    assert S2.canonical(x) == x
    assert not x.prefix or x.prefix[-1] != x.tail
    assert all(x.at(i) == (prefix[i] if i < len(prefix) else tail) for i in range(12))
