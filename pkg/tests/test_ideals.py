import pytest

import brute
from flatcheck.errors import NoIdempotentGenerator
from flatcheck.ideals import (Ideal, all_ideals, crt_combine, idempotent_generator,
                              is_idempotent_ideal, is_local, jacobson_radical, local_decomposition,
                              maximal_ideal, nilradical, zero_ideal)
from flatcheck.rings import PolyQuotient, ZMod


def test_idempotent_ideals():
    assert is_idempotent_ideal(ZMod(6), Ideal(ZMod(6), [2]))
    assert not is_idempotent_ideal(ZMod(4), Ideal(ZMod(4), [2]))
    for n in (4, 6, 9):
        assert is_idempotent_ideal(ZMod(n), zero_ideal(ZMod(n)))


def test_idempotent_generator_examples():
    assert idempotent_generator(ZMod(6), Ideal(ZMod(6), [2])) == 4
    assert idempotent_generator(ZMod(4), zero_ideal(ZMod(4))) == 0
    with pytest.raises(NoIdempotentGenerator):
        idempotent_generator(ZMod(4), Ideal(ZMod(4), [2]))


@pytest.mark.parametrize("n", [4, 6, 8, 9, 12, 18, 30])
def test_all_ideals_brute(n):
    assert {frozenset(i.elements) for i in all_ideals(ZMod(n))} == brute.all_ideals(n)


@pytest.mark.parametrize("n", [6, 12, 18, 30])
def test_idempotent_ideals_have_generators_brute(n):
    r = ZMod(n)
    for i in all_ideals(r):
        squares = brute.ideal_product(n, set(i.elements), set(i.elements))
        assert is_idempotent_ideal(r, i) == (squares == frozenset(i.elements))
        if is_idempotent_ideal(r, i):
            e = idempotent_generator(r, i)
            assert e * e % n == e and brute.ideal(n, [e]) == frozenset(i.elements)


def test_decomposition_zmod12():
    factors = local_decomposition(ZMod(12))
    assert sorted(f.idempotent for f in factors) == [4, 9]
    assert sorted(f.ring.size for f in factors) == [3, 4]
    assert all(is_local(f.ring) for f in factors)


def test_local_ring_is_its_own_factor():
    (f,) = local_decomposition(ZMod(4))
    assert f.ring == ZMod(4) and f.idempotent == 1


def test_split_poly_quotient():
    r = PolyQuotient(2, (0, 1, 1))  # x^2 + x
    factors = local_decomposition(r)
    assert len(factors) == 2 and all(f.ring.size == 2 for f in factors)


@pytest.mark.parametrize("n", [4, 6, 8, 9, 12, 30])
def test_crt_round_trip(n):
    r = ZMod(n)
    factors = local_decomposition(r)
    for x in r.elements:
        assert crt_combine(r, [f.projection(x) for f in factors]) == x


@pytest.mark.parametrize("n", [4, 6, 8, 9, 12, 30])
def test_jacobson_radical_brute(n):
    assert frozenset(jacobson_radical(ZMod(n)).elements) == brute.jacobson(n)
    # finite rings are Artinian, so Jac = nilradical
    assert frozenset(nilradical(ZMod(n)).elements) == frozenset(brute.nilpotents(n))


def test_radical_examples():
    assert jacobson_radical(ZMod(12)) == Ideal(ZMod(12), [6])
    assert jacobson_radical(ZMod(4)) == Ideal(ZMod(4), [2])
    assert jacobson_radical(PolyQuotient(2, (1, 1, 1))).is_zero
    assert maximal_ideal(ZMod(9)) == Ideal(ZMod(9), [3])
