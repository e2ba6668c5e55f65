import pytest

import brute
from flatcheck.decide import (extension_descent_check, flat_quotient_criterion, is_projective,
                              is_s_ring, map_descent_check, pointwise_descent_check,
                              pointwise_localization, radical_descent_check)
from flatcheck.errors import PreconditionError
from flatcheck.ideals import Ideal, all_ideals, nilradical
from flatcheck.modules import PresentedModule, flatness_oracle
from flatcheck.rings import (ProductRing, RingMap, SeqRing, ZMod, diagonal_embedding,
                             quotient_map)
from flatcheck.seqring import Example1Certificate

Z4, Z6, Z12 = ZMod(4), ZMod(6), ZMod(12)


def test_projectivity_examples():
    v = is_projective(PresentedModule.free(Z6, 1))
    assert v.projective and v.rank_map.ranks == (1, 1)
    v = is_projective(PresentedModule.cyclic(Z6, 2))
    assert v.projective and sorted(v.rank_map.ranks) == [0, 1]
    v = is_projective(PresentedModule.cyclic(Z4, 2))
    assert not v.projective and v.reason == "not flat" and v.witness == Ideal(Z4, [2])
    assert not v.evidence["flat"] and not v.evidence["invariant_factors_idempotent"]


def test_zero_module_is_projective():
    v = is_projective(PresentedModule.cyclic(Z6, 1))
    assert v.projective and v.rank_map.ranks == (0, 0)


def test_extension_descent_examples():
    z2 = ZMod(2)
    assert extension_descent_check(z2, ProductRing((z2, z2)), diagonal_embedding(z2),
                                   PresentedModule.free(z2, 1))
    d = diagonal_embedding(Z6)
    assert extension_descent_check(Z6, d.target, d, PresentedModule.cyclic(Z6, 2))
    b = ProductRing((Z4, Z4))
    assert extension_descent_check(Z4, b, diagonal_embedding(Z4), PresentedModule.free(Z4, 1))


def test_extension_descent_rejects_non_injective():
    phi = quotient_map(Z4, (2,))
    with pytest.raises(PreconditionError):
        extension_descent_check(Z4, phi.target, phi, PresentedModule.free(Z4, 1))


def test_radical_descent_examples():
    assert radical_descent_check(Z4, Ideal(Z4, [2]), PresentedModule.free(Z4, 1))
    # R * 4 = R / Ann(4) = R / (3)
    assert radical_descent_check(Z12, Ideal(Z12, [6]), PresentedModule.cyclic(Z12, 3))
    assert radical_descent_check(ZMod(9), Ideal(ZMod(9), [3]), PresentedModule.free(ZMod(9), 1))
    with pytest.raises(PreconditionError):
        radical_descent_check(Z6, Ideal(Z6, [2]), PresentedModule.free(Z6, 1))


def test_map_descent_requires_small_kernel():
    with pytest.raises(PreconditionError):
        map_descent_check(quotient_map(Z6, (3,)), PresentedModule.free(Z6, 1))
    assert map_descent_check(quotient_map(Z12, (6,)), PresentedModule.cyclic(Z12, 8))


def test_pointwise_examples():
    loc = pointwise_localization(Z4, [2])
    assert loc.result.size == 2 and loc.kernel == Ideal(Z4, [2]) == nilradical(Z4)
    loc = pointwise_localization(Z6, [3])
    assert loc.result == Z6 and loc.inverses[3] == 3
    for u in (1, 5):
        loc = pointwise_localization(Z6, [u])
        assert loc.result == Z6 and Z6.mul(loc.inverses[u], u) == 1


@pytest.mark.parametrize("n", [4, 6, 8, 9, 12, 30])
def test_pointwise_kernel_brute(n):
    # x_s exists iff s is von Neumann regular; the kernel kills the nilpotent parts of s
    r = ZMod(n)
    for s in r.elements:
        loc = pointwise_localization(r, [s])
        assert set(loc.kernel.elements) <= brute.nilpotents(n)
        regular = any(s * s * x % n == s for x in range(n))
        assert loc.kernel.is_zero == regular


def test_pointwise_descent_examples():
    assert pointwise_descent_check(Z4, [2], PresentedModule.free(Z4, 1))
    assert pointwise_descent_check(Z6, [3], PresentedModule.cyclic(Z6, 2))
    assert pointwise_descent_check(Z12, [6], PresentedModule.cyclic(Z12, 4))


def test_flat_quotient_examples():
    res = flat_quotient_criterion(Z6, Ideal(Z6, [3]))
    assert res.flat
    for f, b, c in res.witnesses:
        assert Z6.mul(b, f) == 0 and c in Ideal(Z6, [3]) and Z6.add(b, c) == 1
    res = flat_quotient_criterion(Z4, Ideal(Z4, [2]))
    assert not res.flat and res.failing == 2
    for n in (4, 6, 9):
        assert flat_quotient_criterion(ZMod(n), Ideal(ZMod(n), [])).flat


@pytest.mark.parametrize("n", [4, 6, 8, 9, 12, 18])
def test_flat_quotient_versus_oracle(n):
    r = ZMod(n)
    for i in all_ideals(r):
        assert flat_quotient_criterion(r, i).flat == flatness_oracle(PresentedModule.cyclic(r, *i.generators))


def test_s_ring_examples():
    for r in (Z4, Z6):
        v = is_s_ring(r)
        assert v.verdict and v.instances > 0
    v = is_s_ring(SeqRing(ZMod(2)))
    assert not v.verdict and isinstance(v.certificate, Example1Certificate) and v.certificate.valid


def test_corrupted_oracle_breaks_trichotomy():
    m = PresentedModule.cyclic(Z4, 2)
    v = is_projective(m, lambda _: None)
    assert not v.projective and v.evidence["flat"]


def test_ring_map_checks():
    bad = RingMap(Z4, Z4, lambda x: 0, "zero")
    assert not bad.check_homomorphism()
