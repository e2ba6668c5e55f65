"""Prime spectrum of a finite ring and localization at its points.

A finite ring is the product of its local factors, and localizing at a
prime is projecting onto the factor that prime comes from.  Every point of
the spectrum is therefore clopen.
"""

import functools
from dataclasses import dataclass, field

import numpy as np

from .errors import NotFlat
from .ideals import Ideal, image_ideal, local_decomposition, maximal_ideal, preimage_ideal
from .modules import annihilator, base_change, flatness_obstruction, is_free_local
from .rings import QuotientRing


@dataclass(frozen=True, eq=False)
class PrimeSite:
    ring: object
    factor_index: int
    prime: Ideal
    residue_field: object
    factor: object = field(repr=False)

    def __eq__(self, other):
        if not isinstance(other, PrimeSite):
            return NotImplemented
        return (self.ring, self.factor_index) == (other.ring, other.factor_index)

    def __hash__(self):
        return hash((self.ring, self.factor_index))

    @property
    def local_ring(self):
        return self.factor.ring

    def __str__(self):
        gens = ", ".join(map(str, self.prime.generators)) or "0"
        return f"({gens})"


def is_prime_ideal(ideal):
    ring = ideal.ring
    outside = np.nonzero(~ideal.mask)[0]
    if len(outside) == 0:
        return False
    prods = ring.mul_table[np.ix_(outside, outside)]
    return bool(np.all(~ideal.mask[prods]))


@functools.lru_cache(maxsize=None)
def prime_sites(ring):
    sites = []
    for i, f in enumerate(local_decomposition(ring)):
        prime = preimage_ideal(f.projection, maximal_ideal(f.ring))
        if not is_prime_ideal(prime):
            raise AssertionError(f"pullback {prime} is not prime")
        sites.append(PrimeSite(ring, i, prime, QuotientRing(ring, prime.generators), f))
    return tuple(sites)


def localize_module(m, site):
    return base_change(m, site.factor.projection)


def localize_ideal(ideal, site):
    return image_ideal(site.factor.projection, ideal)


def localized_annihilator_check(m, site):
    """Ann(M) localized equals the annihilator of the localized module."""
    return localize_ideal(annihilator(m), site) == annihilator(localize_module(m, site))


def support(m):
    return frozenset(s for s in prime_sites(m.ring) if not localize_module(m, s).is_zero)


@dataclass(frozen=True)
class RankMap:
    """Free rank of a flat module at each prime site, indexed by factor order."""

    ring: object
    ranks: tuple

    def __getitem__(self, site):
        return self.ranks[site.factor_index]

    def items(self):
        return list(zip(prime_sites(self.ring), self.ranks))

    def sites_with_rank_at_least(self, n):
        return frozenset(s for s, r in self.items() if r >= n)


def rank_map(m):
    obstruction = flatness_obstruction(m)
    if obstruction is not None:
        raise NotFlat(f"rank map is defined for flat modules only; {m} is not flat",
                      witness=obstruction)
    ranks = []
    for site in prime_sites(m.ring):
        check = is_free_local(localize_module(m, site))
        assert check.free, "flat module over a local ring must be free"
        ranks.append(check.rank)
    return RankMap(m.ring, tuple(ranks))


def connected_components(ring):
    """Components of Spec R, read off the clopen sets D(e) of the factor idempotents.

    Each factor idempotent e_i cuts out exactly its own point, so the
    components of a finite ring are its single points.
    """
    sites = prime_sites(ring)
    components = []
    for f in local_decomposition(ring):
        # D(e) = primes not containing e
        components.append([s for s in sites if f.idempotent not in s.prime])
    return components


def is_locally_constant(rm):
    return all(len({rm[s] for s in comp}) <= 1 for comp in connected_components(rm.ring))
