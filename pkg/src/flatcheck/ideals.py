"""Ideals of finite rings, idempotents and the decomposition into local factors."""

import functools
from typing import Callable, NamedTuple

import numpy as np

from ._freemod import contains
from .errors import InputError, NoIdempotentGenerator, NotLocalError, UnsupportedIdealError
from .rings import QuotientRing, Ring, RingMap, greedy_generators, identity_map


class Ideal:
    """A finitely generated ideal of a finite ring.

    Equality is equality of the underlying sets of elements, so two different
    generating sets of the same ideal compare (and hash) equal.
    """

    finite_support = False

    def __init__(self, ring, generators=()):
        if not ring.is_finite:
            raise UnsupportedIdealError(f"generator ideals of {ring} are handled in flatcheck.seqring")
        self.ring = ring
        self.generators = tuple(ring.check_element(g, "generators") for g in generators)

    @classmethod
    def from_indices(cls, ring, indices):
        ideal = cls(ring, greedy_generators(ring, indices))
        return ideal

    @functools.cached_property
    def indices(self):
        r = self.ring
        return r.codec(1).span([r.index(g) for g in self.generators])

    @functools.cached_property
    def mask(self):
        m = np.zeros(self.ring.size, dtype=bool)
        m[self.indices] = True
        return m

    @property
    def elements(self):
        return tuple(self.ring.element(i) for i in self.indices)

    def __len__(self):
        return len(self.indices)

    def __contains__(self, x):
        return contains(self.indices, self.ring.index(x))

    def __eq__(self, other):
        if not isinstance(other, Ideal) or other.finite_support:
            return NotImplemented
        return self.ring == other.ring and np.array_equal(self.indices, other.indices)

    def __hash__(self):
        return hash((self.ring, self.indices.tobytes()))

    def __le__(self, other):
        _check_same(self, other)
        return bool(np.all(other.mask[self.indices]))

    def __add__(self, other):
        _check_same(self, other)
        return Ideal(self.ring, self.generators + other.generators).minimized()

    def __mul__(self, other):
        _check_same(self, other)
        r = self.ring
        return Ideal(r, [r.mul(a, b) for a in self.generators for b in other.generators]).minimized()

    def __and__(self, other):
        _check_same(self, other)
        return Ideal.from_indices(self.ring, np.intersect1d(self.indices, other.indices))

    def minimized(self):
        return Ideal.from_indices(self.ring, self.indices)

    @property
    def is_zero(self):
        return len(self.indices) == 1

    @property
    def is_unit_ideal(self):
        return self.mask[self.ring.one_index]

    def __repr__(self):
        gens = ", ".join(map(str, self.generators)) or "0"
        return f"Ideal({self.ring}; {gens})"

    __str__ = __repr__


def _check_same(i, j):
    for x in (i, j):
        if getattr(x, "finite_support", False):
            raise UnsupportedIdealError("finite-support ideals only support seqring operations")
    if i.ring != j.ring:
        raise InputError(f"ideals live in different rings: {i.ring} vs {j.ring}")


def zero_ideal(ring):
    return Ideal(ring, ())


def unit_ideal(ring):
    return Ideal(ring, (ring.one,))


def principal(ring, x):
    return Ideal(ring, (x,))


def element_annihilator(ring, x):
    col = ring.mul_table[:, ring.index(x)]
    return Ideal.from_indices(ring, np.nonzero(col == 0)[0])


class IdealOps(NamedTuple):
    sum: Ideal
    product: Ideal
    intersection: Ideal
    membership: Callable
    equal: bool


def ideal_ops(ring, i, j):
    _check_same(i, j)
    return IdealOps(i + j, i * j, i & j,
                    lambda x: (x in i, x in j), i == j)


@functools.lru_cache(maxsize=None)
def all_ideals(ring):
    """Every ideal of a finite ring, ordered by size then by element indices."""
    codec = ring.codec(1)
    cyclics = {tuple(codec.cyclic(i)) for i in range(ring.size)}
    found = {(0,)}
    frontier = [np.zeros(1, dtype=np.int64)]
    while frontier:
        nxt = []
        for ideal in frontier:
            for c in cyclics:
                s = codec.sum_of(ideal, np.array(c))
                key = tuple(int(v) for v in s)
                if key not in found:
                    found.add(key)
                    nxt.append(s)
        frontier = nxt
    ordered = sorted(found, key=lambda t: (len(t), t))
    return tuple(Ideal.from_indices(ring, np.array(t, dtype=np.int64)) for t in ordered)


def is_idempotent_ideal(ring, ideal):
    if ideal.finite_support:
        raise UnsupportedIdealError("idempotency of finite-support ideals is not decided here")
    return ideal * ideal == ideal


def idempotent_generator(ring, ideal):
    """First idempotent ``e`` (in enumeration order) with ``Re == ideal``."""
    if ideal.finite_support:
        raise UnsupportedIdealError("finite-support ideals have no generators")
    mul = ring.mul_table
    for e in ideal.indices:
        if mul[e, e] == e and np.array_equal(np.unique(mul[:, e]), ideal.indices):
            return ring.element(e)
    raise NoIdempotentGenerator(f"{ideal} is not generated by an idempotent")


# --- local structure --------------------------------------------------------

class LocalFactor(NamedTuple):
    ring: Ring
    projection: RingMap
    idempotent: object

    def lift(self, y):
        """An element of the parent ring projecting to ``y``."""
        return y


def primitive_idempotents(ring):
    mul = ring.mul_table
    idem = [e for e in ring.idempotent_indices if e != 0]
    return [e for e in idem if not any(f != e and mul[f, e] == f for f in idem)]


@functools.lru_cache(maxsize=None)
def is_local(ring):
    return len(primitive_idempotents(ring)) == 1 and _nonunits_closed(ring)


def _nonunits_closed(ring):
    nonunits = np.nonzero(~ring.unit_mask)[0]
    sums = ring.add_table[np.ix_(nonunits, nonunits)]
    return bool(np.all(~ring.unit_mask[sums]))


@functools.lru_cache(maxsize=None)
def local_decomposition(ring):
    """The local factors R/(1 - e) for the primitive idempotents e of R.

    Factors are listed in enumeration order of their idempotents.  A local
    ring is returned as its own single factor.
    """
    prims = primitive_idempotents(ring)
    if len(prims) == 1:
        if not _nonunits_closed(ring):
            raise AssertionError(f"{ring} has one primitive idempotent but is not local")
        return (LocalFactor(ring, identity_map(ring), ring.one),)
    one = ring.one
    factors = []
    for e in prims:
        e_el = ring.element(e)
        q = QuotientRing(ring, (ring.sub(one, e_el),))
        if not _nonunits_closed(q):
            raise AssertionError(f"factor {q} is not local")
        factors.append(LocalFactor(q, RingMap(ring, q, q.project, f"pi_{len(factors)}"), e_el))
    total = ring.sum(f.idempotent for f in factors)
    assert total == one, "primitive idempotents do not sum to 1"
    return tuple(factors)


def crt_combine(ring, components):
    """Element of ``ring`` whose projection to the i-th local factor is components[i]."""
    factors = local_decomposition(ring)
    if len(components) != len(factors):
        raise InputError("need one component per local factor")
    return ring.sum(ring.mul(f.idempotent, f.lift(y)) for f, y in zip(factors, components))


@functools.lru_cache(maxsize=None)
def maximal_ideal(ring):
    if not is_local(ring):
        raise NotLocalError(f"{ring} is not local; use local_decomposition first")
    return Ideal.from_indices(ring, np.nonzero(~ring.unit_mask)[0])


def residue_field(ring):
    return QuotientRing(ring, maximal_ideal(ring).generators)


@functools.lru_cache(maxsize=None)
def jacobson_radical(ring):
    mask = np.ones(ring.size, dtype=bool)
    for f in local_decomposition(ring):
        images = np.array([f.ring.index(f.projection(x)) for x in ring.elements])
        mask &= ~f.ring.unit_mask[images]
    return Ideal.from_indices(ring, np.nonzero(mask)[0])


def nilradical(ring):
    return Ideal.from_indices(ring, np.nonzero(ring.nilpotent_mask)[0])


def image_ideal(phi, ideal):
    """Ideal of the target generated by the image of ``ideal``."""
    return Ideal(phi.target, [phi(g) for g in ideal.generators])


def preimage_ideal(phi, ideal):
    src = phi.source
    idx = [i for i, x in enumerate(src.elements) if phi(x) in ideal]
    return Ideal.from_indices(src, np.array(idx, dtype=np.int64))
