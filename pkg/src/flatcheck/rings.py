"""Computable commutative rings with canonical element forms.

Four constructors are supported: residues ``ZMod(n)``, polynomial quotients
``PolyQuotient(p, f)`` over a prime field, finite ``ProductRing``s and the
eventually constant sequences ``SeqRing(base)`` over a finite base.  A
``QuotientRing`` of a finite ring by an ideal is also available; it is what
local factors, residue fields and ``R/J`` are built from.

Finite rings enumerate their elements in a fixed order and expose addition
and multiplication tables indexed by that order.  Index 0 is always zero.
"""

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, NamedTuple

import numpy as np

from ._freemod import FreeCodec
from .errors import InfiniteRingError, InputError, RingConstructionError


class Ring:
    is_finite = True

    # element level operations, overridden per constructor
    def add(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def power(self, x, e):
        result = self.one
        for _ in range(e):
            result = self.mul(result, x)
        return result

    def sum(self, xs):
        total = self.zero
        for x in xs:
            total = self.add(total, x)
        return total

    def canonical(self, x):
        """Normalize raw input into canonical form, or raise InputError."""
        raise NotImplementedError

    def is_canonical(self, x):
        try:
            return self.canonical(x) == x
        except (InputError, TypeError, ValueError):
            return False

    def check_element(self, x, field="element"):
        if not self.is_canonical(x):
            raise InputError(f"{x!r} is not a canonical element of {self}", field)
        return x

    # --- finite ring machinery ------------------------------------------

    def _enumerate(self):
        raise InfiniteRingError(f"{self} has no element enumeration")

    @cached_property
    def elements(self):
        if not self.is_finite:
            raise InfiniteRingError(f"{self} has no element enumeration")
        elems = tuple(self._enumerate())
        assert elems[0] == self.zero
        return elems

    @property
    def size(self):
        return len(self.elements)

    def __len__(self):
        return self.size

    @cached_property
    def _index(self):
        return {x: i for i, x in enumerate(self.elements)}

    def index(self, x):
        try:
            return self._index[x]
        except KeyError:
            raise InputError(f"{x!r} is not a canonical element of {self}") from None

    def element(self, i):
        return self.elements[int(i)]

    @cached_property
    def add_table(self):
        els = self.elements
        idx = self._index
        return np.array([[idx[self.add(x, y)] for y in els] for x in els], dtype=np.int64)

    @cached_property
    def mul_table(self):
        els = self.elements
        idx = self._index
        return np.array([[idx[self.mul(x, y)] for y in els] for x in els], dtype=np.int64)

    @cached_property
    def neg_table(self):
        return np.array([self._index[self.neg(x)] for x in self.elements], dtype=np.int64)

    @cached_property
    def one_index(self):
        return self.index(self.one)

    @cached_property
    def unit_mask(self):
        return (self.mul_table == self.one_index).any(axis=1)

    @cached_property
    def nilpotent_mask(self):
        mask = np.zeros(self.size, dtype=bool)
        mul = self.mul_table
        for i in range(self.size):
            x, seen = i, set()
            while x != 0 and x not in seen:
                seen.add(x)
                x = mul[x, i]
            mask[i] = x == 0
        return mask

    @cached_property
    def idempotent_indices(self):
        mul = self.mul_table
        return tuple(i for i in range(self.size) if mul[i, i] == i)

    @cached_property
    def _codecs(self):
        return {}

    def codec(self, k):
        try:
            return self._codecs[k]
        except KeyError:
            c = self._codecs[k] = FreeCodec(self.add_table, self.mul_table, self.neg_table, k)
            return c

    def inverse(self, x):
        i = self.index(x)
        hits = np.nonzero(self.mul_table[i] == self.one_index)[0]
        if len(hits) == 0:
            raise InputError(f"{x!r} is not a unit of {self}")
        return self.elements[int(hits[0])]

    @property
    def is_zero_ring(self):
        return self.one == self.zero


@dataclass(frozen=True)
class ZMod(Ring):
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise RingConstructionError(f"modulus must be an integer >= 1, got {self.n!r}", "n")

    zero = 0

    @property
    def one(self):
        return 1 % self.n

    def add(self, x, y):
        return (x + y) % self.n

    def mul(self, x, y):
        return (x * y) % self.n

    def neg(self, x):
        return (-x) % self.n

    def canonical(self, x):
        if not isinstance(x, (int, np.integer)) or isinstance(x, bool):
            raise InputError(f"expected an integer residue, got {x!r}")
        return int(x) % self.n

    def is_canonical(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.n

    def _enumerate(self):
        return range(self.n)

    def __str__(self):
        return f"zmod({self.n})"


@dataclass(frozen=True)
class PolyQuotient(Ring):
    """F_p[x]/(f) for a monic f; elements are coefficient tuples, low degree first."""

    p: int
    f: tuple

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p ** 0.5) + 1)):
            raise RingConstructionError(f"p must be prime, got {self.p!r}", "p")
        f = tuple(int(c) for c in self.f)
        if len(f) < 2:
            raise RingConstructionError("modulus polynomial must have degree >= 1", "f")
        if any(not 0 <= c < self.p for c in f):
            raise RingConstructionError(f"coefficients must lie in [0, {self.p})", "f")
        if f[-1] != 1:
            raise RingConstructionError("modulus polynomial must be monic with its leading 1 present", "f")
        object.__setattr__(self, "f", f)

    @property
    def degree(self):
        return len(self.f) - 1

    @property
    def zero(self):
        return (0,) * self.degree

    @property
    def one(self):
        return (1,) + (0,) * (self.degree - 1)

    def _reduce(self, coeffs):
        p, f, d = self.p, self.f, self.degree
        c = [x % p for x in coeffs]
        for top in range(len(c) - 1, d - 1, -1):
            lead = c[top]
            if lead:
                for j in range(d + 1):
                    c[top - d + j] = (c[top - d + j] - lead * f[j]) % p
        c = c[:d] + [0] * max(0, d - len(c))
        return tuple(c)

    def add(self, x, y):
        return tuple((a + b) % self.p for a, b in zip(x, y))

    def neg(self, x):
        return tuple((-a) % self.p for a in x)

    def mul(self, x, y):
        prod = [0] * (2 * self.degree - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    prod[i + j] += a * b
        return self._reduce(prod)

    def canonical(self, x):
        try:
            coeffs = [int(c) for c in x]
        except TypeError:
            raise InputError(f"expected a coefficient vector, got {x!r}") from None
        return self._reduce(coeffs)

    def is_canonical(self, x):
        return (isinstance(x, tuple) and len(x) == self.degree
                and all(isinstance(c, int) and 0 <= c < self.p for c in x))

    def _enumerate(self):
        # lexicographic on coefficient vectors
        return itertools.product(range(self.p), repeat=self.degree)

    def __str__(self):
        def term(c, i):
            mono = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            return (str(c) if c != 1 or i == 0 else "") + mono
        terms = [term(c, i) for i, c in enumerate(self.f) if c]
        return f"poly_quotient({self.p}, {' + '.join(reversed(terms))})"


@dataclass(frozen=True)
class ProductRing(Ring):
    factors: tuple

    def __post_init__(self):
        f = tuple(self.factors)
        if not f:
            raise RingConstructionError("product needs at least one factor", "factors")
        if not all(isinstance(r, Ring) for r in f):
            raise RingConstructionError("product factors must be rings", "factors")
        object.__setattr__(self, "factors", f)

    @property
    def is_finite(self):
        return all(r.is_finite for r in self.factors)

    @property
    def zero(self):
        return tuple(r.zero for r in self.factors)

    @property
    def one(self):
        return tuple(r.one for r in self.factors)

    def add(self, x, y):
        return tuple(r.add(a, b) for r, a, b in zip(self.factors, x, y))

    def mul(self, x, y):
        return tuple(r.mul(a, b) for r, a, b in zip(self.factors, x, y))

    def neg(self, x):
        return tuple(r.neg(a) for r, a in zip(self.factors, x))

    def canonical(self, x):
        x = tuple(x)
        if len(x) != len(self.factors):
            raise InputError(f"expected {len(self.factors)} components, got {len(x)}")
        return tuple(r.canonical(a) for r, a in zip(self.factors, x))

    def is_canonical(self, x):
        return (isinstance(x, tuple) and len(x) == len(self.factors)
                and all(r.is_canonical(a) for r, a in zip(self.factors, x)))

    def _enumerate(self):
        return itertools.product(*(r.elements for r in self.factors))

    def __str__(self):
        return "product[" + ", ".join(str(r) for r in self.factors) + "]"


@dataclass(frozen=True)
class QuotientRing(Ring):
    """R/J for a finite ring R; elements are the least coset representatives.

    ``generators`` is normalized on construction to the greedy generating set
    of the ideal, so two quotients by the same ideal compare equal.
    """

    parent: Ring
    generators: tuple

    def __post_init__(self):
        if not self.parent.is_finite:
            raise RingConstructionError("quotients are only built over finite rings", "parent")
        gens = tuple(self.parent.check_element(g, "generators") for g in self.generators)
        span = self.parent.codec(1).span([self.parent.index(g) for g in gens])
        object.__setattr__(self, "generators", greedy_generators(self.parent, span))
        object.__setattr__(self, "_ideal_indices", span)

    @cached_property
    def _rep(self):
        par = self.parent
        rep = np.arange(par.size)
        for i in range(par.size):
            if rep[i] == i:
                coset = par.add_table[i, self._ideal_indices]
                rep[coset] = np.minimum(rep[coset], i)
        return rep

    def project(self, x):
        return self.parent.element(self._rep[self.parent.index(x)])

    @property
    def zero(self):
        return self.parent.zero

    @property
    def one(self):
        return self.project(self.parent.one)

    def add(self, x, y):
        return self.project(self.parent.add(x, y))

    def mul(self, x, y):
        return self.project(self.parent.mul(x, y))

    def neg(self, x):
        return self.project(self.parent.neg(x))

    def canonical(self, x):
        return self.project(self.parent.canonical(x))

    def is_canonical(self, x):
        return self.parent.is_canonical(x) and self.project(x) == x

    def _enumerate(self):
        reps = np.unique(self._rep)
        return [self.parent.element(i) for i in reps]

    def __str__(self):
        gens = ", ".join(map(str, self.generators)) or "0"
        return f"{self.parent}/({gens})"


def greedy_generators(ring, indices):
    """Generators of the ideal with the given element indices.

    A principal ideal gets its first generator in enumeration order.  Otherwise
    elements are scanned in order and kept when they enlarge the ideal
    generated so far.
    """
    codec = ring.codec(1)
    indices = np.sort(np.asarray(indices, dtype=np.int64))
    target = len(indices)
    if target == 1:
        return ()
    for i in indices:
        if len(codec.cyclic(i)) == target:
            return (ring.element(i),)
    gens, span = [], np.zeros(1, dtype=np.int64)
    for i in indices:
        if len(span) == target:
            break
        pos = np.searchsorted(span, i)
        if pos < len(span) and span[pos] == i:
            continue
        gens.append(int(i))
        span = codec.sum_of(span, codec.cyclic(i))
    return tuple(ring.element(i) for i in gens)


# --- sequences -----------------------------------------------------------

class SeqElement(NamedTuple):
    """An eventually constant sequence: ``prefix`` followed by ``tail`` forever."""

    prefix: tuple
    tail: object

    def at(self, i):
        return self.prefix[i] if i < len(self.prefix) else self.tail


@dataclass(frozen=True)
class SeqRing(Ring):
    """Eventually constant sequences over a finite base ring."""

    base: Ring

    def __post_init__(self):
        if isinstance(self.base, SeqRing) or not self.base.is_finite:
            raise RingConstructionError("seq base must be a finite ring", "base")

    is_finite = False

    def make(self, prefix, tail):
        b = self.base
        prefix = [b.check_element(x, "prefix") for x in prefix]
        tail = b.check_element(tail, "tail")
        while prefix and prefix[-1] == tail:
            prefix.pop()
        return SeqElement(tuple(prefix), tail)

    @property
    def zero(self):
        return SeqElement((), self.base.zero)

    @property
    def one(self):
        return SeqElement((), self.base.one)

    def _zip(self, op, x, y):
        n = max(len(x.prefix), len(y.prefix))
        prefix = [op(x.at(i), y.at(i)) for i in range(n)]
        tail = op(x.tail, y.tail)
        while prefix and prefix[-1] == tail:
            prefix.pop()
        return SeqElement(tuple(prefix), tail)

    def add(self, x, y):
        return self._zip(self.base.add, x, y)

    def mul(self, x, y):
        return self._zip(self.base.mul, x, y)

    def neg(self, x):
        return self._zip(lambda a, _: self.base.neg(a), x, x)

    def canonical(self, x):
        try:
            prefix, tail = x
        except (TypeError, ValueError):
            raise InputError(f"expected a (prefix, tail) pair, got {x!r}") from None
        b = self.base
        return self.make([b.canonical(a) for a in prefix], b.canonical(tail))

    def is_canonical(self, x):
        return (isinstance(x, SeqElement)
                and all(self.base.is_canonical(a) for a in x.prefix)
                and self.base.is_canonical(x.tail)
                and (not x.prefix or x.prefix[-1] != x.tail))

    def support(self, x):
        """Indices of nonzero coordinates; only meaningful when the tail is zero."""
        return tuple(i for i, a in enumerate(x.prefix) if a != self.base.zero)

    def __str__(self):
        return f"seq({self.base})"


# --- element classification ----------------------------------------------

class ElementClass(NamedTuple):
    is_unit: bool
    is_idempotent: bool
    is_nilpotent: bool


def classify_element(ring, x):
    if isinstance(ring, SeqRing):
        coords = list(x.prefix) + [x.tail]
        flags = [classify_element(ring.base, a) for a in coords]
        return ElementClass(*(all(f[i] for f in flags) for i in range(3)))
    i = ring.index(x)
    return ElementClass(bool(ring.unit_mask[i]),
                        bool(ring.mul_table[i, i] == i),
                        bool(ring.nilpotent_mask[i]))


def is_unit(ring, x):
    return classify_element(ring, x).is_unit


# --- ring maps -----------------------------------------------------------

@dataclass(frozen=True)
class RingMap:
    source: Ring
    target: Ring
    action: Callable
    name: str = "phi"

    def __call__(self, x):
        return self.action(x)

    def check_homomorphism(self):
        """Exhaustively verify 1, + and x are respected on a finite source."""
        src, tgt = self.source, self.target
        if self(src.one) != tgt.one:
            return False
        els = src.elements
        images = [self(x) for x in els]
        if not all(tgt.is_canonical(y) for y in images):
            return False
        for i, x in enumerate(els):
            for j, y in enumerate(els):
                if images[src.index(src.add(x, y))] != tgt.add(images[i], images[j]):
                    return False
                if images[src.index(src.mul(x, y))] != tgt.mul(images[i], images[j]):
                    return False
        return True

    def kernel_indices(self):
        tz = self.target.zero
        return np.array([i for i, x in enumerate(self.source.elements) if self(x) == tz],
                        dtype=np.int64)

    def is_injective(self):
        return len(self.kernel_indices()) == 1

    def compose(self, other):
        """``self`` after ``other``."""
        return RingMap(other.source, self.target, lambda x: self(other(x)),
                       f"{self.name}.{other.name}")


def identity_map(ring):
    return RingMap(ring, ring, lambda x: x, "id")


def quotient_map(ring, generators):
    q = QuotientRing(ring, tuple(generators))
    return RingMap(ring, q, q.project, "quot")


def diagonal_embedding(ring, copies=2):
    prod = ProductRing((ring,) * copies)
    return RingMap(ring, prod, lambda x: (x,) * copies, "diag")


def table_map(source, target, images):
    """Ring map given by the image of every source element, in enumeration order."""
    images = tuple(images)
    return RingMap(source, target, lambda x: images[source.index(x)], "table")


def enumerate_ring_maps(source, target):
    """All ring homomorphisms between two finite rings.

    A map is fixed by the images of a set of ring generators of the source;
    every assignment of images is propagated through +, x and checked for
    consistency.
    """
    gens = _ring_generators(source)
    n = source.size
    add, mul = source.add_table, source.mul_table
    tadd, tmul = target.add_table, target.mul_table
    maps = []
    for imgs in itertools.product(range(target.size), repeat=len(gens)):
        img = np.full(n, -1, dtype=np.int64)
        img[0], img[source.one_index] = 0, target.one_index
        ok = True
        for g, t in zip(gens, imgs):
            if img[g] not in (-1, t):
                ok = False
                break
            img[g] = t
        while ok:
            known = np.nonzero(img >= 0)[0]
            a, b = np.meshgrid(known, known, indexing="ij")
            grew = False
            for table, ttable in ((add, tadd), (mul, tmul)):
                dst = table[a, b].ravel()
                val = ttable[img[a], img[b]].ravel()
                cur = img[dst]
                if np.any((cur >= 0) & (cur != val)):
                    ok = False
                    break
                fresh = cur < 0
                if fresh.any():
                    img[dst[fresh]] = val[fresh]
                    grew = True
            if not grew:
                break
        if ok and np.all(img >= 0):
            maps.append(table_map(source, target, [target.element(i) for i in img]))
    return [m for m in maps if m.check_homomorphism()]


def _ring_generators(ring):
    gens, reached = [], _subring_closure(ring, [])
    for i in range(ring.size):
        if not reached[i]:
            gens.append(i)
            reached = _subring_closure(ring, gens)
    return gens


def _subring_closure(ring, gens):
    reached = np.zeros(ring.size, dtype=bool)
    reached[[0, ring.one_index] + list(gens)] = True
    while True:
        known = np.nonzero(reached)[0]
        a, b = np.meshgrid(known, known, indexing="ij")
        new = reached.copy()
        new[ring.add_table[a, b].ravel()] = True
        new[ring.mul_table[a, b].ravel()] = True
        if new.sum() == reached.sum():
            return reached
        reached = new


# --- descriptors -----------------------------------------------------------

def construct_ring(descriptor):
    """Build a ring from its JSON descriptor (see ``ring_descriptor``)."""
    if isinstance(descriptor, Ring):
        return descriptor
    if not isinstance(descriptor, dict):
        raise RingConstructionError(f"ring descriptor must be an object, got {descriptor!r}", "ring")
    kind = descriptor.get("kind")
    try:
        if kind == "zmod":
            n = descriptor["n"]
            if not isinstance(n, int) or isinstance(n, bool) or n < 2:
                raise RingConstructionError(f"modulus must be an integer >= 2, got {n!r}", "n")
            return ZMod(n)
        if kind == "poly_quotient":
            f = descriptor["f"]
            if not isinstance(f, list) or not all(isinstance(c, int) for c in f):
                raise RingConstructionError("f must be a list of integers", "f")
            return PolyQuotient(descriptor["p"], tuple(f))
        if kind == "product":
            factors = descriptor["factors"]
            if not isinstance(factors, list):
                raise RingConstructionError("factors must be a list", "factors")
            return ProductRing(tuple(construct_ring(f) for f in factors))
        if kind == "seq":
            return SeqRing(construct_ring(descriptor["base"]))
        if kind == "quotient":
            parent = construct_ring(descriptor["parent"])
            gens = [decode_element(parent, g, "ideal") for g in descriptor["ideal"]]
            return QuotientRing(parent, tuple(gens))
    except KeyError as exc:
        raise RingConstructionError("missing field", exc.args[0]) from None
    raise RingConstructionError(f"unknown ring kind {kind!r}", "kind")


def ring_descriptor(ring):
    if isinstance(ring, ZMod):
        return {"kind": "zmod", "n": ring.n}
    if isinstance(ring, PolyQuotient):
        return {"kind": "poly_quotient", "p": ring.p, "f": list(ring.f)}
    if isinstance(ring, ProductRing):
        return {"kind": "product", "factors": [ring_descriptor(r) for r in ring.factors]}
    if isinstance(ring, SeqRing):
        return {"kind": "seq", "base": ring_descriptor(ring.base)}
    if isinstance(ring, QuotientRing):
        return {"kind": "quotient", "parent": ring_descriptor(ring.parent),
                "ideal": [encode_element(ring.parent, g) for g in ring.generators]}
    raise TypeError(f"no descriptor for {ring!r}")


def encode_element(ring, x):
    if isinstance(ring, ZMod):
        return x
    if isinstance(ring, PolyQuotient):
        return list(x)
    if isinstance(ring, ProductRing):
        return [encode_element(r, a) for r, a in zip(ring.factors, x)]
    if isinstance(ring, SeqRing):
        return {"prefix": [encode_element(ring.base, a) for a in x.prefix],
                "tail": encode_element(ring.base, x.tail)}
    if isinstance(ring, QuotientRing):
        return encode_element(ring.parent, x)
    raise TypeError(f"cannot encode elements of {ring!r}")


def decode_element(ring, obj, field="element"):
    """Decode the JSON form of an element; non-canonical input is rejected."""
    try:
        if isinstance(ring, ZMod):
            x = obj
        elif isinstance(ring, PolyQuotient):
            x = tuple(obj) if isinstance(obj, list) else obj
        elif isinstance(ring, ProductRing):
            if not isinstance(obj, list) or len(obj) != len(ring.factors):
                raise InputError(f"expected a list of {len(ring.factors)} components", field)
            x = tuple(decode_element(r, a, field) for r, a in zip(ring.factors, obj))
        elif isinstance(ring, SeqRing):
            x = SeqElement(tuple(decode_element(ring.base, a, field) for a in obj["prefix"]),
                           decode_element(ring.base, obj["tail"], field))
        elif isinstance(ring, QuotientRing):
            x = decode_element(ring.parent, obj, field)
        else:
            raise TypeError(ring)
    except (KeyError, TypeError):
        raise InputError(f"malformed element {obj!r} for {ring}", field) from None
    return ring.check_element(x, field)
