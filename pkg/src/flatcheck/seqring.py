"""A finitely generated flat module that is not projective.

The ring is R = eventually constant sequences over a finite nonzero base A,
and I the ideal of sequences with zero tail (finitely supported ones).  The
cyclic module R/I is flat: for f in I the indicator g of the complement of
supp(f) kills f, and h = 1 - g lies in I, so Ann(f) + I = R.  It is not
projective, because an idempotent e with Re = I cannot exist: if the tail of
e is nonzero then e is not in I, and otherwise the single-coordinate sequence
just past the prefix of e lies in I but not in Re.

R/I is never turned into a PresentedModule: it is finitely generated but
not finitely presented, since I is not finitely generated.
"""

import itertools
import random
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import InputError
from .rings import SeqElement, SeqRing, classify_element, encode_element, ring_descriptor

ADAPTATION = "eventually-constant subring"


@dataclass(frozen=True)
class FiniteSupportIdeal:
    """The ideal {x : tail(x) = 0} of a seq ring; not finitely generated."""

    ring: SeqRing
    finite_support = True

    def __contains__(self, x):
        return x.tail == self.ring.base.zero


def finite_support_ideal(ring):
    return FiniteSupportIdeal(ring)


def seq_element(ring, prefix, tail):
    return ring.make(prefix, tail)


def delta(ring, k):
    """The sequence with a single 1 at coordinate k."""
    b = ring.base
    return ring.make([b.zero] * k + [b.one], b.zero)


def _coordinates(*xs):
    """Every distinct coordinate pattern of the given sequences: prefix indices, then the tail."""
    n = max(len(x.prefix) for x in xs)
    for i in range(n):
        yield i, tuple(x.at(i) for x in xs)
    yield None, tuple(x.tail for x in xs)


def in_principal_ideal(ring, x, e):
    """Whether x = r e for some r, decided coordinate by coordinate.

    Beyond both prefixes the coordinates are constant, so one tail check
    covers all of them; a solution r can be taken eventually constant.
    """
    b = ring.base
    for _, (xi, ei) in _coordinates(x, e):
        if not any(b.mul(r, ei) == xi for r in b.elements):
            return False
    return True


def in_generated_ideal(ring, x, gens):
    """Whether x lies in the ideal generated by finitely many sequences."""
    b = ring.base
    if not gens:
        return x == ring.zero
    for _, (xi, *gi) in _coordinates(x, *gens):
        reachable = {b.sum(b.mul(r, g) for r, g in zip(rs, gi))
                     for rs in itertools.product(b.elements, repeat=len(gi))}
        if xi not in reachable:
            return False
    return True


# --- flatness of R/I -------------------------------------------------------------

class FlatTriple(NamedTuple):
    f: SeqElement
    g: SeqElement
    h: SeqElement


def verify_triple(ring, t):
    ideal = FiniteSupportIdeal(ring)
    return (ring.mul(t.g, t.f) == ring.zero and t.h in ideal
            and ring.add(t.g, t.h) == ring.one)


def example1_flat_witness(ring, f):
    """(g, h) with g f = 0, h in I and g + h = 1, for f in I."""
    b = ring.base
    if f not in FiniteSupportIdeal(ring):
        raise InputError(f"{f} has nonzero tail, so it is not in I", "f")
    support = set(ring.support(f))
    g = ring.make([b.zero if i in support else b.one for i in range(len(f.prefix))], b.one)
    h = ring.sub(ring.one, g)
    triple = FlatTriple(f, g, h)
    if not verify_triple(ring, triple):
        raise AssertionError(f"flat witness for {f} failed verification")
    return g, h


def random_ideal_element(ring, rng, max_prefix=16):
    b = ring.base
    n = rng.randint(0, max_prefix)
    return ring.make([rng.choice(b.elements) for _ in range(n)], b.zero)


@dataclass(frozen=True)
class FlatnessReport:
    base: object
    seed: int
    triples: tuple
    failures: int

    @property
    def verified(self):
        return len(self.triples) - self.failures


def quotient_flatness_suite(base, samples, seed, elements=None):
    """Flat witnesses for ``samples`` seeded random f in I (or the given ``elements``)."""
    ring = SeqRing(base)
    if elements is None:
        rng = random.Random(seed)
        elements = [random_ideal_element(ring, rng) for _ in range(samples)]
    triples, failures = [], 0
    for f in elements:
        g, h = example1_flat_witness(ring, f)
        t = FlatTriple(f, g, h)
        failures += not verify_triple(ring, t)
        triples.append(t)
    return FlatnessReport(base, seed, tuple(triples), failures)


# --- non-projectivity of R/I -------------------------------------------------------

class Refutation(NamedTuple):
    """Why ``candidate`` does not generate I.

    NotInIdeal: the candidate itself has a nonzero tail.  TooSmall: ``witness``
    lies in I but not in R * candidate; ``index`` is a coordinate where the
    candidate is zero and the witness is not.
    """

    candidate: SeqElement
    reason: str
    witness: SeqElement = None
    index: int = None

    def verify(self, ring):
        ideal = FiniteSupportIdeal(ring)
        if not classify_element(ring, self.candidate).is_idempotent:
            return False
        if self.reason == "NotInIdeal":
            return self.candidate not in ideal
        if self.reason == "TooSmall":
            return (self.witness in ideal
                    and not in_principal_ideal(ring, self.witness, self.candidate)
                    and self.candidate.at(self.index) == ring.base.zero
                    and self.witness.at(self.index) != ring.base.zero)
        return False


def refute_idempotent_generator(ring, e):
    if not classify_element(ring, e).is_idempotent:
        raise InputError(f"{e} is not idempotent", "e")
    if e not in FiniteSupportIdeal(ring):
        ref = Refutation(e, "NotInIdeal")
    else:
        k = len(e.prefix)
        ref = Refutation(e, "TooSmall", delta(ring, k), k)
    if not ref.verify(ring):
        raise AssertionError(f"refutation of {e} failed verification")
    return ref


def refute_finite_generation(ring, gens):
    """A member of I outside the ideal generated by ``gens`` (all taken from I)."""
    ideal = FiniteSupportIdeal(ring)
    if not all(g in ideal for g in gens):
        raise InputError("generators must lie in I", "gens")
    k = max((len(g.prefix) for g in gens), default=0)
    witness = delta(ring, k)
    assert witness in ideal and not in_generated_ideal(ring, witness, gens)
    return witness


def structured_idempotents(ring, max_prefix=4):
    """Every idempotent whose prefix has length <= max_prefix (deduplicated)."""
    b = ring.base
    idem = [b.element(i) for i in b.idempotent_indices]
    seen, out = set(), []
    for n in range(max_prefix + 1):
        for prefix in itertools.product(idem, repeat=n):
            for tail in idem:
                e = ring.make(prefix, tail)
                if e not in seen:
                    seen.add(e)
                    out.append(e)
    return out


def random_idempotents(ring, rng, count, max_prefix=16):
    b = ring.base
    idem = [b.element(i) for i in b.idempotent_indices]
    return [ring.make([rng.choice(idem) for _ in range(rng.randint(0, max_prefix))], rng.choice(idem))
            for _ in range(count)]


STRUCTURAL_ARGUMENT = {
    "tail_nonzero": "e has a nonzero tail, so e is not in I while e lies in Re; hence Re != I",
    "tail_zero": ("e vanishes from index k = len(prefix) on; the sequence with a single 1 at k "
                  "lies in I, but every r e is 0 at k; hence Re != I"),
}


@dataclass(frozen=True)
class Example1Certificate:
    base: object
    seed: int
    flatness: FlatnessReport
    refutations: tuple
    structural_argument: dict = field(default_factory=lambda: dict(STRUCTURAL_ARGUMENT))
    adaptation: str = ADAPTATION

    @property
    def ring(self):
        return SeqRing(self.base)

    def check(self):
        ring = self.ring
        return (self.flatness.failures == 0
                and all(verify_triple(ring, t) for t in self.flatness.triples)
                and all(r.verify(ring) for r in self.refutations))

    @property
    def valid(self):
        return self.check()

    @property
    def status(self):
        return "VALID" if self.valid else "INVALID"

    def to_json(self):
        ring = self.ring
        enc = lambda x: encode_element(ring, x)  # noqa: E731
        return {
            "schema": "flatcheck/1",
            "base": ring_descriptor(self.base),
            "adaptation": self.adaptation,
            "seed": self.seed,
            "flat_samples": [{"f": enc(t.f), "g": enc(t.g), "h": enc(t.h)}
                             for t in self.flatness.triples],
            "refutations": [{"e": enc(r.candidate), "reason": r.reason,
                             **({"witness": enc(r.witness), "index": r.index}
                                if r.reason == "TooSmall" else {})}
                            for r in self.refutations],
            "structural_argument": self.structural_argument,
            "status": self.status,
        }


def example1_certificate(base, samples=200, seed=7):
    if not base.is_finite:
        raise InputError(f"base {base} must be a finite ring", "base")
    if base.is_zero_ring:
        raise InputError("base ring must be nonzero", "base")
    ring = SeqRing(base)
    flatness = quotient_flatness_suite(base, samples, seed)
    rng = random.Random(seed + 1)
    candidates = structured_idempotents(ring) + random_idempotents(ring, rng, samples)
    refutations = tuple(refute_idempotent_generator(ring, e) for e in candidates)
    return Example1Certificate(base, seed, flatness, refutations)
