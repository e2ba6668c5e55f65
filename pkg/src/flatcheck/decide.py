"""Projectivity decisions and the descent checks built on them."""

import functools
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import NoIdempotentGenerator, NotFlat, PreconditionError
from .ideals import (Ideal, element_annihilator, idempotent_generator, jacobson_radical,
                     local_decomposition, nilradical)
from .exterior import invariant_factor
from .modules import base_change, enumerate_modules, flatness_obstruction, is_locally_free
from .rings import QuotientRing, RingMap, SeqRing, identity_map, quotient_map
from .spectrum import RankMap, is_locally_constant, rank_map


@dataclass
class ProjectivityVerdict:
    projective: bool
    rank_map: RankMap = None
    reason: str = None
    witness: object = None
    evidence: dict = field(default_factory=dict)


@functools.lru_cache(maxsize=8192)
def is_projective(m, oracle=flatness_obstruction):
    """Decide projectivity of a module over a finite ring.

    Three conditions are evaluated and all recorded in ``evidence``: flatness
    (tensor oracle), every invariant factor I_n for n <= k generated by an
    idempotent, and a locally constant rank map.  Direct local freeness is
    recorded alongside for cross-checking.
    """
    obstruction = oracle(m)
    flat = obstruction is None
    generators = {}
    for n in range(m.k + 1):
        try:
            generators[n] = idempotent_generator(m.ring, invariant_factor(m, n))
        except NoIdempotentGenerator:
            generators[n] = None
    idempotent_ok = all(g is not None for g in generators.values())
    rm, constant = None, False
    if flat:
        try:
            rm = rank_map(m)
            constant = is_locally_constant(rm)
        except NotFlat:
            pass
    evidence = {
        "flat": flat,
        "invariant_factor_generators": generators,
        "invariant_factors_idempotent": idempotent_ok,
        "rank_map_locally_constant": constant,
        "locally_free": is_locally_free(m),
    }
    if not flat:
        return ProjectivityVerdict(False, None, "not flat", obstruction, evidence)
    if not idempotent_ok:
        n = min(n for n, g in generators.items() if g is None)
        return ProjectivityVerdict(False, rm, f"invariant factor I_{n} has no idempotent generator",
                                   n, evidence)
    if not constant:
        return ProjectivityVerdict(False, rm, "rank map is not locally constant", None, evidence)
    return ProjectivityVerdict(True, rm, None, None, evidence)


def _require_flat(m):
    if flatness_obstruction(m) is not None:
        raise PreconditionError(f"{m} is not flat")


def extension_descent_check(a, b, embed, m):
    """If M (x)_A B is B-projective then M is A-projective, for injective A -> B."""
    if embed.source != a or embed.target != b or m.ring != a:
        raise PreconditionError("embedding, rings and module do not match")
    if not embed.check_homomorphism() or not embed.is_injective():
        raise PreconditionError("embedding is not an injective ring map")
    _require_flat(m)
    return not is_projective(base_change(m, embed)).projective or is_projective(m).projective


def radical_descent_check(ring, ideal, m):
    """If M/JM is R/J-projective then M is R-projective, for J inside the Jacobson radical."""
    if not ideal <= jacobson_radical(ring):
        raise PreconditionError(f"{ideal} is not contained in the Jacobson radical")
    _require_flat(m)
    reduced = base_change(m, quotient_map(ring, ideal.generators))
    return not is_projective(reduced).projective or is_projective(m).projective


def map_descent_check(phi, m):
    """Descent along a ring map whose kernel lies in the Jacobson radical."""
    kernel = Ideal.from_indices(phi.source, phi.kernel_indices())
    if not kernel <= jacobson_radical(phi.source):
        raise PreconditionError(f"kernel {kernel} is not inside the Jacobson radical")
    if not phi.check_homomorphism():
        raise PreconditionError("phi is not a ring map")
    _require_flat(m)
    return not is_projective(base_change(m, phi)).projective or is_projective(m).projective


# --- pointwise localization -----------------------------------------------------

@dataclass(frozen=True, eq=False)
class PointwiseLocalization:
    source: object
    subset: tuple
    result: object
    eta: RingMap
    inverses: dict
    kernel: Ideal

    def verify(self):
        t, eta = self.result, self.eta
        for s in self.subset:
            es, xs = eta(s), self.inverses[s]
            if es != t.mul(t.mul(es, es), xs) or xs != t.mul(es, t.mul(xs, xs)):
                return False
        return self.kernel <= nilradical(self.source)


def pointwise_localization(ring, subset):
    """The ring adjoining x_s with s x_s^2 = x_s, s^2 x_s = s for each s in S.

    Over a finite ring, s is a unit or nilpotent in every local factor: in the
    first case x_s is forced to be the inverse, in the second s and x_s both
    become zero.  The result is R modulo the ideal generated by e s for the
    factor idempotents e of the factors where s is not a unit.
    """
    subset = tuple(ring.check_element(s, "subset") for s in subset)
    factors = local_decomposition(ring)
    killed = [[] for _ in factors]
    unit_in = {}
    for s in subset:
        unit_in[s] = []
        for i, f in enumerate(factors):
            current = QuotientRing(f.ring, tuple(killed[i]))
            image = current.project(f.projection(s))
            if current.unit_mask[current.index(image)]:
                unit_in[s].append(i)
            else:
                killed[i].append(f.projection(s))
    kernel_gens = [ring.mul(factors[i].idempotent, factors[i].lift(y))
                   for i in range(len(factors)) for y in killed[i]]
    kernel = Ideal(ring, kernel_gens).minimized()
    if kernel.is_zero:
        result, eta = ring, identity_map(ring)
    else:
        eta = quotient_map(ring, kernel.generators)
        result = eta.target
    inverses = {}
    for s in subset:
        inv = ring.sum(ring.mul(factors[i].idempotent,
                                factors[i].lift(factors[i].ring.inverse(factors[i].projection(s))))
                       for i in unit_in[s])
        inverses[s] = eta(inv)
    loc = PointwiseLocalization(ring, subset, result, eta, inverses, kernel)
    if not loc.verify():
        raise AssertionError(f"pointwise localization of {ring} at {subset} failed verification")
    return loc


def pointwise_descent_check(ring, subset, m):
    _require_flat(m)
    loc = pointwise_localization(ring, subset)
    return not is_projective(base_change(m, loc.eta)).projective or is_projective(m).projective


# --- flat quotients and S-rings -------------------------------------------------

class FlatQuotientResult(NamedTuple):
    flat: bool
    witnesses: tuple
    failing: object


def flat_quotient_criterion(ring, ideal):
    """R/I is flat iff Ann(f) + I = R for every f in I.

    For each f the witness is a pair (b, c), b in Ann(f), c in I, b + c = 1.
    """
    witnesses = []
    for f in ideal.elements:
        for b in element_annihilator(ring, f).elements:
            c = ring.sub(ring.one, b)
            if c in ideal:
                witnesses.append((f, b, c))
                break
        else:
            return FlatQuotientResult(False, tuple(witnesses), f)
    return FlatQuotientResult(True, tuple(witnesses), None)


class SRingVerdict(NamedTuple):
    verdict: bool
    instances: int
    counterexample: object = None
    certificate: object = None


def is_s_ring(ring, gen_bound=2, rel_bound=2, samples=200, seed=7):
    """Whether every finitely generated flat module is projective.

    Finite rings are swept exhaustively up to the bounds.  A seq ring is
    answered by the flat, non-projective quotient R/I of its certificate.
    """
    if isinstance(ring, SeqRing):
        from .seqring import example1_certificate
        cert = example1_certificate(ring.base, samples, seed)
        return SRingVerdict(not cert.valid, 0, "R/I", cert)
    count = 0
    for m in enumerate_modules(ring, gen_bound, rel_bound):
        count += 1
        if flatness_obstruction(m) is None and not is_projective(m).projective:
            return SRingVerdict(False, count, m)
    return SRingVerdict(True, count)

