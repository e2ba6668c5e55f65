"""Exhaustive instance sweeps checking each structural result on the ring family.

Every suite walks its instances in a fixed order and stops at the first
failing instance, which is returned serialized.  Work is split per ring; with
FLATCHECK_THREADS > 1 the rings are processed in worker processes and the
per-ring results are folded back in ring order, so output does not depend on
the worker count.
"""

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .decide import (extension_descent_check, flat_quotient_criterion, is_projective,
                     map_descent_check, pointwise_descent_check, pointwise_localization,
                     radical_descent_check)
from .documents import ideal_to_json, module_to_json
from .errors import DependentImagesError, InputError, NoIdempotentGenerator
from .exterior import invariant_factor, support_formula_check
from .ideals import (Ideal, all_ideals, crt_combine, idempotent_generator, is_idempotent_ideal,
                     is_local, jacobson_radical, local_decomposition)
from .modules import (PresentedModule, annihilator, enumerate_modules, flatness_obstruction,
                      independence_lift_check, is_locally_free, quotient_annihilator_check)
from .rings import (PolyQuotient, ProductRing, RingMap, SeqRing, ZMod, construct_ring,
                    diagonal_embedding, encode_element, enumerate_ring_maps, quotient_map,
                    ring_descriptor)
from .spectrum import localized_annihilator_check, prime_sites

SUITES = ("th4", "th6", "th3", "coro5", "lemma2", "lemma3", "lemma7", "remark040", "prop030",
          "pointwise", "theorem1", "ringlaws")

FAMILY = (
    ZMod(4), ZMod(6), ZMod(8), ZMod(9), ZMod(12),
    PolyQuotient(2, (0, 0, 1)),
    PolyQuotient(2, (1, 1, 1)),
    ProductRing((ZMod(2), ZMod(4))),
)

# targets for the universal property of pointwise localization, all <= 9 elements
SMALL_TARGETS = (
    ZMod(2), ZMod(3), ZMod(4), ZMod(5), ZMod(6), ZMod(7), ZMod(8), ZMod(9),
    PolyQuotient(2, (0, 0, 1)), PolyQuotient(2, (1, 1, 1)), PolyQuotient(3, (0, 0, 1)),
    ProductRing((ZMod(2), ZMod(2))), ProductRing((ZMod(2), ZMod(4))),
    ProductRing((ZMod(3), ZMod(3))),
)


@dataclass
class SuiteConfig:
    suite: str
    rings: tuple = FAMILY
    gen_bound: int = 2
    rel_bound: int = 2
    seed: int = 12345
    samples: int = 200

    @classmethod
    def from_json(cls, doc, suite=None):
        if not isinstance(doc, dict):
            raise InputError("config must be an object", "config")
        name = suite or doc.get("suite")
        if name not in SUITES:
            raise InputError(f"unknown suite {name!r}", "suite")
        rings = tuple(construct_ring(r) for r in doc["rings"]) if "rings" in doc else FAMILY
        cfg = cls(name, rings)
        for key in ("gen_bound", "rel_bound", "seed", "samples"):
            if key in doc:
                val = doc[key]
                if not isinstance(val, int) or isinstance(val, bool) or val < 0:
                    raise InputError(f"expected a natural number, got {val!r}", key)
                setattr(cfg, key, val)
        return cfg


@dataclass
class SuiteResult:
    suite: str
    passed: bool
    instances: int
    failure: dict = None
    skipped: int = 0
    details: dict = field(default_factory=dict)

    def to_json(self):
        return {"schema": "flatcheck/1", "suite": self.suite,
                "status": "PASS" if self.passed else "FAIL",
                "instances": self.instances, "skipped": self.skipped,
                "failure": self.failure, "details": self.details}


class _Tally:
    def __init__(self):
        self.instances = 0
        self.skipped = 0
        self.failure = None
        self.details = {}

    def check(self, ok, describe):
        self.instances += 1
        if not ok and self.failure is None:
            self.failure = describe()
        return ok

    def bump(self, key, n=1):
        self.details[key] = self.details.get(key, 0) + n


def _mod(m, **extra):
    return dict(module=module_to_json(m), **extra)


def distinct_flat_modules(ring, gen_bound, rel_bound):
    """Flat modules of the sweep, one per distinct module, in first-seen order."""
    seen, out = set(), []
    for m in enumerate_modules(ring, gen_bound, rel_bound):
        if m not in seen:
            seen.add(m)
            if flatness_obstruction(m) is None:
                out.append(m)
    return out


# --- per-ring suite bodies ------------------------------------------------------------

def _th4(ring, cfg, t, corrupt=False):
    oracle = (lambda m: None) if corrupt else flatness_obstruction
    for m in enumerate_modules(ring, cfg.gen_bound, cfg.rel_bound):
        flat = oracle(m) is None
        verdict = is_projective(m, oracle)
        ev = verdict.evidence
        free = is_locally_free(m)
        ok = flat == verdict.projective == free
        if flat:
            ok = ok and ev["invariant_factors_idempotent"] and ev["rank_map_locally_constant"]
        t.bump("flat" if flat else "non_flat")
        if not t.check(ok, lambda: _mod(m, flat=flat, projective=verdict.projective,
                                         locally_free=free, reason=verdict.reason)):
            return


def _lemma2(ring, cfg, t):
    for m in enumerate_modules(ring, cfg.gen_bound, cfg.rel_bound):
        for site in prime_sites(ring):
            if not t.check(localized_annihilator_check(m, site),
                           lambda: _mod(m, factor_index=site.factor_index)):
                return


def _idempotent_with_generator(ring, ideal):
    if not is_idempotent_ideal(ring, ideal):
        return False
    try:
        e = idempotent_generator(ring, ideal)
    except NoIdempotentGenerator:
        return False
    return ring.mul(e, e) == e and Ideal(ring, [e]) == ideal


def _lemma3(ring, cfg, t):
    for m in distinct_flat_modules(ring, cfg.gen_bound, cfg.rel_bound):
        if not t.check(_idempotent_with_generator(ring, annihilator(m)), lambda: _mod(m, part="Ann")):
            return
        for n in range(m.k + 1):
            if not t.check(_idempotent_with_generator(ring, invariant_factor(m, n)),
                           lambda: _mod(m, part=f"I_{n}")):
                return


def _lemma7(ring, cfg, t):
    ideals = all_ideals(ring)
    for m in distinct_flat_modules(ring, cfg.gen_bound, cfg.rel_bound):
        for j in ideals:
            if not t.check(quotient_annihilator_check(m, j), lambda: _mod(m, J=ideal_to_json(j))):
                return


def _remark040(ring, cfg, t):
    for m in distinct_flat_modules(ring, cfg.gen_bound, cfg.rel_bound):
        for site in prime_sites(ring):
            if not t.check(localized_annihilator_check(m, site),
                           lambda: _mod(m, check="lemma2", factor_index=site.factor_index)):
                return
        for n in range(m.k + 2):
            if not t.check(support_formula_check(m, n), lambda: _mod(m, check="support", n=n)):
                return


def _prop030(ring, cfg, t):
    for ideal in all_ideals(ring):
        crit = flat_quotient_criterion(ring, ideal).flat
        oracle = flatness_obstruction(PresentedModule.cyclic(ring, *ideal.generators)) is None
        t.bump("flat_quotients" if oracle else "non_flat_quotients")
        if not t.check(crit == oracle, lambda: {"ideal": ideal_to_json(ideal), "criterion": crit,
                                                "oracle": oracle}):
            return


def _theorem1(ring, cfg, t):
    if not is_local(ring):
        return
    for rank in range(1, cfg.gen_bound + 1):
        m = PresentedModule.free(ring, rank)
        elems = m.elements()
        for size in range(1, min(2, rank) + 1):
            for subset in itertools.combinations(elems, size):
                try:
                    ok = independence_lift_check(m, subset)
                except DependentImagesError:
                    t.skipped += 1
                    continue
                if not t.check(ok, lambda: _mod(m, subset=[[encode_element(ring, x) for x in v]
                                                           for v in subset])):
                    return


def _residue_embedding(ring):
    """x -> (x, image in the first residue field), injective through the first slot."""
    site = prime_sites(ring)[0]
    field_ring = site.residue_field
    target = ProductRing((ring, field_ring))
    return RingMap(ring, target, lambda x: (x, field_ring.project(x)), "res")


def _th6(ring, cfg, t):
    embeds = [diagonal_embedding(ring), _residue_embedding(ring)]
    for m in distinct_flat_modules(ring, cfg.gen_bound, cfg.rel_bound):
        for e in embeds:
            if not t.check(extension_descent_check(ring, e.target, e, m),
                           lambda: _mod(m, extension=ring_descriptor(e.target))):
                return


def _radical_ideals(ring):
    jac = jacobson_radical(ring)
    return [j for j in all_ideals(ring) if j <= jac]


def _th3(ring, cfg, t):
    ideals = _radical_ideals(ring)
    for m in distinct_flat_modules(ring, cfg.gen_bound, cfg.rel_bound):
        for j in ideals:
            if not t.check(radical_descent_check(ring, j, m), lambda: _mod(m, J=ideal_to_json(j))):
                return


def _coro5(ring, cfg, t):
    maps = []
    for j in _radical_ideals(ring):
        q = quotient_map(ring, j.generators)
        maps.append(diagonal_embedding(q.target).compose(q))
    for m in distinct_flat_modules(ring, cfg.gen_bound, cfg.rel_bound):
        for phi in maps:
            if not t.check(map_descent_check(phi, m),
                           lambda: _mod(m, target=ring_descriptor(phi.target))):
                return


def universal_property_holds(loc, targets=SMALL_TARGETS):
    """Every phi: R -> T admitting the c_s factors through eta exactly once; others never."""
    src, res, eta = loc.source, loc.result, loc.eta
    for target in targets:
        out_maps = enumerate_ring_maps(res, target)
        for phi in enumerate_ring_maps(src, target):
            admissible = all(
                any(phi(s) == target.mul(target.mul(phi(s), phi(s)), c)
                    and c == target.mul(phi(s), target.mul(c, c)) for c in target.elements)
                for s in loc.subset)
            factorizations = sum(all(psi(eta(x)) == phi(x) for x in src.elements)
                                 for psi in out_maps)
            if factorizations != (1 if admissible else 0):
                return False
    return True


def _pointwise(ring, cfg, t):
    for s in ring.elements:
        loc = pointwise_localization(ring, (s,))
        ok = loc.verify() and universal_property_holds(loc)
        t.bump("universal_property")
        if not t.check(ok, lambda: {"ring": ring_descriptor(ring), "S": [encode_element(ring, s)]}):
            return
    subsets = [(s,) for s in ring.elements] + list(itertools.combinations(ring.elements, 2))
    for pair in itertools.combinations(ring.elements, 2):
        # order independence of the construction
        a, b = pointwise_localization(ring, pair), pointwise_localization(ring, pair[::-1])
        if not t.check(a.kernel == b.kernel, lambda: {"S": [encode_element(ring, x) for x in pair]}):
            return
    flat = distinct_flat_modules(ring, cfg.gen_bound, cfg.rel_bound)
    for subset in subsets:
        for m in flat:
            t.bump("descent")
            if not t.check(pointwise_descent_check(ring, subset, m),
                           lambda: _mod(m, S=[encode_element(ring, x) for x in subset])):
                return


def _ring_axioms(ring):
    els = ring.elements
    z, o = ring.zero, ring.one
    for x in els:
        if ring.add(x, z) != x or ring.mul(x, o) != x or ring.add(x, ring.neg(x)) != z:
            return False
    for x, y in itertools.product(els, repeat=2):
        if ring.add(x, y) != ring.add(y, x) or ring.mul(x, y) != ring.mul(y, x):
            return False
    add, mul = ring.add_table, ring.mul_table
    n = ring.size
    a, b, c = (arr.ravel() for arr in np.meshgrid(range(n), range(n), range(n), indexing="ij"))
    return bool((add[add[a, b], c] == add[a, add[b, c]]).all()
                and (mul[mul[a, b], c] == mul[a, mul[b, c]]).all()
                and (mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]).all())


def _ringlaws(ring, cfg, t):
    desc = {"ring": ring_descriptor(ring)}
    if isinstance(ring, SeqRing):
        return _seq_laws(ring, cfg, t)
    if not t.check(_ring_axioms(ring), lambda: dict(desc, law="axioms")):
        return
    factors = local_decomposition(ring)
    for x in ring.elements:
        parts = [f.projection(x) for f in factors]
        unit = bool(ring.unit_mask[ring.index(x)])
        local_units = all(f.ring.unit_mask[f.ring.index(p)] for f, p in zip(factors, parts))
        if not t.check(crt_combine(ring, parts) == x and unit == local_units,
                       lambda: dict(desc, law="crt", x=encode_element(ring, x))):
            return
    ideals = all_ideals(ring)
    for i, j in itertools.product(ideals, repeat=2):
        if not t.check(i + j == j + i and i * j == j * i, lambda: dict(desc, law="commutativity")):
            return
    for i, j, k in itertools.product(ideals, repeat=3):
        ok = ((i + j) + k == i + (j + k) and (i * j) * k == i * (j * k)
              and i * (j + k) == i * j + i * k)
        if not t.check(ok, lambda: dict(desc, law="associativity/distributivity",
                                        ideals=[ideal_to_json(i), ideal_to_json(j), ideal_to_json(k)])):
            return
    for i in ideals:
        if is_idempotent_ideal(ring, i):
            if not t.check(_idempotent_with_generator(ring, i), lambda: dict(desc, law="idempotent generator",
                                                                             ideal=ideal_to_json(i))):
                return


def random_seq_element(ring, rng, max_prefix=8):
    b = ring.base
    return ring.make([rng.choice(b.elements) for _ in range(rng.randint(0, max_prefix))],
                     rng.choice(b.elements))


def _seq_laws(ring, cfg, t):
    rng = random.Random(cfg.seed)
    for _ in range(max(cfg.samples, 1000)):
        x, y, z = (random_seq_element(ring, rng) for _ in range(3))
        ok = (ring.mul(ring.mul(x, y), z) == ring.mul(x, ring.mul(y, z))
              and ring.add(ring.add(x, y), z) == ring.add(x, ring.add(y, z))
              and ring.mul(x, ring.add(y, z)) == ring.add(ring.mul(x, y), ring.mul(x, z))
              and ring.canonical(ring.canonical(x)) == ring.canonical(x))
        if not t.check(ok, lambda: {"ring": ring_descriptor(ring), "law": "seq axioms",
                                    "x": encode_element(ring, x)}):
            return


_BODIES = {
    "th4": _th4, "th6": _th6, "th3": _th3, "coro5": _coro5, "lemma2": _lemma2, "lemma3": _lemma3,
    "lemma7": _lemma7, "remark040": _remark040, "prop030": _prop030, "pointwise": _pointwise,
    "theorem1": _theorem1, "ringlaws": _ringlaws,
}


def _run_ring(args):
    name, desc, cfg_fields, corrupt = args
    ring = construct_ring(desc)
    cfg = SuiteConfig(name, (ring,), **cfg_fields)
    t = _Tally()
    if name == "th4":
        _th4(ring, cfg, t, corrupt)
    else:
        if not ring.is_finite and name != "ringlaws":
            raise InputError(f"suite {name} needs finite rings", "rings")
        _BODIES[name](ring, cfg, t)
    if t.failure is not None:
        t.failure = dict(ring=desc, **t.failure) if "ring" not in t.failure else t.failure
    return t.instances, t.skipped, t.failure, t.details


def worker_count():
    env = os.environ.get("FLATCHECK_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise InputError(f"not an integer: {env!r}", "FLATCHECK_THREADS") from None
    return os.cpu_count() or 1


def run_suite(cfg, corrupt_oracle=False):
    if cfg.suite not in SUITES:
        raise InputError(f"unknown suite {cfg.suite!r}", "suite")
    fields = {"gen_bound": cfg.gen_bound, "rel_bound": cfg.rel_bound,
              "seed": cfg.seed, "samples": cfg.samples}
    tasks = [(cfg.suite, ring_descriptor(r), fields, corrupt_oracle) for r in cfg.rings]
    workers = min(worker_count(), len(tasks))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_ring, tasks))
    else:
        results = [_run_ring(task) for task in tasks]
    total, skipped, failure, details = 0, 0, None, {}
    for desc, (n, s, fail, det) in zip((r[1] for r in tasks), results):
        total += n
        skipped += s
        if failure is None and fail is not None:
            failure = fail
        for key, val in det.items():
            details[key] = details.get(key, 0) + val
    return SuiteResult(cfg.suite, failure is None, total, failure, skipped, details)
