"""Finitely presented modules over finite rings.

A module is R^k modulo the span of its relation vectors.  Elements of the
module are canonical coset representatives: the least vector of the coset in
lexicographic enumeration order.  Two presentations with the same generator
count and the same relation submodule describe literally the same quotient of
R^k and compare equal.
"""

import functools
import itertools
from typing import NamedTuple

import numpy as np

from ._freemod import contains
from .errors import InputError, NotFlat, NotLocalError, DependentImagesError, PreconditionError
from .ideals import Ideal, all_ideals, is_local, local_decomposition, maximal_ideal
from .rings import Ring


class PresentedModule:
    def __init__(self, ring, generators, relations=()):
        if not isinstance(ring, Ring):
            raise InputError("module ring must be a Ring", "ring")
        if not ring.is_finite:
            raise InputError(f"modules over {ring} are not finitely presented here; see flatcheck.seqring", "ring")
        if not isinstance(generators, int) or generators < 0:
            raise InputError(f"generator count must be a natural number, got {generators!r}", "generators")
        rels = []
        for j, rel in enumerate(relations):
            rel = tuple(rel)
            if len(rel) != generators:
                raise InputError(f"relation {j} has length {len(rel)}, expected {generators}", "relations")
            rels.append(tuple(ring.check_element(x, "relations") for x in rel))
        self.ring = ring
        self.k = generators
        self.relations = tuple(rels)

    @classmethod
    def free(cls, ring, rank):
        return cls(ring, rank, ())

    @classmethod
    def cyclic(cls, ring, *relations):
        """R/(a_1, ..., a_m)."""
        return cls(ring, 1, [(a,) for a in relations])

    @functools.cached_property
    def codec(self):
        return self.ring.codec(self.k)

    @functools.cached_property
    def relation_codes(self):
        r = self.ring
        return [self.codec.pack(r.index(x) for x in rel) for rel in self.relations]

    @functools.cached_property
    def submodule(self):
        """Sorted codes of the relation submodule inside R^k."""
        return self.codec.span(self.relation_codes)

    @functools.cached_property
    def _key(self):
        return (self.ring, self.k, self.submodule.tobytes())

    def __eq__(self, other):
        if not isinstance(other, PresentedModule):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        rels = "; ".join("(" + ", ".join(map(str, r)) + ")" for r in self.relations)
        return f"PresentedModule({self.ring}, k={self.k}, relations=[{rels}])"

    @property
    def cardinality(self):
        return self.codec.size // len(self.submodule)

    def __len__(self):
        return self.cardinality

    @property
    def is_zero(self):
        return len(self.submodule) == self.codec.size

    # --- elements ------------------------------------------------------------

    def code(self, v):
        v = tuple(v)
        if len(v) != self.k:
            raise InputError(f"expected a vector of length {self.k}, got {len(v)}")
        return self.codec.pack(self.ring.index(x) for x in v)

    def vector(self, code):
        return tuple(self.ring.element(i) for i in self.codec.unpack(code))

    def canonical_code(self, code):
        return int(self.codec.add(np.int64(code), self.submodule).min())

    def canonical(self, v):
        return self.vector(self.canonical_code(self.code(v)))

    def is_zero_element(self, v):
        return contains(self.submodule, self.code(v))

    def equal(self, v, w):
        return self.canonical(v) == self.canonical(w)

    def add(self, v, w):
        r = self.ring
        return self.canonical(tuple(r.add(a, b) for a, b in zip(v, w)))

    def scale(self, c, v):
        r = self.ring
        return self.canonical(tuple(r.mul(c, a) for a in v))

    def combination(self, coeffs, vectors):
        """Canonical form of sum_i coeffs[i] * vectors[i]."""
        r = self.ring
        total = [r.zero] * self.k
        for c, v in zip(coeffs, vectors):
            total = [r.add(t, r.mul(c, a)) for t, a in zip(total, v)]
        return self.canonical(total)

    def generator(self, i):
        r = self.ring
        return self.canonical(tuple(r.one if j == i else r.zero for j in range(self.k)))

    def elements(self):
        """All canonical coset representatives, in enumeration order."""
        label = np.full(self.codec.size, -1, dtype=np.int64)
        reps = []
        for c in range(self.codec.size):
            if label[c] < 0:
                label[self.codec.add(np.int64(c), self.submodule)] = c
                reps.append(c)
        return [self.vector(c) for c in reps]

    def basis_code(self, i, scalar_index=None):
        """Code of scalar * e_i in R^k (scalar defaults to 1)."""
        s = self.ring.one_index if scalar_index is None else scalar_index
        return int(s) * self.ring.size ** (self.k - 1 - i)

    def span_with(self, codes):
        """Relation submodule enlarged by the given vectors of R^k."""
        return self.codec.span(codes, start=self.submodule)

    def ideal_times(self, ideal):
        """Codes of J R^k + relations, the preimage of JM in R^k."""
        r = self.ring
        codes = [self.basis_code(i, r.index(g)) for g in ideal.generators for i in range(self.k)]
        return self.span_with(codes)


def construct_module(ring, k, relations):
    return PresentedModule(ring, k, relations)


def _vec(ring, k, entries):
    v = [ring.zero] * k
    for i, x in entries:
        v[i] = x
    return tuple(v)


# --- constructions ---------------------------------------------------------------

def _same_ring(m, n):
    if m.ring != n.ring:
        raise InputError(f"modules live over different rings: {m.ring} vs {n.ring}", "ring")


def direct_sum(m, n):
    _same_ring(m, n)
    z = m.ring.zero
    rels = [rel + (z,) * n.k for rel in m.relations]
    rels += [(z,) * m.k + rel for rel in n.relations]
    return PresentedModule(m.ring, m.k + n.k, rels)


def tensor(m, n):
    """Presentation of M (x) N on generators e_i (x) f_j, index i * k2 + j."""
    _same_ring(m, n)
    r, k1, k2 = m.ring, m.k, n.k
    rels = []
    for a in m.relations:
        for j in range(k2):
            rels.append(_vec(r, k1 * k2, [(i * k2 + j, a[i]) for i in range(k1)]))
    for b in n.relations:
        for i in range(k1):
            rels.append(_vec(r, k1 * k2, [(i * k2 + j, b[j]) for j in range(k2)]))
    return PresentedModule(r, k1 * k2, rels)


def quotient_by_ideal(m, ideal):
    """M/JM: appends j * e_i for every generator j of J and every index i."""
    if ideal.finite_support:
        raise InputError("quotients by finite-support ideals are handled in flatcheck.seqring")
    _same_ring(m, ideal)
    r = m.ring
    rels = list(m.relations)
    for g in ideal.generators:
        for i in range(m.k):
            rels.append(_vec(r, m.k, [(i, g)]))
    return PresentedModule(r, m.k, rels)


def base_change(m, phi):
    """M (x)_R S along a ring map phi: R -> S; relation entries are mapped through phi."""
    if phi.source != m.ring:
        raise InputError(f"map source {phi.source} differs from module ring {m.ring}", "ring")
    return PresentedModule(phi.target, m.k, [tuple(phi(x) for x in rel) for rel in m.relations])


class ModuleOps(NamedTuple):
    direct_sum: PresentedModule
    tensor: PresentedModule
    quotient_by_ideal: object


def build_operations(m, n):
    return ModuleOps(direct_sum(m, n), tensor(m, n), lambda j: quotient_by_ideal(m, j))


def ideal_as_module(ideal):
    """Presentation of an ideal J = (g_1..g_t): generators g_i, relations the syzygies."""
    r = ideal.ring
    gens = ideal.generators
    t = len(gens)
    codec = r.codec(t)
    if t == 0:
        return PresentedModule(r, 0, ())
    digits = codec.digits(np.arange(codec.size))
    g_idx = np.array([r.index(g) for g in gens])
    products = r.mul_table[digits, g_idx]
    total = products[:, 0]
    for i in range(1, t):
        total = r.add_table[total, products[:, i]]
    syzygies = np.nonzero(total == 0)[0]
    rel_codes = _submodule_generators(codec, syzygies)
    return PresentedModule(r, t, [tuple(r.element(d) for d in codec.unpack(c)) for c in rel_codes])


def _submodule_generators(codec, codes):
    target = len(codes)
    gens, span = [], np.zeros(1, dtype=np.int64)
    for c in codes:
        if len(span) == target:
            break
        if contains(span, c):
            continue
        gens.append(int(c))
        span = codec.sum_of(span, codec.cyclic(c))
    return gens


# --- annihilators -------------------------------------------------------------

def annihilator(m):
    """{r : r g = 0 for every generator g}, by exhaustive search."""
    r = m.ring
    ok = np.ones(r.size, dtype=bool)
    sub_mask = np.zeros(m.codec.size, dtype=bool)
    sub_mask[m.submodule] = True
    scalars = np.arange(r.size, dtype=np.int64)
    for i in range(m.k):
        ok &= sub_mask[scalars * r.size ** (m.k - 1 - i)]
    return Ideal.from_indices(r, np.nonzero(ok)[0])


# --- local freeness -------------------------------------------------------------

class FreeCheck(NamedTuple):
    free: bool
    rank: int


def _require_local(ring):
    if not is_local(ring):
        raise NotLocalError(f"{ring} is not local; localize at a prime site first")


def minimal_generators_local(m):
    """dim over the residue field of M/mM (Nakayama)."""
    _require_local(m.ring)
    mm = maximal_ideal(m.ring)
    q = m.codec.size // len(m.ideal_times(mm))
    field_size = m.ring.size // len(mm)
    d, power = 0, 1
    while power < q:
        power *= field_size
        d += 1
    if power != q:
        raise AssertionError(f"|M/mM| = {q} is not a power of {field_size}")
    return d


def is_free_local(m):
    _require_local(m.ring)
    g = minimal_generators_local(m)
    free = m.cardinality == m.ring.size ** g
    return FreeCheck(free, g if free else 0)


def localizations(m):
    """M localized at every prime, as (LocalFactor, module over the factor) pairs."""
    return [(f, base_change(m, f.projection)) for f in local_decomposition(m.ring)]


def is_locally_free(m):
    return all(is_free_local(mf).free for _, mf in localizations(m))


# --- flatness -------------------------------------------------------------------

@functools.lru_cache(maxsize=8192)
def flatness_obstruction(m):
    """First ideal J (in all_ideals order) with J (x) M -> M not injective, or None.

    The map J (x) M -> JM is onto, so it is injective iff |J (x) M| = |JM|.
    """
    for ideal in all_ideals(m.ring):
        jm = len(m.ideal_times(ideal)) // len(m.submodule)
        jt = tensor(ideal_as_module(ideal), m).cardinality
        if jt != jm:
            return ideal
    return None


def flatness_oracle(m):
    return flatness_obstruction(m) is None


class FlatnessWitness(NamedTuple):
    relation: tuple
    vectors: tuple
    factor_matrix: tuple
    new_vectors: tuple

    def verify(self, m):
        r = m.ring
        a, x, rr, y = self.relation, self.vectors, self.factor_matrix, self.new_vectors
        for i, xi in enumerate(x):
            if m.combination(rr[i], y) != m.canonical(xi):
                return False
        for j in range(len(y)):
            if r.sum(r.mul(rr[i][j], a[i]) for i in range(len(a))) != r.zero:
                return False
        return True


def _check_relation(m, a, x):
    if len(a) != len(x):
        raise InputError("relation and vectors have different lengths")
    a = tuple(m.ring.check_element(c, "relation") for c in a)
    if not m.is_zero_element(m.combination(a, x)):
        raise InputError("sum a_i x_i is not zero in M", "relation")
    return a


def flatness_witness(m, a, x):
    """Factor a linear relation sum a_i x_i = 0 through relations in R.

    Returns r (n x m) and y_1..y_m with x_i = sum_j r_ij y_j and
    sum_i r_ij a_i = 0.  Built from a free basis of M in every local factor:
    y runs over e_f * b for each factor idempotent e_f and basis vector b
    there, and r holds the lifted coordinates.
    """
    a = _check_relation(m, a, x)
    x = tuple(m.canonical(v) for v in x)
    obstruction = flatness_obstruction(m)
    if obstruction is not None:
        raise NotFlat(f"{m} is not flat", witness=obstruction)
    r, n = m.ring, len(x)
    cols, ys = [[] for _ in range(n)], []
    for f, mf in localizations(m):
        rank = is_free_local(mf).rank
        if rank == 0:
            continue
        basis = _local_basis(mf, rank)
        coords = _coordinate_table(mf, basis)
        for i, xi in enumerate(x):
            c = coords[mf.canonical_code(mf.code(tuple(f.projection(v) for v in xi)))]
            cols[i].extend(r.mul(f.idempotent, f.lift(cj)) for cj in c)
        for b in basis:
            ys.append(m.canonical(tuple(f.idempotent if j == b else r.zero for j in range(m.k))))
    if not ys:
        # M = 0: a single zero vector keeps m >= 1
        ys = [(r.zero,) * m.k]
        cols = [[r.zero] for _ in range(n)]
    witness = FlatnessWitness(a, x, tuple(tuple(c) for c in cols), tuple(ys))
    if not witness.verify(m):
        raise AssertionError(f"flatness witness failed verification for {m}")
    return witness


def _local_basis(mf, rank):
    """Indices of generators whose images form a basis of the free module mf."""
    mm = maximal_ideal(mf.ring)
    base = mf.ideal_times(mm)
    chosen = []
    size = len(base)
    for i in range(mf.k):
        trial = mf.codec.span([mf.basis_code(j) for j in chosen + [i]], start=base)
        if len(trial) > size:
            chosen.append(i)
            size = len(trial)
        if len(chosen) == rank:
            break
    assert len(chosen) == rank
    return chosen


def _coordinate_table(mf, basis):
    r = mf.ring
    table = {}
    for coeffs in itertools.product(r.elements, repeat=len(basis)):
        v = [r.zero] * mf.k
        for c, b in zip(coeffs, basis):
            v[b] = c
        table[mf.canonical_code(mf.code(v))] = coeffs
    assert len(table) == mf.cardinality
    return table


def search_flatness_witness(m, a, x, max_width=None):
    """Brute-force witness search over y in M^w and r in R^(n x w), w <= max_width.

    Only feasible for tiny modules; used to cross-check ``flatness_witness``.
    Returns None when no witness of the given widths exists.
    """
    a = _check_relation(m, a, x)
    r = m.ring
    n = len(x)
    elems = m.elements()
    max_width = m.k if max_width is None else max_width
    for width in range(1, max_width + 1):
        kernel_cols = [c for c in itertools.product(r.elements, repeat=n)
                       if r.sum(r.mul(ci, ai) for ci, ai in zip(c, a)) == r.zero]
        for y in itertools.product(elems, repeat=width):
            for cols in itertools.product(kernel_cols, repeat=width):
                rows = tuple(tuple(cols[j][i] for j in range(width)) for i in range(n))
                w = FlatnessWitness(a, tuple(x), rows, y)
                if w.verify(m):
                    return w
    return None


# --- theorem checks ---------------------------------------------------------------------

def independence_lift_check(m, vectors):
    """Linear independence over a local ring R of vectors independent mod mM.

    Requires M flat (over a local ring: free).  The independence over R is
    decided by enumerating every coefficient tuple.
    """
    _require_local(m.ring)
    if not is_free_local(m).free:
        raise PreconditionError(f"{m} is not flat over the local ring {m.ring}")
    r = m.ring
    mm = maximal_ideal(r)
    s = len(vectors)
    codes = [m.code(v) for v in vectors]
    base = m.ideal_times(mm)
    reduced = m.codec.span(codes, start=base)
    field_size = r.size // len(mm)
    if len(reduced) // len(base) != field_size ** s:
        raise DependentImagesError("images in M/mM are linearly dependent")
    coeffs = r.codec(s).digits(np.arange(1, r.size ** s))
    for row in coeffs:
        combo = np.int64(0)
        for c, v in zip(row, codes):
            combo = m.codec.add(combo, m.codec.scale(c, np.int64(v)))
        if contains(m.submodule, int(combo)):
            return False
    return True


def quotient_annihilator_check(m, ideal):
    """Ann(M/JM) == Ann(M) + J.  Holds for flat M; computed truthfully in any case."""
    return annihilator(quotient_by_ideal(m, ideal)) == annihilator(m) + ideal


# --- enumeration ----------------------------------------------------------------------

def enumerate_modules(ring, gen_bound, rel_bound, min_generators=0):
    """Every presentation with <= gen_bound generators and <= rel_bound relations.

    Relation matrices are enumerated as ordered tuples of vectors; for k = 0
    only the empty presentation is produced.
    """
    yield from (PresentedModule(ring, 0, ()),) if min_generators == 0 else ()
    for k in range(max(1, min_generators), gen_bound + 1):
        vectors = list(itertools.product(ring.elements, repeat=k))
        for nrel in range(rel_bound + 1):
            for rels in itertools.product(vectors, repeat=nrel):
                yield PresentedModule(ring, k, rels)
