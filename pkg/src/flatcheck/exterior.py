"""Exterior powers of presented modules, invariant factors and Fitting ideals."""

import itertools
from math import comb
from typing import NamedTuple

from .ideals import Ideal, unit_ideal, zero_ideal
from .modules import PresentedModule, annihilator
from .spectrum import rank_map, support


class ExteriorPresentation(NamedTuple):
    source: PresentedModule
    degree: int
    subsets: tuple
    result: PresentedModule


def exterior_presentation(m, n):
    """Presentation of the n-th exterior power on the n-subsets of generators.

    Every relation a of M and every (n-1)-subset T give the relation
    sum over i not in T of (-1)^#{t in T : t < i} a_i e_(T + {i}).
    """
    r, k = m.ring, m.k
    subsets = tuple(itertools.combinations(range(k), n)) if n <= k else ()
    position = {s: i for i, s in enumerate(subsets)}
    rels = []
    if 1 <= n <= k:
        for a in m.relations:
            for t in itertools.combinations(range(k), n - 1):
                v = [r.zero] * len(subsets)
                for i in range(k):
                    if i in t:
                        continue
                    less = sum(1 for j in t if j < i)
                    coeff = a[i] if less % 2 == 0 else r.neg(a[i])
                    v[position[tuple(sorted(t + (i,)))]] = coeff
                rels.append(tuple(v))
    assert len(subsets) == comb(k, n)
    return ExteriorPresentation(m, n, subsets, PresentedModule(r, len(subsets), rels))


def exterior_power(m, n):
    if n < 0:
        raise ValueError("exterior degree must be >= 0")
    return exterior_presentation(m, n).result


def invariant_factor(m, n):
    """Annihilator of the n-th exterior power."""
    return annihilator(exterior_power(m, n))


def _det(ring, rows):
    size = len(rows)
    total = ring.zero
    for perm in itertools.permutations(range(size)):
        inversions = sum(1 for i in range(size) for j in range(i + 1, size) if perm[i] > perm[j])
        term = ring.one
        for i, p in enumerate(perm):
            term = ring.mul(term, rows[i][p])
        total = ring.add(total, term if inversions % 2 == 0 else ring.neg(term))
    return total


def fitting_ideal(m, n):
    """Ideal of the (k - n)-minors of the k x m presentation matrix."""
    r, k = m.ring, m.k
    size = k - n
    if size <= 0:
        return unit_ideal(r)
    ncols = len(m.relations)
    if size > min(k, ncols):
        return zero_ideal(r)
    minors = []
    for rows in itertools.combinations(range(k), size):
        for cols in itertools.combinations(range(ncols), size):
            minors.append(_det(r, [[m.relations[c][i] for c in cols] for i in rows]))
    return Ideal(r, minors).minimized()


def support_formula_check(m, n):
    """Supp of the n-th exterior power equals the sites where the rank is >= n."""
    return support(exterior_power(m, n)) == rank_map(m).sites_with_rank_at_least(n)
