"""Slow, library-free reference computations over Z/n used as test oracles.

Everything here works on plain ints and tuples, so it shares no code with
the package under test.
"""

import itertools
import math
from math import gcd


def units(n):
    return {x for x in range(n) if gcd(x, n) == 1}


def idempotents(n):
    return {x for x in range(n) if x * x % n == x}


def nilpotents(n):
    return {x for x in range(n) if any(pow(x, k, n) == 0 for k in range(1, n + 1))}


def ideal(n, gens):
    return frozenset(v[0] for v in span(n, 1, [(g % n,) for g in gens]))


def all_ideals(n):
    return {ideal(n, [d]) for d in range(n)}


def ideal_product(n, i, j):
    return ideal(n, sorted({a * b % n for a in i for b in j}))


def maximal_ideals(n):
    return [ideal(n, [p]) for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]


def jacobson(n):
    out = set(range(n))
    for m in maximal_ideals(n):
        out &= m
    return frozenset(out)


def span(n, k, vectors):
    """Submodule of (Z/n)^k generated by the vectors, by closure."""
    seen = {(0,) * k}
    frontier = [(0,) * k]
    while frontier:
        v = frontier.pop()
        for g in vectors:
            for r in range(1, n):
                w = tuple((a + r * b) % n for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
    return frozenset(seen)


def module_size(n, k, relations):
    return n ** k // len(span(n, k, relations))


def annihilator(n, k, relations):
    sub = span(n, k, relations)
    return frozenset(r for r in range(n)
                     if all(tuple(r if j == i else 0 for j in range(k)) in sub for i in range(k)))


def local_parts(n):
    """(e, q) for each prime power q || n, with e the idempotent that is 1 mod q."""
    out = []
    m = n
    p = 2
    while m > 1:
        if m % p == 0:
            q = 1
            while m % p == 0:
                m //= p
                q *= p
            e = next(x for x in idempotents(n) if x % q == 1 % q and x % (n // q) == 0)
            out.append((e, q))
        p += 1
    return out


def local_rank_if_free(n, k, relations):
    """Per prime power factor Z/q: the rank r if M (x) Z/q is free, else None.

    M (x) Z/q is presented by the relations reduced mod q; it is free of rank
    r exactly when its size is q^r with r the dimension of M/pM.
    """
    out = []
    for _, q in local_parts(n):
        p = next(d for d in range(2, q + 1) if q % d == 0)
        mq = module_size(q, k, [tuple(a % q for a in rel) for rel in relations])
        mp = module_size(p, k, [tuple(a % p for a in rel) for rel in relations])
        r = round(math.log(mp, p))
        out.append(r if mq == q ** r else None)
    return out


def is_projective(n, k, relations):
    return all(r is not None for r in local_rank_if_free(n, k, relations))


def wedge_size(n, k, relations, deg):
    """Size of the deg-th exterior power, built on the deg-subsets by brute force."""
    subsets = list(itertools.combinations(range(k), deg))
    pos = {s: i for i, s in enumerate(subsets)}
    rels = []
    for a in relations:
        for t in itertools.combinations(range(k), deg - 1):
            v = [0] * len(subsets)
            for i in range(k):
                if i not in t:
                    sign = (-1) ** sum(1 for j in t if j < i)
                    v[pos[tuple(sorted(t + (i,)))]] = sign * a[i] % n
            rels.append(tuple(v))
    return module_size(n, len(subsets), rels)
