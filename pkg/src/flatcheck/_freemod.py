"""Vectorized arithmetic on free modules R^k over a finite ring.

Ring elements are referred to by their enumeration index; a vector of R^k
is packed into a single integer code, most significant coordinate first, so
that code order is the lexicographic order on index tuples.  Index 0 is the
zero element of every finite ring, hence code 0 is the zero vector.
"""

import numpy as np


class FreeCodec:
    def __init__(self, add_table, mul_table, neg_table, k):
        self.add_table = add_table
        self.mul_table = mul_table
        self.neg_table = neg_table
        self.n = add_table.shape[0]
        self.k = k
        self.size = self.n ** k
        self.powers = self.n ** np.arange(k - 1, -1, -1, dtype=np.int64)

    def digits(self, codes):
        codes = np.asarray(codes, dtype=np.int64)
        return (codes[..., None] // self.powers) % self.n

    def encode(self, digits):
        digits = np.asarray(digits, dtype=np.int64)
        return (digits * self.powers).sum(axis=-1)

    def pack(self, indices):
        """Code of a single vector given as a sequence of element indices."""
        code = 0
        for i in indices:
            code = code * self.n + int(i)
        return code

    def unpack(self, code):
        return tuple(int(d) for d in self.digits(np.int64(code)))

    def add(self, a, b):
        return self.encode(self.add_table[self.digits(a), self.digits(b)])

    def neg(self, a):
        return self.encode(self.neg_table[self.digits(a)])

    def scale(self, r, a):
        """Scalar multiples; ``r`` and ``a`` broadcast against each other."""
        r = np.asarray(r, dtype=np.int64)
        return self.encode(self.mul_table[r[..., None], self.digits(a)])

    def cyclic(self, code):
        return np.unique(self.scale(np.arange(self.n), np.int64(code)))

    def span(self, codes, start=None):
        """Sorted codes of the submodule generated by ``codes`` (and ``start``, a submodule)."""
        sub = np.zeros(1, dtype=np.int64) if start is None else np.asarray(start, dtype=np.int64)
        for c in codes:
            c = int(c)
            pos = np.searchsorted(sub, c)
            if pos < len(sub) and sub[pos] == c:
                continue
            cyc = self.cyclic(c)
            sub = np.unique(self.add(sub[:, None], cyc[None, :]))
        return sub

    def sum_of(self, sub_a, sub_b):
        """Sum of two submodules given as code arrays."""
        return np.unique(self.add(np.asarray(sub_a)[:, None], np.asarray(sub_b)[None, :]))

    def mask(self, sub):
        m = np.zeros(self.size, dtype=bool)
        m[np.asarray(sub, dtype=np.int64)] = True
        return m


def contains(sorted_codes, code):
    pos = np.searchsorted(sorted_codes, code)
    return bool(pos < len(sorted_codes) and sorted_codes[pos] == code)
