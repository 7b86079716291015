"""Small finite fields as lookup tables.

Elements of F_q are the integers ``0..q-1``.  For q = p^k an element encodes
the polynomial whose base-p digits are its coefficients, reduced modulo a
fixed irreducible polynomial, so the tables are reproducible.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

SUPPORTED_ORDERS = (2, 3, 4, 5, 7, 8, 9)

# lowest-degree-first coefficients of the monic modulus
IRREDUCIBLE = {
    4: (2, (1, 1, 1)),  # x^2 + x + 1
    8: (2, (1, 1, 0, 1)),  # x^3 + x + 1
    9: (3, (1, 0, 1)),  # x^2 + 1
}


class FiniteField:
    """F_q for q in :data:`SUPPORTED_ORDERS`, with add/mul/neg/inv tables."""

    def __init__(self, q: int):
        if q not in SUPPORTED_ORDERS:
            raise ValueError(f"unsupported field order {q}; choose from {SUPPORTED_ORDERS}")
        self.q = q
        if q in IRREDUCIBLE:
            p, modulus = IRREDUCIBLE[q]
            self.p, self.k = p, len(modulus) - 1
            add, mul = _extension_tables(p, modulus)
        else:
            self.p, self.k = q, 1
            r = np.arange(q)
            add = (r[:, None] + r[None, :]) % q
            mul = (r[:, None] * r[None, :]) % q
        self.add = add.astype(np.int64)
        self.mul = mul.astype(np.int64)
        self.neg = np.array([int(np.flatnonzero(self.add[a] == 0)[0]) for a in range(q)], dtype=np.int64)
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.flatnonzero(self.mul[a] == 1)[0])
        self.inv = inv
        self.sub = self.add[:, self.neg]  # sub[a, b] = a - b
        for arr in (self.add, self.mul, self.neg, self.inv, self.sub):
            arr.setflags(write=False)

    def __repr__(self):
        return f"FiniteField({self.q})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and other.q == self.q

    def __hash__(self):
        return hash(("FiniteField", self.q))

    @property
    def elements(self) -> range:
        return range(self.q)

    @property
    def tables(self):
        return self.add, self.mul, self.neg, self.inv

    def generator(self) -> int:
        """A generator of the (cyclic) multiplicative group."""
        for g in range(1, self.q):
            seen, x = set(), 1
            for _ in range(self.q - 1):
                x = int(self.mul[x, g])
                seen.add(x)
            if len(seen) == self.q - 1:
                return g
        raise AssertionError("multiplicative group not cyclic")

    def element_str(self, a: int) -> str:
        return str(int(a))


def _extension_tables(p, modulus):
    k = len(modulus) - 1
    q = p ** k

    def digits(a):
        return [(a // p ** i) % p for i in range(k)]

    def encode(ds):
        return sum(int(d) * p ** i for i, d in enumerate(ds))

    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        da = digits(a)
        for b in range(q):
            db = digits(b)
            add[a, b] = encode([(x + y) % p for x, y in zip(da, db)])
            prod = [0] * (2 * k - 1)
            for i, x in enumerate(da):
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
            for t in range(2 * k - 2, k - 1, -1):
                c = prod[t]
                if c:
                    for i in range(k + 1):
                        prod[t - k + i] = (prod[t - k + i] - c * modulus[i]) % p
            mul[a, b] = encode(prod[:k])
    return add, mul


@lru_cache(maxsize=None)
def field(q: int) -> FiniteField:
    return FiniteField(q)
