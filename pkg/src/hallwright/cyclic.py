"""Nilpotent representations of the cyclic quiver with vertices 0..l.

Arrows go ``i -> i+1`` (mod l+1).  ``S_i(a)`` is the uniserial module of
length ``a`` with top ``S_i``; its socle is ``S_{i+a-1}``.  A module is a
multiset of segments (Krull-Schmidt), stored sorted.
"""

from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from typing import Iterator

from .exact import gl_order
from .partitions import Partition, partitions, repeat_parts


class CyclicQuiver:
    def __init__(self, l: int):
        if l < 0:
            raise ValueError("l must be nonnegative")
        self.l = l
        self.n = l + 1

    def __repr__(self):
        return f"CyclicQuiver(l={self.l})"

    def __eq__(self, other):
        return isinstance(other, CyclicQuiver) and other.l == self.l

    def __hash__(self):
        return hash(("CyclicQuiver", self.l))

    @property
    def delta(self) -> tuple:
        return (1,) * self.n

    def euler_form(self, a, b) -> int:
        n = self.n
        return sum(a[i] * b[i] for i in range(n)) - sum(a[i] * b[(i + 1) % n] for i in range(n))

    def unit(self, i: int) -> tuple:
        return tuple(1 if j == i % self.n else 0 for j in range(self.n))

    @property
    def arrows(self):
        return [(i, (i + 1) % self.n) for i in range(self.n)]


class NilpotentModule:
    """Iso-class of a nilpotent representation, as sorted segments ``(top, length)``."""

    __slots__ = ("n", "segments", "_hash")

    def __init__(self, n: int, segments=()):
        segs = []
        for i, a in segments:
            if a < 1:
                raise ValueError(f"segment length must be positive: {(i, a)}")
            segs.append((i % n, int(a)))
        self.n = n
        self.segments = tuple(sorted(segs))
        self._hash = hash((n, self.segments))

    def __eq__(self, other):
        return isinstance(other, NilpotentModule) and self.n == other.n and self.segments == other.segments

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.total, self.segments) < (other.total, other.segments)

    def __add__(self, other: "NilpotentModule") -> "NilpotentModule":
        if other.n != self.n:
            raise ValueError("modules over different quivers")
        return NilpotentModule(self.n, self.segments + other.segments)

    def __repr__(self):
        return format_module(self)

    @property
    def total(self) -> int:
        return sum(a for _, a in self.segments)

    @property
    def dim_vector(self) -> tuple:
        return module_dim_vector(self)

    def multiplicities(self) -> Counter:
        return Counter(self.segments)

    def is_zero(self) -> bool:
        return not self.segments


def segment_dim_vector(n: int, i: int, a: int) -> tuple:
    out = [0] * n
    for t in range(a):
        out[(i + t) % n] += 1
    return tuple(out)


@lru_cache(maxsize=None)
def module_dim_vector(M: NilpotentModule) -> tuple:
    out = [0] * M.n
    for i, a in M.segments:
        for v, d in enumerate(segment_dim_vector(M.n, i, a)):
            out[v] += d
    return tuple(out)


def zero_module(n: int) -> NilpotentModule:
    return NilpotentModule(n)


def simple(n: int, i: int) -> NilpotentModule:
    return NilpotentModule(n, [(i, 1)])


def segment(n: int, i: int, a: int) -> NilpotentModule:
    return NilpotentModule(n, [(i, a)])


def semisimple(beta) -> NilpotentModule:
    n = len(beta)
    return NilpotentModule(n, [(i, 1) for i in range(n) for _ in range(beta[i])])


# ---------------------------------------------------------------------------
# Hom / Ext


def hom_segments(n: int, i: int, a: int, j: int, b: int) -> int:
    """dim Hom(S_i(a), S_j(b)).

    The top generator of S_i(a) goes to a basis vector of S_j(b) at position
    s (vertex j+s = i mod n) killed by the a-th power of the arrows, which
    means s >= b - a.
    """
    lo = max(0, b - a)
    r = (i - j) % n
    first = lo + ((r - lo) % n)
    if first > b - 1:
        return 0
    return (b - 1 - first) // n + 1


def dim_hom(M: NilpotentModule, N: NilpotentModule) -> int:
    if M.n != N.n:
        raise ValueError("modules over different quivers")
    n = M.n
    total = 0
    cm, cn = M.multiplicities(), N.multiplicities()
    for (i, a), x in cm.items():
        for (j, b), y in cn.items():
            total += x * y * hom_segments(n, i, a, j, b)
    return total


def dim_end(M: NilpotentModule) -> int:
    return dim_hom(M, M)


def euler_form(M: NilpotentModule, N: NilpotentModule) -> int:
    return CyclicQuiver(M.n - 1).euler_form(M.dim_vector, N.dim_vector)


def dim_ext(M: NilpotentModule, N: NilpotentModule) -> int:
    return dim_hom(M, N) - euler_form(M, N)


def tau(M: NilpotentModule) -> NilpotentModule:
    return NilpotentModule(M.n, [(i + 1, a) for i, a in M.segments])


def dual(M: NilpotentModule) -> NilpotentModule:
    """k-dual, read on the opposite quiver relabelled by ``i -> -i``."""
    return NilpotentModule(M.n, [(-(i + a - 1), a) for i, a in M.segments])


def socle_vector(M: NilpotentModule) -> tuple:
    out = [0] * M.n
    for i, a in M.segments:
        out[(i + a - 1) % M.n] += 1
    return tuple(out)


def top_vector(M: NilpotentModule) -> tuple:
    out = [0] * M.n
    for i, _ in M.segments:
        out[i] += 1
    return tuple(out)


def socle_square_free(M: NilpotentModule) -> bool:
    return max(socle_vector(M), default=0) <= 1


def top_square_free(M: NilpotentModule) -> bool:
    return max(top_vector(M), default=0) <= 1


def socle_top_square_free(M: NilpotentModule) -> bool:
    """Square-free socle; at multiples of delta also asserts the top agrees."""
    soc = socle_square_free(M)
    dv = M.dim_vector
    if len(set(dv)) == 1:
        if soc != top_square_free(M):
            raise AssertionError(f"socle/top square-freeness disagree on {M}")
    return soc


def loewy_partition(M: NilpotentModule) -> Partition:
    return Partition.from_parts(a for _, a in M.segments)


def aut_order(M: NilpotentModule, q=None):
    """|Aut M| = q^(dim End - sum m_i^2) * prod |GL_{m_i}|."""
    mult = M.multiplicities().values()
    out = gl_order(0, q)
    for m in mult:
        out = out * gl_order(m, q)
    e = dim_end(M) - sum(m * m for m in mult)
    if q is None:
        from .exact import QRat

        q = QRat.q()
    return out * q ** e


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def classes_of_dim(dim_vector: tuple) -> tuple:
    """All iso-classes with the given dimension vector."""
    n = len(dim_vector)
    total = sum(dim_vector)
    segs = [(i, a) for a in range(1, total + 1) for i in range(n)]
    seg_dims = [segment_dim_vector(n, i, a) for i, a in segs]
    out = []

    def rec(start, remaining, chosen):
        if not any(remaining):
            out.append(NilpotentModule(n, chosen))
            return
        for k in range(start, len(segs)):
            d = seg_dims[k]
            if all(r >= x for r, x in zip(remaining, d)):
                rec(k, tuple(r - x for r, x in zip(remaining, d)), chosen + [segs[k]])

    rec(0, tuple(dim_vector), [])
    return tuple(sorted(out))


def dim_vectors_of_total(n: int, total: int) -> Iterator[tuple]:
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in dim_vectors_of_total(n - 1, total - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def classes_upto(n: int, total: int) -> tuple:
    """All iso-classes of total dimension <= ``total`` (zero module first)."""
    out = []
    for t in range(total + 1):
        for dv in dim_vectors_of_total(n, t):
            out.extend(classes_of_dim(dv))
    return tuple(out)


def z_support(m: int, l: int) -> tuple:
    """Modules of dimension vector m*delta with square-free socle."""
    return tuple(M for M in classes_of_dim((m,) * (l + 1)) if socle_top_square_free(M))


def Z_module(pi, l: int) -> NilpotentModule:
    n = l + 1
    return NilpotentModule(n, [(i, p) for p in pi for i in range(n)])


def is_Z_module(M: NilpotentModule) -> bool:
    lengths = sorted((a for _, a in M.segments), reverse=True)
    if len(lengths) % M.n:
        return False
    pi = lengths[:: M.n]
    return Z_module(pi, M.n - 1) == M


def Z_partition(pi, l: int) -> Partition:
    return repeat_parts(pi, l + 1)


# ---------------------------------------------------------------------------
# notation: ``S0(2)+S1(1)``; ``0`` is the zero module

_SEG = re.compile(r"S(\d+)\((\d+)\)")


def format_module(M: NilpotentModule) -> str:
    if not M.segments:
        return "0"
    return "+".join(f"S{i}({a})" for i, a in M.segments)


def parse_module(text: str, n: int) -> NilpotentModule:
    text = text.strip()
    if text in ("0", "0-module", ""):
        return NilpotentModule(n)
    segs = []
    pos = 0
    for part in text.split("+"):
        stripped = part.strip()
        m = _SEG.fullmatch(stripped)
        if not m:
            raise ValueError(f"cannot parse segment {stripped!r} at position {pos} in {text!r}")
        i, a = int(m.group(1)), int(m.group(2))
        if i >= n:
            raise ValueError(f"vertex {i} out of range for {n} vertices (position {pos})")
        if a < 1:
            raise ValueError(f"segment length must be positive (position {pos})")
        segs.append((i, a))
        pos += len(part) + 1
    return NilpotentModule(n, segs)


def loop_module(lam) -> NilpotentModule:
    """Loop quiver module of Jordan type ``lam``."""
    return NilpotentModule(1, [(0, p) for p in lam])


def loop_partitions(n: int):
    return partitions(n)
