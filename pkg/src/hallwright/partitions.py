"""Integer partitions."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        """Sort and drop zeros."""
        return cls(sorted((p for p in parts if p), reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def n(self) -> int:
        return sum(i * p for i, p in enumerate(self))

    def part(self, i: int) -> int:
        """1-based part with zero padding."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def cup(self, other) -> "Partition":
        return cup(self, other)

    def __repr__(self):
        return "[" + ",".join(map(str, self)) + "]"

    __str__ = __repr__


def partition_n(lam) -> int:
    return Partition(lam).n()


def cup(lam, mu) -> Partition:
    return Partition(sorted(tuple(lam) + tuple(mu), reverse=True))


def repeat_parts(lam, times: int) -> Partition:
    """Each part of ``lam`` repeated ``times`` times."""
    return Partition(sorted(tuple(lam) * times, reverse=True))


def rev_lex_less(lam, mu) -> bool:
    """``lam < mu`` when the first differing part of ``lam`` is the larger one."""
    if sum(lam) != sum(mu):
        raise ValueError(f"rev_lex_less needs equal weights: {lam} vs {mu}")
    n = max(len(lam), len(mu))
    for i in range(n):
        a = lam[i] if i < len(lam) else 0
        b = mu[i] if i < len(mu) else 0
        if a != b:
            return a > b
    return False


def rev_lex_leq(lam, mu) -> bool:
    return tuple(lam) == tuple(mu) or rev_lex_less(lam, mu)


def dominates(lam, mu) -> bool:
    """Dominance order: lam >= mu."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple:
    """All partitions of n in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def iter_partitions_upto(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions(k)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"partition must look like [3,1]: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return Partition()
    return Partition(int(x) for x in body.split(","))
