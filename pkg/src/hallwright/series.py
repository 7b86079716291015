"""Truncated formal power series in t over a commutative Q-algebra."""

from __future__ import annotations

from fractions import Fraction


class FormalSeries:
    """``sum_{k<=order} coeffs[k] t^k`` with coefficients from any ring.

    The ring elements need ``+``, ``-``, ``*`` and multiplication by a
    ``Fraction``; ``one`` is the ring unit (used for inversion and ``log``).
    """

    def __init__(self, coeffs, order: int, one):
        coeffs = list(coeffs)[: order + 1]
        zero = one * 0
        while len(coeffs) < order + 1:
            coeffs.append(zero)
        self.coeffs = coeffs
        self.order = order
        self.one = one

    @property
    def zero(self):
        return self.one * 0

    def __getitem__(self, k):
        return self.coeffs[k]

    def _like(self, coeffs, order=None):
        return FormalSeries(coeffs, self.order if order is None else order, self.one)

    def __add__(self, other):
        order = min(self.order, other.order)
        return self._like([a + b for a, b in zip(self.coeffs[: order + 1], other.coeffs)], order)

    def __sub__(self, other):
        order = min(self.order, other.order)
        return self._like([a - b for a, b in zip(self.coeffs[: order + 1], other.coeffs)], order)

    def __mul__(self, other):
        if not isinstance(other, FormalSeries):
            return self._like([a * other for a in self.coeffs])
        order = min(self.order, other.order)
        out = []
        for k in range(order + 1):
            acc = self.zero
            for i in range(k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return self._like(out, order)

    def derivative(self) -> "FormalSeries":
        """d/dt; the result is exact up to order ``order - 1``."""
        out = [self.coeffs[k] * k for k in range(1, self.order + 1)]
        return self._like(out, self.order - 1)

    def integral(self) -> "FormalSeries":
        out = [self.zero] + [self.coeffs[k] * Fraction(1, k + 1) for k in range(self.order + 1)]
        return self._like(out, self.order + 1)

    def _check_unit_constant(self):
        if self.coeffs[0] != self.one:
            raise ValueError("series must have constant term 1")

    def inverse(self) -> "FormalSeries":
        self._check_unit_constant()
        inv = [self.one]
        for k in range(1, self.order + 1):
            acc = self.zero
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * inv[k - i]
            inv.append(-acc)
        return self._like(inv)

    def log_derivative(self) -> "FormalSeries":
        """``f'/f`` (coefficient ring assumed commutative)."""
        self._check_unit_constant()
        return self.derivative() * self.inverse()

    def log(self) -> "FormalSeries":
        self._check_unit_constant()
        out = self.log_derivative().integral()
        return self._like(out.coeffs, self.order)

    def scale(self, c, k: int = 1) -> "FormalSeries":
        """Substitute ``t -> c * t^k``."""
        out = [self.zero] * (self.order + 1)
        for n, a in enumerate(self.coeffs):
            if n * k <= self.order:
                out[n * k] = a * (c ** n)
        return self._like(out)

    def __repr__(self):
        return " + ".join(f"({a})t^{k}" for k, a in enumerate(self.coeffs))
