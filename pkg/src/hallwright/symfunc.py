"""Symmetric functions over Q(s) in the monomial basis.

Hall-Littlewood polynomials are computed from their definition as a
symmetrisation over the symmetric group in finitely many variables: the
alternant of ``x^lam * prod_{i<j}(x_i - s x_j)`` divided by the Vandermonde
gives ``v_lam(s) P_lam`` in the Schur basis, which is then expanded into
monomials through Kostka numbers.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .exact import Poly, QRat
from .partitions import Partition, partitions


def _coerce(c):
    return c if isinstance(c, QRat) else QRat.coerce(c)


class SymFunc:
    """Finite linear combination of monomial symmetric functions ``m_lam``.

    Coefficients are :class:`QRat` in the formal parameter ``s``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for lam, c in terms.items():
                c = _coerce(c)
                if not c.is_zero():
                    clean[Partition(lam)] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "SymFunc":
        return cls()

    @classmethod
    def one(cls) -> "SymFunc":
        return cls({Partition(): 1})

    @classmethod
    def monomial(cls, lam) -> "SymFunc":
        return cls({Partition(lam): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, lam) -> QRat:
        return self.terms.get(Partition(lam), QRat.coerce(0))

    def degrees(self):
        return sorted({lam.weight for lam in self.terms})

    def homogeneous_part(self, n: int) -> "SymFunc":
        return SymFunc({lam: c for lam, c in self.terms.items() if lam.weight == n})

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, QRat)):
            return self == SymFunc.one() * other
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            other = SymFunc.one() * other
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return SymFunc(out)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc({lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SymFunc):
            c = _coerce(other)
            if c.is_zero():
                return SymFunc()
            return SymFunc({lam: a * c for lam, a in self.terms.items()})
        acc = defaultdict(lambda: QRat.coerce(0))
        for lam, a in self.terms.items():
            for mu, b in other.terms.items():
                ab = a * b
                for nu, k in monomial_product(lam, mu).items():
                    acc[nu] = acc[nu] + ab * k
        return SymFunc(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = SymFunc.one()
        for _ in range(k):
            out = out * self
        return out

    def map_coefficients(self, fn) -> "SymFunc":
        return SymFunc({lam: fn(c) for lam, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: (kv[0].weight, tuple(kv[0])), reverse=True)
        return " + ".join(f"({c.to_str('s')})*m{lam}" for lam, c in items)


# ---------------------------------------------------------------------------
# monomial products


def _distinct_perms(seq):
    return set(permutations(seq))


@lru_cache(maxsize=None)
def monomial_product(lam: Partition, mu: Partition) -> dict:
    """``m_lam * m_mu`` as ``{nu: integer coefficient}``."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam:
        return {mu: 1}
    if not mu:
        return {lam: 1}
    n = lam.weight + mu.weight
    out = {}
    for nu in partitions(n):
        L = len(nu)
        if L < max(len(lam), len(mu)) or L > len(lam) + len(mu):
            continue
        padded = tuple(lam) + (0,) * (L - len(lam))
        target = tuple(mu)
        count = 0
        for alpha in _distinct_perms(padded):
            diff = [a - b for a, b in zip(nu, alpha)]
            if min(diff) < 0:
                continue
            if tuple(sorted((d for d in diff if d), reverse=True)) == target:
                count += 1
        if count:
            out[nu] = count
    return out


# ---------------------------------------------------------------------------
# generators


def basis_element(kind: str, n: int) -> SymFunc:
    """``e(n)``, ``h(n)``, ``p(n)`` or ``m_(n)`` in the monomial basis."""
    if n < 1:
        raise ValueError("n must be positive")
    if kind == "e":
        return SymFunc.monomial((1,) * n)
    if kind == "h":
        return SymFunc({lam: 1 for lam in partitions(n)})
    if kind in ("p", "m"):
        return SymFunc.monomial((n,))
    raise ValueError(f"unknown generator kind {kind!r}")


# ---------------------------------------------------------------------------
# Kostka numbers and Schur functions


@lru_cache(maxsize=None)
def kostka(shape: Partition, content: tuple) -> int:
    """Number of semistandard tableaux of ``shape`` with the given content."""
    shape = Partition(shape)
    content = tuple(content)
    while content and content[-1] == 0:
        content = content[:-1]
    if sum(shape) != sum(content):
        return 0
    if not content:
        return 1
    k = content[-1]
    total = 0
    for inner in _horizontal_strips_removed(shape, k):
        total += kostka(inner, content[:-1])
    return total


def _horizontal_strips_removed(shape, k):
    """Partitions ``mu`` with ``shape/mu`` a horizontal strip of size k."""
    shape = tuple(shape)
    L = len(shape)
    out = []

    def rec(i, remaining, acc):
        if i == L:
            if remaining == 0:
                out.append(Partition(tuple(p for p in acc if p)))
            return
        lower = shape[i + 1] if i + 1 < L else 0
        for take in range(0, min(remaining, shape[i] - lower) + 1):
            rec(i + 1, remaining - take, acc + [shape[i] - take])

    rec(0, k, [])
    return out


@lru_cache(maxsize=None)
def schur(kappa: Partition) -> SymFunc:
    kappa = Partition(kappa)
    n = kappa.weight
    return SymFunc({nu: kostka(kappa, tuple(nu)) for nu in partitions(n) if kostka(kappa, tuple(nu))})


# ---------------------------------------------------------------------------
# Hall-Littlewood polynomials


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return out


def _v_factor(m):
    """v_m(s) = prod_{j=1..m} (1 - s^j)/(1 - s) as a Poly."""
    out = Poly.const(1)
    for j in range(1, m + 1):
        out = out * Poly([1] * j)
    return out


def _alternant_schur_coefficients(lam: Partition, nvars: int) -> dict:
    """Schur coefficients of ``sum_w w(x^lam prod_{i<j}(x_i - s x_j))``."""
    exps = tuple(lam) + (0,) * (nvars - len(lam))
    # polynomial in x as {exponent tuple: int coefficient list in s}
    poly = {exps: [1]}
    for i in range(nvars):
        for j in range(i + 1, nvars):
            new = defaultdict(list)
            for e, c in poly.items():
                ei = list(e)
                ei[i] += 1
                ei = tuple(ei)
                new[ei] = _padd(new[ei], c)
                ej = list(e)
                ej[j] += 1
                ej = tuple(ej)
                new[ej] = _padd(new[ej], [0] + [-x for x in c])
            poly = new
    rho = tuple(range(nvars - 1, -1, -1))
    out = defaultdict(list)
    for e, c in poly.items():
        if len(set(e)) != nvars:
            continue
        order = sorted(range(nvars), key=lambda t: -e[t])
        sign = _perm_sign(order)
        alpha = tuple(e[t] for t in order)
        kappa = tuple(a - r for a, r in zip(alpha, rho))
        if min(kappa) < 0:
            continue
        coef = c if sign > 0 else [-x for x in c]
        key = Partition(tuple(k for k in kappa if k))
        out[key] = _padd(out[key], coef)
    return {k: Poly(v) for k, v in out.items() if any(v)}


def _perm_sign(order):
    order = list(order)
    sign = 1
    for i in range(len(order)):
        while order[i] != i:
            j = order[i]
            order[i], order[j] = order[j], order[i]
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def hall_littlewood(lam, nvars: int | None = None) -> SymFunc:
    """``P_lam(X; s)`` expanded in monomials, computed in ``nvars`` variables.

    With ``nvars >= |lam|`` (the default) no monomial is lost.
    """
    lam = Partition(lam)
    if nvars is None:
        nvars = max(lam.weight, 1)
    if len(lam) > nvars:
        return SymFunc()
    vlam = _v_factor(nvars - len(lam))
    for part in set(lam):
        vlam = vlam * _v_factor(lam.count(part))
    coeffs = _alternant_schur_coefficients(lam, nvars)
    acc = SymFunc()
    for kappa, c in coeffs.items():
        if len(kappa) > nvars:
            continue
        acc = acc + schur(kappa) * QRat(c, vlam)
    # keep only monomials visible in nvars variables
    return SymFunc({nu: c for nu, c in acc.terms.items() if len(nu) <= nvars})


def to_hall_littlewood(f: SymFunc) -> dict:
    """Coefficients of ``f`` in the basis ``P_lam(X; s)``.

    Uses unitriangularity of P_lam against m_lam: the lexicographically
    largest monomial in each degree fixes the next coefficient.
    """
    out = {}
    rest = f
    while not rest.is_zero():
        lam = max(rest.terms, key=lambda p: (p.weight, tuple(p)))
        c = rest.terms[lam]
        out[lam] = c
        rest = rest - hall_littlewood(lam) * c
    return out


def from_hall_littlewood(coeffs: dict) -> SymFunc:
    acc = SymFunc()
    for lam, c in coeffs.items():
        acc = acc + hall_littlewood(lam) * c
    return acc


def structure_constants(lam, mu) -> dict:
    """Coefficients ``f^nu_{lam mu}(s)`` of ``P_nu`` in ``P_lam * P_mu``."""
    return to_hall_littlewood(hall_littlewood(Partition(lam)) * hall_littlewood(Partition(mu)))


def c_element(n: int) -> SymFunc:
    """``c(s, n)`` read off from ``H(t) / H(st)``.

    Since ``1/H(t) = E(-t)``: ``c(s, n) = sum_k (-s)^k e(k) h(n - k)``.
    """
    s = QRat.q()
    acc = SymFunc()
    for k in range(n + 1):
        ek = SymFunc.one() if k == 0 else basis_element("e", k)
        hk = SymFunc.one() if n - k == 0 else basis_element("h", n - k)
        acc = acc + ek * hk * ((-s) ** k)
    return acc


# ---------------------------------------------------------------------------
# generating series


def series(kind: str, T: int, corrupt: dict | None = None):
    """Generating series ``E``, ``H``, ``P`` or ``C`` truncated at ``t^T``.

    ``P(t) = sum p(n) t^(n-1)``; ``C(s, t) = H(t) / H(st) = 1 + sum c(s, n) t^n``.
    ``corrupt`` maps an order to a SymFunc added to that coefficient
    (used for negative controls).
    """
    from .series import FormalSeries

    one = SymFunc.one()
    if kind in ("E", "H"):
        coeffs = [one] + [basis_element(kind.lower(), n) for n in range(1, T + 1)]
    elif kind == "C":
        coeffs = [one] + [c_element(n) for n in range(1, T + 1)]
    elif kind == "P":
        coeffs = [basis_element("p", n + 1) for n in range(T + 1)]
    else:
        raise ValueError(f"unknown series {kind!r}")
    for k, extra in (corrupt or {}).items():
        coeffs[k] = coeffs[k] + extra
    return FormalSeries(coeffs, T, one)


def verify_log_derivative_identities(T: int = 5, corrupt: dict | None = None):
    """``d/dt log H = P`` and ``d/dt log C(s, t) = sum (1 - s^n) p(n) t^(n-1)``."""
    from .report import Report

    rep = Report("series", {"T": T})
    s = QRat.q()
    H = series("H", T + 1)
    C = series("C", T + 1, corrupt)
    P = series("P", T)
    dH = H.log_derivative()
    dC = C.log_derivative()
    for k in range(T + 1):
        diff = dH[k] - P[k]
        rep.check(f"dlogH order {k + 1} (t^{k})", "0", repr(diff), diff.is_zero())
    for k in range(T + 1):
        n = k + 1
        diff = dC[k] - basis_element("p", n) * (1 - s ** n)
        rep.check(f"dlogC order {n} (t^{k})", "0", repr(diff), diff.is_zero())
    return rep.finish()
