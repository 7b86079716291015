"""Exact scalars: univariate polynomials and rational functions over Q.

Every coefficient that appears in the Hall algebra computations is either a
``Fraction`` (when the field size is fixed) or a :class:`QRat` (when it is
kept as the indeterminate ``q``).  Both support the usual arithmetic
operators and mix freely with ``int``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(Fraction(c) for c in coeffs)


class Poly:
    """Polynomial in one variable with rational coefficients (lowest degree first)."""

    __slots__ = ("c", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.c = _strip(coeffs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Poly":
        p = object.__new__(cls)
        p.c = coeffs
        p._hash = None
        return p

    @classmethod
    def const(cls, a) -> "Poly":
        return cls((a,))

    @classmethod
    def monomial(cls, k: int, a=1) -> "Poly":
        return cls((0,) * k + (a,))

    @property
    def degree(self) -> int:
        return len(self.c) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.c

    def lead(self) -> Fraction:
        return self.c[-1] if self.c else _ZERO

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c == _strip((other,))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Poly", self.c))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return Poly._raw(_strip(out))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-x for x in self.c))

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            other = Fraction(other)
            if other == 0:
                return Poly._raw(())
            return Poly._raw(tuple(x * other for x in self.c))
        a, b = self.c, other.c
        if not a or not b:
            return Poly._raw(())
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly._raw(_strip(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        db = other.degree
        lb = other.c[-1]
        if len(rem) - 1 < db:
            return Poly._raw(()), self
        quo = [_ZERO] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            coef = rem[k + db] / lb
            quo[k] = coef
            if coef:
                for j, y in enumerate(other.c):
                    rem[k + j] -= coef * y
        return Poly(quo), Poly(rem[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.c[-1])

    def __call__(self, x):
        acc = 0
        for coef in reversed(self.c):
            acc = acc * x + coef
        return acc

    def shift_degree(self, k: int) -> "Poly":
        """Multiply by ``q**k`` (k >= 0)."""
        if not self.c:
            return self
        return Poly._raw((_ZERO,) * k + self.c)

    def low_order(self) -> int:
        """Exponent of the largest power of q dividing the polynomial."""
        for i, x in enumerate(self.c):
            if x:
                return i
        return 0

    def compose_power(self, d: int) -> "Poly":
        """Substitute ``q -> q**d`` (d >= 1)."""
        if d == 1 or not self.c:
            return self
        out = [_ZERO] * (d * (len(self.c) - 1) + 1)
        for i, x in enumerate(self.c):
            out[i * d] = x
        return Poly._raw(tuple(out))

    def reversed_coeffs(self, n: int) -> "Poly":
        """Return ``q**n * p(1/q)``; requires ``n >= degree``."""
        out = [_ZERO] * (n + 1)
        for i, x in enumerate(self.c):
            out[n - i] = x
        return Poly(out)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.c)

    def to_str(self, var: str = "q") -> str:
        if not self.c:
            return "0"
        parts = []
        for k in range(len(self.c) - 1, -1, -1):
            a = self.c[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = -a if a < 0 else a
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __repr__(self):
        return f"Poly({self.to_str()})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class QRat:
    """Rational function ``num/den`` in one indeterminate, kept in lowest terms.

    The denominator is monic, so two equal rational functions have identical
    ``(num, den)`` pairs and equality is structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _reduced: bool = False):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if den is None:
            den = Poly.const(1)
        elif not isinstance(den, Poly):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("QRat with zero denominator")
        self._hash = None
        if num.is_zero():
            self.num, self.den = num, Poly.const(1)
            return
        if not _reduced and den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
        lead = den.c[-1]
        if lead != 1:
            num = num * (1 / lead)
            den = den * (1 / lead)
        self.num, self.den = num, den

    @classmethod
    def q(cls) -> "QRat":
        return cls(Poly((0, 1)))

    @classmethod
    def coerce(cls, x) -> "QRat":
        if isinstance(x, QRat):
            return x
        if isinstance(x, Poly):
            return cls(x)
        return cls(Poly.const(x))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other):
        if isinstance(other, QRat):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, Poly)):
            return self == QRat.coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("QRat", self.num.c, self.den.c))
        return self._hash

    def __add__(self, other):
        other = QRat.coerce(other)
        if self.den == other.den:
            return QRat(self.num + other.num, self.den)
        if other.den.degree == 0:
            return QRat(self.num + other.num * self.den, self.den, _reduced=True)
        if self.den.degree == 0:
            return QRat(self.num * other.den + other.num, other.den, _reduced=True)
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRat(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-QRat.coerce(other))

    def __rsub__(self, other):
        return QRat.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return QRat(Poly())
            return QRat(self.num * other, self.den, _reduced=True)
        other = QRat.coerce(other)
        if self.den.degree == 0 and other.den.degree == 0:
            return QRat(self.num * other.num, self.den * other.den, _reduced=True)
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero QRat")
        return QRat(self.den, self.num, _reduced=True)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return QRat(self.num * (1 / Fraction(other)), self.den, _reduced=True)
        return self * QRat.coerce(other).inverse()

    def __rtruediv__(self, other):
        return QRat.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return QRat(self.num ** k, self.den ** k, _reduced=True)

    def __call__(self, x):
        """Evaluate at an exact rational point (the denominator must not vanish)."""
        d = self.den(Fraction(x))
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {x}")
        return Fraction(self.num(Fraction(x))) / d

    def substitute_power(self, d: int) -> "QRat":
        """Substitute ``q -> q**d`` for any nonzero integer d."""
        if d == 0:
            return QRat(self(1))
        if d > 0:
            return QRat(self.num.compose_power(d), self.den.compose_power(d))
        e = -d
        n, m = self.num.degree, self.den.degree
        top = max(n, m)
        num = self.num.reversed_coeffs(top).compose_power(e) if n >= 0 else Poly()
        den = self.den.reversed_coeffs(top).compose_power(e)
        return QRat(num, den)

    def to_str(self, var: str = "q") -> str:
        if self.den.degree == 0 and self.den.c[0] == 1:
            return self.num.to_str(var)
        n = self.num.to_str(var)
        d = self.den.to_str(var)
        if len(self.num.c) > 1:
            n = f"({n})"
        if len(self.den.c) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"QRat({self.to_str()})"

    __str__ = to_str


def scalar_str(x, var: str = "q") -> str:
    if isinstance(x, QRat):
        return x.to_str(var)
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_scalar(text: str):
    """Parse the textual coefficient grammar used in JSON payloads.

    Accepts rationals (``3/2``) and rational functions in ``q`` written with
    ``+ - * / ^`` and parentheses (``(q^2-1)/(q-1)``).
    """
    tokens = _tokenize(text)
    pos, value = _parse_expr(tokens, 0)
    if pos != len(tokens):
        raise ValueError(f"unexpected token {tokens[pos]!r} at position {pos} in {text!r}")
    if isinstance(value, QRat) and value.is_poly() and value.num.degree <= 0:
        return Fraction(value.num.lead()) if value.num.c else Fraction(0)
    return value


def _tokenize(text):
    out, i = [], 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(int(text[i:j]))
            i = j
        elif ch in "+-*/^()q":
            out.append(ch)
            i += 1
        else:
            raise ValueError(f"bad character {ch!r} at position {i} in {text!r}")
    return out


def _parse_expr(tok, pos):
    pos, value = _parse_term(tok, pos)
    while pos < len(tok) and tok[pos] in ("+", "-"):
        op = tok[pos]
        pos, rhs = _parse_term(tok, pos + 1)
        value = value + rhs if op == "+" else value - rhs
    return pos, value


def _parse_term(tok, pos):
    pos, value = _parse_factor(tok, pos)
    while pos < len(tok) and tok[pos] in ("*", "/"):
        op = tok[pos]
        pos, rhs = _parse_factor(tok, pos + 1)
        value = value * rhs if op == "*" else value / rhs
    return pos, value


def _parse_factor(tok, pos):
    if pos >= len(tok):
        raise ValueError("unexpected end of expression")
    t = tok[pos]
    if t == "-":
        pos, value = _parse_factor(tok, pos + 1)
        return pos, -value
    if t == "(":
        pos, value = _parse_expr(tok, pos + 1)
        if pos >= len(tok) or tok[pos] != ")":
            raise ValueError(f"missing ')' at position {pos}")
        pos += 1
    elif t == "q":
        value, pos = QRat.q(), pos + 1
    elif isinstance(t, int):
        value, pos = QRat.coerce(t), pos + 1
    else:
        raise ValueError(f"unexpected token {t!r} at position {pos}")
    if pos < len(tok) and tok[pos] == "^":
        if pos + 1 >= len(tok) or not isinstance(tok[pos + 1], int):
            raise ValueError(f"exponent expected at position {pos + 1}")
        value = value ** tok[pos + 1]
        pos += 2
    return pos, value


# ---------------------------------------------------------------------------
# q-combinatorics.  ``q`` may be an int, a Fraction or a QRat.


def gl_order(m: int, q=None):
    """Order of GL_m over a field with ``q`` elements; generic in q by default."""
    if q is None:
        q = QRat.q()
    out = 1
    qm = q ** m
    for i in range(m):
        out = out * (qm - q ** i)
    return out


def q_binomial(n: int, k: int, q=None):
    """Gaussian binomial [n, k]_q, via the q-Pascal recursion."""
    if q is None:
        q = QRat.q()
    if k < 0 or k > n:
        return 0 * q
    return _qbin_table(n, q)[k]


def _qbin_table(n, q):
    if isinstance(q, QRat) and q == QRat.q():
        return _qbin_generic(n)
    row = [1]
    for m in range(1, n + 1):
        new = [1] * (m + 1)
        for k in range(1, m):
            new[k] = row[k - 1] + q ** k * row[k]
        row = new
    return row


@lru_cache(maxsize=None)
def _qbin_generic(n):
    q = QRat.q()
    row = [QRat.coerce(1)]
    for m in range(1, n + 1):
        new = [QRat.coerce(1)] * (m + 1)
        for k in range(1, m):
            new[k] = row[k - 1] + q ** k * row[k]
        row = new
    return tuple(row)


# ---------------------------------------------------------------------------
# Interpolation


class InterpolationError(ValueError):
    """Held-out sample disagrees with the fitted polynomial."""


def interpolate_polynomial(samples: Sequence, degree_bound: int) -> Poly:
    """Fit the unique polynomial of degree <= ``degree_bound`` through samples.

    The first ``degree_bound + 1`` samples determine the fit (Newton divided
    differences, exact); every further sample is a held-out check.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in samples]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    need = degree_bound + 1
    if len(pts) < need:
        raise ValueError(f"need {need} samples for degree {degree_bound}, got {len(pts)}")
    fit, held = pts[:need], pts[need:]
    # Newton form
    coef = [y for _, y in fit]
    for j in range(1, need):
        for i in range(need - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (fit[i][0] - fit[i - j][0])
    poly = Poly.const(coef[-1])
    for i in range(need - 2, -1, -1):
        poly = poly * Poly((-fit[i][0], 1)) + coef[i]
    for x, y in held:
        if poly(x) != y:
            raise InterpolationError(
                f"held-out sample at {x} gives {y}, fitted polynomial gives {poly(x)}; "
                f"degree bound {degree_bound} too small"
            )
    return poly


# ---------------------------------------------------------------------------
# exact linear algebra over Q (Gaussian elimination on Fractions)


def echelon(rows) -> tuple:
    """Reduced row echelon form: ``(nonzero rows, pivot columns)``."""
    work = [[Fraction(v) for v in r] for r in rows]
    basis, pivots = [], []
    for r in work:
        for b, p in zip(basis, pivots):
            if r[p]:
                f = r[p]
                r = [x - f * y for x, y in zip(r, b)]
        lead = next((j for j, v in enumerate(r) if v), None)
        if lead is None:
            continue
        inv = 1 / r[lead]
        r = [v * inv for v in r]
        for i, b in enumerate(basis):
            if b[lead]:
                f = b[lead]
                basis[i] = [x - f * y for x, y in zip(b, r)]
        basis.append(r)
        pivots.append(lead)
    return basis, pivots


def rank(rows) -> int:
    return len(echelon(rows)[0])


def in_row_span(rows, v) -> bool:
    basis, pivots = echelon(rows)
    r = [Fraction(x) for x in v]
    for b, p in zip(basis, pivots):
        if r[p]:
            f = r[p]
            r = [x - f * y for x, y in zip(r, b)]
    return not any(r)


def nullspace(rows, ncols: int) -> list:
    """Basis of ``{x : rows @ x = 0}``."""
    basis, pivots = echelon(rows)
    free = [j for j in range(ncols) if j not in pivots]
    out = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for b, p in zip(basis, pivots):
            x[p] = -b[f]
        out.append(x)
    return out
