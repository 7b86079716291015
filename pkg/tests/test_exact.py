from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from hallwright.exact import (
    InterpolationError,
    Poly,
    QRat,
    echelon,
    gl_order,
    in_row_span,
    interpolate_polynomial,
    nullspace,
    parse_scalar,
    q_binomial,
    rank,
    scalar_str,
)

small = st.lists(st.integers(-5, 5), min_size=0, max_size=4)
Q = sympy.Symbol("q")


def to_sympy(x):
    if isinstance(x, Poly):
        return sum(sympy.Rational(c.numerator, c.denominator) * Q**k for k, c in enumerate(x.c))
    return to_sympy(x.num) / to_sympy(x.den)


def qrat(num, den):
    d = Poly(den)
    if d.is_zero():
        d = Poly((1,))
    return QRat(Poly(num), d)


@given(small, small, small, small)
def test_qrat_field_ops_match_sympy(a, b, c, d):
    x, y = qrat(a, b), qrat(c, d)
    assert sympy.simplify(to_sympy(x + y) - (to_sympy(x) + to_sympy(y))) == 0
    assert sympy.simplify(to_sympy(x * y) - to_sympy(x) * to_sympy(y)) == 0
    if not y.is_zero():
        assert sympy.simplify(to_sympy(x / y) - to_sympy(x) / to_sympy(y)) == 0


@given(small, small)
def test_canonical_form_is_unique(a, b):
    x = qrat(a, b)
    y = QRat(x.num * Poly((2, 1)), x.den * Poly((2, 1)))
    assert x == y and hash(x) == hash(y)
    if not x.den.is_zero():
        assert x.den.lead() == 1


def test_substitute_power_and_eval():
    q = QRat.q()
    x = (q + 1) / (q - 1)
    assert x.substitute_power(2) == (q**2 + 1) / (q**2 - 1)
    assert x.substitute_power(-1)(2) == Fraction(1 + Fraction(1, 2), Fraction(1, 2) - 1)
    assert x(3) == 2


def test_gl_order_and_binomial():
    q = QRat.q()
    assert gl_order(2) == (q**2 - 1) * (q**2 - q)
    assert gl_order(2, 2) == 6
    assert gl_order(3, 2) == 168
    assert q_binomial(4, 2, 2) == 35
    assert q_binomial(4, 2) == q**4 + q**3 + 2 * q**2 + q + 1
    assert q_binomial(3, 5, 2) == 0


@pytest.mark.parametrize("text", ["q^2-1", "3/2", "-q+1", "(q-1)^2/(q+1)", "0", "q"])
def test_scalar_round_trip(text):
    v = parse_scalar(text)
    assert parse_scalar(scalar_str(v)) == v


def test_interpolation_exact_and_held_out():
    f = Poly((1, -2, 0, 1))
    samples = [(x, f(x)) for x in (2, 3, 4, 5, 7, 8)]
    assert interpolate_polynomial(samples, 3) == f
    with pytest.raises(InterpolationError):
        interpolate_polynomial(samples, 2)


def test_rational_linear_algebra():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert rank(rows) == 2
    assert in_row_span(rows, [1, 3, 4])
    assert not in_row_span(rows, [0, 0, 1])
    (ns,) = nullspace(rows, 3)
    assert all(sum(Fraction(a) * b for a, b in zip(r, ns)) == 0 for r in rows)
    basis, piv = echelon(rows)
    assert piv == [0, 1]


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=4))
def test_rank_matches_sympy(rows):
    assert rank(rows) == sympy.Matrix(rows).rank()
