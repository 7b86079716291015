from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hallwright.exact import QRat, rank
from hallwright.partitions import Partition, partitions
from hallwright.symfunc import (
    SymFunc,
    basis_element,
    c_element,
    hall_littlewood,
    schur,
    series,
    structure_constants,
    to_hall_littlewood,
    verify_log_derivative_identities,
)

s = QRat.q()


def at(f, value):
    return f.map_coefficients(lambda c: QRat.coerce(c(value)))


def m(*lam):
    return SymFunc.monomial(Partition(lam))


def jacobi_trudi(lam):
    """Schur function as det(h_{lam_i - i + j}) expanded by permutations."""
    from itertools import permutations

    k = len(lam)

    def h(r):
        if r < 0:
            return SymFunc()
        return SymFunc.one() if r == 0 else basis_element("h", r)

    out = SymFunc()
    for perm in permutations(range(k)):
        sign = 1
        for i in range(k):
            for j in range(i + 1, k):
                if perm[i] > perm[j]:
                    sign = -sign
        term = SymFunc.one()
        for i in range(k):
            term = term * h(lam[i] - i + perm[i])
        out = out + term * sign
    return out


def test_generators():
    assert basis_element("h", 2) == m(2) + m(1, 1)
    assert basis_element("e", 2) == m(1, 1)
    assert basis_element("p", 2) == m(2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hl_column_is_elementary(n):
    assert hall_littlewood((1,) * n) == basis_element("e", n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hl_row_gives_c(n):
    assert hall_littlewood((n,)) * (1 - s) == c_element(n)


def test_hl_schur_example():
    assert at(hall_littlewood((2, 1)), 0) == m(2, 1) + m(1, 1, 1) * 2


@pytest.mark.parametrize("lam", [lam for n in range(1, 6) for lam in partitions(n)])
def test_hl_at_zero_is_jacobi_trudi(lam):
    assert at(hall_littlewood(lam), 0) == jacobi_trudi(lam)
    assert schur(lam) == jacobi_trudi(lam)


@pytest.mark.parametrize("lam", [lam for n in range(1, 5) for lam in partitions(n)])
def test_hl_at_one_is_monomial(lam):
    assert at(hall_littlewood(lam), 1) == SymFunc.monomial(lam)


@pytest.mark.parametrize("lam", [lam for n in range(1, 5) for lam in partitions(n)])
def test_variable_count_stability(lam):
    n = lam.weight
    assert hall_littlewood(lam, n) == hall_littlewood(lam, n + 1)


def test_structure_constant_matches_hall_number():
    f = structure_constants((1,), (1,))
    assert f[Partition((2,))] == 1
    assert f[Partition((1, 1))] == 1 + s
    # psi-normalization at s = 1/q gives F = q + 1
    q = QRat.q()
    assert f[Partition((1, 1))].substitute_power(-1) * q == q + 1
    assert structure_constants((1,), ()) == {Partition((1,)): 1}


def _schur_coeffs(f):
    """Expand a symmetric function in Schur functions (dominance-triangular)."""
    out = {}
    rest = f
    while not rest.is_zero():
        lam = max(rest.terms, key=lambda p: (p.weight, tuple(p)))
        c = rest.terms[lam]
        out[lam] = c
        rest = rest - jacobi_trudi(lam) * c
    return out


def _lr_tableaux(lam, mu, nu):
    """Littlewood-Richardson number by brute force over fillings of nu/lam."""
    from itertools import product

    cells = [(i, j) for i in range(len(nu)) for j in range(lam[i] if i < len(lam) else 0, nu[i])]
    if sum(nu) - sum(lam) != sum(mu) or any((lam[i] if i < len(lam) else 0) > nu[i] for i in range(len(nu))):
        return 0
    if len(lam) > len(nu):
        return 0
    count = 0
    for fill in product(range(1, len(mu) + 1), repeat=len(cells)):
        T = dict(zip(cells, fill))
        if sorted(fill) != sorted(v for v, k in enumerate(mu, 1) for _ in range(k)):
            continue
        ok = all(T[(i, j)] <= T.get((i, j + 1), 99) for i, j in cells)
        ok = ok and all(T[(i, j)] < T[(i + 1, j)] for i, j in cells if (i + 1, j) in T)
        if not ok:
            continue
        word = [T[(i, j)] for i in range(len(nu)) for j in reversed(range(nu[i])) if (i, j) in T]
        seen = [0] * (len(mu) + 2)
        good = True
        for v in word:
            seen[v] += 1
            if v > 1 and seen[v] > seen[v - 1]:
                good = False
                break
        count += good
    return count


@pytest.mark.parametrize(
    "lam,mu", [(a, b) for x in range(1, 4) for y in range(1, 5 - x) for a in partitions(x) for b in partitions(y)]
)
def test_structure_constants_at_zero_are_lr(lam, mu):
    f = structure_constants(lam, mu)
    got = {nu: c(0) for nu, c in f.items() if c(0) != 0}
    want = {nu: _lr_tableaux(lam, mu, nu) for nu in partitions(lam.weight + mu.weight)}
    want = {nu: v for nu, v in want.items() if v}
    assert got == want


@pytest.mark.parametrize("kind", ["e", "h", "p"])
def test_families_generate(kind):
    for n in range(1, 7):
        rows = []
        ps = partitions(n)
        for lam in ps:
            f = SymFunc.one()
            for part in lam:
                f = f * basis_element(kind, part)
            rows.append([f.coefficient(mu)(0) for mu in ps])
        assert rank(rows) == len(ps)


@given(st.sampled_from([p for n in range(1, 4) for p in partitions(n)]),
       st.sampled_from([p for n in range(1, 4) for p in partitions(n)]))
def test_commutative(lam, mu):
    f, g = hall_littlewood(lam), hall_littlewood(mu)
    assert f * g == g * f


def test_series_coefficients():
    assert series("H", 3)[2] == basis_element("h", 2)
    assert series("C", 2)[1] == m(1) * (1 - s)
    assert series("P", 3)[0] == basis_element("p", 1)


def test_log_derivative_identities():
    assert verify_log_derivative_identities(5).passed
    assert verify_log_derivative_identities(1).passed


def test_log_derivative_negative_control():
    rep = verify_log_derivative_identities(3, corrupt={2: SymFunc.one()})
    failed = [c.name for c in rep.failures()]
    assert failed and failed[0].startswith("dlogC order 2")
