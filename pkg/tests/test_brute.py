import itertools
import os
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest

from hallwright import kronecker as kr
from hallwright.brute import (
    CyclicCategory,
    GuardError,
    MatrixRep,
    QuiverShape,
    aut_count,
    count_subreps,
    enumerate_subreps,
    hall_number,
    hall_polynomial,
    hall_table,
    hom_dim,
    riedtmann_check,
    riedtmann_total,
)
from hallwright.cyclic import classes_upto, dim_hom, loop_module, parse_module
from hallwright.exact import Poly
from hallwright.fields import field


def naive_subrep_count(X):
    """Count graded arrow-stable subspaces by listing every vector set (prime q only)."""
    q = X.fld.q
    offs = np.concatenate([[0], np.cumsum(X.dims)])
    T = X.block_operator()
    vecs = [np.array(v) for v in itertools.product(range(q), repeat=X.total)]

    def span(gens):
        out = {tuple([0] * X.total)}
        for g in gens:
            out = {tuple((np.array(v) + c * g) % q) for v in out for c in range(q)}
        return frozenset(out)

    graded = []
    for v in range(len(X.dims)):
        blocks = [u for u in vecs if not u[: offs[v]].any() and not u[offs[v + 1]:].any()]
        spaces = {span(c) for k in range(X.dims[v] + 1) for c in itertools.combinations(blocks, k)}
        graded.append(spaces)
    count = 0
    for combo in itertools.product(*graded):
        Y = span([np.array(u) for s in combo for u in s])
        if all(tuple(T.dot(np.array(u)) % q) in Y for u in Y):
            count += 1
    return count


def test_loop_plane_has_five_subreps():
    X = MatrixRep(QuiverShape(1, [(0, 0)], nilpotent=True), (2,), [np.zeros((2, 2))], field(2))
    assert count_subreps(X) == 5


def test_segment_has_three_subreps():
    X = CyclicCategory(1).realize(parse_module("S0(2)", 2), field(2))
    assert count_subreps(X) == 3


def test_regular_kronecker_has_one_simple_sub():
    M = kr.parse_class("R[t](1)", 2)
    X = kr.realize(M, field(2))
    assert sum(len(b) for b in enumerate_subreps(X, (0, 1))) == 1


@pytest.mark.parametrize("l", [0, 1, 2])
def test_subrep_count_against_naive(l):
    cat = CyclicCategory(l)
    for M in classes_upto(l + 1, 4):
        if M.is_zero():
            continue
        X = cat.realize(M, field(2))
        assert count_subreps(X) == naive_subrep_count(X)


@pytest.mark.parametrize("l", [0, 1, 2])
def test_classify_round_trip(l):
    cat = CyclicCategory(l)
    for q in (2, 3):
        for M in classes_upto(l + 1, 5):
            assert cat.classify(cat.realize(M, field(q))) == M


def test_classify_rank_table():
    cat = CyclicCategory(1)
    F = field(2)
    sh = QuiverShape.cyclic(1)
    X = MatrixRep(sh, (1, 1), [np.array([[1]]), np.array([[0]])], F)
    Y = MatrixRep(sh, (1, 1), [np.array([[0]]), np.array([[1]])], F)
    Z = MatrixRep(sh, (1, 1), [np.array([[0]]), np.array([[0]])], F)
    assert [str(cat.classify(R)) for R in (X, Y, Z)] == ["S0(2)", "S1(2)", "S0(1)+S1(1)"]
    with pytest.raises(ValueError):
        MatrixRep(sh, (1, 1), [np.array([[1]]), np.array([[1]])], F)


def test_loop_hall_numbers():
    cat = CyclicCategory(0)
    a, b, c = loop_module((1,)), loop_module((1, 1)), loop_module((2,))
    assert hall_number(cat, a, a, b, 2) == 3
    for q in (2, 3):
        assert hall_number(cat, a, a, c, q) == 1
    assert hall_polynomial(cat, a, a, b) == Poly((1, 1))
    with pytest.raises(ValueError):
        hall_number(cat, a, a, loop_module((3,)), 2)


def test_segment_extension_number():
    cat = CyclicCategory(1)
    S0, S1, X = (parse_module(t, 2) for t in ("S0(1)", "S1(1)", "S0(2)"))
    for q in (2, 3):
        assert hall_number(cat, S0, S1, X, q) == 1


def test_loop_symmetry():
    cat = CyclicCategory(0)
    for X in classes_upto(1, 4):
        for (M, N), f in hall_table(cat, X, 2).items():
            assert hall_number(cat, N, M, X, 2) == f


@pytest.mark.parametrize("l", [0, 1])
def test_split_hall_number(l):
    cat = CyclicCategory(l)
    q = 2
    mods = [M for M in classes_upto(l + 1, 4) if not M.is_zero()]
    for M in mods:
        for N in mods:
            if M.total + N.total > 4:
                continue
            f = hall_number(cat, M, N, M + N, q)
            want = Fraction(cat.aut_order(M + N, q), cat.aut_order(M, q) * cat.aut_order(N, q) * q ** dim_hom(M, N))
            assert f == want


def test_hom_and_aut_counts():
    cat = CyclicCategory(1)
    F = field(3)
    X = cat.realize(parse_module("S0(2)+S1(1)", 2), F)
    assert aut_count(X) == cat.aut_order(parse_module("S0(2)+S1(1)", 2), 3)
    assert hom_dim(X, X) == dim_hom(parse_module("S0(2)+S1(1)", 2), parse_module("S0(2)+S1(1)", 2))


def test_riedtmann_on_kronecker():
    cat = kr.category(2)
    I, P = kr.parse_class("I(0)", 2), kr.parse_class("P(0)", 2)
    for x in kr.points(2, 1):
        X = kr.KroneckerClass(2, regular=((x, (1,)),))
        assert riedtmann_check(cat, I, P, X, 2) == (1, True)
    assert riedtmann_check(cat, I, P, P + I, 2) == (1, True)
    assert riedtmann_total(cat, I, P, 2) == 4


def test_guard():
    X = CyclicCategory(0).realize(loop_module((5, 4)), field(2))
    with pytest.raises(GuardError):
        enumerate_subreps(X)


def test_numpy_backend_agrees():
    code = (
        "from hallwright.brute import CyclicCategory, hall_table\n"
        "from hallwright.cyclic import classes_upto\n"
        "from hallwright import _kernels as K\n"
        "cat = CyclicCategory(1)\n"
        "print(K.backend())\n"
        "out = []\n"
        "for X in classes_upto(2, 4):\n"
        "    t = hall_table(cat, X, 3)\n"
        "    out.append(sorted((str(a), str(b), c) for (a, b), c in t.items()))\n"
        "print(repr(out))\n"
    )
    res = {}
    for flag in ("0", "1"):
        env = dict(os.environ, HALLWRIGHT_NUMBA=flag)
        res[flag] = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout
    b0, data0 = res["0"].split("\n", 1)
    b1, data1 = res["1"].split("\n", 1)
    assert (b0, b1) == ("numpy", "numba")
    assert data0 == data1
