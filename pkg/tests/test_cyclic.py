import pytest
from hypothesis import given, strategies as st

from hallwright.brute import CyclicCategory, aut_count, hom_dim
from hallwright.cyclic import (
    CyclicQuiver,
    NilpotentModule,
    Z_module,
    aut_order,
    classes_of_dim,
    classes_upto,
    dim_ext,
    dim_hom,
    euler_form,
    format_module,
    loewy_partition,
    parse_module,
    segment_dim_vector,
    socle_top_square_free,
    tau,
    z_support,
)
from hallwright.exact import QRat
from hallwright.fields import field
from hallwright.partitions import repeat_parts


def mod(text, n=2):
    return parse_module(text, n)


def modules(l, total):
    return st.sampled_from([M for M in classes_upto(l + 1, total) if not M.is_zero()])


def test_segment_staircase():
    # (vertex count, top, length)
    assert segment_dim_vector(2, 0, 5) == (3, 2)
    assert segment_dim_vector(3, 1, 2) == (0, 1, 1)
    assert segment_dim_vector(3, 2, 7) == (2, 2, 3)


def test_euler_form_radical():
    for l in range(3):
        Qv = CyclicQuiver(l)
        for a in ([1, 0, 0][: l + 1], [2, 1, 0][: l + 1]):
            assert Qv.euler_form(Qv.delta, a) == 0
            assert Qv.euler_form(a, Qv.delta) == 0


def test_hom_examples():
    assert dim_hom(mod("S0(2)"), mod("S0(2)")) == 1
    assert dim_hom(mod("S0(2)"), mod("S1(2)")) == 1
    assert dim_ext(mod("S0(1)"), mod("S1(1)")) == 1
    Z1 = Z_module((1,), 1)
    assert dim_ext(Z1, Z1) == 2


@pytest.mark.parametrize("l", [1, 2])
def test_hom_and_euler_against_brute(l):
    cat = CyclicCategory(l)
    F = field(2)
    mods = [M for M in classes_upto(l + 1, 4) if not M.is_zero()]
    reps = {M: cat.realize(M, F) for M in mods}
    for M in mods:
        for N in mods:
            if M.total + N.total > 6:
                continue
            h = dim_hom(M, N)
            assert h == hom_dim(reps[M], reps[N])
            assert h - dim_ext(M, N) == euler_form(M, N)


@pytest.mark.parametrize("q", [2, 3])
def test_aut_order_against_brute(q):
    cat = CyclicCategory(1)
    F = field(q)
    for M in classes_upto(2, 4 if q == 2 else 3):
        if M.is_zero():
            continue
        assert aut_order(M, q) == aut_count(cat.realize(M, F))


def test_aut_examples():
    q = QRat.q()
    assert aut_order(mod("S0(1)+S1(1)")) == (q - 1) ** 2
    assert aut_order(parse_module("S0(1)+S0(1)", 1)) == (q**2 - 1) * (q**2 - q)
    M = mod("S0(3)")
    assert aut_order(M) == (q - 1) * q ** (dim_hom(M, M) - 1)


@given(modules(2, 5))
def test_tau_is_equivalence(M):
    assert tau(tau(tau(M))) == M
    for N in classes_upto(3, 3):
        assert dim_hom(M, N) == dim_hom(tau(M), tau(N))


def test_tau_examples():
    assert tau(mod("S0(2)")) == mod("S1(2)")
    assert tau(Z_module((2, 1), 1)) == Z_module((2, 1), 1)


def test_socle_square_free():
    assert socle_top_square_free(mod("S0(1)+S1(1)"))
    assert not socle_top_square_free(mod("S0(1)+S0(1)"))
    assert socle_top_square_free(mod("S0(2)+S1(2)"))


def test_z_support():
    assert set(z_support(1, 1)) == {mod("S0(2)"), mod("S1(2)"), mod("S0(1)+S1(1)")}
    assert z_support(1, 0) == (parse_module("S0(1)", 1),)
    # independent count: square-free socle among all classes of dimension 2 delta
    n_sq = 0
    for M in classes_of_dim((2, 2)):
        socles = [(i + a - 1) % 2 for i, a in M.segments]
        n_sq += len(socles) == len(set(socles))
    assert len(z_support(2, 1)) == n_sq


def test_Z_module():
    assert Z_module((1,), 1) == mod("S0(1)+S1(1)")
    assert Z_module((2, 1), 1) == mod("S0(2)+S1(2)+S0(1)+S1(1)")
    assert loewy_partition(Z_module((3, 1), 2)) == repeat_parts((3, 1), 3)


def test_notation_round_trip():
    for M in classes_upto(2, 4):
        assert parse_module(format_module(M), 2) == M
    assert parse_module("0", 2).is_zero()
    assert parse_module("0-module", 2).is_zero()
    with pytest.raises(ValueError, match="position"):
        parse_module("S0(2)+T1(1)", 2)
    with pytest.raises(ValueError):
        parse_module("S5(1)", 2)


def test_classes_counts_against_brute():
    # iso-classes found by classifying every nilpotent representation of dim (1,1) over F_2
    import itertools

    import numpy as np

    from hallwright.brute import MatrixRep, QuiverShape

    cat = CyclicCategory(1)
    F = field(2)
    found = set()
    for a, b in itertools.product(range(2), repeat=2):
        try:
            X = MatrixRep(QuiverShape.cyclic(1), (1, 1), [np.array([[a]]), np.array([[b]])], F)
        except ValueError:
            continue
        found.add(cat.classify(X))
    assert found == set(classes_of_dim((1, 1)))
