import pytest

from hallwright import composition as comp
from hallwright import kronecker as kr
from hallwright.affine import context
from hallwright.hall import CyclicContext, HallElement


def test_words():
    assert comp.words((1, 1)) == [(0, 1), (1, 0)]
    assert len(comp.words((2, 1))) == 3
    assert comp.words((0, 0)) == [()]


def test_cyclic_graded_dims():
    ctx = CyclicContext(1, 2)
    assert comp.composition_graded_dim(ctx, (1, 0)) == 1
    assert comp.composition_graded_dim(ctx, (1, 1)) == 2
    # three classes in degree (1,1), only two words
    assert len(list(ctx.classes((1, 1)))) == 3


def test_membership_examples():
    ctx = CyclicContext(1, 2)
    s0, s1 = HallElement.parse(ctx, "S0(1)"), HallElement.parse(ctx, "S1(1)")
    assert comp.in_composition(s0 * s1)
    assert s0 * s1 == HallElement.parse(ctx, "S0(1)+S1(1)") + HallElement.parse(ctx, "S0(2)")
    assert comp.in_composition(HallElement.parse(ctx, "S0(2)") - HallElement.parse(ctx, "S1(2)"))
    assert not comp.in_composition(HallElement.parse(ctx, "S0(2)"))
    assert not comp.in_composition(HallElement.parse(ctx, "S0(1)+S1(1)"))
    assert comp.in_composition(HallElement.zero(ctx))
    with pytest.raises(ValueError):
        comp.in_composition(HallElement.parse(ctx, "S0(1)") + HallElement.parse(ctx, "S1(2)"))
    with pytest.raises(ValueError):
        comp.composition_graded_dim(CyclicContext(1, None), (1, 1))


def test_kronecker_graded_dims():
    ctx = context(2)
    got = [comp.composition_graded_dim(ctx, a) for a in comp.KRONECKER_DEGREES]
    assert got == [1, 1, 2, 3, 3, 6]
    assert comp.verify_graded_dim((2,), imaginary_multiplicity=1).passed


def test_default_pbw_count_exceeds_word_count():
    """With multiplicity two the PBW count exceeds the number of words, so no rank can reach it."""
    from hallwright.kronecker import root_multiplicity_dim

    over = [a for a in comp.KRONECKER_DEGREES if root_multiplicity_dim(a) > len(comp.words(a))]
    assert over == [(1, 1), (2, 1), (1, 2), (2, 2)]
    rep = comp.verify_graded_dim((2,))
    failed = {c.name for c in rep.checks if not c.passed}
    assert failed == {f"dim C{a} at q=2 = PBW dim (mult 2)" for a in over}


def test_regular_simple_not_in_composition():
    ctx = context(2)
    x = kr.points(2, 1)[0]
    R = kr.KroneckerClass(2, regular=((x, (1,)),))
    assert not comp.in_composition(HallElement.basis(ctx, R))


def test_powersum():
    rep = comp.verify_powersum((1,), (2,))
    assert rep.passed, rep.failures()
