import json

import pytest
from hypothesis import given, strategies as st

from hallwright import affine
from hallwright.cyclic import classes_upto, loop_module, parse_module
from hallwright.exact import QRat
from hallwright.hall import (
    ContextMismatch,
    CyclicContext,
    HallElement,
    comultiply,
    e_prime,
    form,
    mul,
    tensor,
    tensor_form,
)

q = QRat.q()


def el(ctx, text, c=1):
    return HallElement.basis(ctx, ctx.parse_class(text), c)


def nonzero_classes(ctx, total):
    if isinstance(ctx, CyclicContext):
        return [M for M in classes_upto(ctx.n, total) if not M.is_zero()]
    out = []
    for a in range(total + 1):
        for b in range(total + 1 - a):
            if a + b:
                out.extend(ctx.classes((a, b)))
    return out


@pytest.mark.parametrize("l", [0, 1, 2])
@pytest.mark.parametrize("qq", [2, 3])
def test_segment_engine_matches_brute(l, qq):
    seg, bru = CyclicContext(l, qq), CyclicContext(l, qq, engine="brute")
    mods = nonzero_classes(seg, 4)
    for M in mods:
        for N in mods:
            if M.total + N.total <= 5:
                assert seg.product_terms({M: 1}, {N: 1}) == bru.product_terms({M: 1}, {N: 1})


def test_generic_specializes():
    gen, sp = CyclicContext(1), CyclicContext(1, 3)
    mods = nonzero_classes(gen, 3)
    for M in mods:
        for N in mods:
            x = HallElement.basis(gen, M) * HallElement.basis(gen, N)
            assert x.specialize(3) == HallElement.basis(sp, M) * HallElement.basis(sp, N)


def test_product_examples():
    ctx = CyclicContext(1)
    assert el(ctx, "S0(1)") * el(ctx, "S1(1)") == el(ctx, "S0(2)") + el(ctx, "S0(1)+S1(1)")
    assert el(ctx, "S0(2)") * HallElement.one(ctx) == el(ctx, "S0(2)")
    loop = CyclicContext(0)
    u1 = HallElement.basis(loop, loop_module((1,)))
    assert u1 * u1 == HallElement.basis(loop, loop_module((2,))) + HallElement.basis(loop, loop_module((1, 1)), q + 1)


@pytest.mark.parametrize("ctx", [CyclicContext(1, 2), CyclicContext(2, 2), affine.context(2)], ids=["A1", "A2", "K"])
def test_associativity_exhaustive(ctx):
    mods = nonzero_classes(ctx, 3)
    for A in mods:
        for B in mods:
            for C in mods:
                dv = [sum(x) for x in zip(*(ctx.dim_vector(X) for X in (A, B, C)))]
                if sum(dv) > 5 or max(dv) > 4:
                    continue
                a, b, c = (HallElement.basis(ctx, X) for X in (A, B, C))
                assert (a * b) * c == a * (b * c)


def test_associativity_generic():
    ctx = CyclicContext(1)
    mods = nonzero_classes(ctx, 2)
    for A in mods:
        for B in mods:
            for C in mods:
                a, b, c = (HallElement.basis(ctx, X) for X in (A, B, C))
                assert (a * b) * c == a * (b * c)


@given(st.data())
def test_grading(data):
    ctx = CyclicContext(1, 2)
    mods = nonzero_classes(ctx, 3)
    M = data.draw(st.sampled_from(mods))
    N = data.draw(st.sampled_from(mods))
    x = HallElement.basis(ctx, M) * HallElement.basis(ctx, N)
    assert x.degrees() == [tuple(a + b for a, b in zip(M.dim_vector, N.dim_vector))]


@pytest.mark.parametrize("ctx", [CyclicContext(1, 2), CyclicContext(1), affine.context(2)], ids=["A1-2", "A1-gen", "K"])
def test_form_compatibility(ctx):
    mods = nonzero_classes(ctx, 2)
    for X in nonzero_classes(ctx, 4):
        x = HallElement.basis(ctx, X)
        D = comultiply(x)
        for M in mods:
            for N in mods:
                y, z = HallElement.basis(ctx, M), HallElement.basis(ctx, N)
                assert form(x, y * z) == tensor_form(D, y, z)


def test_comultiply_examples():
    ctx = CyclicContext(1)
    S0 = el(ctx, "S0(1)")
    one = HallElement.one(ctx)
    assert comultiply(S0) == tensor(S0, one) + tensor(one, S0)
    X = el(ctx, "S0(2)")
    want = tensor(X, one) + tensor(one, X) + tensor(S0, el(ctx, "S1(1)")) * (q - 1)
    assert comultiply(X) == want


def test_form_and_e_prime_examples():
    ctx = CyclicContext(1)
    S0, S1, one = el(ctx, "S0(1)"), el(ctx, "S1(1)"), HallElement.one(ctx)
    assert form(S0, S0) == 1 / (q - 1)
    assert form(S0, S1) == 0
    assert form(one, one) == 1
    assert e_prime(0, S0) == one * (1 / (q - 1))
    assert e_prime(0, S1).is_zero()


def test_e_prime_is_adjoint():
    ctx = CyclicContext(1, 3)
    for X in nonzero_classes(ctx, 3):
        x = HallElement.basis(ctx, X)
        for i in range(2):
            Si = HallElement.basis(ctx, ctx.simple(i))
            for Y in nonzero_classes(ctx, 2):
                y = HallElement.basis(ctx, Y)
                assert form(e_prime(i, x), y) == form(x, Si * y)


def test_json_round_trip():
    ctx = CyclicContext(1)
    x = el(ctx, "S0(2)+S1(1)", (q**2 - 1) / 2) + el(ctx, "S1(3)", QRat.coerce(3) / 2)
    data = json.loads(json.dumps(x.to_json()))
    assert data["mode"] == "generic" and data["degree"] == [1, 2]
    assert HallElement.from_json(ctx, data) == x
    k = affine.context(3)
    y = el(k, "R[t^2+1](1)") * 2 + el(k, "P(0)+I(0)")
    assert HallElement.from_json(k, y.to_json()) == y


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        mul(el(CyclicContext(1, 2), "S0(1)"), el(CyclicContext(1, 3), "S0(1)"))
