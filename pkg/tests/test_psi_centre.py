import pytest

from hallwright import centre, psi
from hallwright.cyclic import loop_module
from hallwright.exact import QRat
from hallwright.hall import CyclicContext, HallElement
from hallwright.partitions import Partition
from hallwright.symfunc import basis_element, hall_littlewood

q = QRat.q()


def u(lam, d=1, qv=None):
    return HallElement.basis(psi.loop_context(qv, d), loop_module(lam))


def test_psi_generator_examples():
    assert psi.psi_d(basis_element("e", 2)) == u((1, 1)) * q
    assert psi.psi_d(basis_element("h", 2)) == u((2,)) + u((1, 1))
    assert psi.psi_d(basis_element("p", 2)) == u((2,)) + u((1, 1)) * (1 - q)
    assert psi.psi_d(basis_element("e", 1)) == u((1,))


def test_psi_specializes():
    f = basis_element("p", 3)
    assert psi.psi_d(f).specialize(3) == psi.psi_d(f, q=3)


def test_psi_on_hall_littlewood():
    for lam in [(1,), (2, 1), (2, 2, 1)]:
        n = Partition.from_parts(lam).n()
        assert psi.psi_d(hall_littlewood(lam), 2) == u(lam, 2) * q ** (2 * n)


def test_loop_hall_polynomial_examples():
    P = Partition.from_parts
    # [u(1)]^2 = (q+1)[u(1,1)] + [u(2)]
    assert psi.loop_hall_polynomial(P((1,)), P((1,)), P((1, 1))) == (q + 1).num
    assert psi.loop_hall_polynomial(P((1,)), P((1,)), P((2,))).c == (1,)
    assert psi.loop_hall_polynomial(P((2,)), P((1,)), P((1, 1, 1))).is_zero()
    for qv in (2, 3):
        assert psi.loop_hall_number((1,), (1,), (1, 1), qv) == qv + 1


def test_loop_hall_polynomial_against_direct_generic_product():
    a = u((2, 1))
    b = u((1,))
    assert psi.interpolated_product(a, b) == a * b


def test_interpolated_product_needs_generic_loop():
    with pytest.raises(ValueError):
        psi.interpolated_product(u((1,), qv=2), u((1,), qv=2))


def test_steinitz_small():
    assert psi.verify_steinitz(4).passed
    assert psi.verify_steinitz(3, q=2).passed


def test_generator_images_and_series():
    assert psi.verify_generator_images(3, 1).passed
    assert psi.verify_generator_images(3, 2).passed
    assert psi.verify_series(3, (1, 2)).passed


def test_A_series_low_terms():
    A = psi.A_series(1, 2)
    assert A[1] == u((1,)) * (q - 1)
    assert A[2] == u((2,)) * (q * q - q)


def test_psi_S_examples():
    ctx = CyclicContext(1, None)
    x = psi.psi_S(basis_element("e", 2), 0, 1)
    assert x == HallElement.parse(ctx, "S0(2)+S0(2)") * q
    y = psi.psi_S(basis_element("h", 1), 1, 1)
    assert y == HallElement.parse(ctx, "S1(2)")
    assert psi.verify_psi_S(1, 3).passed
    assert psi.verify_psi_S(2, 2, q=2).passed


# ---------------------------------------------------------------------------


def test_z1_example():
    ctx = CyclicContext(1, None)
    want = (
        HallElement.parse(ctx, "S0(2)") * (1 - q)
        + HallElement.parse(ctx, "S1(2)") * (1 - q)
        + HallElement.parse(ctx, "S0(1)+S1(1)") * (q - 1) ** 2
    )
    assert centre.z_generator(1, ctx) == want
    loop = CyclicContext(0, None)
    assert centre.z_generator(1, loop) == HallElement.parse(loop, "S0(1)") * (1 - q)


def test_simple_is_not_central():
    ctx = CyclicContext(1, 2)
    s0 = HallElement.parse(ctx, "S0(1)")
    rep = centre.verify_central(s0, 1, "S0")
    assert not rep.passed
    s1 = HallElement.parse(ctx, "S1(1)")
    assert s0 * s1 != s1 * s0


@pytest.mark.parametrize("qv", [2, 3, None])
def test_z_central_small(qv):
    ctx = CyclicContext(1, qv)
    z = centre.z_generator(1, ctx)
    assert centre.verify_central(z, 3).passed
    assert centre.verify_kernel(z).passed


def test_z_central_three_vertices():
    ctx = CyclicContext(2, 2)
    assert centre.verify_central(centre.z_generator(1, ctx), 4).passed


def test_leading_terms():
    assert centre.verify_leading_terms((2, 1), CyclicContext(1, 2)).passed
    assert centre.verify_leading_terms((1, 1), CyclicContext(2, 2)).passed


def test_partition_leq():
    assert centre.partition_leq((2, 1), (2, 1))
    assert centre.partition_leq((2, 2), (2, 1, 1))  # larger first difference is smaller
    assert not centre.partition_leq((2, 1, 1), (2, 2))


def test_centre_dimensions():
    rep = centre.verify_centre_dim((2,), 3)
    assert rep.passed, rep.failures()
    ctx = CyclicContext(1, 2)
    assert centre.centre_dimension(ctx, (1, 0), 2) == 0
    assert centre.centre_dimension(ctx, (1, 1), 2) == 1


def test_commutant_generic_rejected():
    with pytest.raises(ValueError):
        centre.commutant(CyclicContext(1, None), (1, 1), 2)


def test_ext_lemma():
    assert centre.verify_ext_lemma((1,), 4, 2).passed
    assert centre.verify_ext_lemma((0, 2), 3, 3).passed


def test_Z_lemma():
    assert centre.verify_Z_lemma(1, 5).passed
    assert centre.verify_Z_lemma(0, 4).passed
    assert centre.verify_Z_lemma(2, 5).passed
