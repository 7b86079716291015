import numpy as np
import pytest
from hypothesis import given, strategies as st

from hallwright import _kernels as K
from hallwright.fields import SUPPORTED_ORDERS, field


@pytest.mark.parametrize("q", SUPPORTED_ORDERS)
def test_field_axioms(q):
    F = field(q)
    r = range(q)
    for a in r:
        assert F.add[a, F.neg[a]] == 0
        if a:
            assert F.mul[a, F.inv[a]] == 1
        for b in r:
            assert F.add[a, b] == F.add[b, a]
            assert F.mul[a, b] == F.mul[b, a]
            for c in r:
                assert F.mul[a, F.add[b, c]] == F.add[F.mul[a, b], F.mul[a, c]]


def _rank_oracle(mat, F):
    """Rank by counting the image: |{xM}| = q^rank."""
    m, n = mat.shape
    import itertools

    images = set()
    for x in itertools.product(range(F.q), repeat=m):
        v = [0] * n
        for i, c in enumerate(x):
            for j in range(n):
                v[j] = F.add[v[j], F.mul[c, mat[i, j]]]
        images.add(tuple(v))
    k = 0
    while F.q**k < len(images):
        k += 1
    return k


@pytest.mark.parametrize("q", [2, 3, 4])
@given(data=st.data())
def test_rank_against_image_count(q, data):
    F = field(q)
    m = data.draw(st.integers(1, 3))
    n = data.draw(st.integers(1, 3))
    mat = np.array(data.draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n), min_size=m, max_size=m)))
    assert K.rank(mat, F) == _rank_oracle(mat, F)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_rref_is_reduced(q):
    F = field(q)
    rng = np.random.default_rng(7)
    for _ in range(20):
        mat = rng.integers(0, q, size=(3, 5))
        red, piv = K.rref(mat, F)
        for i, p in enumerate(piv):
            assert red[i, p] == 1
            assert all(red[k, p] == 0 for k in range(red.shape[0]) if k != i)


def test_backend_flag_reported():
    assert K.backend() in ("numba", "numpy")
