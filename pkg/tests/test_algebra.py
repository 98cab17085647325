import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import sig
from cosconv import (
    Group,
    Signal,
    anticonvolve,
    convolve,
    cosine_convolve,
    is_even,
    l1_norm,
    reflect,
    symmetrize,
    translate,
)

Z4 = Group.cyclic(4)


def delta(i, g=Z4):
    return Signal.delta(g, i)


def test_signal_validation():
    with pytest.raises(ValueError):
        Signal(Z4, [1, 2, 3])
    f = sig(Z4, [1, 2, 3, 4])
    with pytest.raises(ValueError):
        f.values[0] = 9
    assert Signal(Z4, [1, 2, 3, 4]).values.dtype == np.float64
    assert Signal(Z4, [1j, 0, 0, 0]).values.dtype == np.complex128


@pytest.mark.parametrize("f, expected", [
    (delta(0), 1.0),
    (sig(Z4, [1, -2, 3, -4]), 10.0),
    (Signal(Group.circle(8), np.ones(8)), 1.0),
])
def test_l1_norm(f, expected):
    assert l1_norm(f) == expected


def test_translate_and_reflect():
    np.testing.assert_array_equal(translate(delta(0), 1).values, delta(1).values)
    np.testing.assert_array_equal(translate(sig(Z4, [1, 2, 3, 4]), 2).values, [3, 4, 1, 2])
    np.testing.assert_array_equal(reflect(delta(1)).values, delta(3).values)


def test_translate_windowed_zero_extends():
    g = Group.integers(2)
    f = sig(g, [1, 2, 3, 4, 5])
    np.testing.assert_array_equal(translate(f, 1).values, [0, 1, 2, 3, 4])
    np.testing.assert_array_equal(translate(f, -2).values, [3, 4, 5, 0, 0])


def test_symmetrize_and_evenness():
    np.testing.assert_array_equal(symmetrize(sig(Z4, [0, 1, 0, 0])).values, [0, 1, 0, 1])
    e = sig(Z4, [2, 1, 5, 1])
    np.testing.assert_array_equal(symmetrize(e).values, 2 * e.values)
    assert is_even(symmetrize(sig(Z4, [0.3, 1.7, -2, 9])), tol=0)
    assert not is_even(delta(1))
    assert is_even(delta(2))


def test_convolution_examples():
    for a in range(4):
        for b in range(4):
            np.testing.assert_array_equal(convolve(delta(a), delta(b)).values, delta((a + b) % 4).values)
            np.testing.assert_array_equal(anticonvolve(delta(a), delta(b)).values, delta((b - a) % 4).values)
    g = sig(Z4, [0.5, -1, 2, 7])
    np.testing.assert_array_equal(convolve(delta(0), g).values, g.values)
    np.testing.assert_array_equal(cosine_convolve(delta(0), g).values, g.values)
    x = sig(Z4, [1, 1, 0, 0])
    np.testing.assert_array_equal(convolve(x, x).values, [1, 2, 1, 0])


def test_anticonvolution_is_not_commutative():
    np.testing.assert_array_equal(anticonvolve(delta(1), delta(0)).values, delta(3).values)
    np.testing.assert_array_equal(anticonvolve(delta(0), delta(1)).values, delta(1).values)


def test_cosine_convolution_example():
    np.testing.assert_array_equal(cosine_convolve(delta(1), delta(1)).values, [0.5, 0, 0.5, 0])


def test_group_mismatch():
    with pytest.raises(ValueError, match="group mismatch"):
        convolve(delta(0), Signal.delta(Group.cyclic(5), 0))


GROUPS = [Group.cyclic(1), Group.cyclic(5), Group.cyclic(8), Group.circle(6),
          Group.integers(3), Group.real(1, 0.25)]


def _arrays(g):
    return st.lists(st.floats(-10, 10, allow_nan=False), min_size=g.size, max_size=g.size)


@st.composite
def pair(draw):
    g = draw(st.sampled_from(GROUPS))
    return g, Signal(g, draw(_arrays(g))), Signal(g, draw(_arrays(g)))


@st.composite
def triple(draw):
    g, f, h = draw(pair())
    return g, f, h, Signal(g, draw(_arrays(g)))


@settings(max_examples=60)
@given(pair())
def test_products_match_brute_force(p):
    g, f, h = p
    args = (f.values.tolist(), h.values.tolist())
    kw = dict(origin=g.origin, periodic=g.periodic, weight=g.weight)
    np.testing.assert_allclose(convolve(f, h).values, oracles.product(*args, -1, **kw), atol=1e-11)
    np.testing.assert_allclose(anticonvolve(f, h).values, oracles.product(*args, +1, **kw), atol=1e-11)
    np.testing.assert_allclose(cosine_convolve(f, h).values, oracles.cosine_product(*args, **kw), atol=1e-11)


@given(pair())
def test_mean_identity_is_exact(p):
    _, f, h = p
    mean = (convolve(f, h).values + anticonvolve(f, h).values) / 2
    np.testing.assert_array_equal(cosine_convolve(f, h).values, mean)


@given(pair())
def test_anticonvolution_swap_reflects(p):
    g, f, h = p
    if not g.periodic:
        return  # truncation breaks the identity at the window edge
    np.testing.assert_allclose(anticonvolve(f, h).values, reflect(anticonvolve(h, f)).values, atol=1e-10)


@given(pair())
def test_convolution_commutes_on_periodic_groups(p):
    g, f, h = p
    if g.periodic:
        np.testing.assert_allclose(convolve(f, h).values, convolve(h, f).values, atol=1e-10)


@given(pair())
def test_norm_is_submultiplicative(p):
    _, f, h = p
    scale = 1 + l1_norm(f) * l1_norm(h)
    assert l1_norm(cosine_convolve(f, h)) <= l1_norm(f) * l1_norm(h) + 1e-10 * scale
    assert l1_norm(convolve(f, h)) <= l1_norm(f) * l1_norm(h) + 1e-10 * scale


@given(triple())
def test_bilinearity(t):
    _, f, h, k = t
    np.testing.assert_allclose(cosine_convolve(f + k, h).values,
                               (cosine_convolve(f, h) + cosine_convolve(k, h)).values, atol=1e-9)
    np.testing.assert_allclose(cosine_convolve(f, 2.5 * h).values,
                               2.5 * cosine_convolve(f, h).values, atol=1e-9)


@given(pair())
def test_cosine_product_ignores_odd_part_of_f(p):
    g, f, h = p
    if g.periodic:
        np.testing.assert_allclose(cosine_convolve(f, h).values,
                                   cosine_convolve(reflect(f), h).values, atol=1e-10)


@given(triple())
def test_cosine_product_with_even_factor_is_commutative_and_associative(t):
    g, f, h, k = t
    if not g.periodic:
        return
    f, h, k = symmetrize(f), symmetrize(h), symmetrize(k)
    np.testing.assert_allclose(cosine_convolve(f, h).values, cosine_convolve(h, f).values, atol=1e-9)
    lhs = cosine_convolve(cosine_convolve(f, h), k).values
    rhs = cosine_convolve(f, cosine_convolve(h, k)).values
    np.testing.assert_allclose(lhs, rhs, atol=1e-8)


@given(pair())
def test_nonnegative_norm_equality(p):
    g, f, h = p
    if not g.periodic:
        return
    f, h = Signal(g, np.abs(f.values)), Signal(g, np.abs(h.values))
    gap = abs(l1_norm(cosine_convolve(f, h)) - l1_norm(f) * l1_norm(h))
    assert gap <= 1e-12 * (1 + l1_norm(f) * l1_norm(h))
