"""Exact cyclotomic arithmetic, Galois action, realness, embeddings."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zgcentral.cyclotomic import (
    Cyclotomic,
    GaloisMap,
    cyc,
    cyclotomic_polynomial,
    euler_phi,
    galois_apply,
    galois_group,
    trace_to_q,
)
from zgcentral.errors import BadExponent, DivisionByZero


def test_identity_values():
    assert cyc(1, 0) == Cyclotomic.rational(1)
    assert euler_phi(1) == 1
    assert [euler_phi(n) for n in (2, 4, 5, 8, 10, 12)] == [1, 2, 4, 4, 4, 4]


def test_i_squared():
    assert cyc(4, 1) ** 2 == Cyclotomic.rational(-1)


def test_vanishing_geometric_sum():
    total = Cyclotomic.rational(1)
    for k in range(1, 5):
        total = total + cyc(5, k)
    assert total.is_zero()


def test_prime_basis_dimension():
    for p in (3, 5, 7, 11):
        assert len(cyc(p, 1).c) == p - 1
        # zeta_p^(p-1) = -(1 + zeta_p + ... + zeta_p^(p-2))
        reduced = cyc(p, p - 1)
        expected = Cyclotomic.from_powers(p, {k: -1 for k in range(p - 1)})
        assert reduced == expected


def test_cyclotomic_polynomial_values():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_galois_identity_and_conjugation():
    x = cyc(5, 1) + cyc(5, 3) * 2
    assert galois_apply(GaloisMap(5, 1), x) == x
    assert x.conjugate() == galois_apply(GaloisMap(5, 4), x)


def test_galois_group_size():
    assert len(galois_group(12)) == 4
    with pytest.raises(BadExponent):
        GaloisMap(6, 3)


def test_trace_of_primitive_root():
    # independent derivation: the primitive 5th roots sum to mu(5) = -1
    assert trace_to_q(cyc(5, 1)) == Fraction(-1)
    assert trace_to_q(cyc(4, 1)) == Fraction(0)
    assert trace_to_q(Cyclotomic.rational(3, 5)) == Fraction(12)  # 3 * phi(5)


def test_realness():
    assert (cyc(5, 1) + cyc(5, 4)).is_real()
    assert not cyc(4, 1).is_real()
    assert Cyclotomic.rational(7).is_real()


def test_embeddings_of_zeta3():
    vals = sorted(cyc(3, 1).embeddings(), key=lambda z: z.imag)
    assert abs(vals[0] - (-0.5 - 0.8660254j)) < 1e-6
    assert abs(vals[1] - (-0.5 + 0.8660254j)) < 1e-6


def test_realness_matches_embeddings():
    samples = [
        cyc(5, 1) + cyc(5, 4),
        cyc(8, 1) - cyc(8, 7),
        cyc(12, 1) * cyc(12, 11),
        cyc(7, 2),
    ]
    for x in samples:
        numeric = all(abs(z.imag) < 1e-9 for z in x.embeddings())
        assert x.is_real() == numeric


def test_inverse_of_zero_rejected():
    with pytest.raises(DivisionByZero):
        Cyclotomic.zero(5).inv()


def test_mixed_conductor_arithmetic():
    assert cyc(2, 1) == Cyclotomic.rational(-1)
    assert cyc(3, 1) * cyc(4, 1) == cyc(12, 7)


small_elt = st.builds(
    lambda coeffs: Cyclotomic.from_powers(12, dict(enumerate(coeffs))),
    st.lists(st.integers(-4, 4), min_size=1, max_size=4),
)


@settings(max_examples=50, deadline=None)
@given(small_elt, small_elt, small_elt)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)


@settings(max_examples=40, deadline=None)
@given(small_elt)
def test_inverse_roundtrip(x):
    if not x.is_zero():
        assert x * x.inv() == Cyclotomic.rational(1)


@settings(max_examples=40, deadline=None)
@given(small_elt, small_elt, st.sampled_from([1, 5, 7, 11]))
def test_galois_is_ring_hom(a, b, m):
    sigma = GaloisMap(12, m)
    assert sigma(a + b) == sigma(a) + sigma(b)
    assert sigma(a * b) == sigma(a) * sigma(b)
    assert sigma(Cyclotomic.rational(3, 12)) == Cyclotomic.rational(3, 12)
