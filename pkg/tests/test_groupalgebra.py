"""Group-algebra arithmetic: idempotents, products, inverses, center."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zgcentral.catalog import cyclic, symmetric
from zgcentral.errors import GroupMismatch, NotInvertible, NotNormal
from zgcentral.groupalgebra import (
    QGElement,
    ZGElement,
    center_basis,
    center_component_dim,
    centralizer_of,
    conjugate_orbit,
    e_sum_conjugates,
    epsilon,
    hat,
    is_central,
    is_idempotent,
    mul,
    qg_inverse,
)
from zgcentral.groups import (
    Subgroup,
    conjugacy_partition,
    derived_subgroup,
    subgroup_closure,
)


def elem(G, g):
    return QGElement.element(G, g)


# -- hat and epsilon -----------------------------------------------------------


def test_hat_trivial(s3):
    assert hat(Subgroup(s3, {0})) == QGElement.one(s3)


def test_hat_c2():
    from zgcentral.catalog import cyclic

    C2 = cyclic(2)
    h = hat(C2.whole())
    assert h.coeffs == {0: Fraction(1, 2), 1: Fraction(1, 2)}
    assert is_idempotent(h)


def test_hat_absorption(s3):
    A3 = derived_subgroup(s3.whole())
    h = hat(A3)
    for g in A3.members:
        assert mul(elem(s3, g), h) == h


def test_epsilon_h_equals_k(c4):
    H = c4.whole()
    assert epsilon(H, H) == hat(H)


def test_epsilon_c4():
    C4 = cyclic(4)
    g = next(x for x in range(4) if C4.element_orders[x] == 4)
    g2 = C4.mul(g, g)
    eps = epsilon(C4.whole(), Subgroup(C4, {0}))
    expected = QGElement.one(C4) - hat(Subgroup(C4, {0, g2}))
    assert eps == expected
    assert is_idempotent(eps)


def test_epsilon_a3_in_s3(s3):
    A3 = derived_subgroup(s3.whole())
    eps = epsilon(A3, Subgroup(s3, {0}))
    assert eps == QGElement.one(s3) - hat(A3)


def test_epsilon_requires_normal(s3):
    refl = next(g for g in range(6) if s3.element_orders[g] == 2)
    with pytest.raises(NotNormal):
        epsilon(s3.whole(), subgroup_closure(s3, [refl]))


def test_e_sum_conjugates_s3(s3):
    A3 = derived_subgroup(s3.whole())
    e = e_sum_conjugates(s3.whole(), A3, Subgroup(s3, {0}))
    assert e == QGElement.one(s3) - hat(A3)  # epsilon already G-invariant


def test_e_sum_conjugates_abelian(c4):
    K = Subgroup(c4, {0})
    assert e_sum_conjugates(c4.whole(), c4.whole(), K) == epsilon(c4.whole(), K)


def test_orthogonality_c4():
    C4 = cyclic(4)
    eps = epsilon(C4.whole(), Subgroup(C4, {0}))
    assert mul(eps, hat(C4.whole())).is_zero()


# -- ring operations -----------------------------------------------------------


def test_conj_by_identity(s3):
    a = elem(s3, 1) + elem(s3, 3).scale(2)
    assert a.conj(0) == a


def test_conj_composition(s3):
    a = elem(s3, 1) - elem(s3, 4)
    for g in range(6):
        for h in range(6):
            assert a.conj(g).conj(h) == a.conj(s3.mul(g, h))


def test_group_mismatch(s3, c4):
    with pytest.raises(GroupMismatch):
        mul(QGElement.one(s3), QGElement.one(c4))


def test_zg_element_rejects_fractions(s3):
    with pytest.raises(ValueError):
        ZGElement(s3, {0: Fraction(1, 2)})


sparse = st.dictionaries(
    st.integers(0, 5), st.fractions(max_denominator=3), max_size=4
)


@settings(max_examples=50, deadline=None)
@given(sparse, sparse, sparse)
def test_ring_axioms(ca, cb, cc):
    G = symmetric(3)
    a, b, c = (QGElement(G, d) for d in (ca, cb, cc))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a + b, c) == mul(a, c) + mul(b, c)


@settings(max_examples=30, deadline=None)
@given(sparse, st.integers(0, 5))
def test_conj_is_ring_automorphism(ca, g):
    G = symmetric(3)
    a = QGElement(G, ca)
    assert mul(a.conj(g), a.conj(g)) == mul(a, a).conj(g)


# -- inverses ------------------------------------------------------------------


def test_inverse_of_one(s3):
    assert qg_inverse(QGElement.one(s3)) == QGElement.one(s3)


def test_inverse_of_group_element(s3):
    for g in range(6):
        assert qg_inverse(elem(s3, g)) == elem(s3, int(s3.inv[g]))


def test_hat_not_invertible(s3):
    A3 = derived_subgroup(s3.whole())
    with pytest.raises(NotInvertible):
        qg_inverse(hat(A3))


def test_inverse_roundtrip(s3):
    a = QGElement.one(s3) + elem(s3, 1).scale(3)  # 1 + 3g is invertible in QS3
    inv = qg_inverse(a)
    assert mul(a, inv) == QGElement.one(s3)
    assert mul(inv, a) == QGElement.one(s3)


# -- centralizers and center ---------------------------------------------------


def test_centralizer_of_one(s3):
    assert centralizer_of(QGElement.one(s3), s3.whole()).members == set(range(6))


def test_centralizer_of_central_idempotent(s3):
    A3 = derived_subgroup(s3.whole())
    eps = epsilon(A3, Subgroup(s3, {0}))
    assert centralizer_of(eps, s3.whole()).order == 6
    assert is_central(eps)


def test_conjugate_orbit_size(s3):
    refl = next(g for g in range(6) if s3.element_orders[g] == 2)
    orbit = conjugate_orbit(elem(s3, refl), s3.whole())
    assert len(orbit) == 3  # the three reflections


def test_center_basis_dimension(s3):
    assert len(center_basis(s3)) == len(conjugacy_partition(s3).classes)


def test_center_component_dims():
    S3 = symmetric(3)
    C4 = cyclic(4)
    assert center_component_dim(hat(S3.whole())) == 1
    A3 = derived_subgroup(S3.whole())
    assert center_component_dim(QGElement.one(S3) - hat(A3)) == 1
    eps = epsilon(C4.whole(), Subgroup(C4, {0}))
    assert center_component_dim(eps) == 2  # the component is an imaginary quadratic field


def test_center_dims_and_component_counts():
    # the component centers tile Z(QG): dimensions sum to the ordinary
    # class count, and there is one component per rational class
    for G in (symmetric(3), cyclic(4), cyclic(6)):
        from zgcentral.shoda import complete_irredundant_set

        pairs, complete = complete_irredundant_set(G)
        assert complete
        total = sum(center_component_dim(p.pci) for p in pairs)
        assert total == len(conjugacy_partition(G, "ordinary").classes)
        assert len(pairs) == len(conjugacy_partition(G, "rational").classes)
