"""Rank formula, oracle, k-decision, center-degree identity."""

import pytest

from zgcentral.catalog import cyclic, get_group, quaternion8, symmetric
from zgcentral.cyclotomic import euler_phi
from zgcentral.errors import IncompleteSet
from zgcentral.groups import conjugacy_partition
from zgcentral.rank import (
    k_of_pair,
    rank_oracle,
    rank_term,
    rank_total,
    verify_center_degree,
)
from zgcentral.shoda import complete_irredundant_set


def pairs_of(G):
    pairs, complete = complete_irredundant_set(G)
    assert complete
    return pairs


# -- oracle --------------------------------------------------------------------


def test_oracle_values():
    assert rank_oracle(cyclic(5)) == 3 - 2
    assert rank_oracle(quaternion8()) == 0
    assert rank_oracle(cyclic(1)) == 0
    assert rank_oracle(symmetric(3)) == 0


# -- k decision ----------------------------------------------------------------


def test_k_trivial_pair(s3):
    p = next(p for p in pairs_of(s3) if p.H.order == p.K.order == 6)
    assert k_of_pair(s3, p) == 1


def test_k_c5(c5):
    p = next(p for p in pairs_of(c5) if p.index == 5)
    assert k_of_pair(c5, p) == 2  # the faithful character is not real


def test_k_odd_order_rule():
    # odd-order groups: every nontrivial pair has k = 2
    for n in (3, 5, 7, 9, 15):
        G = cyclic(n)
        for p in pairs_of(G):
            expected = 1 if p.index == 1 else 2
            assert k_of_pair(G, p) == expected


# -- terms and totals ----------------------------------------------------------


def test_rank_term_c5(c5):
    p = next(p for p in pairs_of(c5) if p.index == 5)
    t = rank_term(c5, p)
    assert (t.k, t.chain_indices, t.term) == (2, [1], 1)


def test_rank_total_c5(c5):
    rep = rank_total(c5, pairs_of(c5))
    assert sorted(t.term for t in rep.terms) == [0, 1]
    assert rep.total == 1 and rep.agree


def test_rank_total_s3(s3):
    rep = rank_total(s3, pairs_of(s3))
    assert rep.total == 0 and rep.agree


def test_rank_total_requires_completeness(s3):
    with pytest.raises(IncompleteSet):
        rank_total(s3, pairs_of(s3)[:1])


def test_term_nonnegative_across_corpus():
    for name in ("C8", "C12", "D4", "D6", "Q8", "A4", "S4"):
        G = get_group(name)
        for t in rank_total(G, pairs_of(G)).terms:
            assert t.term >= 0


# -- center-degree identity ----------------------------------------------------


def test_center_degree_examples(s3, c4):
    for G in (s3, c4):
        for p in pairs_of(G):
            assert verify_center_degree(G, p)


def test_center_degree_values(s3, c4):
    p = next(p for p in pairs_of(s3) if p.H.order == 3)
    assert euler_phi(p.index) // p.chain.indices[0] == 1
    p = next(p for p in pairs_of(c4) if p.index == 4)
    assert euler_phi(p.index) == 2


# -- cross-validation ----------------------------------------------------------


def test_oracle_equals_formula_on_mixed_corpus():
    for name in ("C6", "C10", "D5", "Q16", "E9", "A4"):
        G = get_group(name)
        rep = rank_total(G, pairs_of(G))
        assert rep.agree, name


def test_oracle_is_class_count_difference():
    for name in ("C12", "D4", "S4"):
        G = get_group(name)
        real = len(conjugacy_partition(G, "real").classes)
        rational = len(conjugacy_partition(G, "rational").classes)
        assert rank_oracle(G) == real - rational
