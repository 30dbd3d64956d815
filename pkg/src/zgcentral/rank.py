"""Rank of the group of central units of ZG.

Per classified pair the center of the associated simple component is a
field of degree phi([H:K]) / prod [C_i:H_i]; its unit group contributes
that degree divided by k (1 if the field is totally real, else 2) minus
one to the rank.  The independent oracle counts real minus rational
conjugacy classes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import euler_phi
from .errors import DivisibilityViolation, IncompleteSet
from .groupalgebra import QGElement, center_component_dim
from .groups import conjugacy_partition
from .shoda import induced_char_value


@dataclass
class RankTerm:
    pair: object
    index_HK: int
    chain_indices: list
    k: int
    term: int


@dataclass
class RankReport:
    terms: list
    total: int
    oracle_total: int

    @property
    def agree(self):
        return self.total == self.oracle_total


def k_of_pair(G, pair):
    """1 if the induced character is real-valued (totally real center),
    else 2; decided exactly."""
    part = conjugacy_partition(G, "ordinary")
    for cl in part.classes:
        v = induced_char_value(pair.lam, G, min(cl))
        if not v.is_real():
            return 2
    return 1


def rank_term(G, pair):
    """The pair's contribution phi([H:K]) / (k * prod indices) - 1."""
    if pair.chain is None:
        raise DivisibilityViolation("pair has no verified chain")
    k = k_of_pair(G, pair)
    denom = k
    for idx in pair.chain.indices:
        denom *= idx
    phi = euler_phi(pair.index)
    if phi % denom != 0:
        raise DivisibilityViolation(
            f"phi({pair.index}) = {phi} not divisible by {denom}"
        )
    return RankTerm(
        pair=pair,
        index_HK=pair.index,
        chain_indices=list(pair.chain.indices),
        k=k,
        term=phi // denom - 1,
    )


def rank_total(G, pairs, complete=None):
    """Sum of rank terms over a complete irredundant set, with oracle."""
    if complete is None:
        total = QGElement.zero(G)
        for p in pairs:
            total = total + p.pci
        complete = total == QGElement.one(G)
    if not complete:
        raise IncompleteSet("pair set does not cover the group algebra")
    terms = [rank_term(G, p) for p in pairs]
    return RankReport(
        terms=terms,
        total=sum(t.term for t in terms),
        oracle_total=rank_oracle(G),
    )


def rank_oracle(G):
    """Number of real conjugacy classes minus number of rational ones."""
    real = conjugacy_partition(G, "real")
    rational = conjugacy_partition(G, "rational")
    return len(real.classes) - len(rational.classes)


def verify_center_degree(G, pair):
    """Exact check that dim_Q of the component's center matches
    phi([H:K]) / prod [C_i:H_i]."""
    if pair.chain is None:
        return False
    denom = 1
    for idx in pair.chain.indices:
        denom *= idx
    phi = euler_phi(pair.index)
    if phi % denom != 0:
        return False
    return center_component_dim(pair.pci) == phi // denom
