"""Units of the integral group ring: Bass units, generalized Bass units,
and the two averaging constructions that push central units of a subring
up into the center of ZG.

The z-construction walks a strong inductive chain, conjugate-averaging
over the level centralizers; the c-construction walks a subnormal series,
conjugate-averaging over transversals.  A numerical log-embedding witness
measures the multiplicative rank of a set of central units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from .cyclotomic import Cyclotomic
from .errors import (
    BadCongruence,
    IncompleteSet,
    InternalBoundExceeded,
    NotInvertible,
    NotNormal,
    PreconditionFailed,
    ZgError,
)
from .groupalgebra import (
    QGElement,
    hat,
    epsilon,
    is_central,
    mul,
    qg_inverse,
)
from .groups import conjugacy_partition, is_normal, right_transversal
from .shoda import induced_char_value


@dataclass(frozen=True)
class BassSpec:
    """Parameters (g, k, m) with k**m = 1 mod |g| and 1 <= k < |g|
    (k = 1 is allowed for any g, including the identity)."""

    g: int
    k: int
    m: int


def validate_bass_spec(G, spec):
    d = int(G.element_orders[spec.g])
    if spec.k < 1 or (spec.k >= d and spec.k != 1):
        raise BadCongruence(f"k={spec.k} out of range for |g|={d}")
    if spec.m < 1 or pow(spec.k, spec.m, d) != 1 % d:
        raise BadCongruence(f"{spec.k}^{spec.m} != 1 mod {d}")
    return d


def _cyclic_convolve(a, b, d):
    out = [0] * d
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[(i + j) % d] += x * y
    return out


@lru_cache(maxsize=None)
def _bass_coeffs(d, k, m):
    """Coefficients of (1 + x + ... + x^(k-1))^m + ((1 - k^m)/d) (1 + ... +
    x^(d-1)) in Z[x]/(x^d - 1).  The unit only depends on g through d."""
    geo = [0] * d
    for i in range(k):
        geo[i % d] += 1
    acc = [0] * d
    acc[0] = 1
    e = m
    while e:
        if e & 1:
            acc = _cyclic_convolve(acc, geo, d)
        e >>= 1
        if e:
            geo = _cyclic_convolve(geo, geo, d)
    corr = (1 - k**m) // d
    return tuple(a + corr for a in acc)


@lru_cache(maxsize=None)
def _bass_inverse_coeffs(d, k, m):
    """Coefficients (along powers of x) of the inverse u_{k', m} taken at
    x^k, where k k' = 1 mod d; verified by an exact convolution."""
    k_inv = pow(k, -1, d) if d > 1 else 1
    vk = _bass_coeffs(d, k_inv, m)
    v = [0] * d
    for i, c in enumerate(vk):
        v[(k * i) % d] += c
    prod = _cyclic_convolve(_bass_coeffs(d, k, m), v, d)
    if prod[0] != 1 or any(prod[1:]):
        raise NotInvertible("closed-form Bass inverse identity failed")
    return tuple(v)


def _place_on_powers(G, g, d, coeffs):
    out = {}
    for i, c in enumerate(coeffs):
        if c:
            out[G.power(g, i)] = Fraction(c)
    return QGElement(G, out)


def bass_unit(G, spec):
    """(1 + g + ... + g^(k-1))^m + ((1 - k^m)/|g|) (1 + g + ... + g^(|g|-1))."""
    d = validate_bass_spec(G, spec)
    return _place_on_powers(G, spec.g, d, _bass_coeffs(d, spec.k, spec.m))


def bass_inverse(G, spec):
    """The explicit inverse u_{k', m}(g^k) with k k' = 1 mod |g|.

    Raises NotInvertible if the product with the unit is not 1 in
    Z[x]/(x^|g| - 1) (cannot happen for a valid spec; kept as a hard
    check)."""
    d = validate_bass_spec(G, spec)
    return _place_on_powers(G, spec.g, d, _bass_inverse_coeffs(d, spec.k, spec.m))


def bass_specs_for(G, g):
    """Canonical sweep: every k in [1, |g|) coprime to |g|, with m the
    multiplicative order of k mod |g|."""
    d = int(G.element_orders[g])
    out = []
    for k in range(1, d):
        if gcd(k, d) != 1:
            continue
        m, kk = 1, k % d
        while kk != 1 % d:
            kk = kk * k % d
            m += 1
        out.append(BassSpec(g=g, k=k, m=m))
    return out or [BassSpec(g=g, k=1, m=1)]


@dataclass
class GenBassUnit:
    spec: BassSpec
    M: object  # Subgroup
    n_b: int
    value: QGElement  # integral


def gen_bass_unit(G, g, M, k, m, cap=10**4):
    """Minimal power of 1 - hat(M) + u_{k,m}(g) hat(M) that is a unit of ZG.

    Returns the GenBassUnit together with a verification that the closed
    form 1 - hat(M) + u_{k, m n_b}(g) hat(M) matches exactly.
    """
    if not is_normal(M, G.whole()):
        raise NotNormal("M must be normal in G")
    spec = BassSpec(g=g, k=k, m=m)
    validate_bass_spec(G, spec)
    hm = hat(M)
    b = QGElement.one(G) - hm + mul(bass_unit(G, spec), hm)
    p = b
    for n in range(1, cap + 1):
        if p.is_integral():
            try:
                inv = qg_inverse(p)
            except NotInvertible:
                inv = None
            if inv is not None and inv.is_integral():
                closed = (
                    QGElement.one(G)
                    - hm
                    + mul(bass_unit(G, BassSpec(g=g, k=k, m=m * n)), hm)
                )
                if closed != p:
                    raise ZgError("closed-form identity failed for a power")
                return GenBassUnit(spec=spec, M=M, n_b=n, value=p)
        p = mul(p, b)
    raise InternalBoundExceeded(f"no unit power found within {cap} steps")


# -- verification predicates ---------------------------------------------------


def is_unit_of_zg(v):
    if not v.is_integral():
        return False
    try:
        return qg_inverse(v).is_integral()
    except NotInvertible:
        return False


def is_central_unit(v):
    """Integral, commutes with every group generator, integral inverse."""
    return v.is_integral() and is_central(v) and is_unit_of_zg(v)


@dataclass
class CentralUnit:
    value: QGElement
    provenance: str
    inputs: dict = field(default_factory=dict)


# -- the z- and c-constructions ------------------------------------------------


def _require_central_unit_of_subring(u, H, label):
    if not set(u.support) <= H.members:
        raise PreconditionFailed(f"{label} is not supported inside the base subgroup")
    if not u.is_integral():
        raise PreconditionFailed(f"{label} has non-integer coefficients")
    for h in H.gens or [0]:
        if u.conj(h) != u:
            raise PreconditionFailed(f"{label} is not central in the base subring")
    try:
        uinv = qg_inverse(u)
    except NotInvertible:
        raise PreconditionFailed(f"{label} is not invertible")
    if not uinv.is_integral():
        raise PreconditionFailed(f"{label} is not a unit of the integral subring")
    return uinv


def _integer_multiple_of(p, w):
    """The integer c with p = c*w, or None."""
    if w.is_zero():
        return 0 if p.is_zero() else None
    g0 = next(iter(w.coeffs))
    c = p.coeffs.get(g0, Fraction(0)) / w.coeffs[g0]
    if c.denominator != 1 or p != w.scale(c):
        return None
    return int(c)


def _ordered_product(factors):
    out = None
    for f in factors:
        out = f if out is None else mul(out, f)
    return out if out is not None else None


def z_central_unit(u, pair):
    """Push a central unit of the base subring up the pair's strong
    inductive chain; the result is a verified central unit of ZG."""
    if pair.chain is None:
        raise PreconditionFailed("pair has no verified chain")
    H = pair.H
    G = H.parent
    uinv = _require_central_unit_of_subring(u, H, "u")
    eps = epsilon(H, pair.K)
    one_minus = QGElement.one(G) - eps
    for v, label in ((u, "u"), (uinv, "u inverse")):
        if _integer_multiple_of(v - mul(v, eps), one_minus) is None:
            raise PreconditionFailed(
                f"{label} does not split as Z(1-e) + (subring)e"
            )
    z = u
    for i in range(pair.chain.length):
        base = pair.chain.steps[i]
        cen = pair.chain.centralizers[i]
        if any(z.conj(h) != z for h in base.gens or [0]):
            raise PreconditionFailed("intermediate value lost centrality")
        inner = _ordered_product(
            [(z**base.order).conj(d) for d in right_transversal(base, cen)]
        )
        z = _ordered_product(
            [inner.conj(t) for t in pair.chain.transversals[i]]
        )
    if not is_central_unit(z):
        raise ZgError("construction output failed the central-unit check")
    return CentralUnit(
        value=z,
        provenance="z-construction",
        inputs={"pair": pair, "base_support": sorted(u.support)},
    )


def c_central_unit(u, series, transversals=None):
    """Push a central unit of the base subring up a subnormal series by
    transversal products; independent of the transversal choices."""
    steps = series.steps
    H = steps[0]
    _require_central_unit_of_subring(u, H, "u")
    c = u
    for i in range(len(steps) - 1):
        if transversals is not None:
            reps = transversals[i]
        else:
            reps = right_transversal(steps[i], steps[i + 1])
        c = _ordered_product([c.conj(t) for t in reps])
    if not is_central_unit(c):
        raise ZgError("construction output failed the central-unit check")
    return CentralUnit(
        value=c,
        provenance="c-construction",
        inputs={"series_orders": [s.order for s in steps]},
    )


def random_right_transversal(H, within, rng):
    """A right transversal of H in `within` with random representatives."""
    G = H.parent
    reps = right_transversal(H, within)
    hs = sorted(H.members)
    return [G.mul(hs[rng.randrange(len(hs))], t) for t in reps]


# -- numerical rank witness ----------------------------------------------------


def central_character_value(G, pair, v, class_values=None, partition=None):
    """The scalar by which v acts on the pair's simple component:
    sum of coeff_v(g) * induced(g), divided by the character degree."""
    if partition is None:
        partition = conjugacy_partition(G, "ordinary")
    if class_values is None:
        class_values = [
            induced_char_value(pair.lam, G, min(cl)) for cl in partition.classes
        ]
    total = Cyclotomic.zero(pair.lam.order)
    for g, q in v.coeffs.items():
        total = total + class_values[partition.class_of[g]] * q
    degree = class_values[partition.class_of[0]].as_rational()
    return total / degree


def log_rank_witness(G, units, pairs, tolerance=1e-6):
    """Rank of the subgroup generated by `units` modulo torsion, measured
    through archimedean log-embeddings of their central characters."""
    total = QGElement.zero(G)
    for p in pairs:
        total = total + p.pci
    if total != QGElement.one(G):
        raise IncompleteSet("pair set does not cover the group algebra")
    if not units:
        return 0
    partition = conjugacy_partition(G, "ordinary")
    per_pair_values = [
        [induced_char_value(p.lam, G, min(cl)) for cl in partition.classes]
        for p in pairs
    ]
    rows = []
    for cu in units:
        row = []
        for p, cvals in zip(pairs, per_pair_values):
            omega = central_character_value(
                G, p, cu.value, class_values=cvals, partition=partition
            )
            for z in omega.embeddings():
                row.append(math.log(abs(z)))
        rows.append(row)
    sv = np.linalg.svd(np.array(rows, dtype=float), compute_uv=False)
    return int(np.sum(sv > tolerance))
