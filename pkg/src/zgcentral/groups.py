"""Exact finite-group arithmetic on materialized Cayley tables.

Elements are dense indices 0..order-1 with 0 the identity.  Groups up to
order 2048 are supported; the table is kept as an int32 matrix so that
multiplication is a single lookup.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .errors import (
    CapExceeded,
    InconsistentPresentation,
    NotAGroup,
    NotNormal,
    NotSubgroup,
    NotSubnormal,
)

MAX_ORDER = 2048

_EXHAUSTIVE_ASSOC_LIMIT = 32


class FiniteGroup:
    """A finite group given by its full multiplication table.

    Immutable after construction; all derived data (inverses, element
    orders, generators, conjugacy classes) is computed eagerly or cached.
    """

    def __init__(self, table, labels=None, validate=True):
        table = np.asarray(table, dtype=np.int32)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise NotAGroup("table is not square")
        n = table.shape[0]
        if n == 0 or n > MAX_ORDER:
            raise NotAGroup(f"order {n} outside supported range 1..{MAX_ORDER}")
        if table.min() < 0 or table.max() >= n:
            raise NotAGroup("table entries out of range")
        self.order = n
        self.table = table
        self.table.setflags(write=False)
        self.labels = list(labels) if labels is not None else None
        if validate:
            self._validate()
        self.inv = self._compute_inverses()
        self.element_orders = self._compute_element_orders()
        self._generators = None
        self._conjugacy = {}

    # -- construction checks -------------------------------------------------

    def _validate(self):
        t = self.table
        n = self.order
        idperm = np.arange(n, dtype=np.int32)
        if not np.array_equal(t[0], idperm):
            raise NotAGroup("row 0 is not the identity permutation")
        if not np.array_equal(t[:, 0], idperm):
            raise NotAGroup("column 0 is not the identity permutation")
        for a in range(n):
            if len(set(t[a].tolist())) != n:
                raise NotAGroup(f"row {a} is not a permutation")
            if len(set(t[:, a].tolist())) != n:
                raise NotAGroup(f"column {a} is not a permutation")
        if n <= _EXHAUSTIVE_ASSOC_LIMIT:
            triples = itertools.product(range(n), repeat=3)
            for a, b, c in triples:
                if t[t[a, b], c] != t[a, t[b, c]]:
                    raise NotAGroup("associativity failure", witness=(a, b, c))
        else:
            # Light's test: associativity on all pairs against a generating
            # set implies full associativity.
            for g in self._greedy_generators():
                left = t[t[:, g], :]
                right = t[:, t[g, :]]
                if not np.array_equal(left, right):
                    a, b = np.argwhere(left != right)[0]
                    raise NotAGroup(
                        "associativity failure", witness=(int(a), int(g), int(b))
                    )
        for a in range(n):
            hits = np.flatnonzero(t[a] == 0)
            if hits.size != 1 or t[hits[0], a] != 0:
                raise NotAGroup(f"element {a} has no two-sided inverse")

    def _greedy_generators(self):
        gens = []
        closed = {0}
        while len(closed) < self.order:
            g = min(set(range(self.order)) - closed)
            gens.append(g)
            closed = self._closure_members(closed | {g})
        return gens

    def _closure_members(self, seed):
        t = self.table
        members = set(seed)
        frontier = list(seed)
        while frontier:
            x = frontier.pop()
            for y in tuple(members):
                for z in (int(t[x, y]), int(t[y, x])):
                    if z not in members:
                        members.add(z)
                        frontier.append(z)
        return members

    def _compute_inverses(self):
        inv = np.empty(self.order, dtype=np.int32)
        for a in range(self.order):
            inv[a] = int(np.flatnonzero(self.table[a] == 0)[0])
        inv.setflags(write=False)
        return inv

    def _compute_element_orders(self):
        orders = [1] * self.order
        for a in range(1, self.order):
            x, k = a, 1
            while x != 0:
                x = int(self.table[x, a])
                k += 1
            orders[a] = k
        return orders

    # -- basic arithmetic ----------------------------------------------------

    def mul(self, a, b):
        return int(self.table[a, b])

    def power(self, a, k):
        n = self.element_orders[a]
        k %= n
        x = 0
        for _ in range(k):
            x = int(self.table[x, a])
        return x

    def conj(self, a, g):
        """g^-1 * a * g."""
        return int(self.table[self.table[self.inv[g], a], g])

    def commutator(self, a, b):
        """a^-1 * b^-1 * a * b."""
        t = self.table
        return int(t[t[t[self.inv[a], self.inv[b]], a], b])

    def label(self, a):
        if self.labels is not None:
            return self.labels[a]
        return str(a)

    @property
    def generators(self):
        if self._generators is None:
            self._generators = self._greedy_generators()
            if not self._generators:
                self._generators = [0]
        return self._generators

    def word_power(self, a, k):
        """a^k for possibly negative k."""
        if k < 0:
            return self.power(self.inv[a], -k)
        return self.power(a, k)

    def whole(self):
        return Subgroup(self, frozenset(range(self.order)), gens=self.generators)

    def trivial(self):
        return Subgroup(self, frozenset([0]), gens=[])

    def is_abelian(self):
        return bool(np.array_equal(self.table, self.table.T))

    def exponent(self):
        e = 1
        for k in self.element_orders:
            e = e * k // gcd(e, k)
        return e


class Subgroup:
    """An immutable subgroup of a FiniteGroup, stored as a member set."""

    __slots__ = ("parent", "members", "sorted_members", "_gens")

    def __init__(self, parent, members, gens=None, check=False):
        self.parent = parent
        self.members = frozenset(int(m) for m in members)
        self.sorted_members = tuple(sorted(self.members))
        self._gens = list(gens) if gens is not None else None
        if check and not self._is_closed():
            raise NotSubgroup("member set is not closed")

    def _is_closed(self):
        t = self.parent.table
        mem = self.members
        if 0 not in mem:
            return False
        for a in mem:
            if int(self.parent.inv[a]) not in mem:
                return False
            for b in mem:
                if int(t[a, b]) not in mem:
                    return False
        return True

    @property
    def order(self):
        return len(self.members)

    @property
    def gens(self):
        if self._gens is None:
            self._gens = _subgroup_generators(self)
        return self._gens

    def __contains__(self, g):
        return int(g) in self.members

    def __le__(self, other):
        return self.members <= other.members

    def __lt__(self, other):
        return self.members < other.members

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.members == other.members
        )

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"Subgroup(order={self.order})"


def _subgroup_generators(H):
    G = H.parent
    gens = []
    closed = {0}
    remaining = set(H.members)
    while closed != H.members:
        g = min(remaining - closed)
        gens.append(g)
        closed = G._closure_members(closed | {g})
    return gens


def subgroup_closure(G, gens):
    """The subgroup generated by the given element indices."""
    members = G._closure_members({0, *gens})
    return Subgroup(G, members, gens=[g for g in gens if g != 0])


# -- constructors ------------------------------------------------------------


def group_from_cayley(table, labels=None):
    """Validate a Cayley table and wrap it as a FiniteGroup."""
    return FiniteGroup(table, labels=labels, validate=True)


def perm_from_cycles(degree, cycles):
    """Build a 0-based image tuple from 1-based cycle notation."""
    images = list(range(degree))
    for cyc in cycles:
        if not cyc:
            continue
        for i, a in enumerate(cyc):
            b = cyc[(i + 1) % len(cyc)]
            if not (1 <= a <= degree) or not (1 <= b <= degree):
                raise ValueError(f"cycle entry out of range 1..{degree}")
            images[a - 1] = b - 1
    if len(set(images)) != degree:
        raise ValueError("cycles do not describe a bijection")
    return tuple(images)


def group_from_permutations(degree, generators, cap=5000):
    """Closure of permutation generators under composition.

    Each generator is a tuple/list of 0-based images of 0..degree-1.
    Product convention: (p*q)(x) = q(p(x)).
    """
    idp = tuple(range(degree))
    gens = []
    for p in generators:
        p = tuple(int(x) for x in p)
        if len(p) != degree or set(p) != set(range(degree)):
            raise ValueError("generator is not a bijection")
        gens.append(p)
    elements = [idp]
    index = {idp: 0}
    frontier = [idp]
    while frontier:
        p = frontier.pop()
        for q in gens:
            r = tuple(q[x] for x in p)
            if r not in index:
                if len(elements) >= cap:
                    raise CapExceeded(f"permutation closure exceeds cap {cap}")
                index[r] = len(elements)
                elements.append(r)
                frontier.append(r)
    n = len(elements)
    table = np.empty((n, n), dtype=np.int32)
    for i, p in enumerate(elements):
        for j, q in enumerate(elements):
            table[i, j] = index[tuple(q[x] for x in p)]
    G = FiniteGroup(table, validate=True)
    G.permutations = elements
    return G


def _collect_pc_word(word, orders, power_words, conj_words, step_bound):
    """Collection-from-the-left to normal form; returns an exponent tuple."""
    ngen = len(orders)
    work = [[g, e] for g, e in word if e != 0]
    steps = 0
    i = 0
    while i < len(work):
        steps += 1
        if steps > step_bound:
            raise InconsistentPresentation(
                f"collection exceeded step bound {step_bound}"
            )
        g, e = work[i]
        if e == 0:
            del work[i]
            i = max(i - 1, 0)
            continue
        if e < 0:
            raise InconsistentPresentation("negative exponent during collection")
        if e >= orders[g - 1]:
            q, r = divmod(e, orders[g - 1])
            repl = []
            if r:
                repl.append([g, r])
            repl.extend([x, y] for x, y in power_words[g - 1] * q)
            work[i : i + 1] = repl or [[g, 0]]
            i = max(i - 1, 0)
            continue
        if i + 1 < len(work):
            h, f = work[i + 1]
            if h == g:
                work[i][1] = e + f
                del work[i + 1]
                continue
            if h < g:
                # x_g^e x_h^f  ->  x_h (x_g^{x_h})^e x_h^{f-1}
                repl = [[h, 1]]
                repl.extend([x, y] for x, y in conj_words[(g, h)] * e)
                if f - 1:
                    repl.append([h, f - 1])
                work[i : i + 2] = repl
                i = max(i - 1, 0)
                continue
        if i > 0 and work[i - 1][0] >= g:
            i -= 1
            continue
        i += 1
    expo = [0] * ngen
    for g, e in work:
        expo[g - 1] = e
    return tuple(expo)


def group_from_pc_presentation(orders, powers=None, commutators=None, step_bound=10**7):
    """Group from a power-commutator presentation by collection.

    `orders` lists the relative order of each generator x_1..x_m.  `powers`
    maps generator i (1-based) to a word for x_i^orders[i]; `commutators`
    maps (j, i) with j > i to a word for [x_j, x_i].  Words are sequences of
    (generator, exponent) pairs with nonnegative exponents (negative allowed
    only when the generator's power relation is trivial).
    """
    orders = [int(e) for e in orders]
    if any(e < 1 for e in orders):
        raise InconsistentPresentation("relative orders must be >= 1")
    ngen = len(orders)
    powers = dict(powers or {})
    commutators = dict(commutators or {})

    def norm_word(word):
        out = []
        for g, e in word:
            g, e = int(g), int(e)
            if not (1 <= g <= ngen):
                raise InconsistentPresentation(f"unknown generator x{g}")
            if e < 0:
                if powers.get(g):
                    raise InconsistentPresentation(
                        f"negative exponent on x{g} with nontrivial power relation"
                    )
                e %= orders[g - 1]
            if e:
                out.append((g, e))
        return tuple(out)

    power_words = [norm_word(powers.get(i, ())) for i in range(1, ngen + 1)]
    conj_words = {}
    for j in range(1, ngen + 1):
        for i in range(1, j):
            comm = norm_word(commutators.get((j, i), ()))
            conj_words[(j, i)] = ((j, 1),) + comm

    n = 1
    for e in orders:
        n *= e
    if n > MAX_ORDER:
        raise CapExceeded(f"presented order {n} exceeds {MAX_ORDER}")

    radix = [0] * ngen
    acc = 1
    for i in reversed(range(ngen)):
        radix[i] = acc
        acc *= orders[i]

    def tup_to_idx(t):
        return sum(t[i] * radix[i] for i in range(ngen))

    def idx_to_tup(x):
        out = []
        for i in range(ngen):
            out.append(x // radix[i])
            x %= radix[i]
        return tuple(out)

    # right-multiplication permutation of each generator
    gen_perm = np.empty((ngen, n), dtype=np.int32)
    for g in range(1, ngen + 1):
        for x in range(n):
            t = idx_to_tup(x)
            word = [(i + 1, t[i]) for i in range(ngen) if t[i]] + [(g, 1)]
            res = _collect_pc_word(word, orders, power_words, conj_words, step_bound)
            gen_perm[g - 1, x] = tup_to_idx(res)

    # column h of the table by extending the predecessor of h by one generator
    table = np.empty((n, n), dtype=np.int32)
    table[:, 0] = np.arange(n, dtype=np.int32)
    for h in range(1, n):
        t = idx_to_tup(h)
        i = max(i for i in range(ngen) if t[i])
        pred = h - radix[i]
        table[:, h] = gen_perm[i][table[:, pred]]

    labels = []
    for x in range(n):
        t = idx_to_tup(x)
        parts = [f"x{i + 1}" + (f"^{t[i]}" if t[i] > 1 else "") for i in range(ngen) if t[i]]
        labels.append("*".join(parts) if parts else "1")
    try:
        G = FiniteGroup(table, labels=labels, validate=True)
    except NotAGroup as exc:
        raise InconsistentPresentation(f"collection is not confluent: {exc}") from exc
    G.pc_orders = tuple(orders)
    G.pc_generators = [tup_to_idx(tuple(1 if j == i else 0 for j in range(ngen)))
                       for i in range(ngen)]
    G.generator_names = [f"x{i + 1}" for i in range(ngen)]
    return G


# -- subgroup machinery ------------------------------------------------------


def all_subgroups(G, order_cap=200):
    """Every subgroup of G, sorted by (order, member tuple).

    Enumerated by repeatedly extending known subgroups with one extra
    generator; feasible for small orders only.
    """
    if G.order > order_cap:
        raise CapExceeded(
            f"group order {G.order} exceeds enumeration cap {order_cap}"
        )
    seen = {}
    triv = G.trivial()
    seen[triv.members] = triv
    frontier = [triv]
    while frontier:
        S = frontier.pop()
        outside = set(range(G.order)) - S.members
        while outside:
            g = outside.pop()
            T = subgroup_closure(G, S.gens + [g])
            if T.members not in seen:
                seen[T.members] = T
                frontier.append(T)
    return sorted(seen.values(), key=lambda S: (S.order, S.sorted_members))


def is_normal(K, H):
    """K normal in H (both subgroups of the same parent; K <= H assumed)."""
    G = K.parent
    for g in H.gens:
        for k in K.gens:
            if G.conj(k, g) not in K.members:
                return False
    return True


def normalizer(H, within):
    G = H.parent
    mem = []
    for g in within.members:
        if all(G.conj(h, g) in H.members for h in H.gens):
            mem.append(g)
    return Subgroup(G, frozenset(mem))


def centralizer_elem(g, within):
    G = within.parent
    t = G.table
    mem = [x for x in within.members if t[x, g] == t[g, x]]
    return Subgroup(G, frozenset(mem))


def derived_subgroup(H):
    G = H.parent
    comms = {G.commutator(a, b) for a in H.members for b in H.members}
    return normal_closure(Subgroup(G, G._closure_members(comms | {0})), H)


def normal_closure(S, within):
    """Smallest subgroup of `within` containing S and normal in `within`."""
    G = S.parent
    gens = list(S.gens)
    current = subgroup_closure(G, gens)
    changed = True
    while changed:
        changed = False
        for x in list(current.gens):
            for w in within.gens:
                c = G.conj(x, w)
                if c not in current.members:
                    gens.append(c)
                    current = subgroup_closure(G, gens)
                    changed = True
    return current


def right_transversal(H, within):
    """Representatives t with `within` the disjoint union of cosets H*t.

    The identity represents H itself; representatives are listed in
    increasing element order for determinism.
    """
    G = H.parent
    t = G.table
    seen = np.zeros(G.order, dtype=bool)
    hs = np.fromiter(H.members, dtype=np.int64)
    reps = []
    for g in sorted(within.members):
        if not seen[g]:
            reps.append(g)
            seen[t[hs, g]] = True
    return reps


def quotient(H, K):
    """Quotient group H/K with its projection map.

    Returns (Q, proj) where Q is a FiniteGroup on coset indices and proj
    maps each element of H to its coset index.  Raises NotNormal.
    """
    G = H.parent
    if not K.members <= H.members:
        raise NotSubgroup("K is not contained in H")
    if not is_normal(K, H):
        raise NotNormal("K is not normal in H")
    reps = right_transversal(K, H)
    proj = {}
    for i, r in enumerate(reps):
        for k in K.members:
            proj[G.mul(k, r)] = i
    n = len(reps)
    table = np.empty((n, n), dtype=np.int32)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            table[i, j] = proj[G.mul(a, b)]
    Q = FiniteGroup(table, labels=[G.label(r) for r in reps], validate=True)
    return Q, proj


def minimal_normal_overgroups(H, K):
    """All L with K < L, L normal in H, minimal with those properties.

    Computed in the quotient H/K via the correspondence theorem.
    """
    G = H.parent
    if H.members == K.members:
        return []
    Q, proj = quotient(H, K)
    closures = {}
    for q in range(1, Q.order):
        N = normal_closure(subgroup_closure(Q, [q]), Q.whole())
        closures[q] = N.members
    mins = []
    for q, mem in closures.items():
        if not any(other < mem for other in closures.values()):
            if mem not in mins:
                mins.append(mem)
    out = []
    for mem in mins:
        lifted = {g for g in H.members if proj[g] in mem}
        out.append(Subgroup(G, frozenset(lifted)))
    out.sort(key=lambda S: (S.order, S.sorted_members))
    return out


# -- conjugacy ---------------------------------------------------------------


@dataclass
class ConjugacyPartition:
    classes: list
    class_of: list
    kind: str


def conjugacy_partition(G, kind="ordinary"):
    """Partition of G into ordinary, real or rational conjugacy classes."""
    if kind not in ("ordinary", "real", "rational"):
        raise ValueError(f"unknown kind {kind!r}")
    n = G.order
    class_of = [-1] * n
    classes = []
    for g in range(n):
        if class_of[g] != -1:
            continue
        orbit = {g}
        frontier = [g]
        while frontier:
            x = frontier.pop()
            for s in G.generators:
                y = G.conj(x, s)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        cid = len(classes)
        classes.append(orbit)
        for x in orbit:
            class_of[x] = cid

    if kind != "ordinary":
        parent = list(range(len(classes)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

        for g in range(n):
            if kind == "real":
                union(class_of[g], class_of[int(G.inv[g])])
            else:
                d = G.element_orders[g]
                for m in range(1, d):
                    if gcd(m, d) == 1:
                        union(class_of[g], class_of[G.power(g, m)])
        merged = {}
        for cid in range(len(classes)):
            merged.setdefault(find(cid), set()).update(classes[cid])
        classes = [merged[k] for k in sorted(merged)]
        class_of = [-1] * n
        for cid, cl in enumerate(classes):
            for x in cl:
                class_of[x] = cid

    classes = [frozenset(c) for c in classes]
    return ConjugacyPartition(classes=classes, class_of=class_of, kind=kind)


# -- subnormality ------------------------------------------------------------


@dataclass
class SubnormalSeries:
    steps: list  # Subgroups, H = steps[0] <| ... <| steps[-1] = G


def subnormal_series(H, G=None):
    """Subnormal series from H to its parent via iterated normal closures.

    Raises NotSubnormal when the descending normal-closure chain stabilizes
    above H.
    """
    parent = H.parent if G is None else G
    top = parent.whole() if isinstance(parent, FiniteGroup) else parent
    chain = [top]
    while True:
        N = normal_closure(H, chain[-1])
        if N.members == chain[-1].members:
            break
        chain.append(N)
    if chain[-1].members != H.members:
        raise NotSubnormal(
            f"normal-closure chain stabilizes at order {chain[-1].order}"
        )
    return SubnormalSeries(steps=list(reversed(chain)))


def is_subnormal(H, G=None):
    try:
        subnormal_series(H, G)
        return True
    except NotSubnormal:
        return False


def check_cyclic_subnormal_hypothesis(G):
    """Check that <g> is subnormal for every g whose order divides neither 4 nor 6.

    Returns (True, None) or (False, witness element index).
    """
    done = set()
    for g in range(G.order):
        d = G.element_orders[g]
        if 4 % d == 0 or 6 % d == 0:
            continue
        H = subgroup_closure(G, [g])
        if H.members in done:
            continue
        done.add(H.members)
        if not is_subnormal(H):
            return False, g
    return True, None
