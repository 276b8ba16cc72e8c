"""The fermionic multiplicity formula for tensor products of KR factors.

A factor is a pair (node i, level m).  For a dominant weight lam below the
top weight, write  top - lam = sum_k n_k alpha_k ; the multiplicity of lam
is a sum over all tuples of partitions nu = (nu(1), ..., nu(r)) with nu(k)
a partition of n_k:

    sum_nu  prod_{k, n}  binom(P_n^(k)(nu) + nu_n^(k), nu_n^(k))

where the vacancy number is

    P_n^(k)(nu) = sum_a min(n, m_a) [i_a == k]
                  - 2 sum_h min(n, h) nu_h^(k)
                  + sum_{j != k} sum_h min(s n, r h) nu_h^(j),

with r = -a[k][j] and s = -a[j][k] from the stored Cartan matrix.  A
configuration contributes zero as soon as any vacancy number is negative
(binom(P, 0) = 0 for P < 0), so the evaluator prunes on the first negative
vacancy.  All vacancies stabilize for n >= 3 * max(levels, part sizes, 1),
which makes the scan finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .lie import (
    InputError,
    RootSystem,
    Weight,
    dominant_weights_below,
    weight_minus_in_roots,
)
from .partitions import NuConfig, PartitionMult, enumerate_configs, enumerate_partitions


@dataclass(frozen=True)
class KRFactor:
    node: int
    level: int


@dataclass(frozen=True)
class FactorList:
    rs: RootSystem
    factors: tuple

    def __post_init__(self):
        for f in self.factors:
            if not 1 <= f.node <= self.rs.rank:
                raise InputError(f"factor node {f.node} outside 1..{self.rs.rank}")
            if f.level < 0:
                raise InputError(f"factor level {f.level} must be nonnegative")

    @classmethod
    def of(cls, rs: RootSystem, pairs) -> "FactorList":
        return cls(rs, tuple(KRFactor(int(i), int(m)) for i, m in pairs))

    @classmethod
    def parse(cls, rs: RootSystem, text: str) -> "FactorList":
        pairs = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            try:
                node, level = chunk.split(":")
                pairs.append((int(node), int(level)))
            except ValueError:
                raise InputError(f"cannot parse factor {chunk!r}; want node:level") from None
        if not pairs:
            raise InputError("empty factor list")
        return cls.of(rs, pairs)

    def top_weight(self) -> Weight:
        w = self.rs.zero_weight()
        for f in self.factors:
            w = w + self.rs.fundamental_weight(f.node).scale(f.level)
        return w

    def max_level(self) -> int:
        return max((f.level for f in self.factors), default=0)

    def __str__(self):
        return ",".join(f"{f.node}:{f.level}" for f in self.factors)


@dataclass(frozen=True)
class Decomposition:
    """Finite multiset of dominant weights: entries sorted by descending coords."""

    entries: tuple   # ((Weight, multiplicity), ...)

    def __post_init__(self):
        agg = {}
        for w, m in self.entries:
            agg[w] = agg.get(w, 0) + int(m)
        cleaned = tuple(sorted(((w, m) for w, m in agg.items() if m),
                               key=lambda t: t[0].coords, reverse=True))
        object.__setattr__(self, "entries", cleaned)

    @classmethod
    def from_dict(cls, d) -> "Decomposition":
        return cls(tuple(d.items()))

    def as_dict(self):
        return dict(self.entries)

    def multiplicity(self, w: Weight) -> int:
        return self.as_dict().get(w, 0)

    def weights(self):
        return tuple(w for w, _ in self.entries)

    def __str__(self):
        return " + ".join(f"{m}*V{w}" for w, m in self.entries) or "0"


def scan_bound(factors: FactorList, config: NuConfig) -> int:
    """Part size beyond which every vacancy number is constant."""
    parts = [p.max_part() for p in config.parts]
    return 3 * max([1, factors.max_level()] + parts)


def vacancy(rs: RootSystem, factors: FactorList, config: NuConfig,
            k: int, n: int) -> int:
    """Vacancy number at node k (1-based) and part size n >= 1."""
    if not 1 <= k <= rs.rank:
        raise InputError(f"node {k} outside 1..{rs.rank}")
    if n < 1:
        raise InputError("part size must be >= 1")
    total = sum(min(n, f.level) for f in factors.factors if f.node == k)
    for h, m in config.parts[k - 1].counts:
        total -= 2 * min(n, h) * m
    row = rs.cartan[k - 1]
    for j in rs.neighbors(k):
        r = -row[j - 1]
        s = -rs.cartan[j - 1][k - 1]
        for h, m in config.parts[j - 1].counts:
            total += min(s * n, r * h) * m
    return total


def config_weight_term(rs: RootSystem, factors: FactorList, config: NuConfig,
                       lam: Weight) -> int:
    """Contribution of one configuration: 0 if inadmissible, else the
    product of binomials over occupied (node, part size) positions."""
    eta = weight_minus_in_roots(rs, factors.top_weight(), lam)
    if eta is None or any(p.total() != n for p, n in zip(config.parts, eta.coords)):
        raise InputError("configuration does not match the n-vector of lam")
    bound = scan_bound(factors, config)
    term = 1
    for k in range(1, rs.rank + 1):
        nu = config.parts[k - 1]
        for n in range(1, bound + 1):
            p = vacancy(rs, factors, config, k, n)
            if p < 0:
                return 0
            m = nu.mult(n)
            if m:
                term *= comb(p + m, m)
    return term


# ---------------------------------------------------------------------------
# fast evaluator: depth-first over the Dynkin tree with early admissibility

def _node_order(rs: RootSystem):
    """BFS order of the Dynkin diagram plus, for each position p, the list
    of nodes whose full neighborhood is assigned once positions <= p are."""
    rank = rs.rank
    adj = {i: set(rs.neighbors(i)) for i in range(1, rank + 1)}
    start = min(i for i in adj if len(adj[i]) <= 1)
    order = [start]
    seen = {start}
    qi = 0
    while len(order) < rank:
        if qi < len(order):
            for j in sorted(adj[order[qi]]):
                if j not in seen:
                    seen.add(j)
                    order.append(j)
            qi += 1
        else:  # disconnected safety net; Dynkin diagrams are connected
            nxt = min(set(adj) - seen)
            seen.add(nxt)
            order.append(nxt)
    pos = {node: p for p, node in enumerate(order)}
    check_at = [[] for _ in range(rank)]
    for j in adj:
        last = max([pos[j]] + [pos[x] for x in adj[j]])
        check_at[last].append(j)
    return order, check_at


def _min_sum_profile(nu: PartitionMult, scale_n: int, scale_h: int, bound: int):
    """Array T[n-1] = sum_h min(scale_n * n, scale_h * h) * mult(h), n = 1..bound."""
    out = [0] * bound
    for h, m in nu.counts:
        cap = scale_h * h
        for n in range(1, bound + 1):
            out[n - 1] += min(scale_n * n, cap) * m
    return out


def _node_factor(first_term, own, neigh_profiles, nu: PartitionMult, bound: int):
    """Admissibility scan and binomial product for one node, or None."""
    term = 1
    for n in range(1, bound + 1):
        p = first_term[n - 1] - 2 * own[n - 1]
        for prof in neigh_profiles:
            p += prof[n - 1]
        if p < 0:
            return None
        m = nu.mult(n)
        if m:
            term *= comb(p + m, m)
    return term


def fermionic_multiplicity(rs: RootSystem, factors: FactorList, lam: Weight) -> int:
    """Multiplicity of V(lam) in the product of the given KR factors."""
    if not lam.is_dominant():
        raise InputError(f"weight {lam} is not dominant")
    eta = weight_minus_in_roots(rs, factors.top_weight(), lam)
    if eta is None:
        return 0
    n_vec = eta.coords
    rank = rs.rank
    bound = 3 * max([1, factors.max_level()] + list(n_vec))

    first = []
    for k in range(1, rank + 1):
        levels = [f.level for f in factors.factors if f.node == k]
        first.append([sum(min(n, m) for m in levels) for n in range(1, bound + 1)])

    # per node: candidate partitions with their diagonal profile and, per
    # neighbor, the interaction profile
    pools = []
    for k in range(1, rank + 1):
        cands = []
        for nu in enumerate_partitions(n_vec[k - 1]):
            own = _min_sum_profile(nu, 1, 1, bound)
            inter = {}
            for j in rs.neighbors(k):
                r = -rs.cartan[j - 1][k - 1]
                s = -rs.cartan[k - 1][j - 1]
                # profile of nu(k) as seen from node j
                inter[j] = _min_sum_profile(nu, s, r, bound)
            cands.append((nu, own, inter))
        pools.append(cands)

    order, check_at = _node_order(rs)
    chosen = [None] * (rank + 1)   # 1-based
    total = 0

    def descend(pos: int, partial: int):
        nonlocal total
        if pos == rank:
            total += partial
            return
        node = order[pos]
        for cand in pools[node - 1]:
            chosen[node] = cand
            prod = partial
            ok = True
            for j in check_at[pos]:
                nu_j, own_j, _ = chosen[j]
                profiles = [chosen[x][2][j] for x in rs.neighbors(j)]
                f = _node_factor(first[j - 1], own_j, profiles, nu_j, bound)
                if f is None:
                    ok = False
                    break
                prod *= f
            if ok:
                descend(pos + 1, prod)
        chosen[node] = None

    descend(0, 1)
    return total


def fermionic_multiplicity_by_enumeration(rs: RootSystem, factors: FactorList,
                                          lam: Weight) -> int:
    """Direct sum over the full configuration stream (reference path)."""
    if not lam.is_dominant():
        raise InputError(f"weight {lam} is not dominant")
    eta = weight_minus_in_roots(rs, factors.top_weight(), lam)
    if eta is None:
        return 0
    return sum(config_weight_term(rs, factors, config, lam)
               for config in enumerate_configs(eta.coords))


def fermionic_decomposition(rs: RootSystem, factors: FactorList) -> Decomposition:
    """Full decomposition: every dominant weight below the top with its
    fermionic multiplicity; zero entries dropped."""
    top = factors.top_weight()
    entries = {}
    for mu in dominant_weights_below(rs, top):
        m = fermionic_multiplicity(rs, factors, mu)
        if m:
            entries[mu] = m
    return Decomposition.from_dict(entries)
