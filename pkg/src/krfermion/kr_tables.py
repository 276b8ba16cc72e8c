"""Explicit branching sets P(i,m) for classical types, plus the exceptional
decomposition tables and KR module dimensions.

For the classical families the sets are built by Minkowski-sum recursions
from small base cases; closed forms exist for most cells and are kept as an
independent derivation to test against.  Chains of the shape
{lam_i, lam_{i-2}, ...} descend in steps of two and terminate at lam_1 when
i is odd and at the zero weight when i is even.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .fermionic import Decomposition
from .lie import (
    InputError,
    LieType,
    RootSystem,
    UnsupportedError,
    Weight,
    build_root_system,
)
from .rep_oracle import weyl_dim

CLASSICAL = ("A", "B", "C", "D")


@dataclass(frozen=True)
class WeightSet:
    """Finite set of dominant weights with deterministic iteration order."""

    elems: frozenset

    @classmethod
    def of(cls, weights) -> "WeightSet":
        return cls(frozenset(weights))

    def sorted_weights(self):
        return sorted(self.elems, key=lambda w: w.coords, reverse=True)

    def __contains__(self, w: Weight) -> bool:
        return w in self.elems

    def __len__(self):
        return len(self.elems)

    def minkowski(self, other: "WeightSet") -> "WeightSet":
        return WeightSet(frozenset(a + b for a in self.elems for b in other.elems))

    def indicator(self) -> Decomposition:
        return Decomposition(tuple((w, 1) for w in self.elems))

    def __str__(self):
        return "{" + ", ".join(str(w) for w in self.sorted_weights()) + "}"


def _chain(rs: RootSystem, i: int) -> WeightSet:
    """{lam_i, lam_{i-2}, ...} down to lam_1 (i odd) or 0 (i even)."""
    out = []
    k = i
    while k > 0:
        out.append(rs.fundamental_weight(k))
        k -= 2
    if i % 2 == 0:
        out.append(rs.zero_weight())
    return WeightSet.of(out)


def _check_classical_node(rs: RootSystem, i: int, m: int):
    if rs.lie_type.family not in CLASSICAL:
        raise UnsupportedError(
            f"{rs.lie_type} is not classical; use exceptional_table")
    if not 1 <= i <= rs.rank:
        raise InputError(f"node {i} outside 1..{rs.rank}")
    if m < 0:
        raise InputError("level must be nonnegative")


@lru_cache(maxsize=None)
def _pim(lie_type: LieType, i: int, m: int) -> frozenset:
    rs = build_root_system(lie_type)
    n = rs.rank
    fam = lie_type.family
    if m == 0:
        return frozenset({rs.zero_weight()})
    single = frozenset({rs.fundamental_weight(i).scale(m)})
    if fam == "A":
        return single
    if fam == "B":
        if i < n:
            if m == 1:
                return _chain(rs, i).elems
            return WeightSet(_pim(lie_type, i, 1)).minkowski(
                WeightSet(_pim(lie_type, i, m - 1))).elems
        # spin node
        if m == 1:
            return single
        if m == 2:
            two = rs.fundamental_weight(n).scale(2)
            return frozenset({two}) | _chain(rs, n - 2).elems
        return WeightSet(_pim(lie_type, i, m - 2)).minkowski(
            WeightSet(_pim(lie_type, i, 2))).elems
    if fam == "D":
        if i >= n - 1:
            return single
        if m == 1:
            return _chain(rs, i).elems
        return WeightSet(_pim(lie_type, i, 1)).minkowski(
            WeightSet(_pim(lie_type, i, m - 1))).elems
    if fam == "C":
        if i == n:
            return single
        if m == 1:
            return single
        if m == 2:
            out = {rs.zero_weight()}
            for j in range(1, i + 1):
                out.add(rs.fundamental_weight(j).scale(2))
            return frozenset(out)
        return WeightSet(_pim(lie_type, i, m - 2)).minkowski(
            WeightSet(_pim(lie_type, i, 2))).elems
    raise AssertionError(fam)


def pim_recursive(rs: RootSystem, i: int, m: int) -> WeightSet:
    """The branching set P(i,m) of a classical KR factor, by recursion."""
    _check_classical_node(rs, i, m)
    return WeightSet(_pim(rs.lie_type, i, m))


def lemma_covers(rs: RootSystem, i: int) -> bool:
    """Whether the closed form below applies to (type, node)."""
    fam, n = rs.lie_type.family, rs.rank
    if fam == "B":
        return True
    if fam == "D":
        return i <= n - 2
    if fam == "C":
        return i < n
    return False


@dataclass(frozen=True)
class ClosedFormResult:
    weights: WeightSet
    from_closed_form: bool


def _weighted_chain_solutions(rs: RootSystem, support, coeffs, target):
    """All sum(k_s * coeff_s) == target over nonnegative ints; each solution
    becomes sum k_s * lam_s (index 0 meaning the zero weight)."""
    out = set()

    def rec(idx, remaining, acc):
        if idx == len(support):
            if remaining == 0:
                out.add(acc)
            return
        s, c = support[idx], coeffs[idx]
        for k in range(remaining // c + 1):
            w = acc if s == 0 else acc + rs.fundamental_weight(s).scale(k)
            rec(idx + 1, remaining - k * c, w)

    rec(0, target, rs.zero_weight())
    return out


def pim_closed_form(rs: RootSystem, i: int, m: int) -> ClosedFormResult:
    """P(i,m) by the closed-form part-count constraints where available;
    falls back to the recursion (flagged) elsewhere."""
    _check_classical_node(rs, i, m)
    if not lemma_covers(rs, i):
        return ClosedFormResult(pim_recursive(rs, i, m), False)
    if m == 0:
        return ClosedFormResult(WeightSet.of([rs.zero_weight()]), True)
    fam, n = rs.lie_type.family, rs.rank

    if fam in ("B", "D") and (fam == "D" or i < n):
        # support i, i-2, ...; for even i a zero-weight slot absorbs slack
        support = list(range(i, 0, -2))
        if i % 2 == 0:
            support.append(0)
        coeffs = [1] * len(support)
        return ClosedFormResult(
            WeightSet.of(_weighted_chain_solutions(rs, support, coeffs, m)), True)
    if fam == "B":
        # spin node: k_n counts once, everything below the spin node twice
        support = [n] + list(range(n - 2, 0, -2))
        if n % 2 == 0:
            support.append(0)
        coeffs = [1] + [2] * (len(support) - 1)
        return ClosedFormResult(
            WeightSet.of(_weighted_chain_solutions(rs, support, coeffs, m)), True)
    if fam == "C":
        # sum of all k_j equals m, k_i of the parity of m, the rest even
        out = set()
        support = list(range(i, -1, -1))

        def rec(idx, remaining, acc):
            if idx == len(support):
                if remaining == 0:
                    out.add(acc)
                return
            j = support[idx]
            for k in range(remaining + 1):
                if j == i and k % 2 != m % 2:
                    continue
                if j != i and k % 2 != 0:
                    continue
                w = acc if j == 0 else acc + rs.fundamental_weight(j).scale(k)
                rec(idx + 1, remaining - k, w)

        rec(0, m, rs.zero_weight())
        return ClosedFormResult(WeightSet.of(out), True)
    raise AssertionError


# ---------------------------------------------------------------------------
# exceptional tables

def _mult_one(weights) -> Decomposition:
    return Decomposition(tuple((w, 1) for w in weights))


def _table_E6(rs, i, m):
    lam = rs.fundamental_weight
    if i in (1, 6):
        return _mult_one([lam(i).scale(m)])
    if i == 2:
        return _mult_one([lam(2).scale(r) for r in range(m + 1)])
    if i == 3:
        return _mult_one([lam(3).scale(r) + lam(6).scale(m - r) for r in range(m + 1)])
    if i == 5:
        return _mult_one([lam(5).scale(r) + lam(1).scale(m - r) for r in range(m + 1)])
    raise UnsupportedError(f"no table entry for E6 node {i}")


def _table_E7(rs, i, m):
    lam = rs.fundamental_weight
    if i == 1:
        return _mult_one([lam(1).scale(r) for r in range(m + 1)])
    if i == 7:
        return _mult_one([lam(7).scale(m)])
    if i == 2:
        return _mult_one([lam(2).scale(r) + lam(7).scale(m - r) for r in range(m + 1)])
    if i == 6:
        return _mult_one([lam(6).scale(r) + lam(1).scale(s)
                          for r in range(m + 1) for s in range(m - r + 1)])
    raise UnsupportedError(f"no table entry for E7 node {i}")


def _table_E8(rs, i, m):
    # published rows kept verbatim; the verification suite adjudicates the
    # apparent node-1/node-8 transposition (see docs/TABLE_ANOMALIES.md)
    lam = rs.fundamental_weight
    if i == 1:
        return _mult_one([lam(8).scale(r) for r in range(m + 1)])
    if i == 8:
        return _mult_one([lam(1).scale(r) + lam(8).scale(s)
                          for r in range(m + 1) for s in range(m - r + 1)])
    raise UnsupportedError(f"no table entry for E8 node {i}")


def _table_F4(rs, i, m):
    lam = rs.fundamental_weight
    if i == 1:
        return _mult_one([lam(1).scale(k) for k in range(m + 1)])
    if i == 4:
        out = []
        for k in range(m // 2 + 1):
            for j in range(k + 1):
                out.append(lam(1).scale(j) + lam(4).scale(m - 2 * k))
        return _mult_one(out)
    raise UnsupportedError(f"no table entry for F4 node {i}")


def _table_G2(rs, i, m):
    if i == 1:
        return _mult_one([rs.fundamental_weight(1).scale(k) for k in range(m + 1)])
    raise UnsupportedError(f"no table entry for G2 node {i}")


_EXC_TABLES = {"E": {6: _table_E6, 7: _table_E7, 8: _table_E8},
               "F": {4: _table_F4}, "G": {2: _table_G2}}


def exceptional_table(rs: RootSystem, i: int, m: int) -> Decomposition:
    """Published decomposition of an exceptional KR factor, multiplicity one."""
    fam, n = rs.lie_type.family, rs.rank
    if fam not in _EXC_TABLES:
        raise UnsupportedError(f"{rs.lie_type} is classical; use pim_recursive")
    if not 1 <= i <= n:
        raise InputError(f"node {i} outside 1..{n}")
    if m < 0:
        raise InputError("level must be nonnegative")
    if m == 0:
        return _mult_one([rs.zero_weight()])
    return _EXC_TABLES[fam][n](rs, i, m)


def table_nodes(lie_type: LieType):
    """Nodes with a table/recursion entry for this type."""
    if lie_type.family in CLASSICAL:
        return tuple(range(1, lie_type.rank + 1))
    return {("E", 6): (1, 2, 3, 5, 6), ("E", 7): (1, 2, 6, 7),
            ("E", 8): (1, 8), ("F", 4): (1, 4), ("G", 2): (1,)}[
                (lie_type.family, lie_type.rank)]


def kr_dimension(rs: RootSystem, i: int, m: int) -> int:
    """Dimension of the KR factor: sum of Weyl dimensions over its table."""
    if rs.lie_type.family in CLASSICAL:
        dec = pim_recursive(rs, i, m).indicator()
    else:
        dec = exceptional_table(rs, i, m)
    return sum(mult * weyl_dim(rs, w) for w, mult in dec.entries)
