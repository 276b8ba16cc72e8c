"""Classical finite-dimensional representation theory, used as the
independent oracle: Weyl dimension formula, Freudenthal weight
multiplicities, and tensor product decomposition by the reflection
(Brauer-Klimyk / Racah-Speiser) method.

Everything is exact; Freudenthal divisions are asserted to be integral
before conversion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .fermionic import Decomposition
from .lie import (
    InputError,
    RootSystem,
    Weight,
    build_root_system,
    dominant_conjugate,
    dominant_weights_below,
    pair_weight_with_root,
    root_to_weight,
    weight_minus_in_roots,
)


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    """dim V(lam) = prod over positive roots of (lam+rho, a) / (rho, a)."""
    if not lam.is_dominant():
        raise InputError(f"weight {lam} is not dominant")
    rho = rs.weyl_vector
    lam_rho = lam + rho
    num = 1
    den = 1
    for alpha in rs.positive_roots:
        num *= pair_weight_with_root(rs, lam_rho, alpha)
        den *= pair_weight_with_root(rs, rho, alpha)
    assert num % den == 0
    return num // den


@dataclass(frozen=True)
class WeightMultiplicityMap:
    """Weight-space dimensions of one irreducible, all Weyl chamber images."""

    highest: Weight
    entries: tuple   # ((Weight, mult), ...) deterministic order

    def as_dict(self):
        return dict(self.entries)

    def multiplicity(self, w: Weight) -> int:
        return self.as_dict().get(w, 0)

    def total(self) -> int:
        return sum(m for _, m in self.entries)


def _norm(rs: RootSystem, w: Weight) -> Fraction:
    from .lie import inner_product

    return inner_product(rs, w, w)


@lru_cache(maxsize=None)
def _dominant_multiplicities(lie_type, lam_coords):
    """Freudenthal recursion over the dominant weights below lam."""
    rs = build_root_system(lie_type)
    lam = Weight(lam_coords)
    rho = rs.weyl_vector
    dominants = dominant_weights_below(rs, lam)   # sorted by depth, lam first
    index = {w: weight_minus_in_roots(rs, lam, w).height() for w in dominants}
    mult = {lam: 1}
    pos_roots_w = [(alpha, root_to_weight(rs, alpha)) for alpha in rs.positive_roots]
    c_top = _norm(rs, lam + rho)

    for mu in dominants[1:]:
        acc = 0
        for alpha, alpha_w in pos_roots_w:
            k = 1
            while True:
                nu = Weight(tuple(m + k * a for m, a in
                                  zip(mu.coords, alpha_w.coords)))
                nu_dom = dominant_conjugate(rs, nu)
                m_nu = mult.get(nu_dom)
                if m_nu is None:
                    if nu_dom not in index:
                        break
                    # deeper dominant weight not reached yet: impossible,
                    # recursion runs shallow-to-deep
                    raise AssertionError("Freudenthal ordering violated")
                acc += m_nu * pair_weight_with_root(rs, nu, alpha)
                k += 1
        denom = c_top - _norm(rs, mu + rho)
        val = Fraction(2 * acc, 1) / denom
        assert val.denominator == 1, (lam, mu, val)
        mult[mu] = int(val)
    return tuple((w, mult[w]) for w in dominants)


def _weyl_orbit(rs: RootSystem, w: Weight):
    """Full Weyl orbit by closure under simple reflections."""
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rs.rank):
                c = v.coords[i]
                if c == 0:
                    continue
                img = Weight(tuple(v.coords[k] - c * rs.cartan[k][i]
                                   for k in range(rs.rank)))
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen


def weight_multiplicities(rs: RootSystem, lam: Weight) -> WeightMultiplicityMap:
    """Full multiplicity map of V(lam), dominant values spread over orbits."""
    if not lam.is_dominant():
        raise InputError(f"weight {lam} is not dominant")
    entries = {}
    for mu, m in _dominant_multiplicities(rs.lie_type, lam.coords):
        for w in _weyl_orbit(rs, mu):
            entries[w] = m
    ordered = tuple(sorted(entries.items(), key=lambda t: t[0].coords, reverse=True))
    return WeightMultiplicityMap(highest=lam, entries=ordered)


def _reflect_to_dominant_signed(rs: RootSystem, w: Weight):
    """(dominant image, sign) under the rho-shifted Weyl action; sign 0 on a wall."""
    cur = list(w.coords)
    sign = 1
    n = rs.rank
    while True:
        for i in range(n):
            c = cur[i]
            if c == 0:
                return None, 0
            if c < 0:
                for k in range(n):
                    cur[k] -= c * rs.cartan[k][i]
                sign = -sign
                break
        else:
            return Weight(tuple(cur)), sign


def tensor_decompose(rs: RootSystem, lam: Weight, mu: Weight) -> Decomposition:
    """V(lam) (x) V(mu) by reflecting lam's weight diagram through mu + rho."""
    if not lam.is_dominant() or not mu.is_dominant():
        raise InputError("tensor factors must be dominant")
    # walk the smaller weight diagram
    if weyl_dim(rs, lam) < weyl_dim(rs, mu):
        lam, mu = mu, lam
    rho = rs.weyl_vector
    out = {}
    for nu, m in weight_multiplicities(rs, lam).entries:
        shifted = nu + mu + rho
        dom, sign = _reflect_to_dominant_signed(rs, shifted)
        if sign == 0:
            continue
        key = dom - rho
        out[key] = out.get(key, 0) + sign * m
    cleaned = {w: c for w, c in out.items() if c}
    assert all(c > 0 for c in cleaned.values())
    return Decomposition.from_dict(cleaned)


def decomposition_tensor(rs: RootSystem, a: Decomposition, b: Decomposition) -> Decomposition:
    """Bilinear extension of tensor_decompose to decomposed modules."""
    out = {}
    for wa, ma in a.entries:
        for wb, mb in b.entries:
            for w, m in tensor_decompose(rs, wa, wb).entries:
                out[w] = out.get(w, 0) + ma * mb * m
    return Decomposition.from_dict(out)
