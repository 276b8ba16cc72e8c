"""Root systems and weight lattices for the finite-type simple Lie algebras.

Everything is exact: Cartan data are Python ints, basis changes go through
``fractions.Fraction``.  Weights are stored in the fundamental-weight basis
(coords[i] = pairing with the i-th simple coroot), root vectors in the
simple-root basis.

Convention: the stored Cartan matrix is a[i][j] = 2(alpha_i, alpha_j) /
(alpha_i, alpha_i), with Bourbaki node numbering.  Under this convention the
weight coordinates of the simple root alpha_j are the j-th *column* of the
matrix, and the symmetrizers d_i (half square lengths, short roots
normalized to d=1) satisfy d_i * a[i][j] = d_j * a[j][i].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm


class InputError(ValueError):
    """Invalid user-supplied data (bad rank, non-dominant weight, ...)."""


class UnsupportedError(ValueError):
    """Structurally valid input outside the supported table/type range."""


_RANK_CONSTRAINTS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_CONSTRAINTS:
            raise InputError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or not _RANK_CONSTRAINTS[self.family](self.rank):
            raise InputError(f"invalid rank {self.rank} for family {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "LieType":
        text = text.strip()
        if len(text) < 2 or not text[0].isalpha():
            raise InputError(f"cannot parse algebra spec {text!r}")
        family = text[0].upper()
        try:
            rank = int(text[1:])
        except ValueError:
            raise InputError(f"cannot parse rank in algebra spec {text!r}") from None
        return cls(family, rank)


@dataclass(frozen=True)
class Weight:
    """Integral weight in fundamental-weight coordinates."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, k: int) -> "Weight":
        return Weight(tuple(k * c for c in self.coords))

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class RootVector:
    """Element of the root lattice in simple-root coordinates."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def height(self) -> int:
        return sum(self.coords)

    def in_positive_cone(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __add__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def _cartan_matrix(lie_type: LieType):
    """Cartan matrix rows under the a_ij = 2(a_i,a_j)/(a_i,a_i) convention."""
    n = lie_type.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    fam = lie_type.family
    if fam == "A":
        for i in range(n - 1):
            bond(i, i + 1)
    elif fam == "B":
        # nodes 1..n-1 long, node n short
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, -1, -2)
    elif fam == "C":
        # nodes 1..n-1 short, node n long
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, -2, -1)
    elif fam == "D":
        for i in range(n - 3):
            bond(i, i + 1)
        bond(n - 3, n - 2)
        bond(n - 3, n - 1)
    elif fam == "E":
        # Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for x, y in zip(chain, chain[1:]):
            bond(x - 1, y - 1)
        bond(2 - 1, 4 - 1)
    elif fam == "F":
        # nodes 1,2 long; nodes 3,4 short
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif fam == "G":
        # node 1 short, node 2 long
        bond(0, 1, -3, -1)
    return tuple(tuple(row) for row in a)


def _symmetrizers(cartan):
    """Minimal positive integers d with d_i a_ij = d_j a_ji."""
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    # propagate over the (connected) Dynkin graph
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                todo.append(j)
    scale = lcm(*(x.denominator for x in d))
    ints = [int(x * scale) for x in d]
    m = min(ints)
    assert all(x % m == 0 for x in ints)
    return tuple(x // m for x in ints)


def _invert_matrix(a):
    """Exact inverse of an integer matrix, as rows of Fractions."""
    n = len(a)
    aug = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


_EXPECTED_POSROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    cartan: tuple                 # rank x rank, rows
    symmetrizers: tuple           # d_i
    positive_roots: tuple         # RootVector, sorted by (height, coords)
    highest_root: RootVector
    weyl_vector: Weight
    inv_cartan: tuple = field(repr=False)   # rows of Fractions

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def fundamental_weight(self, i: int) -> Weight:
        """The i-th fundamental weight (1-based node index)."""
        if not 1 <= i <= self.rank:
            raise InputError(f"node {i} outside 1..{self.rank}")
        return Weight(tuple(int(k == i - 1) for k in range(self.rank)))

    def zero_weight(self) -> Weight:
        return Weight((0,) * self.rank)

    def simple_root(self, i: int) -> RootVector:
        if not 1 <= i <= self.rank:
            raise InputError(f"node {i} outside 1..{self.rank}")
        return RootVector(tuple(int(k == i - 1) for k in range(self.rank)))

    def neighbors(self, i: int):
        """1-based nodes j adjacent to node i in the Dynkin diagram."""
        return tuple(j + 1 for j in range(self.rank)
                     if j != i - 1 and self.cartan[i - 1][j] != 0)


def _generate_positive_roots(cartan):
    """Closure of the simple roots under root strings, exact integers."""
    n = len(cartan)
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    known = set(simple)
    by_height = {1: list(simple)}
    h = 1
    while by_height.get(h):
        nxt = []
        for beta in by_height[h]:
            for i in range(n):
                # pairing <beta, h_i> = row i of cartan applied to beta
                pair = sum(cartan[i][j] * beta[j] for j in range(n))
                # p = how far the alpha_i-string extends below beta
                p = 0
                cur = list(beta)
                while True:
                    cur[i] -= 1
                    if tuple(cur) in known or (h == 1 and all(c == 0 for c in cur)):
                        p += 1
                    else:
                        break
                q = p - pair
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    t = tuple(up)
                    if t not in known:
                        known.add(t)
                        nxt.append(t)
        if nxt:
            by_height[h + 1] = nxt
        h += 1
    roots = sorted(known, key=lambda t: (sum(t), t))
    return tuple(RootVector(t) for t in roots)


@lru_cache(maxsize=None)
def build_root_system(lie_type: LieType) -> RootSystem:
    """Construct the full root-system record for one finite type."""
    cartan = _cartan_matrix(lie_type)
    d = _symmetrizers(cartan)
    roots = _generate_positive_roots(cartan)
    expected = _EXPECTED_POSROOT_COUNTS[lie_type.family](lie_type.rank)
    assert len(roots) == expected, (lie_type, len(roots), expected)
    highest = max(roots, key=lambda r: (r.height(), r.coords))
    rho = Weight((1,) * lie_type.rank)
    return RootSystem(
        lie_type=lie_type,
        cartan=cartan,
        symmetrizers=d,
        positive_roots=roots,
        highest_root=highest,
        weyl_vector=rho,
        inv_cartan=_invert_matrix(cartan),
    )


def root_to_weight(rs: RootSystem, r: RootVector) -> Weight:
    """Express a root-lattice vector in fundamental-weight coordinates.

    alpha_j maps to the j-th column of the Cartan matrix.
    """
    n = rs.rank
    return Weight(tuple(sum(rs.cartan[i][j] * r.coords[j] for j in range(n))
                        for i in range(n)))


def weight_to_root_coords(rs: RootSystem, w: Weight):
    """Simple-root coordinates of a weight, as Fractions."""
    n = rs.rank
    return tuple(sum(rs.inv_cartan[i][j] * w.coords[j] for j in range(n))
                 for i in range(n))


def weight_minus_in_roots(rs: RootSystem, lam: Weight, mu: Weight):
    """The unique n with lam - mu = sum n_i alpha_i, n_i nonnegative ints.

    Returns None when no such integral nonnegative solution exists.
    """
    diff = lam - mu
    coords = weight_to_root_coords(rs, diff)
    out = []
    for c in coords:
        if c.denominator != 1 or c < 0:
            return None
        out.append(int(c))
    return RootVector(tuple(out))


def dominant_conjugate(rs: RootSystem, w: Weight) -> Weight:
    """Weyl-group representative of w in the dominant chamber."""
    cur = list(w.coords)
    n = rs.rank
    while True:
        for i in range(n):
            if cur[i] < 0:
                c = cur[i]
                # s_i: subtract c * alpha_i, i.e. c * column i of the Cartan matrix
                for k in range(n):
                    cur[k] -= c * rs.cartan[k][i]
                break
        else:
            return Weight(tuple(cur))


def dominant_weights_below(rs: RootSystem, lam: Weight):
    """All dominant mu with lam - mu a nonnegative integer root sum.

    Ordered by (height of lam - mu, coords); lam itself comes first.
    """
    if not lam.is_dominant():
        raise InputError(f"weight {lam} is not dominant")

    def in_weight_polytope(w: Weight) -> bool:
        return weight_minus_in_roots(rs, lam, dominant_conjugate(rs, w)) is not None

    cols = [Weight(tuple(rs.cartan[k][j] for k in range(rs.rank)))
            for j in range(rs.rank)]
    seen = {lam}
    frontier = [lam]
    dominants = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            for col in cols:
                v = w - col
                if v in seen:
                    continue
                seen.add(v)
                if in_weight_polytope(v):
                    nxt.append(v)
                    if v.is_dominant():
                        dominants.append(v)
        frontier = nxt

    def sort_key(mu):
        eta = weight_minus_in_roots(rs, lam, mu)
        return (eta.height(), mu.coords)

    return sorted(dominants, key=sort_key)


def inner_product(rs: RootSystem, x: Weight, y: Weight) -> Fraction:
    """Symmetric bilinear form with (alpha_i, alpha_i) = 2 d_i."""
    xr = weight_to_root_coords(rs, x)
    return sum((c * d * yc for c, d, yc in zip(xr, rs.symmetrizers, y.coords)),
               Fraction(0))


def pair_weight_with_root(rs: RootSystem, x: Weight, r: RootVector) -> int:
    """(x, r) for x a weight and r in root coordinates; always an integer."""
    return sum(c * d * xc for c, d, xc in zip(r.coords, rs.symmetrizers, x.coords))
