"""Integer partitions in multiplicity form, and tuples of them.

The fermionic sum runs over one partition per Dynkin node; the evaluator
consumes multiplicities nu_n (number of parts of size n) directly, so
partitions are stored as (part_size, multiplicity) pairs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class PartitionMult:
    """A partition as ((part, multiplicity), ...), parts strictly decreasing."""

    counts: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "counts",
            tuple(sorted(((int(p), int(m)) for p, m in self.counts if m),
                         reverse=True)))
        for p, m in self.counts:
            if p < 1 or m < 1:
                raise ValueError(f"bad partition entry ({p}, {m})")

    def total(self) -> int:
        return sum(p * m for p, m in self.counts)

    def mult(self, n: int) -> int:
        for p, m in self.counts:
            if p == n:
                return m
        return 0

    def max_part(self) -> int:
        return self.counts[0][0] if self.counts else 0

    def parts(self):
        """Parts as a weakly decreasing list, e.g. (2,1,1)."""
        out = []
        for p, m in self.counts:
            out.extend([p] * m)
        return tuple(out)

    @classmethod
    def from_parts(cls, parts) -> "PartitionMult":
        agg = {}
        for p in parts:
            agg[p] = agg.get(p, 0) + 1
        return cls(tuple(agg.items()))

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts()) + "]"


EMPTY_PARTITION = PartitionMult(())


def _part_lists(n, max_part):
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _part_lists(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int):
    """All partitions of n, each once, largest-first lexicographic order."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    return tuple(PartitionMult.from_parts(p) for p in _part_lists(n, n))


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by the independent Euler recurrence (oracle for enumeration)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = -1 if k % 2 == 0 else 1
        if g1 <= n:
            total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


@dataclass(frozen=True)
class NuConfig:
    """One partition per node: parts[k] is the partition at node k+1."""

    parts: tuple

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.parts) + ")"


def enumerate_configs(n_vector):
    """Stream all tuples of partitions (nu(1), ..., nu(r)) of the n-vector.

    Cartesian product in lexicographic order; count is the product of the
    partition numbers p(n_k).
    """
    pools = [enumerate_partitions(n) for n in n_vector]
    for combo in itertools.product(*pools):
        yield NuConfig(tuple(combo))
