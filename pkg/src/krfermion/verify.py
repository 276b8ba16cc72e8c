"""Executable verification of the branching statements, with counterexample
reporting.

Each check compares two independently computed decompositions and returns a
VerificationReport.  Reports are deterministic apart from the elapsed-time
metadata field.  Labels distinguish what a pass means:

  theorem               proven statement; a failure is an implementation bug
  conjecture-consistent necessary consequence checked exactly, not a proof
  table-adjudication    published table row vs the formula; mismatches are
                        recorded for the anomaly log rather than asserted
                        to be one side's fault
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .fermionic import Decomposition, FactorList, fermionic_decomposition
from .kr_tables import CLASSICAL, exceptional_table, kr_dimension, pim_recursive
from .lie import InputError, RootSystem
from .rep_oracle import decomposition_tensor, weyl_dim


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    scope: dict
    status: str                      # "pass" | "fail"
    label: str
    counterexamples: tuple           # ({"input":..., "expected":..., "got":...}, ...)
    elapsed: float = field(compare=False)

    def __post_init__(self):
        assert (self.status == "fail") == bool(self.counterexamples)

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _coords(w):
    return list(w.coords)


def _dec_payload(dec: Decomposition):
    return [{"weight": _coords(w), "multiplicity": m} for w, m in dec.entries]


def _compare_decompositions(expected: Decomposition, got: Decomposition):
    if expected == got:
        return ()
    weights = sorted({w for w, _ in expected.entries} | {w for w, _ in got.entries},
                     key=lambda w: w.coords, reverse=True)
    out = []
    for w in weights:
        e, g = expected.multiplicity(w), got.multiplicity(w)
        if e != g:
            out.append({"input": _coords(w), "expected": e, "got": g})
    return tuple(out)


def verify_kr_branching(rs: RootSystem, i: int, m: int) -> VerificationReport:
    """Single classical KR factor: formula output == branching set indicator."""
    t0 = time.perf_counter()
    expected = pim_recursive(rs, i, m).indicator()
    got = fermionic_decomposition(rs, FactorList.of(rs, [(i, m)]))
    ces = _compare_decompositions(expected, got)
    return VerificationReport(
        claim="kr-branching",
        scope={"algebra": str(rs.lie_type), "node": i, "level": m},
        status="pass" if not ces else "fail",
        label="theorem",
        counterexamples=ces,
        elapsed=time.perf_counter() - t0,
    )


def verify_type_a_tensor(rs: RootSystem, factors: FactorList) -> VerificationReport:
    """Type A tensor products: formula == reflection-oracle decomposition."""
    if rs.lie_type.family != "A":
        raise InputError("type-a-tensor verification requires a type A algebra")
    t0 = time.perf_counter()
    oracle = Decomposition(((rs.zero_weight(), 1),))
    for f in factors.factors:
        single = Decomposition(((rs.fundamental_weight(f.node).scale(f.level), 1),))
        oracle = decomposition_tensor(rs, oracle, single)
    got = fermionic_decomposition(rs, factors)
    ces = _compare_decompositions(oracle, got)
    return VerificationReport(
        claim="type-a-tensor",
        scope={"algebra": str(rs.lie_type), "factors": str(factors)},
        status="pass" if not ces else "fail",
        label="theorem",
        counterexamples=ces,
        elapsed=time.perf_counter() - t0,
    )


def verify_exceptional(rs: RootSystem, i: int, m: int) -> VerificationReport:
    """Published exceptional table row vs the formula.  A mismatch is
    reported with both sides listed, flagged for the anomaly log."""
    t0 = time.perf_counter()
    table = exceptional_table(rs, i, m)
    got = fermionic_decomposition(rs, FactorList.of(rs, [(i, m)]))
    ces = _compare_decompositions(table, got)
    return VerificationReport(
        claim="exceptional-table",
        scope={"algebra": str(rs.lie_type), "node": i, "level": m,
               "table": _dec_payload(table), "formula": _dec_payload(got)},
        status="pass" if not ces else "fail",
        label="table-adjudication",
        counterexamples=ces,
        elapsed=time.perf_counter() - t0,
    )


def verify_dimension_conservation(rs: RootSystem, factors: FactorList) -> VerificationReport:
    """Sum of weighted Weyl dimensions == product of KR factor dimensions."""
    if rs.lie_type.family not in CLASSICAL:
        raise InputError("dimension conservation runs on classical types")
    t0 = time.perf_counter()
    got_dec = fermionic_decomposition(rs, factors)
    lhs = sum(mult * weyl_dim(rs, w) for w, mult in got_dec.entries)
    rhs = 1
    for f in factors.factors:
        rhs *= kr_dimension(rs, f.node, f.level)
    ces = ()
    if lhs != rhs:
        ces = ({"input": str(factors), "expected": rhs, "got": lhs},)
    label = "theorem" if (len(factors.factors) <= 1 or rs.lie_type.family == "A") \
        else "conjecture-consistent"
    return VerificationReport(
        claim="dimension-conservation",
        scope={"algebra": str(rs.lie_type), "factors": str(factors)},
        status="pass" if not ces else "fail",
        label=label,
        counterexamples=ces,
        elapsed=time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# suite drivers used by the CLI

def branching_suite(rs: RootSystem, max_level: int):
    if rs.lie_type.family not in CLASSICAL:
        raise InputError("branching suite runs on classical types")
    return [verify_kr_branching(rs, i, m)
            for i in range(1, rs.rank + 1)
            for m in range(0, max_level + 1)]


def type_a_tensor_suite(rs: RootSystem, max_level: int):
    singles = [(i, m) for i in range(1, rs.rank + 1) for m in range(1, max_level + 1)]
    return [verify_type_a_tensor(rs, FactorList.of(rs, [a, b]))
            for a, b in itertools.combinations_with_replacement(singles, 2)]


def exceptional_suite(rs: RootSystem, max_level: int):
    from .kr_tables import table_nodes

    return [verify_exceptional(rs, i, m)
            for i in table_nodes(rs.lie_type)
            for m in range(1, max_level + 1)]


def dimensions_suite(rs: RootSystem, max_level: int):
    singles = [(i, m) for i in range(1, rs.rank + 1) for m in range(1, max_level + 1)]
    return [verify_dimension_conservation(rs, FactorList.of(rs, [a, b]))
            for a, b in itertools.combinations_with_replacement(singles, 2)]


SUITES = {
    "branching": branching_suite,
    "type-a-tensor": type_a_tensor_suite,
    "exceptional": exceptional_suite,
    "dimensions": dimensions_suite,
}


def run_suite(rs: RootSystem, suite: str, max_level: int):
    if suite == "all":
        reports = []
        fam = rs.lie_type.family
        if fam in CLASSICAL:
            reports += branching_suite(rs, max_level)
            reports += dimensions_suite(rs, max_level)
            if fam == "A":
                reports += type_a_tensor_suite(rs, max_level)
        else:
            reports += exceptional_suite(rs, max_level)
        return reports
    if suite not in SUITES:
        raise InputError(f"unknown suite {suite!r}; choose from "
                         f"{', '.join([*SUITES, 'all'])}")
    return SUITES[suite](rs, max_level)
