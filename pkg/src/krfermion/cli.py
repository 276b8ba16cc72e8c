"""Command-line surface.

Subcommands:
  pim        branching set of one classical KR factor, with dimensions
  fermionic  full decomposition of a tensor product of KR factors
  verify     run a verification suite, emit reports, exit 1 on failures
  tensor     tensor product of two irreducibles via the reflection oracle

Exit codes: 0 success, 1 verification failures, 2 invalid input,
3 unsupported case.  Output is byte-deterministic for fixed inputs except
for the elapsed-time metadata in verify reports.

JSON payloads carry a schema_version; the optional on-disk cache
(--cache DIR or KRFERMION_CACHE) is keyed by a hash of the canonical
request and is recomputed when the stored schema version differs.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile

from .fermionic import Decomposition, FactorList, fermionic_decomposition
from .kr_tables import kr_dimension, pim_recursive
from .lie import (
    InputError,
    LieType,
    RootSystem,
    UnsupportedError,
    Weight,
    build_root_system,
    weight_minus_in_roots,
)
from .rep_oracle import tensor_decompose, weyl_dim
from .verify import VerificationReport, run_suite

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INVALID = 2
EXIT_UNSUPPORTED = 3


def _algebra_payload(lt: LieType):
    return {"family": lt.family, "rank": lt.rank}


def _sorted_rows(rs: RootSystem, dec: Decomposition, top: Weight):
    """Rows ordered by height below the top weight, then lexicographically."""
    def key(item):
        w, _ = item
        eta = weight_minus_in_roots(rs, top, w)
        h = eta.height() if eta is not None else 0
        return (h, w.coords)

    return sorted(dec.entries, key=key)


def decomposition_to_json(rs: RootSystem, dec: Decomposition, top: Weight):
    rows = []
    total = 0
    for w, m in _sorted_rows(rs, dec, top):
        d = weyl_dim(rs, w)
        total += m * d
        rows.append({"weight": list(w.coords), "multiplicity": m, "dim": d})
    return rows, total

def decomposition_from_json(rows) -> Decomposition:
    return Decomposition(tuple((Weight(tuple(r["weight"])), int(r["multiplicity"]))
                               for r in rows))


def report_to_json(rep: VerificationReport):
    return {
        "claim": rep.claim,
        "scope": rep.scope,
        "status": rep.status,
        "label": rep.label,
        "counterexamples": list(rep.counterexamples),
        "meta": {"elapsed_sec": round(rep.elapsed, 6)},
    }


def report_from_json(obj) -> VerificationReport:
    return VerificationReport(
        claim=obj["claim"],
        scope=obj["scope"],
        status=obj["status"],
        label=obj["label"],
        counterexamples=tuple(obj["counterexamples"]),
        elapsed=obj.get("meta", {}).get("elapsed_sec", 0.0),
    )


def _emit_rows(rows, total, fmt, header, out):
    if fmt == "json":
        json.dump({"schema_version": SCHEMA_VERSION, **header,
                   "decomposition": rows, "total_dim": total},
                  out, sort_keys=True)
        out.write("\n")
    elif fmt == "csv":
        for r in rows:
            out.write(",".join(str(c) for c in r["weight"])
                      + f",{r['multiplicity']},{r['dim']}\n")
    else:
        for r in rows:
            coords = "(" + ",".join(str(c) for c in r["weight"]) + ")"
            out.write(f"{coords:<24} mult {r['multiplicity']:<4} dim {r['dim']}\n")
        out.write(f"total dim {total}\n")


# ---------------------------------------------------------------------------
# cache

def _cache_path(cache_dir, request):
    key = hashlib.sha256(
        json.dumps(request, sort_keys=True).encode()).hexdigest()
    return os.path.join(cache_dir, key + ".json")


def _cache_read(cache_dir, request):
    path = _cache_path(cache_dir, request)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, ValueError):
        return None
    if payload.get("schema_version") != SCHEMA_VERSION:
        return None
    return payload


def _cache_write(cache_dir, request, payload):
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_path(cache_dir, request)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True)
        os.replace(tmp, path)
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass


# ---------------------------------------------------------------------------
# subcommands

def _cmd_pim(args, out):
    rs = build_root_system(LieType.parse(args.algebra))
    ws = pim_recursive(rs, args.node, args.level)
    rows = []
    for w in ws.sorted_weights():
        rows.append({"weight": list(w.coords), "multiplicity": 1,
                     "dim": weyl_dim(rs, w)})
    top = rs.fundamental_weight(args.node).scale(args.level)
    rows.sort(key=lambda r: (weight_minus_in_roots(rs, top, Weight(tuple(r["weight"]))).height(),
                             tuple(r["weight"])))
    total = kr_dimension(rs, args.node, args.level)
    header = {"algebra": _algebra_payload(rs.lie_type),
              "node": args.node, "level": args.level}
    _emit_rows(rows, total, args.format, header, out)
    return EXIT_OK


def _cmd_fermionic(args, out):
    rs = build_root_system(LieType.parse(args.algebra))
    factors = FactorList.parse(rs, args.factors)
    header = {"algebra": _algebra_payload(rs.lie_type),
              "factors": [{"node": f.node, "level": f.level}
                          for f in factors.factors]}
    cache_dir = args.cache or os.environ.get("KRFERMION_CACHE")
    request = {"command": "fermionic", **header}
    payload = _cache_read(cache_dir, request) if cache_dir else None
    if payload is None:
        dec = fermionic_decomposition(rs, factors)
        rows, total = decomposition_to_json(rs, dec, factors.top_weight())
        payload = {"schema_version": SCHEMA_VERSION, **header,
                   "decomposition": rows, "total_dim": total}
        if cache_dir:
            _cache_write(cache_dir, request, payload)
    rows, total = payload["decomposition"], payload["total_dim"]
    if args.format == "json":
        json.dump(payload, out, sort_keys=True)
        out.write("\n")
    else:
        _emit_rows(rows, total, args.format, header, out)
    if args.format == "text":
        try:
            prod = 1
            for f in factors.factors:
                prod *= kr_dimension(rs, f.node, f.level)
        except UnsupportedError:
            out.write("dimension check: no table entry for some factor\n")
        else:
            tag = "ok" if prod == total else "MISMATCH"
            out.write(f"dimension check: product of factor dims {prod} [{tag}]\n")
    return EXIT_OK


def _cmd_tensor(args, out):
    rs = build_root_system(LieType.parse(args.algebra))

    def parse_weight(text):
        try:
            coords = tuple(int(x) for x in text.split(","))
        except ValueError:
            raise InputError(f"cannot parse weight {text!r}") from None
        if len(coords) != rs.rank:
            raise InputError(f"weight {text!r} has wrong length for {rs.lie_type}")
        return Weight(coords)

    left, right = parse_weight(args.left), parse_weight(args.right)
    dec = tensor_decompose(rs, left, right)
    rows, total = decomposition_to_json(rs, dec, left + right)
    header = {"algebra": _algebra_payload(rs.lie_type),
              "left": list(left.coords), "right": list(right.coords)}
    _emit_rows(rows, total, args.format, header, out)
    if args.format == "text":
        prod = weyl_dim(rs, left) * weyl_dim(rs, right)
        tag = "ok" if prod == total else "MISMATCH"
        out.write(f"dimension bilinearity: {prod} [{tag}]\n")
    return EXIT_OK


def _cmd_verify(args, out):
    rs = build_root_system(LieType.parse(args.algebra))
    reports = run_suite(rs, args.suite, args.max_level)
    all_pass = all(r.passed for r in reports)
    if args.format == "json":
        json.dump({"schema_version": SCHEMA_VERSION,
                   "algebra": _algebra_payload(rs.lie_type),
                   "suite": args.suite,
                   "all_pass": all_pass,
                   "reports": [report_to_json(r) for r in reports]},
                  out, sort_keys=True)
        out.write("\n")
    else:
        for r in reports:
            scope = {k: v for k, v in r.scope.items()
                     if k not in ("table", "formula")}
            out.write(f"[{r.status.upper():4}] {r.claim} {scope} ({r.label})\n")
            for ce in r.counterexamples:
                out.write(f"    weight {ce['input']}: expected {ce['expected']},"
                          f" got {ce['got']}\n")
        out.write(f"{sum(r.passed for r in reports)}/{len(reports)} passed\n")
    return EXIT_OK if all_pass else EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="krfermion",
        description="Exact KR branching tables and the fermionic multiplicity formula")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--algebra", required=True,
                       help="letter+rank, e.g. B3 or E6")
        p.add_argument("--format", choices=("text", "json", "csv"),
                       default="text")

    p = sub.add_parser("pim", help="branching set of one classical KR factor")
    common(p)
    p.add_argument("--node", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(func=_cmd_pim)

    p = sub.add_parser("fermionic", help="decomposition of a KR tensor product")
    common(p)
    p.add_argument("--factors", required=True,
                   help="comma-joined node:level pairs, e.g. 2:1,3:2")
    p.add_argument("--cache", default=None,
                   help="cache directory (default $KRFERMION_CACHE)")
    p.set_defaults(func=_cmd_fermionic)

    p = sub.add_parser("verify", help="run a verification suite")
    common(p)
    p.add_argument("--suite", default="all",
                   choices=("branching", "type-a-tensor", "exceptional",
                            "dimensions", "all"))
    p.add_argument("--max-level", type=int, default=2)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("tensor", help="tensor product of two irreducibles")
    common(p)
    p.add_argument("--left", required=True, help="comma-separated coordinates")
    p.add_argument("--right", required=True, help="comma-separated coordinates")
    p.set_defaults(func=_cmd_tensor)

    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out)
    except UnsupportedError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except InputError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
