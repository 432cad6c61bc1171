"""Batch command-line interface.

Every verification and computation is a subcommand emitting a run report;
the process exits 0 exactly when all checks in the report pass, 1 on a
failed check, 2 on usage errors, and 3 when an enumeration cap is exceeded.
Reports are deterministic for fixed inputs regardless of --threads (only
the timing field varies).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import groups
from .errors import CapExceeded, SolweightsError, UnknownSpec

ENV_CAP = "SOLWEIGHTS_CAP"


def _report(command: str, inputs: dict, results: dict, checks: list[dict],
            elapsed: float) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "checks": checks,
        "timing": {"elapsed_s": round(elapsed, 3)},
    }


def _emit(report: dict, as_json: bool) -> int:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True, default=str))
    else:
        print(f"== {report['command']} ==")
        for key, value in report["results"].items():
            print(f"{key}: {value}")
        for check in report["checks"]:
            status = "PASS" if check["pass"] else "FAIL"
            print(f"[{status}] {check['check']}: expected {check['expected']}, "
                  f"got {check['computed']}")
        print(f"elapsed: {report['timing']['elapsed_s']}s")
    return 0 if all(c["pass"] for c in report["checks"]) else 1


def _check(name: str, expected, computed) -> dict:
    return {"check": name, "expected": expected, "computed": computed,
            "pass": expected == computed}


DEF0_TABLE = [
    ("S3", 1), ("x(S3,S3)", 1), ("x(S3,x(S3,S3))", 1), ("wr(S3,C2)", 0),
    ("dih(C3xC3)", 4), ("m324", 1), ("GL(3,2)", 1), ("GL(4,2)", 1),
    ("S6", 1), ("wr(S3,S3)", 1), ("S5", 0), ("A7", 0), ("S7", 0),
]


def cmd_defect_zero(args) -> int:
    from .robinson import robinson_matrix
    from .zoo import named_group

    t0 = time.monotonic()
    G = named_group(args.group)
    data = robinson_matrix(G, threads=args.threads)
    results = data.to_json(name=args.group)
    report = _report("defect-zero", {"group": args.group}, results, [],
                     time.monotonic() - t0)
    return _emit(report, args.json)


def cmd_table_def0(args) -> int:
    from .robinson import defect_zero_block_count
    from .zoo import named_group

    t0 = time.monotonic()
    checks = []
    for spec, expected in DEF0_TABLE:
        count, _ = defect_zero_block_count(named_group(spec), threads=args.threads)
        checks.append(_check(f"z({spec})", expected, count))
    matched = sum(1 for c in checks if c["pass"])
    report = _report("table-def0", {}, {"matched": f"{matched}/{len(checks)}"},
                     checks, time.monotonic() - t0)
    return _emit(report, args.json)


def cmd_weights(args) -> int:
    from .fusion_tables import weight_count

    t0 = time.monotonic()
    w = weight_count(args.system, args.l)
    checks = [_check(f"w({args.system}, {args.l}) = 12", 12, w["total"])]
    if args.system == "F" and args.l == 0:
        expected = (1, 1, 4, 1, 1, 0, 1, 1, 1, 1)
        checks.append(_check("per-row z-vector", list(expected),
                             [r["z"] for r in w["rows"]]))
    report = _report("weights", {"system": args.system, "l": args.l},
                     {"total": w["total"], "rows": w["rows"]},
                     checks, time.monotonic() - t0)
    return _emit(report, args.json)


def cmd_verify(args) -> int:
    t0 = time.monotonic()
    if args.target == "quaternion":
        from .solmodel import verify_quaternion_lemma

        if not 1 <= args.l <= 3:
            print("verify quaternion requires --l in 1..3", file=sys.stderr)
            return 2
        rep = verify_quaternion_lemma(args.l)
        report = _report("verify-quaternion", {"l": args.l},
                         {"checks_run": len(rep["checks"])}, rep["checks"],
                         time.monotonic() - t0)
        return _emit(report, args.json)
    if args.target == "sol":
        if args.l not in (0, 1):
            print("verify sol requires --l in {0, 1}", file=sys.stderr)
            return 2
        from .solmodel import (
            sectional_rank_certificate,
            spotcheck_l1,
            verify_k_radicals_l0,
            verify_torus_sequence,
        )

        checks = list(verify_torus_sequence(args.l)["checks"])
        if args.l == 0:
            checks += sectional_rank_certificate()["checks"]
            checks += verify_k_radicals_l0()["checks"]
        else:
            checks += spotcheck_l1()["checks"]
        report = _report("verify-sol", {"l": args.l},
                         {"checks_run": len(checks)}, checks,
                         time.monotonic() - t0)
        return _emit(report, args.json)
    print(f"unknown verify target {args.target!r}", file=sys.stderr)
    return 2


def cmd_cohomology(args) -> int:
    from .cohomology import h2_dim, odd_h2_kx
    from .zoo import named_group

    t0 = time.monotonic()
    G = named_group(args.group)
    if args.prime:
        cert = h2_dim(G, args.prime, name=args.group)
        results = cert.to_json()
    else:
        results = odd_h2_kx(G, name=args.group).to_json()
    report = _report("cohomology", {"group": args.group, "prime": args.prime},
                     results, [], time.monotonic() - t0)
    return _emit(report, args.json)


def cmd_lim(args) -> int:
    from .poset_limits import verify_lim_A2

    t0 = time.monotonic()
    rep = verify_lim_A2(args.l)
    checks = [_check("lim = 0", 0, rep["lim_dim"]),
              _check("criterion", "a" if args.l >= 1 else "b", rep["criterion"])]
    report = _report("lim", {"l": args.l}, rep, checks, time.monotonic() - t0)
    return _emit(report, args.json)


def cmd_hasse(args) -> int:
    from .fusion_tables import hasse_export

    text = hasse_export(args.l, args.format)
    sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="solweights",
        description="Exact verification suite for the 2-local weight computations",
    )
    parser.add_argument("--json", action="store_true", help="emit a JSON run report")
    parser.add_argument("--threads", type=int, default=1,
                        help="parallel scans with deterministic merge")
    parser.add_argument("--cap", type=int, default=None,
                        help="override the enumeration cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("defect-zero", help="defect-zero block data for one group")
    p.add_argument("--group", required=True)
    p.set_defaults(func=cmd_defect_zero)

    p = sub.add_parser("table-def0", help="reproduce the 13-row block count table")
    p.set_defaults(func=cmd_table_def0)

    p = sub.add_parser("weights", help="weight count for a local system")
    p.add_argument("--system", choices=["H", "F"], required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("verify", help="structure verifications")
    p.add_argument("target", choices=["quaternion", "sol"])
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cohomology", help="degree-two cohomology certificate")
    p.add_argument("--group", required=True)
    p.add_argument("--prime", type=int, default=None)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("lim", help="vanishing of the twist-functor limit")
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(func=cmd_lim)

    p = sub.add_parser("hasse", help="export a centric radical class diagram")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_hasse)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cap = args.cap
    if cap is None and os.environ.get(ENV_CAP):
        try:
            cap = int(os.environ[ENV_CAP])
        except ValueError:
            print(f"bad {ENV_CAP} value", file=sys.stderr)
            return 2
    saved_cap = groups.DEFAULT_CAP
    if cap is not None:
        groups.DEFAULT_CAP = cap
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (UnknownSpec, SolweightsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        groups.DEFAULT_CAP = saved_cap


if __name__ == "__main__":
    raise SystemExit(main())
