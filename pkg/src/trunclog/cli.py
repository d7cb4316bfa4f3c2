"""Command-line surface: show objects, emit root tables, run the verifier.

Thin shell over the library; results go to stdout, diagnostics to stderr.
Exit codes: 0 all requested checks pass, 1 any failure, 2 usage error.
The parameter variable renders as "a" and fractions as "num / den" with a
monic denominator, so textual output is stable across runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .bpoly import CSV_HEADER, b_roots_csv_rows, b_rs
from .fields import _is_prime
from .glog import glog
from .special import finite_polylog, laguerre_pm1
from .verify import TheoremId, coerce_theorem, verify_all, verify_theorem


def _parse_primes(spec: str):
    """A single odd prime "p" or an inclusive range "a..b" of odd primes."""
    if ".." in spec:
        lo_s, hi_s = spec.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
        if lo < 3 or hi < lo:
            raise ValueError(f"bad prime range {spec!r}")
        primes = [q for q in range(lo | 1, hi + 1, 2) if _is_prime(q)]
        if not primes:
            raise ValueError(f"no odd primes in range {spec!r}")
        return primes
    p = int(spec)
    if p < 3 or p % 2 == 0 or not _is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    return [p]


@dataclass(frozen=True)
class CliConfig:
    """Validated invocation: primes are odd primes before any computation."""

    command: str                      # show | table | verify
    primes: tuple[int, ...]
    target: str                       # object name or theorem id or "all"
    format: str = "text"
    seed: int = 0
    pairs: int | str | None = None    # CCoefficients budget
    dlog: int = 1

    @classmethod
    def from_args(cls, args) -> "CliConfig":
        primes = tuple(_parse_primes(args.prime))
        pairs = getattr(args, "pairs", None)
        if pairs is not None and pairs != "exhaustive":
            pairs = int(pairs)
        return cls(
            command=args.command,
            primes=primes,
            target=getattr(args, "target", None) or getattr(args, "theorem", "all"),
            format=getattr(args, "format", "text"),
            seed=getattr(args, "seed", 0),
            pairs=pairs,
            dlog=getattr(args, "dlog", 1),
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trunclog",
        description="characteristic-p special polynomials and identity checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    show = sub.add_parser("show", help="construct and print an object")
    show.add_argument("target", choices=["glog", "laguerre", "b", "polylog", "all"])
    show.add_argument("--prime", required=True)
    show.add_argument("--format", choices=["text", "json"], default="text")
    show.add_argument("--dlog", type=int, default=1, help="polylog order")

    table = sub.add_parser("table", help="emit a CSV table")
    table.add_argument("target", choices=["b-roots"])
    table.add_argument("--prime", required=True)

    verify = sub.add_parser("verify", help="run identity checkers")
    verify.add_argument("--prime", required=True)
    verify.add_argument("--theorem", default="all")
    verify.add_argument("--format", choices=["text", "json"], default="text")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument(
        "--pairs",
        default=None,
        help="pair budget for CCoefficients: an int or 'exhaustive'",
    )
    return parser


def _show_payload(p: int, target: str, dlog: int) -> dict:
    payload: dict = {"prime": p}
    if target in ("glog", "all"):
        g = glog(p)
        payload["glog"] = {"text": g.render_text(), **g.to_json()}
    if target in ("laguerre", "all"):
        payload["laguerre"] = str(laguerre_pm1(p))
    if target in ("b", "all"):
        payload["b"] = {
            f"b[1,{s}]": str(b_rs(p, 1, s)) for s in range(1, p - 1)
        }
    if target in ("polylog", "all"):
        payload["polylog"] = {
            "order": dlog,
            "text": str(finite_polylog(p, dlog)),
        }
    return payload


def _print_show_text(payload: dict) -> None:
    print(f"p = {payload['prime']}")
    if "glog" in payload:
        print(f"G(X) = {payload['glog']['text']}")
    if "laguerre" in payload:
        print(f"L(X) = {payload['laguerre']}")
    if "b" in payload:
        for name, text in payload["b"].items():
            print(f"{name}(a) = {text}")
    if "polylog" in payload:
        d = payload["polylog"]["order"]
        print(f"polylog_{d}(X) = {payload['polylog']['text']}")


def _run_show(config: CliConfig) -> int:
    payloads = [_show_payload(p, config.target, config.dlog) for p in config.primes]
    if config.format == "json":
        print(json.dumps(payloads[0] if len(payloads) == 1 else payloads,
                         indent=2, sort_keys=True))
    else:
        for payload in payloads:
            _print_show_text(payload)
    return 0


def _run_table(config: CliConfig) -> int:
    print(CSV_HEADER)
    for p in config.primes:
        for row in b_roots_csv_rows(p):
            print(row)
    return 0


def _run_verify(config: CliConfig) -> int:
    reports = []
    for p in config.primes:
        if config.target == "all":
            reports.extend(verify_all(p, c_pairs=config.pairs, seed=config.seed))
        else:
            tid = coerce_theorem(config.target)
            overrides = {}
            if tid is TheoremId.CCoefficients:
                overrides = {"pair_budget": config.pairs, "seed": config.seed}
            reports.append(verify_theorem(p, tid, **overrides))
    if config.format == "json":
        objs = [r.to_json_dict() for r in reports]
        print(json.dumps(objs[0] if len(objs) == 1 else objs, indent=2))
    else:
        for r in reports:
            print(r.one_line())
            if r.witness is not None:
                print(f"    witness: {json.dumps(r.witness)}")
            if r.notes:
                print(f"    notes: {r.notes}")
    return 0 if all(r.status != "fail" for r in reports) else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = CliConfig.from_args(args)
        if config.command == "show":
            return _run_show(config)
        if config.command == "table":
            return _run_table(config)
        if config.command == "verify":
            return _run_verify(config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
