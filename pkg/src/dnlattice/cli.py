"""Command-line entry point: ``dnlattice <command> ...``.

Exit status is 0 when every non-skipped check passes, 1 when a check
fails, and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import io
from .catalog import lattice_by_name, lattice_names
from .checks import (
    ALIASES,
    FAIL,
    REGISTRY,
    CheckResult,
    VerdictError,
    run_check,
    run_suite,
    verdict,
    witness_for_export,
)
from .cohomology import cohomology_entry
from .group import parse_subgroup, subgroups


def _zero_time(r: CheckResult) -> CheckResult:
    return CheckResult(r.id, r.n, r.status, r.detail, 0)


def _result_line(r: CheckResult) -> str:
    return f"{r.status.upper():7} {r.id:10} n={r.n:<3} {r.elapsed_ms:>7} ms  {r.detail}"


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _exit_code(results: Sequence[CheckResult]) -> int:
    return 1 if any(r.status == FAIL for r in results) else 0


def cmd_verify(args: argparse.Namespace) -> int:
    r = run_check(args.theorem, args.n)
    if args.deterministic:
        r = _zero_time(r)
    _emit(io.dumps(r.as_dict()) if args.format == "json" else _result_line(r))
    return _exit_code([r])


def cmd_suite(args: argparse.Namespace) -> int:
    if args.n_min > args.n_max:
        raise UsageError(f"--n-min {args.n_min} exceeds --n-max {args.n_max}")
    if args.n_min < 2:
        raise UsageError("--n-min must be at least 2")
    ids = args.only.split(",") if args.only else None
    results = run_suite(args.n_min, args.n_max, ids)
    if args.deterministic:
        results = [_zero_time(r) for r in results]
    counts = {s: sum(r.status == s for r in results) for s in ("pass", "fail", "skipped")}
    if args.format == "json":
        _emit(io.dumps({"n_min": args.n_min, "n_max": args.n_max, "summary": counts,
                        "results": [r.as_dict() for r in results]}))
    else:
        for r in results:
            _emit(_result_line(r))
        _emit(f"{counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped")
    return _exit_code(results)


def cmd_cohomology(args: argparse.Namespace) -> int:
    lat = lattice_by_name(args.lattice, args.n)
    subs = [parse_subgroup(args.subgroup, args.n)] if args.subgroup else subgroups(args.n)
    rows = {s.label: cohomology_entry(lat, s).as_dict() for s in subs}
    if args.format == "json":
        _emit(io.dumps({"lattice": args.lattice, "n": args.n, "rank": lat.rank, "subgroups": rows}))
    else:
        _emit(f"{args.lattice} at n={args.n} (rank {lat.rank})")
        for label, e in rows.items():
            _emit(f"  {label:10} H^-1 = {e['h_minus1']}, H^0 = {e['h0_hat']}, H^1 = {e['h1']}")
    return 0


def cmd_verdict(args: argparse.Namespace) -> int:
    try:
        v = verdict(args.n)
    except VerdictError as exc:
        print(f"verdict failed: {exc}", file=sys.stderr)
        return 1
    if args.deterministic:
        v = type(v)(v.n, v.stably_rational, v.retract_rational_over_infinite_k,
                    [_zero_time(e) for e in v.evidence], v.citations)
    if args.format == "json":
        _emit(io.dumps(v.as_dict()))
    else:
        _emit(f"n = {v.n}")
        _emit(f"stably rational: {'yes' if v.stably_rational else 'no'}")
        _emit(f"retract rational (infinite k): {'yes' if v.retract_rational_over_infinite_k else 'no'}")
        _emit("evidence:")
        for e in v.evidence:
            _emit("  " + _result_line(e))
        _emit("citations:")
        for c in v.citations:
            _emit(f"  {c}")
    return _exit_code(v.evidence)


def cmd_export(args: argparse.Namespace) -> int:
    if args.witness:
        payload = io.witness_to_dict(witness_for_export(args.witness, args.n))
    else:
        payload = io.lattice_to_dict(lattice_by_name(args.lattice, args.n))
    text = io.dumps(payload)
    if args.out == "-":
        _emit(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}", file=sys.stderr)
    return 0


class UsageError(ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dnlattice", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--deterministic", action="store_true",
                        help="report elapsed_ms as 0 so output is byte-stable")

    known = ", ".join(list(REGISTRY) + list(ALIASES))
    v = sub.add_parser("verify", help="run one named check")
    v.add_argument("--theorem", required=True, help=f"check id ({known})")
    v.add_argument("--n", type=int, required=True)
    common(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("suite", help="run every check over a range of n")
    s.add_argument("--n-min", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--only", help="comma-separated subset of check ids")
    common(s)
    s.set_defaults(func=cmd_suite)

    c = sub.add_parser("cohomology", help="H^-1, H^0 and H^1 of a named lattice")
    c.add_argument("--lattice", required=True, help=f"one of {', '.join(lattice_names())}")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--subgroup", help="rot:d or dih:d:i; all subgroups when omitted")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_cohomology)

    d = sub.add_parser("verdict", help="stable rationality verdict with recomputed evidence")
    d.add_argument("--n", type=int, required=True)
    common(d)
    d.set_defaults(func=cmd_verdict)

    e = sub.add_parser("export", help="write a lattice or witness as JSON")
    src = e.add_mutually_exclusive_group(required=True)
    src.add_argument("--lattice")
    src.add_argument("--witness", help="check id of an isomorphism witness")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--out", required=True, help="output path, or - for stdout")
    e.set_defaults(func=cmd_export)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"dnlattice: error: {msg}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"dnlattice: I/O error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
