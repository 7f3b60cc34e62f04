"""Command-line entry point: p2k <group> <command> [flags].

Groups mirror the library: cover (enumerate/verify), progression
(derive/verify/census), chen (check/scan), density.  Results go to stdout
in the selected format; progress lines go to stderr only.  Exit codes:
0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import chenscan, covering, density, progressions

WORKERS_ENV = "P2K_WORKERS"


def _parse_classes(text: str) -> covering.CoveringSystem:
    """Classes as 'a:d,a:d,...', e.g. '0:2,0:3,1:4,3:8,7:12,23:24'."""
    pairs = []
    for part in text.split(","):
        a, d = part.split(":")
        pairs.append((int(a), int(d)))
    return covering.CoveringSystem.from_pairs(pairs)


def _parse_ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _load_config(path: str | None) -> dict[str, str]:
    if not path:
        return {}
    config = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            config[key.strip()] = value.strip()
    return config


def _default_workers(config: dict[str, str]) -> int:
    if WORKERS_ENV in os.environ:
        return int(os.environ[WORKERS_ENV])
    if "workers" in config:
        return int(config["workers"])
    return 1


def _emit(text: str):
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _cmd_cover_enumerate(args, config) -> int:
    last_note = [time.monotonic()]

    def progress(mods, found):
        now = time.monotonic()
        if now - last_note[0] > 5:
            last_note[0] = now
            print(f"... moduli {mods}: {found} coverings so far", file=sys.stderr)

    report = covering.enumerate_cdl_systems(args.D, progress=progress)
    if args.format == "json":
        _emit(report.to_json())
    elif args.format == "csv":
        _emit(report.to_csv())
    else:
        if report.skip_reason:
            _emit(f"D={report.D}: skipped ({report.skip_reason})")
        else:
            _emit(
                f"D={report.D}: {len(report.systems)} minimal CDL covering systems, "
                f"{report.distinct_progression_count} distinct progressions"
            )
            for (system, asg), (a, m) in zip(report.systems, report.progressions):
                classes = " ".join(f"{c.residue}(mod {c.modulus})" for c in system.classes)
                _emit(f"  {classes}  ->  {a} (mod {m})")
    return 0


def _cmd_cover_verify(args, config) -> int:
    system = _parse_classes(args.classes)
    assignments = covering.find_prime_assignments(system.moduli)
    result = {
        "classes": [[c.residue, c.modulus] for c in system.classes],
        "lcm": system.lcm_D,
        "covering": covering.is_covering(system),
        "minimal": covering.is_minimal(system),
        "cdl": bool(assignments),
        "assignments": [[[d, p] for d, p in a.pairs] for a in assignments],
    }
    if args.format == "json":
        _emit(json.dumps(result, indent=2))
    else:
        _emit(
            f"covering={result['covering']} minimal={result['minimal']} "
            f"cdl={result['cdl']} assignments={len(assignments)}"
        )
    return 0


def _assignment_for(args, system: covering.CoveringSystem) -> covering.PrimeAssignment:
    if args.primes:
        primes = _parse_ints(args.primes)
        return covering.PrimeAssignment.from_pairs(zip(system.moduli, primes))
    if getattr(args, "match_modulus", None):
        return progressions.assignment_matching_modulus(system.moduli, args.match_modulus)
    asg = covering.canonical_assignment(system.moduli)
    if asg is None:
        raise ValueError(f"no prime assignment exists for moduli {system.moduli}")
    return asg


def _cmd_progression_derive(args, config) -> int:
    system = _parse_classes(args.classes)
    asg = _assignment_for(args, system)
    prog = progressions.derive_progression(system, asg)
    if args.format == "json":
        _emit(
            json.dumps(
                {
                    "a": prog.residue,
                    "M": prog.modulus,
                    "assignment": [[d, p] for d, p in asg.pairs],
                },
                indent=2,
            )
        )
    else:
        _emit(f"{prog.residue} (mod {prog.modulus})")
    return 0


def _cmd_progression_verify(args, config) -> int:
    system = _parse_classes(args.classes)
    asg = _assignment_for(args, system)
    prog = progressions.derive_progression(system, asg)
    if args.a is not None and prog.residue != args.a:
        raise ValueError(f"derived residue {prog.residue}, expected {args.a}")
    cert = progressions.verify_excludes_primes(prog)
    certified = progressions.membership_in_U_is_certified(prog)
    if args.format == "json":
        payload = json.loads(cert.to_json())
        payload["membership_certified"] = certified
        _emit(json.dumps(payload, indent=2))
    else:
        _emit(
            f"a={prog.residue} M={prog.modulus} exclusion={cert.verdict} "
            f"membership_certified={certified}"
        )
    return 0


def _cmd_progression_census(args, config) -> int:
    if args.D is not None:
        report = covering.enumerate_cdl_systems(args.D)
        pairs = sorted(set(report.progressions))
    else:
        if not args.residues or args.modulus is None:
            raise ValueError("census needs either --D or --residues with --modulus")
        pairs = [(a, args.modulus) for a in _parse_ints(args.residues)]
    total, hits = progressions.pair_gcd_census(pairs)
    if args.format == "json":
        _emit(json.dumps({"progressions": len(pairs), "pairs": total, "gcd_2": hits}))
    else:
        _emit(f"{len(pairs)} progressions, {total} pairs, {hits} with gcd 2")
    return 0


def _cmd_chen_check(args, config) -> int:
    verdict = chenscan.check_even_modulus(args.b)
    if args.format == "json":
        _emit(verdict.to_json())
    else:
        if verdict.covered:
            _emit(f"b={verdict.b}: covered after {verdict.shifts_used} shifts")
        else:
            _emit(
                f"b={verdict.b}: NOT covered after {verdict.shifts_used} shifts; "
                f"{len(verdict.leftover)} odd residues left: "
                + ",".join(map(str, verdict.leftover))
            )
    return 0


def _cmd_chen_scan(args, config) -> int:
    workers = args.workers if args.workers else _default_workers(config)
    last_note = [time.monotonic()]

    def progress(last_b, uncovered):
        now = time.monotonic()
        if now - last_note[0] > 5:
            last_note[0] = now
            print(f"... scanned to b={last_b}, {uncovered} uncovered", file=sys.stderr)

    report = chenscan.scan_range(
        args.from_b,
        args.to_b,
        checkpoint_path=args.checkpoint,
        workers=workers,
        progress=progress,
    )
    if args.format == "json":
        _emit(
            json.dumps(
                {
                    "from": report.b_lo,
                    "to": report.b_hi,
                    "uncovered": [json.loads(v.to_json()) for v in report.uncovered_moduli],
                    "elapsed": report.elapsed,
                    "checkpoint": report.checkpoint,
                },
                indent=2,
            )
        )
    else:
        _emit(
            f"scanned even b in [{report.b_lo}, {report.b_hi}]: "
            f"{len(report.uncovered_moduli)} uncovered ({report.elapsed:.1f}s)"
        )
        for v in report.uncovered_moduli:
            _emit(f"  b={v.b}: {len(v.leftover)} residues left")
    return 0


def _cmd_density(args, config) -> int:
    primes = _parse_ints(args.primes)
    partition = None
    if args.partition:
        left_text, _, right_text = args.partition.partition("|")
        partition = (_parse_ints(left_text), _parse_ints(right_text))
    result = density.run_estimate(primes, partition=partition, variant=args.variant)
    if args.oracle:
        M = result.M
        if M > density.ORACLE_LIMIT:
            raise ValueError(f"M = {M} too large for --oracle")
        oracle = density.brute_force_delta(M)
        if oracle.counts != result.histogram.counts:
            raise AssertionError("cluster pipeline disagrees with brute-force oracle")
        print(f"oracle cross-check passed for M={M}", file=sys.stderr)
    if args.emit == "json":
        _emit(result.to_json())
    elif args.emit == "csv":
        lines = ["nu,delta"]
        lines += [f"{nu},{c}" for nu, c in result.histogram.sorted_items()]
        lines.append(f"bound,{result.decimal_upper()}")
        _emit("\n".join(lines))
    else:
        _emit(
            f"primes={','.join(map(str, result.primes))} M={result.M} "
            f"ord2={result.order} phi={result.phi}"
        )
        _emit(f"bound <= {result.decimal_upper()} ({result.variant}, rounded upward)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="p2k",
        description="Covering systems, progressions avoiding p + 2^k, and density bounds.",
    )
    parser.add_argument("--config", help="key=value config file", default=None)
    sub = parser.add_subparsers(dest="group", required=True)

    cover = sub.add_parser("cover", help="covering-system operations")
    cover_sub = cover.add_subparsers(dest="command", required=True)
    enum_p = cover_sub.add_parser("enumerate", help="all minimal CDL systems with lcm D")
    enum_p.add_argument("--D", type=int, required=True)
    enum_p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    enum_p.set_defaults(func=_cmd_cover_enumerate)
    verify_p = cover_sub.add_parser("verify", help="check covering/minimal/CDL")
    verify_p.add_argument("--classes", required=True, help="a:d,a:d,...")
    verify_p.add_argument("--format", choices=("json", "table"), default="table")
    verify_p.set_defaults(func=_cmd_cover_verify)

    prog = sub.add_parser("progression", help="CDL progression operations")
    prog_sub = prog.add_subparsers(dest="command", required=True)
    derive_p = prog_sub.add_parser("derive", help="derive (a, M) from a system")
    derive_p.add_argument("--classes", required=True)
    derive_p.add_argument("--primes", help="comma list matching the moduli order")
    derive_p.add_argument("--match-modulus", type=int, dest="match_modulus")
    derive_p.add_argument("--format", choices=("json", "table"), default="table")
    derive_p.set_defaults(func=_cmd_progression_derive)
    pverify_p = prog_sub.add_parser("verify", help="exclusion + membership certificate")
    pverify_p.add_argument("--classes", required=True)
    pverify_p.add_argument("--primes")
    pverify_p.add_argument("--match-modulus", type=int, dest="match_modulus")
    pverify_p.add_argument("--a", type=int, help="expected residue (checked)")
    pverify_p.add_argument("--format", choices=("json", "table"), default="table")
    pverify_p.set_defaults(func=_cmd_progression_verify)
    census_p = prog_sub.add_parser("census", help="pairwise gcd census")
    census_p.add_argument("--D", type=int, help="census the progressions for this D")
    census_p.add_argument("--residues", help="comma list of residues")
    census_p.add_argument("--modulus", type=int)
    census_p.add_argument("--format", choices=("json", "table"), default="table")
    census_p.set_defaults(func=_cmd_progression_census)

    chen = sub.add_parser("chen", help="odd-class sieve for even moduli")
    chen_sub = chen.add_subparsers(dest="command", required=True)
    check_p = chen_sub.add_parser("check", help="single modulus verdict")
    check_p.add_argument("--b", type=int, required=True)
    check_p.add_argument("--format", choices=("json", "table"), default="json")
    check_p.set_defaults(func=_cmd_chen_check)
    scan_p = chen_sub.add_parser("scan", help="scan a range of even moduli")
    scan_p.add_argument("--from", type=int, required=True, dest="from_b")
    scan_p.add_argument("--to", type=int, required=True, dest="to_b")
    scan_p.add_argument("--checkpoint", default=None)
    scan_p.add_argument("--workers", type=int, default=None)
    scan_p.add_argument("--format", choices=("json", "table"), default="table")
    scan_p.set_defaults(func=_cmd_chen_scan)

    dens = sub.add_parser("density", help="certified upper bound on the density")
    dens.add_argument("--primes", required=True, help="comma list of odd primes")
    dens.add_argument("--partition", help="left|right comma lists, e.g. 3,5|7")
    dens.add_argument("--variant", choices=density.VARIANTS, default="corrected")
    dens.add_argument("--oracle", action="store_true", help="brute-force cross-check")
    dens.add_argument("--emit", choices=("json", "csv", "table"), default="table")
    dens.set_defaults(func=_cmd_density)

    return parser


def dispatch(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    config = _load_config(args.config)
    try:
        return args.func(args, config)
    except (ValueError, AssertionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
