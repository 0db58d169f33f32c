"""Command-line front end: expand, scan, verify, cross-validate, kostka, bounce.

Exit codes: 0 when everything checked passes, 1 when a mathematical
violation is found, 2 for usage errors, resource limits and partial runs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, Optional, Sequence

from . import involutions as inv
from .dyck import (
    DyckPath,
    InvalidDyckPath,
    UnitIntervalPoset,
    enumerate_dyck_paths,
    incomparability_graph,
    is_corollary46_class,
    is_theorem41_class,
    tau_from_dyck,
)
from .expansions import (
    BasisError,
    closed_form_coefficient,
    e_expansion,
    is_e_positive,
    schur_expansion,
)
from .harness import applicable_paths, levels, verify_injection
from .oracles import (
    ResourceLimitError,
    check_limit,
    cross_validate,
    max_n,
    monomial_expansion_bruteforce,
)
from .partitions import inverse_kostka, kostka, parse_partition

EXIT_PASS, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

# class-restricted scans touch a thin family of paths, so they may go further
CLASS_SCAN_EXTRA = 3

CLASSES: dict[str, Callable[[DyckPath], bool]] = {
    "thm41": is_theorem41_class,
    "cor46": is_corollary46_class,
}


SIZE_HELP = "board size; with it the list may also end with d_n = n"


class UsageError(Exception):
    pass


class PartialRun(Exception):
    pass


def _emit(fmt: str, text: str, payload) -> None:
    print(json.dumps(payload) if fmt == "json" else text)


def _stream(fn, items: Sequence, jobs: int, deadline: Optional[float]) -> Iterator:
    """Apply fn to items in order, across a pool when jobs > 1, stopping at the deadline."""
    if jobs > 1:
        with Pool(jobs) as pool:
            for out in pool.imap(fn, items):
                if deadline is not None and time.monotonic() > deadline:
                    pool.terminate()
                    raise PartialRun
                yield out
        return
    for item in items:
        if deadline is not None and time.monotonic() > deadline:
            raise PartialRun
        yield fn(item)


def _deadline(limit: Optional[float]) -> Optional[float]:
    return None if limit is None else time.monotonic() + limit


# ---------------------------------------------------------------------------
# expand


def cmd_expand(args) -> int:
    P = UnitIntervalPoset(DyckPath.parse(args.dyck, args.size))
    if args.basis == "m":
        X = monomial_expansion_bruteforce(incomparability_graph(P))
    elif args.basis == "s":
        X = schur_expansion(P)
    else:
        X = e_expansion(P)
    _emit(args.format, X.to_text(), X.to_dict())
    return EXIT_PASS


# ---------------------------------------------------------------------------
# scan


def _scan_one(job) -> dict:
    check, d = job
    P = UnitIntervalPoset(DyckPath.of(d))
    out = {"dyck": list(d), "violations": []}
    if check == "e-positive":
        res = is_e_positive(e_expansion(P))
        if not res:
            lam, power, coeff = res.witness
            out["violations"].append(f"e{lam}: coefficient {coeff} at q^{power}")
        return out
    j = 0 if check == "coeff-l0" else 1
    if P.bounce.bounce_number != 3:
        out["skipped"] = True
        return out
    k = P.bounce.k
    for l in levels(P):
        if j > k - 2 * l:
            continue
        bad = closed_form_coefficient(P, l, j).first_negative()
        if bad is not None:
            out["violations"].append(f"l={l} j={j}: coefficient {bad[1]} at q^{bad[0]}")
    return out


def cmd_scan(args) -> int:
    if args.cls:
        check_limit(args.n, max_n() + CLASS_SCAN_EXTRA)
    else:
        check_limit(args.n)
    keep = CLASSES[args.cls] if args.cls else (lambda p: True)
    jobs = [(args.check, p.d) for p in enumerate_dyck_paths(args.n, args.bounce) if keep(p)]
    deadline = _deadline(args.limit)
    scanned = skipped = 0
    violations: list[dict] = []
    try:
        for rec in _stream(_scan_one, jobs, args.jobs, deadline):
            scanned += 1
            skipped += rec.get("skipped", False)
            if rec["violations"]:
                violations.append(rec)
                if args.format == "text":
                    d = ",".join(map(str, rec["dyck"]))
                    for v in rec["violations"]:
                        print(f"violation d=({d}) {v}")
    except PartialRun:
        print(f"partial scan: stopped after {scanned} of {len(jobs)} paths", file=sys.stderr)
        return EXIT_USAGE
    summary = {
        "n": args.n,
        "check": args.check,
        "scanned": scanned,
        "skipped": skipped,
        "violations": violations,
    }
    _emit(
        args.format,
        f"scanned {scanned} paths ({skipped} skipped), {len(violations)} with violations",
        summary,
    )
    return EXIT_VIOLATION if violations else EXIT_PASS


# ---------------------------------------------------------------------------
# verify


def _verify_one(job) -> list[dict]:
    name, d = job
    P = UnitIntervalPoset(DyckPath.of(d))
    if name in inv.LEVELED:
        return [verify_injection(name, P, l).to_dict() for l in levels(P)]
    return [verify_injection(name, P).to_dict()]


def cmd_verify(args) -> int:
    names = list(inv.MAPS) if args.map == "all" else [args.map]
    deadline = _deadline(args.limit)
    reports: list[dict] = []
    lines: list[str] = []
    try:
        for name in names:
            paths = [p.d for p in applicable_paths(name, args.n, args.cls == "thm41")]
            if not paths:
                lines.append(f"{name} n={args.n}: vacuous (no applicable paths)")
                continue
            batch = [r for out in _stream(_verify_one, [(name, d) for d in paths], args.jobs, deadline) for r in out]
            reports.extend(batch)
            bad = [r for r in batch if r["status"] != "pass"]
            empty = sum(1 for r in batch if r["domain"] == 0)
            lines.append(
                f"{name} n={args.n}: {'pass' if not bad else 'fail'} "
                f"({len(batch)} instances, {empty} with empty domain, {len(bad)} failing)"
            )
            for r in bad[:5]:
                d = ",".join(map(str, r["dyck"]))
                f = r["failures"][0]
                lines.append(f"  d=({d}) l={r['l']}: {f['reason']} [{f['tableau']}]")
    except PartialRun:
        print(f"partial verification: stopped after {len(reports)} instances", file=sys.stderr)
        return EXIT_USAGE
    failed = any(r["status"] != "pass" for r in reports)
    _emit(args.format, "\n".join(lines), {"reports": reports, "status": "fail" if failed else "pass"})
    return EXIT_VIOLATION if failed else EXIT_PASS


# ---------------------------------------------------------------------------
# cross-validate, kostka, bounce


def _cross_one(d) -> dict:
    return cross_validate(UnitIntervalPoset(DyckPath.of(d))).to_dict()


def cmd_cross_validate(args) -> int:
    check_limit(args.n)
    paths = [p.d for p in enumerate_dyck_paths(args.n)]
    try:
        results = list(_stream(_cross_one, paths, args.jobs, _deadline(args.limit)))
    except PartialRun:
        print("partial cross-validation", file=sys.stderr)
        return EXIT_USAGE
    bad = [r for r in results if r["status"] != "pass"]
    text = f"cross-validate n={args.n}: {'pass' if not bad else 'fail'} ({len(results)} paths, {len(bad)} failing)"
    for r in bad[:5]:
        text += f"\n  d=({','.join(map(str, r['dyck']))}) {r['stage']} m{tuple(r['partition'])}"
    _emit(args.format, text, {"n": args.n, "results": results})
    return EXIT_VIOLATION if bad else EXIT_PASS


def cmd_kostka(args) -> int:
    lam = parse_partition(args.type)
    mu = parse_partition(args.shape)
    if lam.size != mu.size:
        raise UsageError(f"size mismatch: type {lam} has size {lam.size}, shape {mu} has size {mu.size}")
    value = inverse_kostka(lam, mu) if args.inverse else kostka(mu, lam)
    print(value)
    return EXIT_PASS


def cmd_bounce(args) -> int:
    path = DyckPath.parse(args.dyck, args.size)
    bd = UnitIntervalPoset(path).bounce
    payload = {
        "dyck": list(path.d),
        "n": path.n,
        "m": list(bd.m),
        "bounce_number": bd.bounce_number,
        "S1": list(bd.S1),
        "S2": list(bd.S2),
        "S3": list(bd.S3),
        "tau": list(tau_from_dyck(path)),
    }
    if bd.bounce_number == 3:
        payload.update(a=bd.a, b=bd.b, c=bd.c, k=bd.k)
    text = [f"m=({','.join(map(str, bd.m))}), |m|={bd.bounce_number}"]
    if bd.bounce_number == 3:
        for name in ("S1", "S2", "S3"):
            text.append(f"{name}={{{','.join(map(str, payload[name]))}}}")
        text.append(f"a={bd.a} b={bd.b} c={bd.c} k={bd.k}")
    text.append(f"tau=({','.join(map(str, payload['tau']))})")
    _emit(args.format, "\n".join(text), payload)
    return EXIT_PASS


# ---------------------------------------------------------------------------
# parser


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csfpos",
        description="Chromatic quasisymmetric functions of natural unit interval orders.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, pool: bool = False):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if pool:
            p.add_argument("--jobs", type=_positive, default=1, help="worker processes")
            p.add_argument("--limit", type=float, default=None, help="wall-clock limit in seconds")

    p = sub.add_parser("expand", help="expand X_G in the m, s or e basis")
    p.add_argument("--dyck", required=True, help="comma-separated d_1..d_{n-1}, e.g. 2,3")
    p.add_argument("--n", dest="size", type=_positive, default=None, help=SIZE_HELP)
    p.add_argument("--basis", choices=("m", "s", "e"), default="e")
    common(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("scan", help="check a property on every Dyck path of size n")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--bounce", type=_positive, default=None)
    p.add_argument("--check", choices=("e-positive", "coeff-l0", "coeff-l1"), default="e-positive")
    p.add_argument("--class", dest="cls", choices=tuple(CLASSES), default=None)
    common(p, pool=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="certify the injections on every applicable path")
    p.add_argument("--map", choices=tuple(inv.MAPS) + ("all",), required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--class", dest="cls", choices=("thm41",), default=None)
    common(p, pool=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cross-validate", help="compare every expansion route with brute force")
    p.add_argument("--n", type=_positive, required=True)
    common(p, pool=True)
    p.set_defaults(func=cmd_cross_validate)

    p = sub.add_parser("kostka", help="a Kostka or inverse Kostka number")
    p.add_argument("--type", required=True, help="content (Kostka) or hook type (inverse)")
    p.add_argument("--shape", required=True)
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("bounce", help="bounce path data of a Dyck path")
    p.add_argument("--dyck", required=True, help="comma-separated d_1..d_{n-1}")
    p.add_argument("--n", dest="size", type=_positive, default=None, help=SIZE_HELP)
    common(p)
    p.set_defaults(func=cmd_bounce)
    return parser


def main(argv: Optional[Iterable[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(None if argv is None else list(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        return args.func(args)
    except (UsageError, InvalidDyckPath, ResourceLimitError, BasisError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
