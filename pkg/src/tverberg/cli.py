"""Command-line front end: solve, verify, enumerate, draw.

Exit codes are stable machinery, one failure class each:
0 success (verify: certificate valid), 1 invalid certificate, 2 unparseable
input, 3 wrong point count, 4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .certify import (
    DEFAULT_ORACLE_CAP,
    CapExceededError,
    brute_force_tverberg,
    verify_radon,
    verify_tverberg,
)
from .drawing import certificate_svg
from .fileio import ParseError, load_certificate, load_points, save_certificate
from .partition import point_count, tverberg_partition
from .radon import RadonCertificate, radon_partition

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_SIZE = 3
EXIT_CAP = 4

CAP_ENV_VAR = "TVERBERG_ORACLE_CAP"


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _default_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_ORACLE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ParseError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    if cap <= 0:
        raise ParseError(f"{CAP_ENV_VAR} must be positive, got {cap}")
    return cap


def cmd_radon(args: argparse.Namespace) -> int:
    try:
        pointset = load_points(args.points, args.format)
    except ParseError as exc:
        return _fail(EXIT_PARSE, str(exc))
    expected = pointset.dimension + 2
    if len(pointset.points) != expected:
        return _fail(
            EXIT_SIZE,
            f"need exactly d + 2 = {expected} points in dimension "
            f"{pointset.dimension}, got {len(pointset.points)}",
        )
    cert = radon_partition(list(pointset.points))
    save_certificate(cert, args.out)
    print(f"radon certificate written to {args.out}")
    return EXIT_OK


def cmd_tverberg(args: argparse.Namespace) -> int:
    try:
        pointset = load_points(args.points, args.format)
    except ParseError as exc:
        return _fail(EXIT_PARSE, str(exc))
    expected = point_count(pointset.dimension, args.r)
    if len(pointset.points) != expected:
        return _fail(
            EXIT_SIZE,
            f"need (d+1)(r-1)+1 = {expected} points for d={pointset.dimension}, "
            f"r={args.r}, got {len(pointset.points)}",
        )
    cert = tverberg_partition(list(pointset.points), args.r)
    save_certificate(cert, args.out)
    print(f"tverberg certificate written to {args.out} ({cert.iterations} pivots)")
    if args.svg:
        if pointset.dimension == 2:
            Path(args.svg).write_text(
                certificate_svg(pointset.points, cert, pointset.labels), encoding="utf-8"
            )
            print(f"drawing written to {args.svg}")
        else:
            print(
                f"warning: --svg ignored (needs d=2, input has d={pointset.dimension})",
                file=sys.stderr,
            )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        pointset = load_points(args.points, args.format)
        cert = load_certificate(args.certificate)
    except ParseError as exc:
        return _fail(EXIT_PARSE, str(exc))
    if isinstance(cert, RadonCertificate):
        report = verify_radon(pointset.points, cert)
    else:
        report = verify_tverberg(pointset.points, cert)
    print(report.render())
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_oracle(args: argparse.Namespace) -> int:
    try:
        pointset = load_points(args.points, args.format)
        cap = args.cap if args.cap is not None else _default_cap()
    except ParseError as exc:
        return _fail(EXIT_PARSE, str(exc))
    try:
        partitions = brute_force_tverberg(list(pointset.points), args.r, cap)
    except CapExceededError as exc:
        return _fail(EXIT_CAP, str(exc))
    for groups in partitions:
        print(" ".join("{" + ",".join(str(i) for i in g) + "}" for g in groups))
    print(f"{len(partitions)} partition(s) with a common hull point")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tverberg",
        description="Exact Radon/Tverberg partitions with verifiable certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("points", help="point-set file (.csv or .json)")
        p.add_argument(
            "--format", choices=("csv", "json"), help="override format autodetection"
        )

    p_radon = sub.add_parser("radon", help="split d+2 points into two groups with a common hull point")
    add_common(p_radon)
    p_radon.add_argument("--out", required=True, help="certificate output path")
    p_radon.set_defaults(func=cmd_radon)

    p_tve = sub.add_parser("tverberg", help="split (d+1)(r-1)+1 points into r groups with a common hull point")
    add_common(p_tve)
    p_tve.add_argument("--r", type=int, required=True, help="number of groups (>= 2)")
    p_tve.add_argument("--out", required=True, help="certificate output path")
    p_tve.add_argument("--svg", help="also draw the certificate (d=2 only)")
    p_tve.set_defaults(func=cmd_tverberg)

    p_ver = sub.add_parser("verify", help="re-check a certificate against its point set")
    add_common(p_ver)
    p_ver.add_argument("certificate", help="certificate file to verify")
    p_ver.set_defaults(func=cmd_verify)

    p_ora = sub.add_parser("oracle", help="enumerate every partition with a common hull point")
    add_common(p_ora)
    p_ora.add_argument("--r", type=int, required=True, help="number of groups (>= 2)")
    p_ora.add_argument(
        "--cap",
        type=int,
        help=f"assignment cap (default {DEFAULT_ORACLE_CAP}, or ${CAP_ENV_VAR})",
    )
    p_ora.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "r", None) is not None and args.r < 2:
        return _fail(EXIT_SIZE, f"--r must be at least 2, got {args.r}")
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
