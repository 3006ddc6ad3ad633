"""Command-line front end.

    levelcert check   R            [--n N]
    levelcert search  F R          [--n N] [--max-N K] [--height C] [--out PATH] [--shrink]
    levelcert verify  PATH
    levelcert polya   P            [--n N] [--max-N K]
    levelcert falsify F R          [--n N] [--grid K] [--tol T] [--height C]
    levelcert gn      R LEVEL      [--n N] [--height C]

Exit codes: 0 certified/verified/no witness, 1 exhausted, 2 refuted,
3 rejected input or failed verification, 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from . import certfile
from .certificates import (
    DEFAULT_MAX_N,
    PreconditionError,
    ProblemInstance,
    build_g,
    find_min_N,
    verify_certificate,
)
from .falsify import falsify
from .poly import PolynomialParseError, format_polynomial, parse_polynomial
from .polya import polya_expand, polya_min_N
from .support import check_precondition, log_set

EXIT_CODES = {
    "certified": 0,
    "verified": 0,
    "no-witness": 0,
    "exhausted": 1,
    "refuted": 2,
    "rejected-input": 3,
    "internal-error": 4,
}


@dataclass
class CommandResult:
    status: str
    payload: str = ""
    data: Optional[dict] = None

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


def infer_dim(*texts: str) -> int:
    idx = [int(m) for t in texts for m in re.findall(r"x(\d+)", t)]
    return max(idx, default=1)


def _rational(text) -> Fraction:
    try:
        c = Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational {text!r}") from exc
    return c


def _height(text) -> Fraction:
    c = _rational(text)
    if c <= 0:
        raise ValueError(f"height must be positive, got {c}")
    return c


def _rejected(msg: str) -> CommandResult:
    return CommandResult("rejected-input", msg)


def cmd_check(r_text: str, n: Optional[int] = None) -> CommandResult:
    n = n or infer_dim(r_text)
    try:
        r = parse_polynomial(r_text, n)
    except PolynomialParseError as exc:
        return _rejected(f"parse error: {exc}")
    report = check_precondition(r)
    data = {
        "passed": report.passed,
        "missing_units": [list(a) for a in report.missing_units],
        "negative_terms": [[list(a), str(c)] for a, c in report.negative_terms],
    }
    if report.passed:
        return CommandResult("verified", report.explain(), data)
    return CommandResult("rejected-input", "rejected: " + report.explain(), data)


def cmd_search(
    f_text: str,
    r_text: str,
    n: Optional[int] = None,
    max_N: int = DEFAULT_MAX_N,
    height="1",
    out: Optional[str] = None,
    skip_precondition: bool = False,
    shrink: bool = False,
) -> CommandResult:
    n = n or infer_dim(f_text, r_text)
    try:
        inst = ProblemInstance(parse_polynomial(f_text, n), parse_polynomial(r_text, n), _height(height))
        found = find_min_N(inst, max_N, skip_precondition=skip_precondition, shrink=shrink)
    except PreconditionError as exc:
        return _rejected(f"rejected: {exc}")
    except ValueError as exc:
        return _rejected(str(exc))
    if found is None:
        return CommandResult(
            "exhausted",
            f"no certificate for N <= {max_N} (largest N tried: {max_N}); positivity unknown",
            {"max_N": max_N},
        )
    cert, N = found
    text = certfile.dumps(inst, cert)
    lines = [f"certified at N = {N}"]
    if out:
        certfile.write_certificate(out, inst, cert)
        lines.append(f"certificate written to {out}")
    else:
        lines.append(text)
    return CommandResult("certified", "\n".join(lines), {"N": N, "certificate": json.loads(text), "path": out})


def cmd_verify(path: str) -> CommandResult:
    try:
        inst, cert = certfile.read_certificate(path)
    except (OSError, certfile.CertificateFileError) as exc:
        return _rejected(f"cannot load certificate: {exc}")
    report = verify_certificate(inst, cert)
    data = {"passed": report.passed, "failed": report.failures(), "messages": report.messages}
    if report.passed:
        return CommandResult("verified", f"verified: level N = {cert.N}, height {cert.height}", data)
    lines = [f"verification failed: {', '.join(report.failures())} condition"]
    lines += [f"  {m}" for m in report.messages]
    return CommandResult("rejected-input", "\n".join(lines), data)


def cmd_polya(p_text: str, n: Optional[int] = None, max_N: int = DEFAULT_MAX_N) -> CommandResult:
    n = n or infer_dim(p_text)
    try:
        p = parse_polynomial(p_text, n)
        N = polya_min_N(p, max_N)
    except ValueError as exc:
        return _rejected(str(exc))
    if N is None:
        return CommandResult("exhausted", f"no positive expansion for N <= {max_N}", {"max_N": max_N})
    expanded = polya_expand(p, N).expanded
    return CommandResult(
        "certified",
        f"certified at N = {N}\n{format_polynomial(expanded)}",
        {"N": N, "expanded": format_polynomial(expanded)},
    )


def cmd_falsify(
    f_text: str,
    r_text: str,
    n: Optional[int] = None,
    grid: int = 64,
    tol: float = 1e-9,
    height="1",
    skip_precondition: bool = False,
) -> CommandResult:
    if grid <= 0:
        return _rejected(f"grid must be positive, got {grid}")
    n = n or infer_dim(f_text, r_text)
    try:
        inst = ProblemInstance(parse_polynomial(f_text, n), parse_polynomial(r_text, n), _height(height))
        w = falsify(inst, grid, tol, skip_precondition=skip_precondition)
    except PreconditionError as exc:
        return _rejected(f"rejected: {exc}")
    except ValueError as exc:
        return _rejected(str(exc))
    if w is None:
        return CommandResult("no-witness", f"no counterexample at grid {grid}")
    pt = ", ".join(f"{v:.12g}" for v in w.point)
    return CommandResult(
        "refuted",
        f"refuted: f = {w.f_value:.12g} at ({pt}), |r - c| = {w.r_residual:.3g}",
        {"point": list(w.point), "f_value": w.f_value, "r_residual": w.r_residual},
    )


def cmd_gn(r_text: str, level: int, n: Optional[int] = None, height="1") -> CommandResult:
    n = n or infer_dim(r_text)
    try:
        r = parse_polynomial(r_text, n)
        g = build_g(r, level, _height(height))
    except ValueError as exc:
        return _rejected(str(exc))
    supp = sorted(log_set(g).members, key=lambda a: (sum(a), a))
    return CommandResult(
        "verified",
        f"{format_polynomial(g)}\nsupport: {[list(a) for a in supp]}",
        {"g": format_polynomial(g), "support": [list(a) for a in supp]},
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="number of variables (default: largest index used)")
    common.add_argument("--json", action="store_true", help="print a JSON summary instead of text")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="levelcert", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="check the hypothesis on r")
    p.add_argument("r")

    p = sub.add_parser("search", parents=[common], help="search for a certificate")
    p.add_argument("f")
    p.add_argument("r")
    p.add_argument("--max-N", dest="max_N", type=int, default=DEFAULT_MAX_N, help="largest level tried (default 8)")
    p.add_argument("--height", default="1", help="level c of {r = c}, a positive rational")
    p.add_argument("--out", default=None, help="write the certificate as JSON to this path")
    p.add_argument("--shrink", action="store_true", help="eliminate the cofactor via normal forms")
    p.add_argument(
        "--unsafe-skip-precondition", dest="skip", action="store_true", help="run even if r lacks a linear monomial"
    )

    p = sub.add_parser("verify", parents=[common], help="verify a certificate file")
    p.add_argument("path")

    p = sub.add_parser("polya", parents=[common], help="Pólya expansion test for homogeneous p")
    p.add_argument("p")
    p.add_argument("--max-N", dest="max_N", type=int, default=DEFAULT_MAX_N)

    p = sub.add_parser("falsify", parents=[common], help="search for a point where f <= 0")
    p.add_argument("f")
    p.add_argument("r")
    p.add_argument("--grid", type=int, default=64, help="simplex grid resolution for ray directions")
    p.add_argument("--tol", type=float, default=1e-9, help="report points with f <= tol")
    p.add_argument("--height", default="1")
    p.add_argument(
        "--unsafe-skip-precondition", dest="skip", action="store_true", help="run even if r lacks a linear monomial"
    )

    p = sub.add_parser("gn", parents=[common], help="print the averaged power sum g_N of r")
    p.add_argument("r")
    p.add_argument("level", type=int, metavar="N")
    p.add_argument("--height", default="1")
    return parser


def run(args: argparse.Namespace) -> CommandResult:
    if args.command == "check":
        return cmd_check(args.r, args.n)
    if args.command == "search":
        return cmd_search(args.f, args.r, args.n, args.max_N, args.height, args.out, args.skip, args.shrink)
    if args.command == "verify":
        return cmd_verify(args.path)
    if args.command == "polya":
        return cmd_polya(args.p, args.n, args.max_N)
    if args.command == "falsify":
        return cmd_falsify(args.f, args.r, args.n, args.grid, args.tol, args.height, args.skip)
    if args.command == "gn":
        return cmd_gn(args.r, args.level, args.n, args.height)
    raise AssertionError(args.command)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        result = run(args)
    except Exception as exc:  # noqa: BLE001
        logging.getLogger("levelcert").exception("internal error")
        result = CommandResult("internal-error", f"internal error: {exc}")
    if args.json:
        print(json.dumps({"status": result.status, "exit_code": result.exit_code, **(result.data or {})}))
    else:
        print(result.payload)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
