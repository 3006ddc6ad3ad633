"""Self-contained JSON certificate files."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Tuple, Union

from .certificates import Certificate, ProblemInstance
from .poly import divide_exact, format_polynomial, parse_polynomial

REQUIRED_KEYS = ("n", "N", "height", "r", "f", "q", "h")


class CertificateFileError(ValueError):
    pass


def _rational_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def certificate_to_dict(inst: ProblemInstance, cert: Certificate) -> dict:
    h = cert.h
    if h is None:
        h = divide_exact(inst.f - cert.q, inst.r - cert.height)
        if h is None:
            raise ValueError("certificate has no cofactor and f - q is not divisible by r - c")
    return {
        "n": inst.dim,
        "N": cert.N,
        "height": _rational_str(cert.height),
        "r": format_polynomial(inst.r),
        "f": format_polynomial(inst.f),
        "q": format_polynomial(cert.q),
        "h": format_polynomial(h),
    }


def certificate_from_dict(data: dict) -> Tuple[ProblemInstance, Certificate]:
    missing = [k for k in REQUIRED_KEYS if k not in data]
    if missing:
        raise CertificateFileError(f"certificate file lacks keys {missing}")
    try:
        n = int(data["n"])
        N = int(data["N"])
        height = Fraction(str(data["height"]))
        f = parse_polynomial(data["f"], n)
        r = parse_polynomial(data["r"], n)
        q = parse_polynomial(data["q"], n)
        h = parse_polynomial(data["h"], n)
        inst = ProblemInstance(f, r, height)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise CertificateFileError(str(exc)) from exc
    return inst, Certificate(N, q, h, height)


def dumps(inst: ProblemInstance, cert: Certificate) -> str:
    return json.dumps(certificate_to_dict(inst, cert), indent=2)


def write_certificate(path: Union[str, Path], inst: ProblemInstance, cert: Certificate):
    Path(path).write_text(dumps(inst, cert) + "\n")


def read_certificate(path: Union[str, Path]) -> Tuple[ProblemInstance, Certificate]:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise CertificateFileError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise CertificateFileError(f"{path}: expected a JSON object")
    return certificate_from_dict(data)
