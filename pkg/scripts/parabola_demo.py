"""Walk through the parabola r = x1 + x2 + x1^2: endpoints, a refutation and a certificate."""

import argparse
import math
from dataclasses import dataclass

from levelcert import ProblemInstance, falsify, find_min_N, parse_polynomial, ray_solve, verify_certificate
from levelcert.poly import format_polynomial


@dataclass
class Config:
    r: str = "x1 + x2 + x1^2"
    positive: str = "1 + x1"
    negative: str = "x1 - 1"
    max_N: int = 8
    grid: int = 64


def main(cfg: Config):
    r = parse_polynomial(cfg.r, 2)
    a = ray_solve(r, [1, 0], 1, 1e-12)
    b = ray_solve(r, [0, 1], 1, 1e-12)
    print(f"endpoint on x1-axis: {a:.12f}   (sqrt(5)-1)/2 = {(math.sqrt(5) - 1) / 2:.12f}")
    print(f"endpoint on x2-axis: {b:.12f}")

    neg = ProblemInstance(parse_polynomial(cfg.negative, 2), r)
    w = falsify(neg, cfg.grid)
    print(f"f = {cfg.negative}: witness {w.point}, f = {w.f_value:.3g}")

    pos = ProblemInstance(parse_polynomial(cfg.positive, 2), r)
    found = find_min_N(pos, cfg.max_N)
    if found is None:
        print(f"f = {cfg.positive}: no certificate up to N = {cfg.max_N}")
        return
    cert, N = found
    print(f"f = {cfg.positive}: certified at N = {N}")
    print(f"  q = {format_polynomial(cert.q)}")
    print(f"  h = {format_polynomial(cert.h)}")
    print(f"  exact check: {'ok' if verify_certificate(pos, cert).passed else 'FAILED'}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-N", type=int, default=Config.max_N)
    ap.add_argument("--grid", type=int, default=Config.grid)
    args = ap.parse_args()
    main(Config(max_N=args.max_N, grid=args.grid))
