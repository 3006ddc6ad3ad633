"""Compare the Polya exponent with the minimal general-support level on random forms."""

import argparse
import random
import time
from dataclasses import dataclass

from levelcert import ProblemInstance, find_min_N
from levelcert.poly import format_polynomial
from levelcert.polya import cross_check_polya, linear_form, polya_min_N
from levelcert.randinst import random_homogeneous


@dataclass
class Config:
    count: int = 12
    lo: int = -1
    hi: int = 3
    n: int = 2
    deg: int = 2
    max_N: int = 8
    seed: int = 0


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    r = linear_form(cfg.n)
    print(f"{'p':<40} {'polya N':>8} {'LP N':>6} {'agree':>6}")
    shown = tries = 0
    while shown < cfg.count and tries < 50 * cfg.count:
        tries += 1
        p = random_homogeneous(rng, cfg.n, cfg.deg, cfg.lo, cfg.hi)
        t0 = time.perf_counter()
        npol = polya_min_N(p, cfg.max_N)
        if npol is None:
            # indefinite or beyond max_N; only report forms the expansion certifies
            continue
        shown += 1
        agree = all(cross_check_polya(p, N) for N in range(npol + 1))
        found = find_min_N(ProblemInstance(p, r), cfg.max_N + cfg.deg)
        nlp = None if found is None else found[1]
        dt = time.perf_counter() - t0
        print(f"{format_polynomial(p):<40} {str(npol):>8} {str(nlp):>6} {str(agree):>6}  ({dt:.2f} s)")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for name, val in vars(Config()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=type(val), default=val)
    main(Config(**vars(ap.parse_args())))
