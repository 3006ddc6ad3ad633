"""Run the searcher and the falsifier on random positive and negative instances and tabulate."""

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from levelcert import falsify, find_min_N, verify_certificate
from levelcert.randinst import negative_instance, positive_instance, random_valid_r


@dataclass
class Config:
    count: int = 200
    max_n: int = 3
    max_deg: int = 2
    build_N: int = 2
    search_N: int = 4
    grid: int = 32
    seed: int = 1


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    table = Counter()
    t0 = time.perf_counter()
    done = 0
    while done < cfg.count:
        r = random_valid_r(rng, rng.randint(1, cfg.max_n), rng.randint(1, cfg.max_deg))
        N = rng.randint(0, cfg.build_N)
        if rng.random() < 0.5:
            inst, _, _ = positive_instance(rng, r, N)
            kind = "positive"
        else:
            made = negative_instance(rng, r, N)
            if made is None:
                continue
            inst, _ = made
            kind = "negative"
        done += 1
        found = find_min_N(inst, cfg.search_N)
        w = falsify(inst, cfg.grid)
        if found is not None and not verify_certificate(inst, found[0]).passed:
            table[(kind, "BAD CERTIFICATE")] += 1
        verdict = "both" if found and w else "certified" if found else "refuted" if w else "unknown"
        table[(kind, verdict)] += 1
    for (kind, verdict), k in sorted(table.items()):
        print(f"{kind:<9} {verdict:<16} {k}")
    print(f"{cfg.count} instances in {time.perf_counter() - t0:.1f} s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for name, val in vars(Config()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=type(val), default=val)
    main(Config(**vars(ap.parse_args())))
