"""Run the clean oracle, the specification DP and the integer-programming solver on
random planted instances and report agreement and per-solver timings."""

import random
import statistics
import time
from dataclasses import dataclass

from _config import parse_config

from tcimbalance import brute_force_clean, solve_fpt, solve_xp, validate_twin_cover
from tcimbalance.generators import random_instance


@dataclass
class AgreementConfig:
    """Three-solver agreement on random planted instances."""
    instances: int = 200
    max_n: int = 12
    max_k: int = 3
    max_clique: int = 6
    max_blocks: int = 10
    seed: int = 0


def main(cfg: AgreementConfig):
    rng = random.Random(cfg.seed)
    times = {"oracle": [], "dp": [], "ilp": []}
    done = disagree = 0
    attempt = 0
    while done < cfg.instances:
        attempt += 1
        n = rng.randint(1, cfg.max_n)
        k = rng.randint(0, min(cfg.max_k, n))
        g, cover = random_instance(n, k, rng.randint(1, cfg.max_clique), cfg.seed * 7919 + attempt)
        d = validate_twin_cover(g, cover)
        if d.k + d.r > cfg.max_blocks:
            continue
        vals = {}
        for name, fn in (("oracle", lambda: brute_force_clean(d)[0]),
                         ("dp", lambda: solve_xp(d).imbalance),
                         ("ilp", lambda: solve_fpt(d).imbalance)):
            t0 = time.perf_counter()
            vals[name] = fn()
            times[name].append(time.perf_counter() - t0)
        if len(set(vals.values())) != 1:
            disagree += 1
            print(f"disagreement n={n} k={d.k}: {vals}")
        done += 1
    print(f"instances {done}  disagreements {disagree}")
    print(f"{'solver':8} {'mean ms':>9} {'max ms':>9}")
    for name, ts in times.items():
        print(f"{name:8} {statistics.mean(ts) * 1e3:9.2f} {max(ts) * 1e3:9.2f}")
    return 1 if disagree else 0


if __name__ == "__main__":
    raise SystemExit(main(parse_config(AgreementConfig)))
