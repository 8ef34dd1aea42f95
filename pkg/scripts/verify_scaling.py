"""Time certificate evaluation on succinct instances whose clique sizes grow
geometrically; the running time should stay flat."""

import random
import time
from dataclasses import dataclass

from _config import parse_config

from tcimbalance import Certificate, verify_certificate
from tcimbalance.generators import random_succinct


@dataclass
class ScalingConfig:
    """Certificate evaluation time against clique size."""
    k: int = 4
    cliques: int = 50
    max_exponent: int = 30
    repeats: int = 200
    seed: int = 1


def main(cfg: ScalingConfig):
    rng = random.Random(cfg.seed)
    print(f"{'max size':>12} {'imbalance digits':>17} {'us/eval':>9}")
    for exp in range(1, cfg.max_exponent + 1, 3):
        sizes = [rng.randint(1, 10**exp) for _ in range(cfg.cliques)]
        sg = random_succinct(cfg.k, sizes, rng)
        pi = tuple(rng.sample(range(1, cfg.k + 1), cfg.k))
        cert = Certificate(pi, tuple(rng.randint(1, cfg.k + 1) for _ in range(sg.r)))
        t0 = time.perf_counter()
        for _ in range(cfg.repeats):
            value = verify_certificate(sg, cert)
        per = (time.perf_counter() - t0) / cfg.repeats
        print(f"{'1e' + str(exp):>12} {len(str(value)):17d} {per * 1e6:9.1f}")


if __name__ == "__main__":
    main(parse_config(ScalingConfig))
