"""Decide Partition through the single-cover-vertex imbalance instance and compare
with a direct subset-sum check, printing the split found for each list."""

import random
from dataclasses import dataclass

from _config import parse_config

from tcimbalance import reduce_partition, solve_k1


@dataclass
class PartitionConfig:
    """Partition instances decided via the imbalance reduction."""
    lists: int = 20
    max_len: int = 12
    max_value: int = 50
    seed: int = 3


def subset_sum_split(numbers):
    total = sum(numbers)
    if total % 2:
        return False
    reach = 1
    for a in numbers:
        reach |= reach << a
    return bool(reach >> (total // 2) & 1)


def main(cfg: PartitionConfig):
    rng = random.Random(cfg.seed)
    wrong = 0
    for _ in range(cfg.lists):
        numbers = [rng.randint(1, cfg.max_value) for _ in range(rng.randint(1, cfg.max_len))]
        sg, t = reduce_partition(numbers)
        sol = solve_k1(sg)
        yes = sol.imbalance <= t
        wrong += yes != subset_sum_split(numbers)
        left = [numbers[i] for i in sol.left]
        right = [numbers[i] for i in sol.right]
        print(f"{'YES' if yes else 'NO ':3} t={t:<6} opt={sol.imbalance:<6} "
              f"left={sum(left):<5} right={sum(right):<5} {numbers}")
    print(f"mismatches against subset-sum: {wrong}")
    return 1 if wrong else 0


if __name__ == "__main__":
    raise SystemExit(main(parse_config(PartitionConfig)))
