"""Commutator grid of the generators F_{p,q}, with sizes and timings."""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from bigalg.biggen import F_pq, F_pq_cartan, generator_indices
from bigalg.weyl import commutator

from _config import parse_config


@dataclass
class GridConfig:
    n: int = 3
    r: int = 2
    cartan: bool = False


def main() -> None:
    cfg = parse_config(GridConfig, __doc__)
    build = F_pq_cartan if cfg.cartan else F_pq
    start = time.perf_counter()
    ops = {pq: build(cfg.n, cfg.r, *pq) for pq in generator_indices(cfg.n, cfg.r)}
    built = time.perf_counter() - start
    for pq, op in ops.items():
        print(f"F{pq}: {len(op.terms)} terms")
    nonzero = 0
    start = time.perf_counter()
    for a, b in itertools.combinations(ops, 2):
        c = commutator(ops[a], ops[b])
        nonzero += bool(c)
        print(f"[F{a}, F{b}] = {'0' if not c else f'{len(c.terms)} terms'}")
    print(f"build {built:.3f} s, commutators {time.perf_counter() - start:.3f} s, nonzero {nonzero}")


if __name__ == "__main__":
    main()
