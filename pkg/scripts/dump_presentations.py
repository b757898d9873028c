"""Write every supported symmetric-power presentation as text and JSON."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from bigalg.sympower import present

from _config import parse_config


@dataclass
class DumpConfig:
    out_dir: str = "presentations"
    max_m_rank_two: int = 6
    max_m_rank_three: int = 3
    reduced: bool = True


def cases(cfg: DumpConfig):
    for m in range(1, cfg.max_m_rank_two + 1):
        for basis in ("P", "M"):
            for algebra in ("gl", "sl"):
                yield 2, m, basis, algebra
    for m in range(1, cfg.max_m_rank_three + 1):
        for basis in ("P", "M"):
            for algebra in ("gl", "sl"):
                yield 3, m, basis, algebra


def main() -> None:
    cfg = parse_config(DumpConfig, __doc__)
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    index = []
    for n, m, basis, algebra in cases(cfg):
        variants = [False, True] if cfg.reduced else [False]
        for reduce in variants:
            pres = present(n, m, basis, algebra, reduce=reduce)
            stem = f"{algebra}{n}_m{m}_{basis}" + ("_reduced" if reduce else "")
            (out / f"{stem}.txt").write_text(pres.to_text() + "\n")
            (out / f"{stem}.json").write_text(pres.to_json() + "\n")
            index.append({"file": stem, "n": n, "m": m, "basis": basis, "algebra": algebra,
                          "reduced": reduce, "relations": len(pres.relations)})
            print(f"{stem}: {len(pres.relations)} relation(s)")
    (out / "index.json").write_text(json.dumps(index, indent=2) + "\n")


if __name__ == "__main__":
    main()
