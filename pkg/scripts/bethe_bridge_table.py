"""Tabulate both sides of the Bethe bridge, coefficient by coefficient in u."""
from __future__ import annotations

from dataclasses import dataclass

from bigalg.yangian import U_VAR, bethe_bridge_sides

from _config import parse_config


@dataclass
class BridgeConfig:
    max_n: int = 3
    max_r: int = 2
    show_terms: bool = False


def main() -> None:
    cfg = parse_config(BridgeConfig, __doc__)
    print(f"{'n':>2} {'r':>2} {'p':>2} {'deg':>4} {'terms':>6}  match")
    mismatches = 0
    for n in range(1, cfg.max_n + 1):
        for r in range(1, cfg.max_r + 1):
            for p in range(0, n + 1):
                lhs, rhs = bethe_bridge_sides(n, r, p)
                for d in range(n - p + 1):
                    a, b = lhs.coeff_in(U_VAR, d), rhs.coeff_in(U_VAR, d)
                    ok = a == b
                    mismatches += not ok
                    print(f"{n:>2} {r:>2} {p:>2} {d:>4} {len(a.terms):>6}  {'yes' if ok else 'NO'}")
                    if cfg.show_terms:
                        print("      " + a.to_str())
    print(f"mismatched coefficients: {mismatches}")


if __name__ == "__main__":
    main()
