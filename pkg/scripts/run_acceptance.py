"""Run the acceptance criteria outside pytest and print one line per criterion."""
from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path

from _config import parse_config

TESTS = Path(__file__).resolve().parent.parent / "tests"


@dataclass
class AcceptanceConfig:
    only: str = ""


def main() -> int:
    cfg = parse_config(AcceptanceConfig, __doc__)
    sys.path.insert(0, str(TESTS))
    import test_acceptance as acc

    wanted = {s.strip() for s in cfg.only.split(",") if s.strip()}
    ok = True
    for crit in acc.CRITERIA:
        if wanted and crit.ident not in wanted:
            continue
        outcome = acc.run_criterion(crit)
        print(acc.summary_line(crit, outcome), flush=True)
        for failure in outcome.failures:
            print("    " + failure.replace("\n", "\n    "))
        ok = ok and outcome.passed
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
