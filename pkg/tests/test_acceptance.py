"""Acceptance criteria: exact identities under wall-clock limits.

Run under pytest for one pass/fail line per criterion in the terminal
summary, or directly with ``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import itertools
import math
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from bigalg import algebra, biggen, capelli, combinat, grid, sympower, weyl, yangian  # noqa: E402
from bigalg.algebra import Poly  # noqa: E402

from goldens.presentations import BYTE_EXACT, SL2_M, to_compact  # noqa: E402
from oracles import CAPELLI_2X2_LATEX, weyl_latex_terms, weyl_text_terms  # noqa: E402

CACHED_MODULES = (algebra, biggen, capelli, combinat, grid, sympower, weyl, yangian)


@dataclass
class Criterion:
    ident: str
    title: str
    limit_s: float
    check: Callable[[], list[str]]  # returns failure descriptions


@dataclass
class Outcome:
    passed: bool
    elapsed: float
    failures: list[str]


RESULTS: dict[str, Outcome] = {}


def cold_start() -> None:
    """Clear every memoized helper so each criterion is timed from scratch."""
    for module in CACHED_MODULES:
        for value in vars(module).values():
            clear = getattr(value, "cache_clear", None)
            if callable(clear):
                clear()


def _collect(reports) -> list[str]:
    return [rep.to_text(limit=3) for rep in reports if not rep.ok]


def classical_capelli() -> list[str]:
    lhs, rhs = capelli.classical_capelli(2)
    failures = []
    if lhs != rhs:
        failures.append(f"L(Pi) = {lhs.to_str()} but det X det D = {rhs.to_str()}")
    got, want = weyl_text_terms(lhs.to_str()), weyl_latex_terms(CAPELLI_2X2_LATEX)
    if got != want:
        failures.append(f"terms {sorted(got)} differ from expanded identity {sorted(want)}")
    return failures


def cauchy_binet() -> list[str]:
    return _collect(capelli.verify_cauchy_binet(n, r, k)
                    for n in range(1, 4) for r in range(1, 4) for k in range(1, n + 1))


def z_expansion() -> list[str]:
    return _collect(capelli.verify_ck_z_expansion(3, r, 3) for r in range(1, 4))


def symdet_closed() -> list[str]:
    return _collect(weyl.verify_symdet_closed(n, k, r)
                    for n in range(1, 4) for k in range(1, n + 1) for r in (1, 2))


def m_forms() -> list[str]:
    return _collect(biggen.verify_m_forms(n, r, qmax=2) for n in range(1, 4) for r in (1, 2))


def commutativity() -> list[str]:
    reports = [biggen.verify_commutativity(n, r, cartan=True) for n in range(2, 5) for r in (1, 2)]
    reports += [biggen.verify_commutativity(n, r) for n in range(2, 4) for r in (1, 2)]
    return _collect(reports)


BETHE_CASES = [(2, 1, 0), (2, 1, 1), (3, 2, 0), (3, 2, 1), (3, 2, 2)]


def bethe_bridge() -> list[str]:
    return _collect(yangian.verify_bethe_bridge(n, r, p) for n, r, p in BETHE_CASES)


def yang_baxter() -> list[str]:
    reports = [yangian.verify_yang_baxter(n) for n in range(1, 4)]
    reports += [yangian.verify_antisymmetrizer(m, n) for m in range(1, 4) for n in range(1, 4)]
    return _collect(reports)


def presentations() -> list[str]:
    failures = []
    for m, want in SL2_M.items():
        got = sympower.present(2, m, "M", "sl").relation_strings()
        if got != want:
            failures.append(f"sl2 m={m}: {got} != {want}")
    for (n, m, basis, alg, reduced, elim), rels in BYTE_EXACT.items():
        got = sympower.present(n, m, basis, alg, eliminate=elim, reduce=reduced).relation_strings()
        want = [to_compact(r) for r in rels]
        if got != want:
            failures.append(f"{alg}{n} m={m} {basis} reduced={reduced}: {got} != {want}")
    return failures


def capelli_style_relations() -> list[str]:
    return _collect(sympower.relation_check_capelli_style(n, m)
                    for n in range(1, 4) for m in range(1, 4))


ALPHA_LISTS = [[]] + [[a] for a in range(4)] + \
    [list(c) for c in itertools.combinations_with_replacement(range(4), 2)]


def plethystic_kirillov_wei() -> list[str]:
    failures = _collect(sympower.dhat_consistency(alphas, n, m)
                        for alphas in ALPHA_LISTS for n in range(1, 4) for m in range(0, 4))
    for n in range(1, 4):
        for m in range(0, 4):
            value = sympower.dhat_plethystic(Poly.const(1), Poly.var("p", 1), n, m)
            if value != sympower.WeightFunc.constant(n, m, m * m + (n - 1) * m):
                failures.append(f"D(P1) n={n} m={m}: {value.to_str()}")
    return failures


def _random_symmetric(rng: random.Random, m: int) -> Poly:
    out = Poly.const(rng.randint(-3, 3))
    for _ in range(rng.randint(1, 3)):
        exps = sorted(rng.randint(0, 2) for _ in range(m))
        coef = Poly.const(rng.randint(-3, 3)) + Poly.var("c", 1) * rng.randint(-2, 2)
        out = out + sympower.monomial_symmetric(exps) * coef
    return out


def upsilon_evidence() -> list[str]:
    rng = random.Random(20240601)
    failures = []
    for trial in range(50):
        n, m = rng.randint(1, 3), rng.randint(1, 3)
        f, g = _random_symmetric(rng, m), _random_symmetric(rng, m)
        if sympower.upsilon(f * g, n, m) != sympower.upsilon(f, n, m) * sympower.upsilon(g, n, m):
            failures.append(f"not multiplicative: n={n} m={m} f={f.to_str()} g={g.to_str()}")
    for n in range(1, 4):
        for m in range(1, 4):
            rep = sympower.upsilon_injectivity_check(n, m)
            if not rep.ok or rep.rank != math.comb(n + m - 1, m):
                failures.append(f"rank n={n} m={m}: {rep.rank}")
    return failures


GRID_VARS = [("X", i) for i in range(1, 4)]


def _random_grid_instance(rng: random.Random):
    m = rng.randint(1, 3)
    degrees = [rng.randint(0, 3) for _ in range(m)]
    g = Poly()
    for _ in range(rng.randint(1, 6)):
        exps = [rng.randint(0, 3) for _ in range(m)]
        while sum(exps) > sum(degrees):
            exps[rng.randrange(m)] = 0
        term = Poly.const(Fraction(rng.randint(-9, 9), rng.randint(1, 4)))
        for i, e in enumerate(exps):
            term = term * Poly.var(*GRID_VARS[i]) ** e
        g = g + term
    sets = tuple(rng.sample(range(-10, 11), d + 1) for d in degrees)
    return g, degrees, grid.Grid(sets), GRID_VARS[:m]


def grid_appendix() -> list[str]:
    rng = random.Random(7)
    failures = []
    for trial in range(200):
        g, degrees, G, variables = _random_grid_instance(rng)
        mono = tuple(sorted((v, d) for v, d in zip(variables, degrees) if d))
        direct = Poly.const(g.terms.get(mono, Fraction(0)))
        got = grid.grid_coefficient(g, degrees, G, variables)
        if got != direct:
            failures.append(f"g={g.to_str()} d={degrees}: grid {got.to_str()} direct {direct.to_str()}")
    # Contrapositive sampling: a polynomial that vanishes on the grid must be zero.
    for trial in range(200):
        n, m = rng.randint(2, 3), rng.randint(1, 2)
        variables = [("u", i) for i in range(1, m + 1)]
        g = Poly()
        for exps in itertools.product(range(n), repeat=m):
            if rng.random() < 0.4:
                term = Poly.const(rng.randint(-3, 3))
                for v, e in zip(variables, exps):
                    term = term * Poly.var(*v) ** e
                g = g + term
        points = [Poly.const(p) for p in rng.sample(range(-6, 7), n)]
        if grid.vanishing_test(g, variables, n, points) and g:
            failures.append(f"nonzero g={g.to_str()} vanishes on the grid")
        if grid.vanishing_test(g, variables, n) and g:
            failures.append(f"nonzero g={g.to_str()} vanishes on the symbolic grid")
    return failures


CRITERIA = [
    Criterion("AC1", "classical Capelli n=r=2, expanded term by term", 1, classical_capelli),
    Criterion("AC2", "Cauchy-Binet Capelli, n,r,k <= 3 exhaustive", 30, cauchy_binet),
    Criterion("AC3", "C_k(z) expansion, n=3, k <= 3", 30, z_expansion),
    Criterion("AC4", "closed-form symdet, n,k <= 3, r <= 2", 60, symdet_closed),
    Criterion("AC5", "M from F, direct and closed, n <= 3, r <= 2, q <= 2", 60, m_forms),
    Criterion("AC6", "commutativity: diagonal n <= 4, full n <= 3, r <= 2", 300, commutativity),
    Criterion("AC7", "Bethe bridge on five (n, r, p) cases", 120, bethe_bridge),
    Criterion("AC8", "Yang-Baxter and antisymmetrizer chain, m,n <= 3", 30, yang_baxter),
    Criterion("AC9", "worked presentations byte-for-byte", 60, presentations),
    Criterion("AC10", "Capelli-style relations vanish, n,m <= 3", 30, capelli_style_relations),
    Criterion("AC11", "plethystic Kirillov-Wei and D(P1) = m^2 + (n-1)m", 120, plethystic_kirillov_wei),
    Criterion("AC12", "upsilon multiplicative on 50 pairs, full rank", 60, upsilon_evidence),
    Criterion("AC13", "grid coefficients on 200 instances, vanishing test", 30, grid_appendix),
]


def run_criterion(crit: Criterion) -> Outcome:
    cold_start()
    start = time.perf_counter()
    failures = crit.check()
    elapsed = time.perf_counter() - start
    if elapsed >= crit.limit_s:
        failures = failures + [f"runtime {elapsed:.2f} s exceeds {crit.limit_s:g} s"]
    outcome = Outcome(not failures, elapsed, failures)
    RESULTS[crit.ident] = outcome
    return outcome


def summary_line(crit: Criterion, outcome: Outcome) -> str:
    tag = "PASS" if outcome.passed else "FAIL"
    return f"[{tag}] {crit.ident} {crit.title}: {outcome.elapsed:.2f} s (limit {crit.limit_s:g} s)"


@pytest.mark.parametrize("crit", CRITERIA, ids=[c.ident for c in CRITERIA])
def test_acceptance(crit):
    outcome = run_criterion(crit)
    print(summary_line(crit, outcome))
    assert outcome.passed, "\n".join(outcome.failures)


def main() -> int:
    ok = True
    for crit in CRITERIA:
        outcome = run_criterion(crit)
        print(summary_line(crit, outcome), flush=True)
        for failure in outcome.failures:
            print("    " + failure.replace("\n", "\n    "))
        ok = ok and outcome.passed
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
