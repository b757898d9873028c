"""Lagrange sums, coefficient extraction from grid values, and the grid vanishing test."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Poly


@dataclass(frozen=True)
class Grid:
    """Per-variable finite point sets A_1..A_m."""
    sets: tuple

    def __post_init__(self):
        frozen = tuple(tuple(Fraction(a) for a in A) for A in self.sets)
        for A in frozen:
            if len(set(A)) != len(A):
                raise ValueError("grid sets must have distinct points")
        object.__setattr__(self, "sets", frozen)

    def points(self):
        return itertools.product(*self.sets)


def _distinct(A: Sequence) -> list[Fraction]:
    pts = [Fraction(a) for a in A]
    if len(set(pts)) != len(pts):
        raise ValueError("repeated points")
    return pts


def _denominator(a, A) -> Fraction:
    return math.prod((a - b for b in A if b != a), start=Fraction(1))


def lagrange_sum(A: Sequence, k: int) -> Fraction:
    """sum over a in A of a^k / prod_{b != a} (a - b)."""
    pts = _distinct(A)
    if not 0 <= k <= len(pts) - 1:
        raise ValueError("need 0 <= k <= |A| - 1")
    return sum((a ** k / _denominator(a, pts) for a in pts), start=Fraction(0))


def grid_coefficient(g: Poly, degrees: Sequence[int], grid: Grid, variables: Sequence) -> Poly:
    """Coefficient of prod X_i^{d_i} in g from its values on A_1 x ... x A_m.

    Needs |A_i| = d_i + 1 and total degree of g at most sum d_i.  Non-grid
    variables of g are carried along as symbolic coefficients.
    """
    if len(degrees) != len(grid.sets) or len(variables) != len(degrees):
        raise ValueError("degrees, grid and variables must have equal length")
    for d, A in zip(degrees, grid.sets):
        if len(A) != d + 1:
            raise ValueError("grid size mismatch: need |A_i| = d_i + 1")
    vs = set(variables)
    grid_degree = max((sum(e for v, e in mono if v in vs) for mono in g.terms), default=0)
    if grid_degree > sum(degrees):
        raise ValueError("total degree of g exceeds sum of target degrees")
    out = Poly()
    for point in grid.points():
        weight = Fraction(1)
        for a, A in zip(point, grid.sets):
            weight /= _denominator(a, A)
        out = out + g.subs(dict(zip(variables, point))) * weight
    return out


def vanishing_test(g: Poly, variables: Sequence, n: int, points: Sequence | None = None) -> bool:
    """True iff g vanishes on {s_1..s_n}^m, with degree <= n - 1 in each grid variable.

    Symbolic points (e.g. t_1..t_n) are allowed; by default the points are
    the symbols t_1..t_n.
    """
    for v in variables:
        if g.degree(v) > n - 1:
            raise ValueError(f"degree bound violated in {v}: {g.degree(v)} > {n - 1}")
    pts = list(points) if points is not None else [Poly.var("t", i) for i in range(1, n + 1)]
    if len(pts) != n:
        raise ValueError("need exactly n points")
    for point in itertools.product(pts, repeat=len(variables)):
        if g.subs(dict(zip(variables, point))):
            return False
    return True
