"""Capelli elements and identities in PD(n, r).

Statements about U(gl_n) are checked through L with r = n, where L is faithful.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Poly, Z, falling_poly
from .combinat import all_tuples, binom, distinct_tuples, perm_sign, subsets
from .report import Report
from .weyl import L_E, WeylOp, cdet, commutator, minor_pair, rdet


@dataclass
class CapelliMinor:
    I: tuple
    J: tuple
    shift: Poly | None = None
    value: WeylOp = field(default_factory=WeylOp)


def _shifted_matrix(I, J, shifts, r, by_column=False):
    k = len(I)
    M = []
    for a in range(k):
        row = []
        for b in range(k):
            entry = L_E(I[a], J[b], r)
            if I[a] == J[b]:
                entry = entry + shifts[b if by_column else a]
            row.append(entry)
        M.append(row)
    return M


def _check_sizes(I, J, shifts):
    if not (len(I) == len(J) == len(shifts)):
        raise ValueError("I, J and shifts must have equal length")


def capelli_rdet(I: Sequence[int], J: Sequence[int], diag_shifts: Sequence, r: int) -> WeylOp:
    """rdet of [L(E_{i_a j_b}) + shift_a delta_{i_a j_b}]."""
    _check_sizes(I, J, diag_shifts)
    if not I:
        return WeylOp.scalar(1)
    return rdet(_shifted_matrix(tuple(I), tuple(J), list(diag_shifts), r))


def capelli_cdet(I: Sequence[int], J: Sequence[int], diag_shifts: Sequence, r: int) -> WeylOp:
    """cdet of [L(E_{i_a j_b}) + shift_b delta_{i_a j_b}]."""
    _check_sizes(I, J, diag_shifts)
    if not I:
        return WeylOp.scalar(1)
    return cdet(_shifted_matrix(tuple(I), tuple(J), list(diag_shifts), r, by_column=True))


def capelli_minor(I: Sequence[int], J: Sequence[int], r: int) -> CapelliMinor:
    """Pi_{IJ}: shifts (a - 1) down the rows."""
    I, J = tuple(I), tuple(J)
    return CapelliMinor(I, J, None, capelli_rdet(I, J, list(range(len(I))), r))


def cauchy_binet_rhs(I: Sequence[int], J: Sequence[int], r: int) -> WeylOp:
    """sum over K in C([r], k) of det X_{IK} det D_{JK}."""
    return minor_pair(tuple(I), tuple(J), r)


def classical_capelli(n: int) -> tuple[WeylOp, WeylOp]:
    """(L(Pi), det X det D) for the full n x n case with r = n."""
    I = tuple(range(1, n + 1))
    return capelli_minor(I, I, n).value, cauchy_binet_rhs(I, I, n)


def verify_cauchy_binet(n: int, r: int, k: int, include_repeated: bool = True) -> Report:
    """L(Pi_IJ) equals the minor sum; skew-symmetry; vanishing on repeated indices."""
    if k > n:
        raise ValueError("need k <= n")
    rep = Report(f"cauchy-binet n={n} r={r} k={k}")
    cache = {}
    for I in distinct_tuples(n, k):
        for J in distinct_tuples(n, k):
            lhs = capelli_minor(I, J, r).value
            cache[(I, J)] = lhs
            rep.compare(f"I={I} J={J}", lhs, cauchy_binet_rhs(I, J, r))
    # skew-symmetry relative to the sorted representatives
    for I in distinct_tuples(n, k):
        for J in distinct_tuples(n, k):
            sI, sJ = tuple(sorted(I)), tuple(sorted(J))
            sign = _sort_sign(I) * _sort_sign(J)
            rep.compare(f"skew I={I} J={J}", cache[(I, J)], cache[(sI, sJ)] * sign)
    if include_repeated:
        for I in all_tuples(n, k):
            for J in all_tuples(n, k):
                if len(set(I)) == k and len(set(J)) == k:
                    continue
                rep.compare(f"repeated I={I} J={J}", capelli_minor(I, J, r).value, WeylOp())
    return rep


def _sort_sign(T) -> int:
    order = sorted(range(len(T)), key=lambda s: T[s])
    return perm_sign(order)


def capelli_generator(n: int, k: int, r: int) -> WeylOp:
    """C_k = sum over I in C([n], k) of Pi_II."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    out = WeylOp()
    for I in subsets(n, k):
        out = out + capelli_minor(I, I, r).value
    return out


def capelli_z(n: int, k: int, r: int) -> WeylOp:
    """C_k(z): diagonal shifts (a - 1 - z), z a central variable."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    z = Z()
    shifts = [z * -1 + a for a in range(k)]
    out = WeylOp()
    for I in subsets(n, k):
        out = out + capelli_rdet(I, I, shifts, r)
    return out


def capelli_z_expansion(n: int, k: int, r: int) -> WeylOp:
    """sum_m (-1)^m C(n-k+m, m) z^(m falling) C_{k-m}."""
    z = Z()
    out = WeylOp()
    for m in range(k + 1):
        coeff = falling_poly(z, m) * ((-1) ** m * binom(n - k + m, m))
        out = out + capelli_generator(n, k - m, r) * coeff
    return out


def verify_ck_z_expansion(n: int, r: int, kmax: int | None = None) -> Report:
    rep = Report(f"capelli-z n={n} r={r}")
    for k in range(0, (n if kmax is None else kmax) + 1):
        rep.compare(f"k={k}", capelli_z(n, k, r), capelli_z_expansion(n, k, r))
    return rep


def verify_capelli_generator_image(n: int, r: int) -> Report:
    """L(C_k) = sum over I, K of det X_{IK} det D_{IK}."""
    rep = Report(f"capelli-generators n={n} r={r}")
    for k in range(n + 1):
        rhs = WeylOp.scalar(1) if k == 0 else WeylOp()
        if k:
            for I in subsets(n, k):
                rhs = rhs + minor_pair(I, I, r)
        rep.compare(f"k={k}", capelli_generator(n, k, r), rhs)
    return rep


def verify_rdet_cdet_shift(n: int, r: int, k: int, z_value: int | None = None) -> Report:
    """rdet with shifts (z + a - 1) equals cdet with shifts (z + k - b)."""
    if k > n:
        raise ValueError("need k <= n")
    z = Z() if z_value is None else Poly.const(z_value)
    row_shifts = [z + a for a in range(k)]
    col_shifts = [z + (k - 1 - b) for b in range(k)]
    rep = Report(f"rdet-cdet n={n} r={r} k={k}")
    for I in all_tuples(n, k):
        for J in all_tuples(n, k):
            rep.compare(f"I={I} J={J}", capelli_rdet(I, J, row_shifts, r),
                        capelli_cdet(I, J, col_shifts, r))
    return rep


def centrality_check(n: int, k: int) -> Report:
    """[L(C_k), L(E_ij)] = 0 in PD(n, n)."""
    rep = Report(f"centrality n={n} k={k}")
    C = capelli_generator(n, k, n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            rep.compare(f"[C_{k}, E_{i}{j}]", commutator(C, L_E(i, j, n)), WeylOp())
    return rep
