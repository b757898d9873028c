"""Invariant polynomials, the Kirillov-Wei operator and the big-algebra generators.

Elements of S(gl_n^*) tensor PD(n, r) are WeylOp values whose central part
lives in the y_{ij} (or, after restriction to diagonal matrices, t_i).
"""
from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterator

from .algebra import Poly, Z, matpow, poly_det, poly_sum, submatrix, t, ymatrix
from .combinat import binom, permutations_of, sgn_block, stirling2, subsets
from .report import Report
from .weyl import L_E, WeylOp, commutator, minor_pair, symdet_LE, symdet_LE_closed


@lru_cache(maxsize=None)
def c_k(n: int, k: int) -> Poly:
    """Sum of principal k x k minors of Y = [y_ij]."""
    if k < 0 or k > n:
        raise ValueError("need 0 <= k <= n")
    Y = ymatrix(n)
    return poly_sum(poly_det(submatrix(Y, I, I)) for I in subsets(n, k))


def theta(n: int, alpha: int) -> Poly:
    """tr(Y^alpha)."""
    A = matpow(ymatrix(n), alpha)
    return poly_sum(A[i][i] for i in range(n))


def P_alpha(n: int, r: int, alpha: int) -> WeylOp:
    """L(Y^alpha) = sum_ij (Y^alpha)_{ij} L(E_ij)."""
    A = matpow(ymatrix(n), alpha)
    out = WeylOp()
    for i in range(n):
        for j in range(n):
            if A[i][j]:
                out = out + L_E(i + 1, j + 1, r) * A[i][j]
    return out


def kirillov_wei(F: WeylOp, n: int, r: int) -> WeylOp:
    """sum_ij (dF/dy_ji) L(E_ij), multiplying on the right."""
    out = WeylOp()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            dF = F.diff_central(("y", j, i))
            if dF:
                out = out + dF * L_E(i, j, r)
    return out


def _is_diagonal_y(cm) -> bool:
    return all(v[0] != "y" or v[1] == v[2] for v, _ in cm)


def kirillov_wei_cartan(F: WeylOp, n: int, r: int) -> WeylOp:
    """restrict_cartan(kirillov_wei(F)), skipping terms that die on diagonal Y."""
    out = WeylOp()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            var = ("y", j, i)
            kept = {}
            for key, c in F.terms.items():
                cm = key[0]
                dmap = dict(cm)
                e = dmap.get(var, 0)
                if not e:
                    continue
                if e == 1:
                    del dmap[var]
                else:
                    dmap[var] = e - 1
                ncm = tuple(sorted(dmap.items()))
                if not _is_diagonal_y(ncm):
                    continue
                nk = (ncm, key[1], key[2])
                kept[nk] = kept.get(nk, 0) + c * e
            if kept:
                out = out + WeylOp(kept) * L_E(i, j, r)
    return restrict_cartan(out)


def _cartan_image(cm) -> Poly:
    dmap = {}
    for v, e in cm:
        if v[0] == "y":
            if v[1] != v[2]:
                return Poly()
            key = ("t", v[1])
        else:
            key = v
        dmap[key] = dmap.get(key, 0) + e
    return Poly._wrap({tuple(sorted(dmap.items())): 1})


def restrict_cartan(F):
    """Substitute y_ij -> delta_ij t_i."""
    if isinstance(F, Poly):
        acc = Poly()
        for m, c in F.terms.items():
            acc = acc + _cartan_image(m) * c
        return acc
    return F.map_central(_cartan_image)


def block_quadruples(n: int, p: int, q: int) -> Iterator[tuple]:
    """(I1, J1, I2, J2) sorted subsets with I1, I2 disjoint and I1 u I2 = J1 u J2."""
    for I1 in subsets(n, p):
        for I2 in subsets(n, q):
            if set(I1) & set(I2):
                continue
            S = sorted(set(I1) | set(I2))
            for J1 in _subsets_of(S, p):
                J2 = tuple(x for x in S if x not in J1)
                yield I1, J1, I2, J2


def _subsets_of(S, k):
    return [tuple(c) for c in itertools.combinations(S, k)]


def _det_y(I1, J1, n) -> Poly:
    if not I1:
        return Poly.const(1)
    return poly_det(submatrix(ymatrix(n), I1, J1))


def _check(n, p, q):
    if p < 0 or q < 0 or p + q > n:
        raise ValueError("need p, q >= 0 and p + q <= n")


@lru_cache(maxsize=None)
def M_pq_direct(n: int, r: int, p: int, q: int) -> WeylOp:
    """D^q(c_{p+q})."""
    _check(n, p, q)
    F = WeylOp.from_poly(c_k(n, p + q))
    for _ in range(q):
        F = kirillov_wei(F, n, r)
    return F


def M_pq_symdet(n: int, r: int, p: int, q: int) -> WeylOp:
    """Signed sum of det Y_{I1 J1} times the oracle symdet L(E)_{J2 I2}."""
    _check(n, p, q)
    out = WeylOp()
    for I1, J1, I2, J2 in block_quadruples(n, p, q):
        s = sgn_block([I1, I2], [J1, J2])
        out = out + symdet_LE(J2, I2, r) * (_det_y(I1, J1, n) * s)
    return out


@lru_cache(maxsize=None)
def M_pq_closed(n: int, r: int, p: int, q: int) -> WeylOp:
    """Normal form via Stirling-weighted sums of minor products."""
    _check(n, p, q)
    out = WeylOp()
    for I1, J1, I2, J2 in block_quadruples(n, p, q):
        s = sgn_block([I1, I2], [J1, J2])
        out = out + symdet_LE_closed(J2, I2, r) * (_det_y(I1, J1, n) * s)
    return out


@lru_cache(maxsize=None)
def F_pq(n: int, r: int, p: int, q: int) -> WeylOp:
    _check(n, p, q)
    if q > r:
        return WeylOp()
    out = WeylOp()
    for I1, J1, I2, J2 in block_quadruples(n, p, q):
        s = sgn_block([I1, I2], [J1, J2])
        out = out + minor_pair(J2, I2, r) * (_det_y(I1, J1, n) * s)
    return out


@lru_cache(maxsize=None)
def F_pq_cartan(n: int, r: int, p: int, q: int) -> WeylOp:
    """Diagonal-Y form: sum over disjoint I, J of prod t_I times minor sums on J."""
    _check(n, p, q)
    if q > r:
        return WeylOp()
    out = WeylOp()
    for I in subsets(n, p):
        tI = Poly.const(1)
        for i in I:
            tI = tI * t(i)
        for J in subsets(n, q):
            if set(I) & set(J):
                continue
            out = out + minor_pair(J, J, r) * tI
    return out


def m_from_f(n: int, r: int, p: int, q: int) -> WeylOp:
    _check(n, p, q)
    out = WeylOp()
    for l in range(q + 1):
        w = (-1) ** (q - l) * math.factorial(q - l) * math.factorial(l) * stirling2(q, l) \
            * binom(n - p - l, q - l)
        if w:
            out = out + F_pq(n, r, p, l) * w
    return out


def y_conjugate_by_perm(F: WeylOp, perm: dict) -> WeylOp:
    return F.permute_rows(perm)


# ----------------------------------------------------------------------------
# verification


def generator_indices(n: int, r: int) -> list[tuple[int, int]]:
    """(p, q) with p + q <= n and 1 <= q <= r: the non-scalar generators."""
    return [(p, q) for q in range(1, min(n, r) + 1) for p in range(0, n - q + 1)]


def verify_charpoly(n: int) -> Report:
    """det(Y - z) = sum_k (-1)^(n-k) c_k z^(n-k)."""
    z = Z()
    Y = ymatrix(n)
    shifted = [[Y[i][j] - (z if i == j else 0) for j in range(n)] for i in range(n)]
    rhs = poly_sum(c_k(n, k) * z ** (n - k) * (-1) ** (n - k) for k in range(n + 1))
    rep = Report(f"charpoly n={n}")
    rep.compare("det(Y - z)", poly_det(shifted), rhs)
    return rep


def verify_m_forms(n: int, r: int, qmax: int = 2) -> Report:
    """M_pq_direct, M_pq_closed, M_pq_symdet and m_from_f agree."""
    rep = Report(f"m-forms n={n} r={r} q<={qmax}")
    for q in range(0, qmax + 1):
        for p in range(0, n - q + 1):
            direct = M_pq_direct(n, r, p, q)
            rep.compare(f"closed p={p} q={q}", M_pq_closed(n, r, p, q), direct)
            rep.compare(f"from-F p={p} q={q}", m_from_f(n, r, p, q), direct)
            rep.compare(f"symdet p={p} q={q}", M_pq_symdet(n, r, p, q), direct)
    return rep


def verify_commutativity(n: int, r: int, cartan: bool = False) -> Report:
    """[F_{p1,q1}, F_{p2,q2}] = 0 for all generator pairs."""
    rep = Report(f"commute n={n} r={r}{' cartan' if cartan else ''}")
    pairs = list(itertools.combinations(generator_indices(n, r), 2))
    jobs = [(n, r, cartan, a, b) for a, b in pairs]
    workers = worker_count()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_pair_commutator, jobs))
    else:
        results = [_pair_commutator(job) for job in jobs]
    for (a, b), c in zip(pairs, results):
        rep.compare(f"[F{a}, F{b}]", c, WeylOp())
    return rep


def worker_count() -> int:
    """Parallel workers for verification grids, from BIGALG_THREADS (default 1)."""
    raw = os.environ.get("BIGALG_THREADS", "1")
    try:
        count = int(raw)
    except ValueError:
        raise ValueError(f"BIGALG_THREADS must be a positive integer, got {raw!r}")
    if count < 1:
        raise ValueError(f"BIGALG_THREADS must be a positive integer, got {raw!r}")
    return count


def _pair_commutator(job) -> WeylOp:
    n, r, cartan, a, b = job
    gen = F_pq_cartan if cartan else F_pq
    return commutator(gen(n, r, *a), gen(n, r, *b))


def verify_cartan_equivariance(n: int, r: int) -> Report:
    """Permuting t_i together with the row indices fixes restrict_cartan(F_pq)."""
    rep = Report(f"cartan-equivariance n={n} r={r}")
    for p, q in generator_indices(n, r):
        F = restrict_cartan(F_pq(n, r, p, q))
        rep.compare(f"cartan formula p={p} q={q}", F, F_pq_cartan(n, r, p, q))
        for perm in permutations_of(n):
            g = {i + 1: perm[i] + 1 for i in range(n)}
            rep.compare(f"perm={perm} p={p} q={q}", F.permute_rows(g), F)
    return rep


def verify_leibniz(n: int, r: int) -> Report:
    """D(A B) = D(A) B + A D(B) for invariant A."""
    rep = Report(f"leibniz n={n} r={r}")
    for k in range(1, n + 1):
        A = WeylOp.from_poly(c_k(n, k))
        for alpha in range(0, 3):
            B = P_alpha(n, r, alpha)
            lhs = kirillov_wei(A * B, n, r)
            rhs = kirillov_wei(A, n, r) * B + A * kirillov_wei(B, n, r)
            rep.compare(f"A=c_{k} B=P_{alpha}", lhs, rhs)
    return rep
