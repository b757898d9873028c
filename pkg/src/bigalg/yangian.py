"""Operators on (C^n)^{tensor m}, Yang R-matrices and evaluated Bethe elements.

The Yangian itself is never materialized: only ev followed by L, i.e. matrices
whose entries are WeylOp-valued rational functions of a spectral variable u.
"""
from __future__ import annotations

import itertools
import math
from collections import defaultdict
from fractions import Fraction
from typing import Sequence

from .algebra import Poly, falling_poly, tdiag
from .biggen import F_pq, restrict_cartan
from .combinat import perm_sign, permutations_of
from .report import Report
from .weyl import L_E, WeylOp

U_VAR = ("u",)


# ----------------------------------------------------------------------------
# rational functions in u with WeylOp numerators

class UFrac:
    """num / prod_a (var - a), with the denominator kept as a sorted tuple of integer roots."""

    __slots__ = ("num", "den", "var")

    def __init__(self, num, den: Sequence[int] = (), var=U_VAR):
        self.num = WeylOp.coerce(num)
        self.den = tuple(sorted(den))
        self.var = var

    def _lift(self, other) -> "UFrac":
        if isinstance(other, UFrac):
            return other
        return UFrac(other, (), self.var)

    def _with_den(self, den: tuple) -> WeylOp:
        """Numerator rescaled to the larger denominator den (a superset multiset)."""
        missing = _multiset_minus(den, self.den)
        out = self.num
        for a in missing:
            out = out * (Poly.var(*self.var) - a)
        return out

    def __add__(self, other):
        other = self._lift(other)
        if self.den == other.den:
            return UFrac(self.num + other.num, self.den, self.var)
        den = _multiset_union(self.den, other.den)
        return UFrac(self._with_den(den) + other._with_den(den), den, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UFrac(-self.num, self.den, self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return UFrac(self.num * other, self.den, self.var)
        other = self._lift(other)
        return UFrac(self.num * other.num, self.den + other.den, self.var)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return UFrac(self.num * other, self.den, self.var)
        return self._lift(other) * self

    def __eq__(self, other):
        other = self._lift(other)
        den = _multiset_union(self.den, other.den)
        return self._with_den(den) == other._with_den(den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"UFrac({self.num.to_str()} / {self.den})"

    def reflect(self, k: int) -> "UFrac":
        """Substitute u -> k - 1 - u."""
        u = Poly.var(*self.var)
        num = self.num.subs_central({self.var: u * -1 + (k - 1)})
        if len(self.den) % 2:
            num = -num
        return UFrac(num, tuple(k - 1 - a for a in self.den), self.var)

    def to_weylop(self) -> WeylOp:
        """Exact polynomial value; raises ArithmeticError if the fraction is proper."""
        out = self.num
        for a in self.den:
            out = _div_linear_op(out, self.var, a)
        return out


def _multiset_minus(big: tuple, small: tuple) -> list:
    left = list(big)
    for a in small:
        left.remove(a)
    return left


def _multiset_union(a: tuple, b: tuple) -> tuple:
    ca, cb = defaultdict(int), defaultdict(int)
    for x in a:
        ca[x] += 1
    for x in b:
        cb[x] += 1
    out = []
    for x in set(ca) | set(cb):
        out.extend([x] * max(ca[x], cb[x]))
    return tuple(sorted(out))


def _div_linear_op(op: WeylOp, var, root: int) -> WeylOp:
    """Divide every central coefficient by (var - root), exactly."""
    groups: dict = defaultdict(dict)
    for (cm, xm, dm), c in op.terms.items():
        groups[(xm, dm)][cm] = c
    out = {}
    for (xm, dm), poly_terms in groups.items():
        q = Poly(poly_terms).div_linear(var, Poly.const(root))
        for cm, c in q.terms.items():
            out[(cm, xm, dm)] = c
    return WeylOp._wrap(out)


# ----------------------------------------------------------------------------
# sparse operators on (C^n)^{tensor m}

class TensorOp:
    """Sparse matrix on (C^n)^{tensor m} keyed by (row multi-index, column multi-index)."""

    def __init__(self, n: int, m: int, coeffs: dict | None = None):
        self.n = n
        self.m = m
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    def _same_shape(self, other):
        if (self.n, self.m) != (other.n, other.m):
            raise ValueError("tensor shapes differ")

    def __add__(self, other: "TensorOp") -> "TensorOp":
        self._same_shape(other)
        d = dict(self.coeffs)
        for k, v in other.coeffs.items():
            d[k] = d[k] + v if k in d else v
        return TensorOp(self.n, self.m, d)

    def __neg__(self):
        return TensorOp(self.n, self.m, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "TensorOp":
        return TensorOp(self.n, self.m, {k: v * s for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorOp):
            return self.scale(other)
        self._same_shape(other)
        by_row: dict = defaultdict(list)
        for (J, K), v in other.coeffs.items():
            by_row[J].append((K, v))
        acc: dict = {}
        for (I, J), a in self.coeffs.items():
            for K, b in by_row.get(J, ()):
                prod = a * b
                key = (I, K)
                acc[key] = acc[key] + prod if key in acc else prod
        return TensorOp(self.n, self.m, acc)

    def __eq__(self, other):
        if not isinstance(other, TensorOp):
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        return all(_eq_or_zero(self.coeffs.get(k), other.coeffs.get(k)) for k in keys)

    __hash__ = None

    def trace(self):
        acc = None
        for (I, J), v in self.coeffs.items():
            if I == J:
                acc = _accumulate(acc, v)
        return 0 if acc is None else acc

    def trace_product(self, other: "TensorOp"):
        """tr(self * other) without forming the product."""
        self._same_shape(other)
        acc = None
        for (I, J), a in self.coeffs.items():
            b = other.coeffs.get((J, I))
            if b is not None:
                acc = _accumulate(acc, a * b)
        return 0 if acc is None else acc


def _accumulate(acc, term):
    return term if acc is None else acc + term


def _eq_or_zero(a, b) -> bool:
    if a is None:
        return not b
    if b is None:
        return not a
    return a == b


def _multi_indices(n: int, m: int):
    return itertools.product(range(1, n + 1), repeat=m)


def identity(m: int, n: int, one=1) -> TensorOp:
    return TensorOp(n, m, {(I, I): one for I in _multi_indices(n, m)})


def perm_op(sigma: Sequence[int], m: int, n: int) -> TensorOp:
    """sum over i of e_{i_1 i_sigma(1)} (x) ... (x) e_{i_m i_sigma(m)}; sigma 0-based."""
    if sorted(sigma) != list(range(m)):
        raise ValueError("sigma must be a permutation of range(m)")
    coeffs = {}
    for I in _multi_indices(n, m):
        coeffs[(I, tuple(I[sigma[s]] for s in range(m)))] = 1
    return TensorOp(n, m, coeffs)


def P_ab(a: int, b: int, m: int, n: int) -> TensorOp:
    """Transposition of tensor slots a and b (1-based)."""
    if a == b or not (1 <= a <= m and 1 <= b <= m):
        raise ValueError("need distinct slots in [1, m]")
    sigma = list(range(m))
    sigma[a - 1], sigma[b - 1] = b - 1, a - 1
    return perm_op(sigma, m, n)


def A_m(m: int, n: int) -> TensorOp:
    """Antisymmetrizer: sum over sigma of sgn(sigma) times the permutation operator."""
    coeffs: dict = defaultdict(int)
    for sigma in permutations_of(m):
        s = perm_sign(sigma)
        for I in _multi_indices(n, m):
            coeffs[(I, tuple(I[sigma[k]] for k in range(m)))] += s
    return TensorOp(n, m, dict(coeffs))


def slot_factor(entries, a: int, m: int, n: int) -> TensorOp:
    """C_a: the n x n matrix entries acting in slot a, identity elsewhere."""
    coeffs = {}
    for I in _multi_indices(n, m):
        for j in range(1, n + 1):
            v = entries[I[a - 1] - 1][j - 1]
            if not v:
                continue
            J = I[:a - 1] + (j,) + I[a:]
            coeffs[(I, J)] = v
    return TensorOp(n, m, coeffs)


# ----------------------------------------------------------------------------
# R-matrices

def yang_R(x, a: int, b: int, m: int, n: int) -> TensorOp:
    """R_ab(x) = 1 - P_ab / x for a nonzero number x."""
    x = Fraction(x)
    if not x:
        raise ZeroDivisionError("R(0) is undefined")
    return identity(m, n) - P_ab(a, b, m, n).scale(1 / x)


def yang_R_cleared(x: Poly, a: int, b: int, m: int, n: int) -> TensorOp:
    """x * R_ab(x) = x - P_ab, polynomial in the spectral parameters."""
    x = Poly.coerce(x)
    return identity(m, n, x) - P_ab(a, b, m, n).scale(Poly.const(1))


def _R_factory(us, m, n, cleared):
    def R(i, j):
        diff = us[i - 1] - us[j - 1]
        return yang_R_cleared(diff, i, j, m, n) if cleared else yang_R(diff, i, j, m, n)
    return R


def _product(ops, start):
    out = start
    for op in ops:
        out = out * op
    return out


def R_chain(us: Sequence, n: int, cleared: bool = False) -> TensorOp:
    """(R_{m-1,m})(R_{m-2,m} R_{m-2,m-1})...(R_{1m}...R_{12}), R_ij = R_ij(u_i - u_j)."""
    m = len(us)
    R = _R_factory(us, m, n, cleared)
    ops = []
    for i in range(m - 1, 0, -1):
        for j in range(m, i, -1):
            ops.append(R(i, j))
    return _product(ops, identity(m, n, Poly.const(1) if cleared else 1))


def R_chain_alternative(us: Sequence, n: int, cleared: bool = False) -> TensorOp:
    """(R_{12}...R_{1m})...(R_{m-2,m-1} R_{m-2,m})(R_{m-1,m})."""
    m = len(us)
    R = _R_factory(us, m, n, cleared)
    ops = []
    for i in range(1, m):
        for j in range(i + 1, m + 1):
            ops.append(R(i, j))
    return _product(ops, identity(m, n, Poly.const(1) if cleared else 1))


def verify_yang_baxter(n: int) -> Report:
    """R12(u-v) R13(u-w) R23(v-w) = R23(v-w) R13(u-w) R12(u-v), denominators cleared."""
    u, v, w = Poly.var("u"), Poly.var("v"), Poly.var("w")
    lhs = yang_R_cleared(u - v, 1, 2, 3, n) * yang_R_cleared(u - w, 1, 3, 3, n) \
        * yang_R_cleared(v - w, 2, 3, 3, n)
    rhs = yang_R_cleared(v - w, 2, 3, 3, n) * yang_R_cleared(u - w, 1, 3, 3, n) \
        * yang_R_cleared(u - v, 1, 2, 3, n)
    rep = Report(f"yang-baxter n={n}")
    rep.require("R12 R13 R23 = R23 R13 R12", lhs == rhs)
    return rep


def verify_antisymmetrizer(m: int, n: int) -> Report:
    rep = Report(f"antisymmetrizer m={m} n={n}")
    A = A_m(m, n)
    rep.require("A^2 = m! A", A * A == A.scale(math.factorial(m)))
    for a in range(1, m + 1):
        for b in range(a + 1, m + 1):
            P = P_ab(a, b, m, n)
            rep.require(f"A P_{a}{b} = -A", A * P == -A)
            rep.require(f"P_{a}{b} A = -A", P * A == -A)
    rep.require("tr A = m! C(n, m)", A.trace() == math.factorial(m) * math.comb(n, m))
    if m >= 2:
        us = [Fraction(m - s) for s in range(m)]
        rep.require("R chain at unit steps = A", R_chain(us, n) == A)
        rep.require("alternative chain at unit steps = A", R_chain_alternative(us, n) == A)
        sym = [Poly.var("a", s) for s in range(1, m + 1)]
        rep.require("chain factorizations agree",
                    R_chain(sym, n, cleared=True) == R_chain_alternative(sym, n, cleared=True))
    return rep


# ----------------------------------------------------------------------------
# evaluated T-matrices and Bethe elements

def ev_T(shift: int, n: int, r: int, var=U_VAR):
    """n x n matrix of L(ev t_ij(u + shift)) = delta_ij + L(E_ij) / (u + shift)."""
    u = Poly.var(*var)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            num = L_E(i, j, r)
            if i == j:
                num = num + (u + shift)
            row.append(UFrac(num, (-shift,), var))
        rows.append(row)
    return rows


def _as_ufrac_matrix(C, var):
    return [[UFrac(WeylOp.coerce(Poly.coerce(e)), (), var) if e else 0 for e in row] for row in C]


def sigma_k(n: int, r: int, k: int, C=None, reversed_order: bool = False, var=U_VAR) -> UFrac:
    """(1/n!) tr A_n T_1(u)...T_k(u-k+1) C_{k+1}...C_n (T-factors reversed on request)."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    C = tdiag(n) if C is None else C
    Cu = _as_ufrac_matrix(C, var)
    T = [slot_factor(ev_T(-(s - 1), n, r, var), s, n, n) for s in range(1, k + 1)]
    if reversed_order:
        T = T[::-1]
    X = _product(T + [slot_factor(Cu, s, n, n) for s in range(k + 1, n + 1)],
                 identity(n, n, UFrac(1, (), var)))
    return A_m(n, n).trace_product(X) * Fraction(1, math.factorial(n))


def tau_k(n: int, r: int, k: int, C=None, reversed_order: bool = False, var=U_VAR) -> UFrac:
    """(1/k!) tr A_k C_1...C_k T_1(u)...T_k(u-k+1) on (C^n)^{tensor k}."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if k == 0:
        return UFrac(1, (), var)
    one = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    Cu = _as_ufrac_matrix(one if C is None else C, var)
    T = [slot_factor(ev_T(-(s - 1), n, r, var), s, k, n) for s in range(1, k + 1)]
    if reversed_order:
        T = T[::-1]
    X = _product([slot_factor(Cu, s, k, n) for s in range(1, k + 1)] + T,
                 identity(k, n, UFrac(1, (), var)))
    return A_m(k, n).trace_product(X) * Fraction(1, math.factorial(k))


def bethe_bridge_sides(n: int, r: int, p: int) -> tuple[WeylOp, WeylOp]:
    """Both sides of the polynomial bridge in u, with k = n - p:

    n!/(n-k)! (-1)^k C(u,k) sigma_k(k-1-u, Y) = sum_l (-1)^(k-l) u^(k-l falling) F_{p,l}(Y).
    """
    k = n - p
    u = Poly.var(*U_VAR)
    s = sigma_k(n, r, k).reflect(k)
    pref = falling_poly(u, k) * Fraction(math.factorial(n) * (-1) ** k,
                                         math.factorial(k) * math.factorial(n - k))
    lhs = (s * pref).to_weylop()
    rhs = WeylOp()
    for l in range(k + 1):
        F = restrict_cartan(F_pq(n, r, p, l))
        rhs = rhs + F * (falling_poly(u, k - l) * (-1) ** (k - l))
    return lhs, rhs


def bethe_series_sides(n: int, r: int, p: int) -> tuple[UFrac, UFrac]:
    """C(n, k) sigma_k(u, Y) against sum_l F_{p,l}(Y) / u^(l falling), k = n - p."""
    rhs = UFrac(WeylOp())
    for l in range(n - p + 1):
        rhs = rhs + UFrac(restrict_cartan(F_pq(n, r, p, l)), tuple(range(l)))
    return sigma_k(n, r, n - p) * math.comb(n, p), rhs


def verify_bethe_bridge(n: int, r: int, p: int) -> Report:
    rep = Report(f"bethe-bridge n={n} r={r} p={p}")
    lhs, rhs = bethe_bridge_sides(n, r, p)
    for d in range(n - p + 1):
        rep.compare(f"coefficient of u^{d}", lhs.coeff_in(U_VAR, d), rhs.coeff_in(U_VAR, d))
    rep.compare("full identity", lhs, rhs)
    series, expansion = bethe_series_sides(n, r, p)
    rep.compare("series form", series, expansion)
    return rep


def verify_sigma_commute(n: int, r: int) -> Report:
    """Numerators of sigma_{k1}(u, Y) and sigma_{k2}(w, Y) commute."""
    rep = Report(f"sigma-commute n={n} r={r}")
    nums_u = [sigma_k(n, r, k).num for k in range(n + 1)]
    nums_w = [sigma_k(n, r, k, var=("w",)).num for k in range(n + 1)]
    for k1 in range(n + 1):
        for k2 in range(n + 1):
            a, b = nums_u[k1], nums_w[k2]
            rep.compare(f"[sigma_{k1}(u), sigma_{k2}(w)]", a * b - b * a, WeylOp())
    return rep


def verify_sigma_equivariance(n: int, r: int, k: int) -> Report:
    """Permutation equivariance: sigma_k(u, g C g^-1) = Ad(g) sigma_k(u, C) for C = diag(t)."""
    rep = Report(f"sigma-equivariance n={n} r={r} k={k}")
    base = sigma_k(n, r, k)
    for perm in permutations_of(n):
        g = {i + 1: perm[i] + 1 for i in range(n)}
        g_inv = {v: k_ for k_, v in g.items()}
        C = [[Poly.var("t", g_inv[i]) if i == j else Poly() for j in range(1, n + 1)]
             for i in range(1, n + 1)]
        moved = sigma_k(n, r, k, C)
        expect = UFrac(base.num.permute_rows(g, central=False), base.den)
        rep.compare(f"perm={perm}", moved, expect)
    return rep
