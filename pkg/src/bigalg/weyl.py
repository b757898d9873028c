"""The Weyl algebra PD(n, r) over a commutative coefficient ring, in normal form.

A term is ``(central monomial, x-monomial, d-monomial)``.  Central variables
(y, t, u, z, ...) commute with everything; x- and d-monomials are sorted tuples
of ``((i, a), exponent)``.  Within a term every x stands left of every d.
"""
from __future__ import annotations

import itertools
import math
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .algebra import (ONE, Mono, Poly, Scalar, grlex_key, join_terms, fmt_mono,
                      mono_mul, var_name)
from .combinat import distinct_tuples, epsilon, perm_sign, permutations_of, stirling2, subsets

Key = tuple  # (central, xmono, dmono)


@lru_cache(maxsize=None)
def _reorder(dm: Mono, xm: Mono) -> tuple:
    """Normal form of d^beta x^alpha as ((x-part, d-part), coeff) pairs."""
    if not dm or not xm:
        return (((xm, dm), 1),)
    dd, xd = dict(dm), dict(xm)
    common = [v for v in dd if v in xd]
    if not common:
        return (((xm, dm), 1),)
    options = []
    for v in common:
        b, a = dd[v], xd[v]
        opts = []
        for g in range(min(a, b) + 1):
            opts.append((g, math.comb(b, g) * math.comb(a, g) * math.factorial(g)))
        options.append(opts)
    out = []
    for choice in itertools.product(*options):
        coef = 1
        nx, nd = dict(xd), dict(dd)
        for v, (g, cf) in zip(common, choice):
            coef *= cf
            if g:
                nx[v] -= g
                nd[v] -= g
        out.append(((tuple(sorted((k, e) for k, e in nx.items() if e)),
                     tuple(sorted((k, e) for k, e in nd.items() if e))), coef))
    return tuple(out)


def _as_x_var(k):
    return ("x",) + k


def _as_d_var(k):
    return ("d",) + k


class WeylOp:
    """Normal-form element of (central polynomials) tensor PD(n, r)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Key, Scalar] | None = None):
        self.terms = {} if terms is None else {k: c for k, c in terms.items() if c}

    @classmethod
    def _wrap(cls, d):
        w = object.__new__(cls)
        w.terms = d
        return w

    @classmethod
    def scalar(cls, c: Scalar) -> "WeylOp":
        return cls._wrap({(ONE, ONE, ONE): c} if c else {})

    @classmethod
    def from_poly(cls, p: Poly) -> "WeylOp":
        return cls._wrap({(m, ONE, ONE): cf for m, cf in p.terms.items()})

    @classmethod
    def x(cls, i: int, a: int = 1) -> "WeylOp":
        return cls._wrap({(ONE, (((i, a), 1),), ONE): 1})

    @classmethod
    def d(cls, i: int, a: int = 1) -> "WeylOp":
        return cls._wrap({(ONE, ONE, (((i, a), 1),)): 1})

    @classmethod
    def coerce(cls, other) -> "WeylOp":
        if isinstance(other, WeylOp):
            return other
        if isinstance(other, Poly):
            return cls.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return cls.scalar(other)
        raise TypeError(f"cannot coerce {type(other).__name__} to WeylOp")

    def __add__(self, other):
        if not isinstance(other, WeylOp):
            try:
                other = WeylOp.coerce(other)
            except TypeError:
                return NotImplemented
        d = dict(self.terms)
        for k, c in other.terms.items():
            s = d.get(k, 0) + c
            if s:
                d[k] = s
            else:
                d.pop(k, None)
        return WeylOp._wrap(d)

    __radd__ = __add__

    def __neg__(self):
        return WeylOp._wrap({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-WeylOp.coerce(other))

    def __rsub__(self, other):
        return WeylOp.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return WeylOp()
            return WeylOp._wrap({k: c * other for k, c in self.terms.items()})
        if isinstance(other, Poly):
            return self._mul_central(other)
        if not isinstance(other, WeylOp):
            return NotImplemented
        acc: dict = defaultdict(int)
        for (c1, x1, d1), k1 in self.terms.items():
            for (c2, x2, d2), k2 in other.terms.items():
                cm = mono_mul(c1, c2)
                kk = k1 * k2
                for (xg, dg), cf in _reorder(d1, x2):
                    acc[(cm, mono_mul(x1, xg), mono_mul(dg, d2))] += kk * cf
        return WeylOp._wrap({k: c for k, c in acc.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        if isinstance(other, Poly):
            return self._mul_central(other)
        return NotImplemented

    def _mul_central(self, p: Poly) -> "WeylOp":
        acc: dict = defaultdict(int)
        for (cm, xm, dm), k in self.terms.items():
            for m, cf in p.terms.items():
                acc[(mono_mul(cm, m), xm, dm)] += k * cf
        return WeylOp._wrap({k: c for k, c in acc.items() if c})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = WeylOp.coerce(other)
        if not isinstance(other, WeylOp):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"WeylOp({self.to_str()})"

    def __pow__(self, k: int):
        out = WeylOp.scalar(1)
        for _ in range(k):
            out = out * self
        return out

    # structure
    def central_part(self) -> Poly:
        """The polynomial coefficient when the operator is a pure central scalar."""
        d = {}
        for (cm, xm, dm), k in self.terms.items():
            if xm or dm:
                raise ValueError("operator is not central")
            d[cm] = k
        return Poly(d)

    def map_central(self, fn: Callable[[Mono], Poly]) -> "WeylOp":
        """Apply a substitution to the central monomials (fn is cached per monomial)."""
        cache: dict = {}
        acc: dict = defaultdict(int)
        for (cm, xm, dm), k in self.terms.items():
            if cm not in cache:
                cache[cm] = fn(cm)
            for m, cf in cache[cm].terms.items():
                acc[(m, xm, dm)] += k * cf
        return WeylOp._wrap({k: c for k, c in acc.items() if c})

    def subs_central(self, mapping) -> "WeylOp":
        return self.map_central(lambda cm: Poly._wrap({cm: 1}).subs(mapping))

    def diff_central(self, var) -> "WeylOp":
        acc: dict = defaultdict(int)
        for (cm, xm, dm), k in self.terms.items():
            dmap = dict(cm)
            e = dmap.get(var, 0)
            if not e:
                continue
            if e == 1:
                del dmap[var]
            else:
                dmap[var] = e - 1
            acc[(tuple(sorted(dmap.items())), xm, dm)] += k * e
        return WeylOp._wrap({k: c for k, c in acc.items() if c})

    def central_variables(self) -> set:
        return {v for (cm, _, _) in self.terms for v, _ in cm}

    def bidegree(self) -> set[tuple[int, int]]:
        return {(sum(e for _, e in xm), sum(e for _, e in dm)) for (_, xm, dm) in self.terms}

    def coeff_in(self, var, k: int) -> "WeylOp":
        """Coefficient of var^k for a central variable var."""
        d = {}
        for (cm, xm, dm), c in self.terms.items():
            dmap = dict(cm)
            if dmap.get(var, 0) == k:
                dmap.pop(var, None)
                d[(tuple(sorted(dmap.items())), xm, dm)] = c
        return WeylOp._wrap(d)

    def permute_rows(self, perm: Mapping[int, int], central: bool = True) -> "WeylOp":
        """Relabel row indices i of x_{ia}, d_{ia} (and of t_i, y_ij when central) by perm."""
        def rel_mono(m):
            return tuple(sorted(((perm[i], a), e) for (i, a), e in m))

        def rel_central(cm):
            if not central:
                return cm
            out = []
            for v, e in cm:
                if v[0] == "t":
                    v = ("t", perm[v[1]])
                elif v[0] == "y":
                    v = ("y", perm[v[1]], perm[v[2]])
                out.append((v, e))
            return tuple(sorted(out))

        return WeylOp._wrap({(rel_central(cm), rel_mono(xm), rel_mono(dm)): c
                             for (cm, xm, dm), c in self.terms.items()})

    # action on polynomials in the x-variables
    def apply(self, f: Poly) -> Poly:
        acc: dict = defaultdict(int)
        for (cm, xm, dm), k in self.terms.items():
            g = f
            for (i, a), e in dm:
                for _ in range(e):
                    g = g.diff(("x", i, a))
                    if not g:
                        break
                if not g:
                    break
            if not g:
                continue
            pref = mono_mul(cm, tuple(sorted((("x", i, a), e) for (i, a), e in xm)))
            for m, cf in g.terms.items():
                acc[mono_mul(pref, m)] += k * cf
        return Poly._wrap({m: c for m, c in acc.items() if c})

    # printing
    def _flat(self, key):
        cm, xm, dm = key
        return cm + tuple((_as_x_var(k), e) for k, e in xm) + tuple((_as_d_var(k), e) for k, e in dm)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kc: grlex_key(self._flat(kc[0])))

    def to_str(self) -> str:
        return join_terms([(c, fmt_mono(self._flat(k))) for k, c in self.sorted_terms()])

    def to_json(self) -> list:
        from .algebra import fmt_coeff
        out = []
        for k, c in self.sorted_terms():
            cm, xm, dm = k
            out.append({
                "coeff": fmt_coeff(c),
                "central": [[var_name(v), e] for v, e in cm],
                "x": [[var_name(_as_x_var(v)), e] for v, e in xm],
                "d": [[var_name(_as_d_var(v)), e] for v, e in dm],
            })
        return out


def weyl_mul(a: WeylOp, b: WeylOp) -> WeylOp:
    return a * b


def weyl_apply(a: WeylOp, f: Poly) -> Poly:
    return a.apply(f)


def commutator(a, b):
    return a * b - b * a


def xpoly(i: int, a: int = 1) -> Poly:
    """x_{ia} as a polynomial, for use with WeylOp.apply."""
    return Poly.var("x", i, a)


@lru_cache(maxsize=None)
def L_E(i: int, j: int, r: int) -> WeylOp:
    """Image of E_ij: sum over a of x_{ia} d_{ja}."""
    return WeylOp._wrap({(ONE, (((i, a), 1),), (((j, a), 1),)): 1 for a in range(1, r + 1)})


def euler(n: int, r: int) -> WeylOp:
    out = WeylOp()
    for i in range(1, n + 1):
        out = out + L_E(i, i, r)
    return out


# ----------------------------------------------------------------------------
# noncommutative determinants (entries: anything with + and *)

def _check_square(M):
    N = len(M)
    if any(len(row) != N for row in M):
        raise ValueError("matrix is not square")
    return N


def _sum(items, zero):
    acc = zero
    for x in items:
        acc = acc + x
    return acc


def _ordered_product(factors, one):
    out = one
    for f in factors:
        out = out * f
    return out


def rdet(M, one=None):
    """sum sgn(s) a_{1 s1} a_{2 s2} ... (row-ordered products)."""
    N = _check_square(M)
    one = WeylOp.scalar(1) if one is None else one
    acc = one * 0
    for s in permutations_of(N):
        acc = acc + _ordered_product((M[i][s[i]] for i in range(N)), one) * perm_sign(s)
    return acc


def cdet(M, one=None):
    """sum sgn(s) a_{s1 1} a_{s2 2} ... (column-ordered products)."""
    N = _check_square(M)
    one = WeylOp.scalar(1) if one is None else one
    acc = one * 0
    for s in permutations_of(N):
        acc = acc + _ordered_product((M[s[i]][i] for i in range(N)), one) * perm_sign(s)
    return acc


def symdet(M, one=None):
    """sum over (s, t) of sgn(st) a_{s1 t1} ... a_{sN tN}."""
    N = _check_square(M)
    one = WeylOp.scalar(1) if one is None else one
    acc = one * 0
    perms = permutations_of(N)
    for s in perms:
        ss = perm_sign(s)
        for tau in perms:
            acc = acc + _ordered_product((M[s[i]][tau[i]] for i in range(N)), one) * (ss * perm_sign(tau))
    return acc


# ----------------------------------------------------------------------------
# symmetrized determinants of L(E)

def LE_matrix(I: Sequence[int], J: Sequence[int], r: int):
    return [[L_E(i, j, r) for j in J] for i in I]


def symdet_LE(I: Sequence[int], J: Sequence[int], r: int) -> WeylOp:
    """Direct (k!)^2-term expansion; used as an oracle."""
    return symdet(LE_matrix(I, J, r))


def det_x(rows: Sequence[int], cols: Sequence[int]) -> WeylOp:
    """det of the submatrix of X = [x_{ia}]; x's commute so this is a plain polynomial."""
    k = len(rows)
    acc: dict = defaultdict(int)
    for s in permutations_of(k):
        m = tuple(sorted(_merge(((rows[a], cols[s[a]]) for a in range(k)))))
        acc[(ONE, m, ONE)] += perm_sign(s)
    return WeylOp._wrap({k_: c for k_, c in acc.items() if c})


def det_d(rows: Sequence[int], cols: Sequence[int]) -> WeylOp:
    k = len(rows)
    acc: dict = defaultdict(int)
    for s in permutations_of(k):
        m = tuple(sorted(_merge(((rows[a], cols[s[a]]) for a in range(k)))))
        acc[(ONE, ONE, m)] += perm_sign(s)
    return WeylOp._wrap({k_: c for k_, c in acc.items() if c})


def _merge(pairs) -> list:
    d: dict = defaultdict(int)
    for p in pairs:
        d[p] += 1
    return list(d.items())


@lru_cache(maxsize=None)
def minor_pair(rows_x: tuple, rows_d: tuple, r: int) -> WeylOp:
    """sum over R in C([r], k) of det X_{rows_x, R} det D_{rows_d, R}."""
    out = WeylOp()
    for R in subsets(r, len(rows_x)):
        out = out + det_x(rows_x, R) * det_d(rows_d, R)
    return out


def symdet_LE_closed(I: Sequence[int], J: Sequence[int], r: int) -> WeylOp:
    """Normal form of symdet L(E)_{IJ} via Stirling-weighted minor sums."""
    I, J = tuple(I), tuple(J)
    k = len(I)
    if len(J) != k:
        raise ValueError("I and J must have equal length")
    out = WeylOp()
    for l in range(k + 1):
        weight = (-1) ** (k - l) * math.factorial(k - l) * math.factorial(l) * stirling2(k, l)
        if not weight:
            continue
        for V in subsets(k, l):
            IV = tuple(I[v - 1] for v in V)
            for W in subsets(k, l):
                JW = tuple(J[w - 1] for w in W)
                e = epsilon(I, J, IV, JW)
                if e:
                    out = out + minor_pair(IV, JW, r) * (weight * e)
    return out


def symmetrized_shift_sum(N: int) -> Poly:
    """sum over (s, t) in S_N x S_N of sgn(st) prod_s (a_s + [s(s) > t(s)])."""
    acc = Poly()
    alphas = [Poly.var("a", s) for s in range(1, N + 1)]
    for s in permutations_of(N):
        for tau in permutations_of(N):
            prod = Poly.const(perm_sign(s) * perm_sign(tau))
            for idx in range(N):
                prod = prod * (alphas[idx] + (1 if s[idx] > tau[idx] else 0))
            acc = acc + prod
    return acc


def verify_symdet_closed(n: int, k: int, r: int) -> "Report":
    """symdet_LE_closed equals the direct expansion for all distinct-entry I, J."""
    from .report import Report
    rep = Report(f"symdet n={n} k={k} r={r}")
    for I in distinct_tuples(n, k):
        for J in distinct_tuples(n, k):
            rep.compare(f"I={I} J={J}", symdet_LE_closed(I, J, r), symdet_LE(I, J, r))
    return rep
