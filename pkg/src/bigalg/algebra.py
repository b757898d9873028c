"""Exact commutative kernel.

Multivariate polynomials with rational coefficients over namespaced
variables, univariate rational functions, commutative determinants,
symmetric polynomials and power-sum expressions with plethystic
substitution.

A variable is a tuple whose first entry is a family tag, e.g. ``("y", 1, 2)``
for y_{12}, ``("t", 3)`` for t_3 or ``("u",)``.  A monomial is a sorted tuple
of ``(variable, exponent)`` pairs.
"""
from __future__ import annotations

import itertools
import math
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence, Union

from .combinat import perm_sign, permutations_of

Scalar = Union[int, Fraction]
Var = tuple
Mono = tuple

ONE: Mono = ()

# Display order of variable families; everything else sorts after by tag.
FAMILY_RANK = {
    "y": 0, "t": 1, "u": 2, "v": 3, "w": 4, "z": 5, "a": 6,
    "c": 7, "e": 8, "p": 9, "q": 10, "P": 11, "M": 12, "X": 13,
    "x": 20, "d": 21,
}


@lru_cache(maxsize=None)
def mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_degree(m: Mono) -> int:
    return sum(e for _, e in m)


def var_name(v: Var) -> str:
    tag = v[0]
    if tag == "q":
        return "p" + "".join(f"[{i}]" for i in v[1:])
    return tag + "".join(f"[{i}]" for i in v[1:])


def var_rank(v: Var) -> tuple:
    return (FAMILY_RANK.get(v[0], 50), v[0]) + tuple(v[1:])


_SENTINEL = ((10**9,), 0)


def lex_key(m: Mono) -> tuple:
    """Sort key putting lexicographically larger monomials first."""
    items = sorted(((var_rank(v), -e) for v, e in m))
    return tuple(items) + (_SENTINEL,)


def grlex_key(m: Mono) -> tuple:
    """Graded-lex sort key: higher total degree first, then lex."""
    return (-mono_degree(m), lex_key(m))


def fmt_coeff(c: Scalar) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def fmt_mono(m: Mono, names: Callable[[Var], str] = var_name) -> str:
    parts = []
    for v, e in sorted(m, key=lambda ve: var_rank(ve[0])):
        parts.append(names(v) if e == 1 else f"{names(v)}^{e}")
    return "*".join(parts)


def join_terms(pieces: Sequence[tuple[Scalar, str]], sep_spaces: bool = True) -> str:
    """Render ``[(coeff, monomial_text), ...]`` as a signed sum."""
    if not pieces:
        return "0"
    out = []
    for idx, (c, body) in enumerate(pieces):
        c = Fraction(c)
        neg = c < 0
        a = -c if neg else c
        if body == "":
            text = fmt_coeff(a)
        elif a == 1:
            text = body
        else:
            text = f"{fmt_coeff(a)}*{body}"
        if idx == 0:
            out.append(("-" if neg else "") + text)
        elif sep_spaces:
            out.append((" - " if neg else " + ") + text)
        else:
            out.append(("-" if neg else "+") + text)
    return "".join(out)


class Poly:
    """Polynomial with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Mono, Scalar] | None = None):
        self.terms = {} if terms is None else {m: c for m, c in terms.items() if c}

    @classmethod
    def _wrap(cls, d: dict) -> "Poly":
        p = object.__new__(cls)
        p.terms = d
        return p

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls._wrap({ONE: c} if c else {})

    @classmethod
    def var(cls, *v) -> "Poly":
        if len(v) == 1 and isinstance(v[0], tuple):
            v = v[0]
        return cls._wrap({((tuple(v), 1),): 1})

    @classmethod
    def coerce(cls, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.const(other)
        raise TypeError(f"cannot coerce {type(other).__name__} to Poly")

    # arithmetic
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        d = dict(self.terms)
        for m, c in other.terms.items():
            s = d.get(m, 0) + c
            if s:
                d[m] = s
            else:
                d.pop(m, None)
        return Poly._wrap(d)

    __radd__ = __add__

    def __neg__(self):
        return Poly._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly()
            return Poly._wrap({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        d: dict = defaultdict(int)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                d[mono_mul(m1, m2)] += c1 * c2
        return Poly._wrap({m: c for m, c in d.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly._wrap({m: Fraction(c) / other for m, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Poly({self.to_str()})"

    # queries
    def is_constant(self) -> bool:
        return all(m == ONE for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return Fraction(self.terms.get(ONE, 0))

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def degree(self, var: Var | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(mono_degree(m) for m in self.terms)
        return max(dict(m).get(var, 0) for m in self.terms)

    def coeff(self, mono: Mono) -> Fraction:
        return Fraction(self.terms.get(tuple(sorted(mono)), 0))

    def coeff_of(self, var: Var, k: int) -> "Poly":
        """Coefficient of var^k, as a polynomial in the remaining variables."""
        d = {}
        for m, c in self.terms.items():
            dm = dict(m)
            if dm.get(var, 0) == k:
                dm.pop(var, None)
                d[tuple(sorted(dm.items()))] = c
        return Poly._wrap(d)

    # transforms
    def diff(self, var: Var) -> "Poly":
        d: dict = defaultdict(int)
        for m, c in self.terms.items():
            dm = dict(m)
            e = dm.get(var, 0)
            if e:
                if e == 1:
                    del dm[var]
                else:
                    dm[var] = e - 1
                d[tuple(sorted(dm.items()))] += c * e
        return Poly._wrap({m: c for m, c in d.items() if c})

    def subs(self, mapping: Mapping[Var, "Poly | Scalar"]) -> "Poly":
        """Simultaneous substitution of variables by polynomials."""
        if not mapping:
            return self
        images = {v: Poly.coerce(p) for v, p in mapping.items()}
        power_cache: dict = {}

        def power(v, e):
            key = (v, e)
            if key not in power_cache:
                power_cache[key] = images[v] ** e
            return power_cache[key]

        out = Poly()
        acc: dict = defaultdict(int)
        for m, c in self.terms.items():
            kept = []
            factor = None
            for v, e in m:
                if v in images:
                    p = power(v, e)
                    factor = p if factor is None else factor * p
                else:
                    kept.append((v, e))
            kept_m = tuple(kept)
            if factor is None:
                acc[kept_m] += c
            else:
                for fm, fc in factor.terms.items():
                    acc[mono_mul(kept_m, fm)] += c * fc
        out = Poly._wrap({m: c for m, c in acc.items() if c})
        return out

    def map_coeffs(self, fn: Callable[[Fraction], Scalar]) -> "Poly":
        return Poly({m: fn(c) for m, c in self.terms.items()})

    def div_linear(self, var: Var, root: "Poly") -> "Poly":
        """Exact quotient by (var - root); raises if the remainder is nonzero."""
        deg = self.degree(var)
        if deg < 0:
            return Poly()
        coeffs = [self.coeff_of(var, k) for k in range(deg + 1)]
        # synthetic division from the top coefficient down
        quotient = [Poly()] * deg
        carry = Poly()
        for k in range(deg, 0, -1):
            carry = coeffs[k] + carry * root
            quotient[k - 1] = carry
        remainder = coeffs[0] + carry * root
        if remainder:
            raise ArithmeticError("division by linear factor is not exact")
        v = Poly.var(var)
        out = Poly()
        vp = Poly.const(1)
        for q in quotient:
            out = out + q * vp
            vp = vp * v
        return out

    def content_normalized(self, order_key: Callable[[Mono], tuple] = grlex_key) -> "Poly":
        """Scale to a primitive integer polynomial with positive leading coefficient."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
        ints = {m: int(Fraction(c) * den) for m, c in self.terms.items()}
        g = 0
        for c in ints.values():
            g = math.gcd(g, c)
        lead = min(ints, key=order_key)
        sign = -1 if ints[lead] < 0 else 1
        return Poly._wrap({m: sign * c // g for m, c in ints.items()})

    def sorted_terms(self, order_key: Callable[[Mono], tuple] = grlex_key):
        return sorted(self.terms.items(), key=lambda mc: order_key(mc[0]))

    def to_str(self, order_key: Callable[[Mono], tuple] = grlex_key,
               names: Callable[[Var], str] = var_name) -> str:
        return join_terms([(c, fmt_mono(m, names)) for m, c in self.sorted_terms(order_key)])

    def to_json(self) -> list:
        return [{"coeff": fmt_coeff(c),
                 "monomial": [[var_name(v), e] for v, e in sorted(m, key=lambda ve: var_rank(ve[0]))]}
                for m, c in self.sorted_terms()]


def poly_sum(items: Iterable) -> Poly:
    acc: dict = defaultdict(int)
    for p in items:
        for m, c in Poly.coerce(p).terms.items():
            acc[m] += c
    return Poly._wrap({m: c for m, c in acc.items() if c})


def falling_poly(x: Poly, k: int) -> Poly:
    """x(x-1)...(x-k+1) for a polynomial x."""
    out = Poly.const(1)
    for i in range(k):
        out = out * (x - i)
    return out


def binomial_poly(x: Poly, k: int) -> Poly:
    return falling_poly(x, k) * Fraction(1, math.factorial(k))


# ----------------------------------------------------------------------------
# named variable helpers

def y(i: int, j: int) -> Poly:
    return Poly.var("y", i, j)


def t(i: int) -> Poly:
    return Poly.var("t", i)


def U() -> Poly:
    return Poly.var("u")


def Z() -> Poly:
    return Poly.var("z")


def c(k: int) -> Poly:
    return Poly.var("c", k)


def ymatrix(n: int) -> list[list[Poly]]:
    return [[y(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def tdiag(n: int) -> list[list[Poly]]:
    return [[t(i) if i == j else Poly() for j in range(1, n + 1)] for i in range(1, n + 1)]


def matmul(A: Sequence[Sequence[Poly]], B: Sequence[Sequence[Poly]]) -> list[list[Poly]]:
    n, k, m = len(A), len(B), len(B[0])
    return [[poly_sum(A[i][s] * B[s][j] for s in range(k)) for j in range(m)] for i in range(n)]


def matpow(A, k: int):
    n = len(A)
    out = [[Poly.const(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for _ in range(k):
        out = matmul(out, A)
    return out


# ----------------------------------------------------------------------------
# determinants

def poly_det(M: Sequence[Sequence]) -> Poly:
    """Leibniz expansion of a determinant with commuting entries."""
    N = len(M)
    if any(len(row) != N for row in M):
        raise ValueError("determinant of a non-square matrix")
    if N == 0:
        return Poly.const(1)
    acc: dict = defaultdict(int)
    for perm in permutations_of(N):
        prod = Poly.const(perm_sign(perm))
        for i in range(N):
            prod = prod * Poly.coerce(M[i][perm[i]])
            if not prod:
                break
        for m, cf in prod.terms.items():
            acc[m] += cf
    return Poly._wrap({m: cf for m, cf in acc.items() if cf})


def submatrix(M, rows: Sequence[int], cols: Sequence[int]):
    """1-based rows and columns."""
    return [[M[i - 1][j - 1] for j in cols] for i in rows]


# ----------------------------------------------------------------------------
# symmetric polynomials

def elementary_sym(p: int, variables: Sequence[Poly]) -> Poly:
    if p < 0 or p > len(variables):
        return Poly()
    return poly_sum(_prod(sub) for sub in itertools.combinations(variables, p))


def power_sum(r: int, variables: Sequence[Poly]) -> Poly:
    return poly_sum(v ** r for v in variables)


def complete_sym(r: int, variables: Sequence[Poly]) -> Poly:
    if r < 0:
        return Poly()
    return poly_sum(_prod(sub) for sub in itertools.combinations_with_replacement(variables, r))


def _prod(items) -> Poly:
    out = Poly.const(1)
    for x in items:
        out = out * x
    return out


def tvars(n: int) -> list[Poly]:
    return [t(i) for i in range(1, n + 1)]


# ----------------------------------------------------------------------------
# Girard-Waring formulas and Theta polynomials

def psym(r: int) -> Poly:
    """Power-sum symbol p_r of a symmetric-function expression."""
    return Poly.var("p", r)


def esym(k: int) -> Poly:
    return Poly.var("e", k)


def _weighted_partitions(k: int, maxpart: int):
    """Exponent vectors (i_1..i_maxpart) with sum j*i_j = k."""
    def rec(j, remaining):
        if j > maxpart:
            if remaining == 0:
                yield ()
            return
        for i in range(remaining // j + 1):
            for rest in rec(j + 1, remaining - i * j):
                yield (i,) + rest
    yield from rec(1, k)


@lru_cache(maxsize=None)
def girard_waring_e_from_p(k: int, N: int | None = None) -> Poly:
    """e_k as a polynomial in power-sum symbols p_1..p_k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return Poly.const(1)
    out = Poly()
    for iv in _weighted_partitions(k, k):
        coef = Fraction((-1) ** (k + sum(iv)), math.prod(math.factorial(i) for i in iv))
        term = Poly.const(coef)
        for j, i in enumerate(iv, start=1):
            if i:
                term = term * (psym(j) * Fraction(1, j)) ** i
        out = out + term
    return out


@lru_cache(maxsize=None)
def girard_waring_p_from_e(k: int, N: int) -> Poly:
    """p_k of N variables as a polynomial in e_1..e_N."""
    if k < 1 or N < 1:
        raise ValueError("k and N must be positive")
    out = Poly()
    for iv in _weighted_partitions(k, min(k, N)):
        s = sum(iv)
        sign = (-1) ** sum(iv[1::2])
        coef = Fraction(sign * math.factorial(s - 1), math.prod(math.factorial(i) for i in iv))
        term = Poly.const(coef * k)
        for j, i in enumerate(iv, start=1):
            if i:
                term = term * esym(j) ** i
        out = out + term
    return out


@lru_cache(maxsize=None)
def theta_poly(k: int, N: int) -> Poly:
    """The polynomial in v_1..v_N sending (p_1..p_N) of N letters to p_k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return Poly.const(N)
    if k <= N:
        return Poly.var("v", k)
    e_in_v = {("e", j): girard_waring_e_from_p(j).subs({("p", i): Poly.var("v", i) for i in range(1, j + 1)})
              for j in range(1, N + 1)}
    return girard_waring_p_from_e(k, N).subs(e_in_v)


# ----------------------------------------------------------------------------
# plethysm

def alphabet_power(A: Poly, r: int) -> Poly:
    """p_r[A] for an alphabet A = sum of signed monomials (p_r[sum c m] = sum c m^r)."""
    acc: dict = defaultdict(int)
    for m, cf in A.terms.items():
        acc[tuple((v, e * r) for v, e in m)] += cf
    return Poly._wrap({m: cf for m, cf in acc.items() if cf})


def plethysm(f: Poly, alphabet: Poly) -> Poly:
    """Substitute p_r -> p_r[alphabet] in a power-sum expression."""
    rs = {v for v in f.variables() if v[0] == "p"}
    return f.subs({v: alphabet_power(alphabet, v[1]) for v in rs})


def plethysm_eval(f: Poly, weights: Sequence[int], shift: Poly | None = None) -> Poly:
    """f[mu_1 t_1 + ... + mu_n t_n (+ shift)]."""
    alphabet = poly_sum(Poly.const(mu) * t(i) for i, mu in enumerate(weights, start=1))
    if shift is not None:
        alphabet = alphabet + shift
    return plethysm(f, alphabet)


# ----------------------------------------------------------------------------
# univariate rational functions

def _uni_coeffs(p: Poly, var: Var) -> list[Fraction]:
    extra = p.variables() - {var}
    if extra:
        raise ValueError("expected a univariate polynomial")
    deg = p.degree(var)
    out = [Fraction(0)] * (deg + 1)
    for m, cf in p.terms.items():
        out[dict(m).get(var, 0)] = Fraction(cf)
    return out


def _uni_poly(coeffs: Sequence[Fraction], var: Var) -> Poly:
    d = {}
    for k, cf in enumerate(coeffs):
        if cf:
            d[((var, k),) if k else ONE] = cf
    return Poly._wrap(d)


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _uni_divmod(a, b):
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        f = r[-1] / b[-1]
        q[shift] = f
        for i, bc in enumerate(b):
            r[i + shift] -= f * bc
        r = _trim(r)
    return _trim(q), r


def _uni_gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _uni_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [x / lead for x in a]
    return a


class RatFun:
    """Quotient of univariate polynomials in one variable (default u), reduced."""

    __slots__ = ("num", "den", "var")

    def __init__(self, num, den=1, var: Var = ("u",)):
        self.var = var
        n = _uni_coeffs(Poly.coerce(num), var)
        d = _uni_coeffs(Poly.coerce(den), var)
        n, d = _trim(n), _trim(d)
        if not d:
            raise ZeroDivisionError("zero denominator")
        g = _uni_gcd(n, d) if n else [Fraction(1)]
        if len(g) > 1:
            n, _ = _uni_divmod(n, g)
            d, _ = _uni_divmod(d, g)
        if not n:
            d = [Fraction(1)]
        lead = d[-1]
        self.num = _uni_poly([x / lead for x in n], var)
        self.den = _uni_poly([x / lead for x in d], var)

    @classmethod
    def coerce(cls, x, var: Var = ("u",)) -> "RatFun":
        if isinstance(x, RatFun):
            return x
        return cls(x, 1, var)

    def __add__(self, o):
        o = RatFun.coerce(o, self.var)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den, self.var)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den, self.var)

    def __sub__(self, o):
        return self + (-RatFun.coerce(o, self.var))

    def __rsub__(self, o):
        return RatFun.coerce(o, self.var) - self

    def __mul__(self, o):
        o = RatFun.coerce(o, self.var)
        return RatFun(self.num * o.num, self.den * o.den, self.var)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RatFun(self.den, self.num, self.var)

    def __truediv__(self, o):
        return self * RatFun.coerce(o, self.var).inverse()

    def __eq__(self, o):
        if isinstance(o, (int, Fraction, Poly)):
            o = RatFun.coerce(o, self.var)
        if not isinstance(o, RatFun):
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"RatFun(({self.num.to_str()})/({self.den.to_str()}))"
