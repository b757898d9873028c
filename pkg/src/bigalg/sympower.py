"""The big algebra of the m-th symmetric power of C^n as functions on weights.

An element is a WeightFunc: a map from the weights of S^m(C^n) (length-n
compositions of m) to polynomials in t_1..t_n.  Presentations live in
polynomials over the symbols c_k and P_j (or M_k); power-sum style
expressions use ("p", r); diagonal invariants p_{a,b} use ("q", a, b).
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Sequence

import sympy

from .algebra import (
    Poly, _weighted_partitions, elementary_sym, fmt_mono, girard_waring_e_from_p,
    girard_waring_p_from_e, join_terms, poly_sum, t, theta_poly, tvars,
)
from .biggen import F_pq, P_alpha, kirillov_wei_cartan, restrict_cartan
from .combinat import binom
from .report import Report
from .weyl import WeylOp

Weight = tuple

# ----------------------------------------------------------------------------
# weight functions


def weight_diagram(n: int, m: int) -> list[Weight]:
    """All length-n compositions of m, lexicographically decreasing."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    if n == 1:
        return [(m,)]
    out = []
    for first in range(m, -1, -1):
        out.extend((first,) + rest for rest in weight_diagram(n - 1, m - first))
    return out


@dataclass
class WeightFunc:
    n: int
    m: int
    values: dict = field(default_factory=dict)

    @classmethod
    def from_fn(cls, n: int, m: int, fn: Callable[[Weight], Poly]) -> "WeightFunc":
        return cls(n, m, {mu: Poly.coerce(fn(mu)) for mu in weight_diagram(n, m)})

    @classmethod
    def constant(cls, n: int, m: int, value) -> "WeightFunc":
        v = Poly.coerce(value)
        return cls.from_fn(n, m, lambda mu: v)

    def _lift(self, other) -> "WeightFunc":
        if isinstance(other, WeightFunc):
            if (other.n, other.m) != (self.n, self.m):
                raise ValueError("weight functions on different diagrams")
            return other
        return WeightFunc.constant(self.n, self.m, other)

    def _zip(self, other, op) -> "WeightFunc":
        o = self._lift(other)
        return WeightFunc(self.n, self.m, {mu: op(v, o.values[mu]) for mu, v in self.values.items()})

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._zip(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._zip(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __pow__(self, k: int):
        return WeightFunc(self.n, self.m, {mu: v ** k for mu, v in self.values.items()})

    def __eq__(self, other):
        if not isinstance(other, (WeightFunc, Poly, int, Fraction)):
            return NotImplemented
        o = self._lift(other)
        return self.values == o.values

    def is_zero(self) -> bool:
        return all(not v for v in self.values.values())

    def map(self, fn: Callable[[Poly], Poly]) -> "WeightFunc":
        return WeightFunc(self.n, self.m, {mu: fn(v) for mu, v in self.values.items()})

    def to_str(self) -> str:
        return "; ".join(f"{mu}: {v.to_str()}" for mu, v in self.values.items())


def _e_without(p: int, n: int, j: int) -> Poly:
    return elementary_sym(p, [t(i) for i in range(1, n + 1) if i != j])


def gen_Fhat(n: int, m: int, p: int, q: int) -> WeightFunc:
    """F_{p,q} on S^m as a weight function (q in {0, 1})."""
    if not 0 <= p <= n or q not in (0, 1) or p + q > n:
        raise ValueError("need q in {0, 1} and p + q <= n")
    if q == 0:
        ep = elementary_sym(p, tvars(n))
        return WeightFunc.constant(n, m, ep)
    parts = [_e_without(p, n, j) for j in range(1, n + 1)]
    return WeightFunc.from_fn(n, m, lambda mu: poly_sum(parts[j] * mu[j] for j in range(n)))


def gen_Phat(n: int, m: int, alpha: int) -> WeightFunc:
    """mu -> sum_i mu_i t_i^alpha."""
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    return WeightFunc.from_fn(n, m, lambda mu: poly_sum(t(i + 1) ** alpha * mu[i] for i in range(n)))


def medium_transfer(k: int, P: Callable[[int], Poly], theta: Callable[[int], Poly]) -> Poly:
    """M_k as a combination of P_0..P_k with power-sum coefficients theta_l."""
    if k < 1:
        raise ValueError("k must be positive")
    out = Poly()
    for iv in _weighted_partitions(k + 1, k + 1):
        sign = (-1) ** ((k + 1) + sum(iv))
        coef = Fraction(sign, math.prod(math.factorial(i) for i in iv))
        inner = Poly()
        for j, ij in enumerate(iv, start=1):
            if not ij:
                continue
            term = P(j - 1) * ij * (theta(j) * Fraction(1, j)) ** (ij - 1)
            for l, il in enumerate(iv, start=1):
                if l != j and il:
                    term = term * (theta(l) * Fraction(1, l)) ** il
            inner = inner + term
        out = out + inner * coef
    return out


def gen_Mhat(n: int, m: int, k: int) -> WeightFunc:
    """M_k on S^m from the transfer formula with theta_l = p_l(t)."""
    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n - 1")
    Ph = {j: gen_Phat(n, m, j) for j in range(k + 1)}
    powers = {l: poly_sum(x ** l for x in tvars(n)) for l in range(1, k + 2)}

    def at(mu):
        return medium_transfer(k, lambda j: Ph[j].values[mu], lambda l: powers[l])
    return WeightFunc.from_fn(n, m, at)


def _x_monomial(mu: Weight) -> Poly:
    out = Poly.const(1)
    for i, e in enumerate(mu, start=1):
        out = out * Poly.var("x", i, 1) ** e
    return out


def eigenvalues(op: WeylOp, n: int, m: int) -> tuple[WeightFunc, list[Weight]]:
    """Apply op to each x^mu; return eigenvalues and the weights where op is not diagonal."""
    vals, bad = {}, []
    for mu in weight_diagram(n, m):
        mono = _x_monomial(mu)
        img = op.apply(mono)
        lam = Poly()
        for mon, cf in img.terms.items():
            d = dict(mon)
            if all(d.get(("x", i, 1), 0) == mu[i - 1] for i in range(1, n + 1)):
                lam = lam + Poly._wrap({tuple((v, e) for v, e in mon if v[0] != "x"): cf})
        if lam * mono != img:
            bad.append(mu)
        vals[mu] = lam
    return WeightFunc(n, m, vals), bad


def consistency_bigelem_vs_weightfunc(n: int, p: int, q: int, m: int) -> Report:
    """restrict_cartan(F_{p,q}) acts on x^mu by the scalar gen_Fhat(p, q)(mu)."""
    rep = Report(f"bigelem-vs-weightfunc n={n} p={p} q={q} m={m}")
    op = restrict_cartan(F_pq(n, 1, p, q))
    lam, bad = eigenvalues(op, n, m)
    rep.require("diagonal on monomials", not bad, f"not diagonal at {bad}")
    expected = gen_Fhat(n, m, p, q)
    for mu in weight_diagram(n, m):
        rep.compare(f"mu={mu}", lam.values[mu], expected.values[mu])
    return rep


# ----------------------------------------------------------------------------
# presentations


def P_sym(j: int) -> Poly:
    return Poly.var("P", j)


def M_sym(k: int) -> Poly:
    return Poly.var("M", k)


def c_sym(k: int) -> Poly:
    return Poly.var("c", k)


def power_sum_in_P(k: int, m: int) -> Poly:
    """P_k as a polynomial in P_1..P_m (P_0 = m)."""
    return theta_poly(k, m).subs({("v", j): P_sym(j) for j in range(1, m + 1)})


def capelli_relations(n: int, m: int) -> list[Poly]:
    """sum_k (-1)^k c_k P_{i+n-k} for i = 0..m-1 in c_1..c_n, P_1..P_m."""
    out = []
    for i in range(m):
        rel = Poly()
        for k in range(n + 1):
            ck = Poly.const(1) if k == 0 else c_sym(k)
            rel = rel + ck * power_sum_in_P(i + n - k, m) * (-1) ** k
        out.append(rel)
    return out


def evaluate_symbols(expr: Poly, n: int, m: int, algebra: str = "gl") -> WeightFunc:
    """Send c_k -> e_k(t), P_j -> P_j-hat, M_k -> M_k-hat (shifted for sl)."""
    ts = tvars(n)
    cvals = {("c", k): elementary_sym(k, ts) for k in range(1, n + 1)}
    Pidx = sorted(v[1] for v in expr.variables() if v[0] == "P")
    Midx = sorted(v[1] for v in expr.variables() if v[0] == "M")
    Ph = {j: gen_Phat(n, m, j) for j in Pidx}
    Mh = {}
    for k in Midx:
        Mh[k] = gen_Mhat(n, m, k)
        if algebra == "sl":
            Mh[k] = Mh[k] - elementary_sym(k, ts) * Fraction(m * (n - k), n)
    trace_free = {("t", n): -poly_sum(ts[:-1])} if algebra == "sl" else {}

    def at(mu):
        mapping = dict(cvals)
        mapping.update({("P", j): Ph[j].values[mu] for j in Pidx})
        mapping.update({("M", k): Mh[k].values[mu] for k in Midx})
        val = expr.subs(mapping)
        return val.subs(trace_free) if trace_free else val
    return WeightFunc.from_fn(n, m, at)


def relation_check_capelli_style(n: int, m: int) -> Report:
    rep = Report(f"capelli-style relations n={n} m={m}")
    for i, rel in enumerate(capelli_relations(n, m)):
        val = evaluate_symbols(rel, n, m)
        for mu, v in val.values.items():
            rep.compare(f"i={i} mu={mu}", v, Poly())
    return rep


def _gen_key(gens: Sequence[tuple], n: int) -> Callable:
    """Lex on generator exponents, then lex on c exponents; largest first."""
    cs = [("c", k) for k in range(1, n + 1)]

    def key(mono):
        d = dict(mono)
        return (tuple(-d.get(g, 0) for g in gens), tuple(-d.get(c, 0) for c in cs))
    return key


def _sym_name(v) -> str:
    return "".join(str(part) for part in v)


def format_relation(rel: Poly, key: Callable) -> str:
    pieces = [(cf, fmt_mono(mono, _sym_name)) for mono, cf in rel.sorted_terms(key)]
    return join_terms(pieces, sep_spaces=False)


def _reduce_by(f: Poly, lead_poly: Poly, key: Callable) -> Poly:
    """Remainder of f on division by lead_poly in the given monomial order."""
    lm = min(lead_poly.terms, key=key)
    lc = Fraction(lead_poly.terms[lm])
    ld = dict(lm)
    r = f
    while True:
        hits = [mono for mono in r.terms
                if all(dict(mono).get(v, 0) >= e for v, e in ld.items())]
        if not hits:
            return r
        mono = min(hits, key=key)
        d = dict(mono)
        for v, e in ld.items():
            d[v] -= e
        q = Poly._wrap({tuple(sorted((v, e) for v, e in d.items() if e)): Fraction(r.terms[mono]) / lc})
        r = r - q * lead_poly


@dataclass
class PresentationRing:
    n: int
    m: int
    basis: str
    algebra: str
    generators: list[str]
    relations: list[Poly]
    order_key: Callable = field(repr=False, compare=False, default=None)

    def relation_strings(self) -> list[str]:
        return [format_relation(r, self.order_key) for r in self.relations]

    def to_text(self) -> str:
        lines = [f"generators: {' '.join(self.generators)}", "relations:"]
        lines += self.relation_strings()
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({"generators": self.generators, "relations": self.relation_strings()},
                          indent=2)


def _theta_in_c(l: int, n: int, algebra: str) -> Poly:
    th = girard_waring_p_from_e(l, n).subs({("e", j): c_sym(j) for j in range(1, n + 1)})
    return th.subs({("c", 1): 0}) if algebra == "sl" else th


def medium_in_P(n: int, m: int, k: int, algebra: str = "gl") -> Poly:
    """M_k (or the shifted sl version) in c and P_1..P_k."""
    Mk = medium_transfer(k, lambda j: Poly.const(m) if j == 0 else P_sym(j),
                         lambda l: _theta_in_c(l, n, algebra))
    if algebra == "sl":
        Mk = Mk.subs({("c", 1): 0}) - c_sym(k) * Fraction(m * (n - k), n)
        Mk = Mk.subs({("c", 1): 0})
    return Mk


def P_in_medium(n: int, m: int, g: int, algebra: str = "gl") -> dict:
    """Invert the triangular transfer: P_k in terms of c and M_1..M_k."""
    out = {}
    for k in range(1, g + 1):
        Mk = medium_in_P(n, m, k, algebra)
        lead = Mk.coeff_of(("P", k), 1)
        rest = Mk - lead * P_sym(k)
        if not lead.is_constant() or rest.degree(("P", k)) > 0:
            raise ArithmeticError("transfer formula is not triangular")
        expr = (M_sym(k) - rest.subs(out)) * (1 / lead.constant_value())
        out[("P", k)] = expr
    return out


def _check_present_size(n: int, m: int, algebra: str) -> None:
    if algebra not in ("gl", "sl"):
        raise ValueError("algebra must be gl or sl")
    if algebra == "sl" and n < 2:
        raise ValueError("sl needs n >= 2")
    ok = (1 <= n <= 3 and 1 <= m <= 3) or (n == 2 and 1 <= m <= 8)
    if not ok:
        raise ValueError("supported sizes: n <= 3, m <= 3, or n = 2, m <= 8")


def present(n: int, m: int, basis: str = "P", algebra: str = "gl",
            eliminate: bool = True, reduce: bool = False) -> PresentationRing:
    """Relations for the big algebra of S^m(C^n) in canonical integer form.

    ``eliminate`` solves the relations for P_n..P_m; the M basis always does.
    ``reduce`` replaces later relations by their remainder modulo the leading
    term of the first one.
    """
    _check_present_size(n, m, algebra)
    if basis not in ("P", "M"):
        raise ValueError("basis must be P or M")
    rels = capelli_relations(n, m)
    if algebra == "sl":
        rels = [r.subs({("c", 1): 0}) for r in rels]
    ngen = m
    if eliminate or basis == "M":
        for j in range(n, m + 1):
            expr = P_sym(j) - rels[j - n]
            rels = [r.subs({("P", j): expr}) for r in rels]
        rels = rels[max(0, m - n + 1):]
        ngen = min(m, n - 1)
    if basis == "M":
        rels = [r.subs(P_in_medium(n, m, ngen, algebra)) for r in rels]
    gvars = [(basis, j) for j in range(1, ngen + 1)]
    key = _gen_key(gvars, n)
    rels = [r.content_normalized(key) for r in rels if r]
    if reduce and len(rels) > 1:
        first = rels[0]
        rels = [first] + [_reduce_by(r, first, key).content_normalized(key) for r in rels[1:]]
    first_c = 2 if algebra == "sl" else 1
    gens = [f"c{k}" for k in range(first_c, n + 1)] + [f"{basis}{j}" for j in range(1, ngen + 1)]
    return PresentationRing(n, m, basis, algebra, gens, rels, key)


def parse_relation(text: str, names: Sequence[str] = ()) -> Poly:
    """Parse a compact relation such as ``P1^3-3*P1*P2+4*c3`` into a Poly."""
    symbols = set(names)
    for tok in _tokens(text):
        if tok[0].isalpha():
            symbols.add(tok)
    loc = {s: sympy.Symbol(s) for s in symbols}
    expr = sympy.expand(sympy.sympify(text.replace("^", "**"), locals=loc))
    out = Poly()
    for mono, cf in sympy.Poly(expr, *[loc[s] for s in sorted(symbols)]).terms():
        term = Poly.const(Fraction(int(cf.p), int(cf.q)))
        for s, e in zip(sorted(symbols), mono):
            if e:
                term = term * symbol_var(s) ** e
        out = out + term
    return out


def symbol_var(name: str) -> Poly:
    """``P12`` -> P_12 as the variable ("P", 12); names without digits stay bare."""
    head = name.rstrip("0123456789")
    digits = name[len(head):]
    return Poly.var(head, int(digits)) if digits else Poly.var(name)


def _tokens(text: str) -> list[str]:
    out, cur = [], ""
    for ch in text:
        if ch.isalnum():
            cur += ch
        else:
            if cur:
                out.append(cur)
            cur = ""
    if cur:
        out.append(cur)
    return out


def presentation_soundness(pres: PresentationRing) -> Report:
    """Every relation evaluates to the zero weight function."""
    rep = Report(f"soundness n={pres.n} m={pres.m} basis={pres.basis} algebra={pres.algebra}")
    for i, rel in enumerate(pres.relations):
        val = evaluate_symbols(rel, pres.n, pres.m, pres.algebra)
        for mu, v in val.values.items():
            rep.compare(f"relation {i} mu={mu}", v, Poly())
    return rep


# ----------------------------------------------------------------------------
# closed product formulas for n = 2


def sl2_product_relation(m: int, basis: str = "M") -> Poly:
    """prod_j (P_1 + (m - 2j) i sqrt(c_2)) with conjugate factors paired.

    Factors j and m - j combine to P_1^2 + (m - 2j)^2 c_2; for even m the
    middle factor is P_1.  In the M basis P_1 = -M_1.
    """
    if m < 1:
        raise ValueError("m must be positive")
    X = M_sym(1) * -1 if basis == "M" else P_sym(1)
    out = Poly.const(1)
    for j in range(0, (m + 1) // 2):
        out = out * (X ** 2 + c_sym(2) * (m - 2 * j) ** 2)
    if m % 2 == 0:
        out = out * X
    return out


def gl2_product_relation(m: int) -> Poly:
    """(M_1 - m c_1 / 2)^[m even] prod_j (M_1^2 - m c_1 M_1 + j(m-j) c_1^2 + (m-2j)^2 c_2)."""
    if m < 1:
        raise ValueError("m must be positive")
    M1, c1, c2 = M_sym(1), c_sym(1), c_sym(2)
    out = Poly.const(1)
    for j in range(0, (m + 1) // 2):
        out = out * (M1 ** 2 - c1 * M1 * m + c1 ** 2 * (j * (m - j)) + c2 * (m - 2 * j) ** 2)
    if m % 2 == 0:
        out = out * (M1 - c1 * Fraction(m, 2))
    return out


# ----------------------------------------------------------------------------
# the S^m map


def letter(a: int) -> Poly:
    return Poly.var("X", a)


def X_power_sum(k: int, m: int) -> Poly:
    return poly_sum(letter(a) ** k for a in range(1, m + 1))


def X_elementary(k: int, m: int) -> Poly:
    return elementary_sym(k, [letter(a) for a in range(1, m + 1)])


def is_symmetric_in_letters(f: Poly, m: int) -> bool:
    for a in range(1, m):
        swap = {("X", a): letter(a + 1), ("X", a + 1): letter(a)}
        if f.subs(swap) != f:
            return False
    return True


def upsilon(f: Poly, n: int, m: int) -> WeightFunc:
    """mu -> f(t_1 repeated mu_1 times, ..., t_n repeated mu_n times), c_k -> e_k(t)."""
    extra = {v for v in f.variables() if v[0] == "X" and not 1 <= v[1] <= m}
    if extra:
        raise ValueError(f"letters out of range: {sorted(extra)}")
    if not is_symmetric_in_letters(f, m):
        raise ValueError("f is not symmetric in X_1..X_m")
    ts = tvars(n)
    cvals = {("c", k): elementary_sym(k, ts) for k in range(1, n + 1)}

    def at(mu):
        letters = [ts[i] for i in range(n) for _ in range(mu[i])]
        mapping = dict(cvals)
        mapping.update({("X", a): letters[a - 1] for a in range(1, m + 1)})
        return f.subs(mapping)
    return WeightFunc.from_fn(n, m, at)


def monomial_symmetric(exps: Sequence[int]) -> Poly:
    """Sum of X^{i_sigma} over the distinct rearrangements of exps."""
    out = Poly()
    for arr in sorted(set(itertools.permutations(exps))):
        term = Poly.const(1)
        for a, e in enumerate(arr, start=1):
            term = term * letter(a) ** e
        out = out + term
    return out


def exact_rank(rows: Sequence[Sequence]) -> int:
    return sympy.Matrix([[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator)
                          for x in row] for row in rows]).rank()


def upsilon_injectivity_check(n: int, m: int, points: Sequence[int] | None = None) -> Report:
    """The C(n+m-1, m) monomial symmetric generators have independent images."""
    if n > 3 or m > 3:
        raise ValueError("supported sizes: n, m <= 3")
    pts = list(points) if points is not None else [2 * i + 1 for i in range(n)]
    if len(set(pts)) != n:
        raise ValueError("need n distinct specialization points")
    point_values = {("t", i + 1): pts[i] for i in range(n)}
    wts = weight_diagram(n, m)
    rows = []
    for exps in itertools.combinations_with_replacement(range(n), m):
        val = upsilon(monomial_symmetric(exps), n, m)
        rows.append([val.values[mu].subs(point_values).constant_value() for mu in wts])
    rep = Report(f"upsilon-rank n={n} m={m}")
    expected = binom(n + m - 1, m)
    rank = exact_rank(rows)
    rep.require("rank", rank == expected, f"rank {rank} != {expected}")
    rep.rank = rank
    return rep


# ----------------------------------------------------------------------------
# Kirillov-Wei operator on weight functions


def _pleth(f: Poly, pairs: Sequence[tuple]) -> Poly:
    """Substitute p_r -> sum coef * base^r for pairs (coef, base)."""
    rs = {v[1] for v in f.variables() if v[0] == "p"}
    if any(v[0] != "p" for v in f.variables()):
        raise ValueError("expected an expression in power sums p_r")
    return f.subs({("p", r): poly_sum(cf * b ** r for cf, b in pairs) for r in rs})


def _dhat_formula(f: Poly, g: Poly, xs: Sequence[Poly], ys: Sequence[Poly]) -> Poly:
    """The directional-derivative term plus the difference-quotient sum."""
    n = len(xs)
    f_val = _pleth(f, [(Poly.const(1), x) for x in xs])
    base = [(ys[i], xs[i]) for i in range(n)]
    g_val = _pleth(g, base)
    whole = f_val * g_val
    out = poly_sum(whole.diff(next(iter(xs[i].variables()))) * ys[i] for i in range(n))
    total = Poly()
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            shifted = _pleth(g, base + [(Poly.const(1), xs[i]), (Poly.const(-1), xs[j])])
            xi = next(iter(xs[i].variables()))
            quotient = (shifted - g_val).div_linear(xi, xs[j])
            total = total + quotient * ys[j] * (ys[i] + 1)
    return out + f_val * total


def dhat_plethystic(f: Poly, g: Poly, n: int, m: int) -> WeightFunc:
    """Image of mu -> f[t_1 + ... + t_n] g[mu_1 t_1 + ... + mu_n t_n]."""
    ts = tvars(n)
    return WeightFunc.from_fn(
        n, m, lambda mu: _dhat_formula(f, g, ts, [Poly.const(x) for x in mu]))


def pleth_weightfunc(f: Poly, g: Poly, n: int, m: int) -> WeightFunc:
    ts = tvars(n)
    fv = _pleth(f, [(Poly.const(1), x) for x in ts])
    return WeightFunc.from_fn(n, m, lambda mu: fv * _pleth(g, [(Poly.const(mu[i]), ts[i])
                                                                 for i in range(n)]))


def dhat_consistency(alphas: Sequence[int], n: int, m: int) -> Report:
    """Kirillov-Wei on prod P_alpha, diagonalized on x^mu, against dhat_plethystic."""
    if len(alphas) > 2 or n > 3 or m > 3:
        raise ValueError("supported sizes: at most two alphas, n, m <= 3")
    rep = Report(f"dhat alphas={list(alphas)} n={n} m={m}")
    op = WeylOp.scalar(1)
    g = Poly.const(1)
    for a in alphas:
        op = op * P_alpha(n, 1, a)
        g = g * Poly.var("p", a)
    image = kirillov_wei_cartan(op, n, 1)
    lam, bad = eigenvalues(image, n, m)
    rep.require("diagonal on monomials", not bad, f"not diagonal at {bad}")
    expected = dhat_plethystic(Poly.const(1), g, n, m)
    for mu in weight_diagram(n, m):
        rep.compare(f"mu={mu}", lam.values[mu], expected.values[mu])
    return rep


# ----------------------------------------------------------------------------
# diagonal invariants generated by p_{a,0} and p_{a,1}


def pq(a: int, b: int) -> Poly:
    return Poly.var("q", a, b)


def diag_generators(n: int) -> list[Poly]:
    return [pq(a, 0) for a in range(1, n + 1)] + [pq(a, 1) for a in range(0, n)]


@lru_cache(maxsize=None)
def _e_in_p0(k: int, n: int) -> Poly:
    return girard_waring_e_from_p(k).subs({("p", i): _p0(i, n) for i in range(1, k + 1)})


def _p0(a: int, n: int) -> Poly:
    if a == 0:
        return Poly.const(n)
    if a <= n:
        return pq(a, 0)
    return theta_poly(a, n).subs({("v", j): pq(j, 0) for j in range(1, n + 1)})


@lru_cache(maxsize=None)
def _p1(a: int, n: int) -> Poly:
    if a < n:
        return pq(a, 1)
    return poly_sum(_e_in_p0(k, n) * _p1(a - k, n) * (-1) ** (k + 1) for k in range(1, n + 1))


def to_free_generators(e: Poly, n: int) -> Poly:
    """Rewrite p_{a,0} (a = 0 or a > n) and p_{a,1} (a >= n) in the free generators."""
    mapping = {}
    for v in e.variables():
        if v[0] != "q":
            raise ValueError("expected an expression in p_{a,b}")
        a, b = v[1], v[2]
        if b == 0 and not 1 <= a <= n:
            mapping[v] = _p0(a, n)
        elif b == 1 and a >= n:
            mapping[v] = _p1(a, n)
        elif b not in (0, 1):
            raise ValueError("only p_{a,0} and p_{a,1} are supported")
    return e.subs(mapping) if mapping else e


def _split(mono) -> tuple[list[int], list[int]]:
    f_alphas, g_alphas = [], []
    for v, e in mono:
        (f_alphas if v[2] == 0 else g_alphas).extend([v[1]] * e)
    return f_alphas, g_alphas


def _prod_q(alphas, b) -> Poly:
    out = Poly.const(1)
    for a in alphas:
        out = out * pq(a, b)
    return out


def _Q_coeffs(alphas: Sequence[int]) -> Poly:
    """prod (u^a - v^a) / (u - v) in variables ("u",), ("v",)."""
    u, v = Poly.var("u"), Poly.var("v")
    num = Poly.const(1)
    for a in alphas:
        num = num * (u ** a - v ** a)
    return num.div_linear(("u",), v)


def _dhat_g(g_alphas: Sequence[int]) -> Poly:
    l = len(g_alphas)
    out = Poly()
    for k in range(l):
        a = g_alphas[k]
        if a:
            rest = _prod_q([g_alphas[s] for s in range(l) if s != k], 1)
            out = out - pq(a - 1, 1) * rest * a
    for size in range(1, l + 1):
        for I in itertools.combinations(range(l), size):
            Q = _Q_coeffs([g_alphas[s] for s in I])
            if not Q:
                continue
            rest = _prod_q([g_alphas[s] for s in range(l) if s not in I], 1)
            for mono, cf in Q.terms.items():
                d = dict(mono)
                a, b = d.get(("u",), 0), d.get(("v",), 0)
                out = out + (pq(a, 0) + pq(a, 1)) * pq(b, 1) * rest * cf
    return out


def _dhat_f(f_alphas: Sequence[int]) -> Poly:
    l = len(f_alphas)
    out = Poly()
    for k in range(l):
        rest = _prod_q([f_alphas[s] for s in range(l) if s != k], 0)
        out = out + pq(f_alphas[k] - 1, 1) * rest * f_alphas[k]
    return out


def dhat_xy(e: Poly, n: int) -> Poly:
    """The lifted Kirillov-Wei operator on diagonal invariants, in free generators."""
    e = to_free_generators(e, n)
    out = Poly()
    for mono, cf in e.terms.items():
        fa, ga = _split(mono)
        fv, gv = _prod_q(fa, 0), _prod_q(ga, 1)
        out = out + (_dhat_f(fa) * gv + fv * _dhat_g(ga)) * cf
    return to_free_generators(out, n)


def eval_diag(e: Poly, xs: Sequence[Poly], ys: Sequence[Poly]) -> Poly:
    """p_{a,b} -> sum_i y_i^b x_i^a."""
    mapping = {v: poly_sum(ys[i] ** v[2] * xs[i] ** v[1] for i in range(len(xs)))
               for v in e.variables()}
    return e.subs(mapping)


def _diag_to_fg(mono) -> tuple[Poly, Poly]:
    fa, ga = _split(mono)
    f = Poly.const(1)
    for a in fa:
        f = f * Poly.var("p", a)
    g = Poly.const(1)
    for a in ga:
        g = g * Poly.var("p", a)
    return f, g


def dhat_xy_check(n: int, max_degree: int = 3, m: int | None = None) -> Report:
    """dhat_xy on generator monomials against the direct x, y formula and dhat_plethystic."""
    rep = Report(f"dhat-xy n={n} degree<={max_degree}")
    xs = [Poly.var("x", i) for i in range(1, n + 1)]
    ys = [Poly.var("y", i) for i in range(1, n + 1)]
    gens = diag_generators(n)
    seen = set()
    for deg in range(0, max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(len(gens)), deg):
            e = Poly.const(1)
            for idx in combo:
                e = e * gens[idx]
            mono = next(iter(e.terms))
            if mono in seen:
                continue
            seen.add(mono)
            f, g = _diag_to_fg(mono)
            lifted = dhat_xy(e, n)
            direct = _dhat_formula(f, g, xs, ys)
            rep.compare(f"x,y e={e.to_str()}", eval_diag(lifted, xs, ys), direct)
            if m is not None:
                lhs = WeightFunc.from_fn(n, m, lambda mu: eval_diag(
                    lifted, tvars(n), [Poly.const(x) for x in mu]))
                rep.compare(f"weights e={e.to_str()}", lhs, dhat_plethystic(f, g, n, m))
    return rep


# ----------------------------------------------------------------------------
# B(varpi_1)


def bvarpi1_check(n: int) -> Report:
    """At m = 1, P_k is eps_i -> t_i^k and T = P_1 satisfies its characteristic polynomial."""
    rep = Report(f"fundamental n={n}")
    ts = tvars(n)
    for k in range(0, n + 2):
        Pk = gen_Phat(n, 1, k)
        for i, mu in enumerate(weight_diagram(n, 1)):
            rep.compare(f"P_{k} at {mu}", Pk.values[mu], ts[i] ** k)
    T = gen_Phat(n, 1, 1)
    acc = WeightFunc.constant(n, 1, 0)
    for k in range(n + 1):
        acc = acc + (T ** (n - k)) * (elementary_sym(k, ts) * (-1) ** k)
    rep.require("characteristic polynomial", acc.is_zero(), acc.to_str())
    return rep
