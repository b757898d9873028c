import itertools

import pytest
from hypothesis import given, settings, strategies as st

from bigalg.algebra import Poly, elementary_sym, t, tvars
from bigalg.biggen import (
    F_pq, F_pq_cartan, M_pq_closed, M_pq_direct, M_pq_symdet, P_alpha, c_k, generator_indices,
    kirillov_wei, m_from_f, restrict_cartan, theta, verify_cartan_equivariance, verify_charpoly,
    verify_commutativity, verify_leibniz, verify_m_forms,
)
from bigalg.weyl import L_E, WeylOp, commutator, euler, xpoly


def y(i, j):
    return Poly.var("y", i, j)


def test_c_k_examples():
    assert c_k(3, 1) == y(1, 1) + y(2, 2) + y(3, 3)
    assert c_k(2, 2) == y(1, 1) * y(2, 2) - y(1, 2) * y(2, 1)
    assert c_k(3, 0) == Poly.const(1)
    with pytest.raises(ValueError):
        c_k(2, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_charpoly(n):
    assert verify_charpoly(n).ok


@pytest.mark.parametrize("n", [2, 3])
def test_c_k_homogeneous_and_permutation_invariant(n):
    for k in range(n + 1):
        ck = c_k(n, k)
        assert all(sum(e for _, e in mono) == k for mono in ck.terms)
        for perm in itertools.permutations(range(1, n + 1)):
            mapping = {("y", i, j): y(perm[i - 1], perm[j - 1])
                       for i in range(1, n + 1) for j in range(1, n + 1)}
            assert ck.subs(mapping) == ck


@pytest.mark.parametrize("n,r", [(2, 1), (2, 2), (3, 2)])
def test_kirillov_wei_of_trace_is_euler(n, r):
    assert kirillov_wei(WeylOp.from_poly(c_k(n, 1)), n, r) == euler(n, r)


@pytest.mark.parametrize("m", range(0, 4))
def test_kirillov_wei_of_trace_is_scalar_on_degree_m(m):
    op = kirillov_wei(WeylOp.from_poly(c_k(2, 1)), 2, 1)
    for a in range(m + 1):
        f = xpoly(1) ** a * xpoly(2) ** (m - a)
        assert op.apply(f) == f * m


@pytest.mark.parametrize("n,alpha", [(2, 1), (2, 2), (2, 3), (3, 2)])
def test_kirillov_wei_of_power_trace(n, alpha):
    lhs = kirillov_wei(WeylOp.from_poly(theta(n, alpha)), n, 1)
    assert lhs == P_alpha(n, 1, alpha - 1) * alpha


def test_M_small_cases():
    n, r = 3, 2
    for p in range(n + 1):
        assert M_pq_direct(n, r, p, 0) == WeylOp.from_poly(c_k(n, p))
        assert M_pq_closed(n, r, p, 0) == WeylOp.from_poly(c_k(n, p))
    assert M_pq_direct(n, r, 0, 1) == euler(n, r)
    assert M_pq_direct(2, 1, 1, 1) == F_pq(2, 1, 1, 1)


@pytest.mark.parametrize("n,r", [(2, 1), (2, 2), (3, 1)])
def test_M_forms_agree(n, r):
    rep = verify_m_forms(n, r)
    assert rep.ok, rep.to_text()


def test_M_symdet_matches_closed():
    assert M_pq_symdet(3, 2, 1, 2) == M_pq_closed(3, 2, 1, 2)


def test_m_from_f_single_step():
    for p in range(3):
        assert m_from_f(3, 2, p, 1) == F_pq(3, 2, p, 1)
        assert m_from_f(3, 2, p, 0) == F_pq(3, 2, p, 0)


@pytest.mark.parametrize("n,r", [(2, 1), (3, 2)])
def test_M_bidegree(n, r):
    for p, q in [(p, q) for q in range(0, 3) for p in range(0, n - q + 1)]:
        op = M_pq_closed(n, r, p, q)
        if not op:
            continue
        # Lower Stirling terms contribute bidegrees (l, l) with l < q.
        top = min(q, r)
        assert op.bidegree() <= {(l, l) for l in range(top + 1)}
        assert (top, top) in op.bidegree()
        degrees = {sum(e for _, e in key[0]) for key in op.terms}
        assert degrees == {p}


def test_F_examples():
    for p in range(4):
        assert F_pq(3, 1, p, 0) == WeylOp.from_poly(c_k(3, p))
    assert F_pq(3, 1, 1, 2) == WeylOp()
    assert F_pq(3, 1, 0, 2) == WeylOp()
    expected = WeylOp.from_poly(t(1)) * L_E(2, 2, 1) + WeylOp.from_poly(t(2)) * L_E(1, 1, 1)
    assert restrict_cartan(F_pq(2, 1, 1, 1)) == expected
    assert restrict_cartan(F_pq(2, 1, 1, 1)).to_str() == "t[1]*x[2][1]*d[2][1] + t[2]*x[1][1]*d[1][1]"


def test_restrict_cartan_examples():
    for p in range(4):
        assert restrict_cartan(F_pq(3, 2, p, 0)) == WeylOp.from_poly(elementary_sym(p, tvars(3)))
    assert restrict_cartan(c_k(3, 1)) == t(1) + t(2) + t(3)


@pytest.mark.parametrize("n,r", [(2, 1), (3, 2), (4, 1)])
def test_cartan_formula_and_equivariance(n, r):
    rep = verify_cartan_equivariance(n, r)
    assert rep.ok, rep.to_text()


@pytest.mark.parametrize("n,r,cartan", [(2, 1, False), (2, 2, False), (3, 1, False), (3, 2, True)])
def test_commutativity(n, r, cartan):
    rep = verify_commutativity(n, r, cartan)
    assert rep.ok, rep.to_text()


def test_commutativity_is_not_vacuous():
    assert commutator(F_pq(2, 1, 0, 1), L_E(1, 2, 1)) == WeylOp()
    assert commutator(F_pq(2, 1, 1, 1), L_E(1, 2, 1))


def test_generator_indices():
    assert generator_indices(2, 1) == [(0, 1), (1, 1)]
    assert (0, 2) in generator_indices(3, 2)


@pytest.mark.parametrize("n,r", [(2, 1), (2, 2)])
def test_leibniz(n, r):
    assert verify_leibniz(n, r).ok


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(1, 2), min_size=1, max_size=2), st.integers(0, 2), st.integers(-3, 3))
def test_leibniz_random(ks, alpha, scale):
    n, r = 2, 1
    A = WeylOp.scalar(scale)
    for k in ks:
        A = A * WeylOp.from_poly(c_k(n, k))
    B = P_alpha(n, r, alpha) * P_alpha(n, r, 1)
    lhs = kirillov_wei(A * B, n, r)
    assert lhs == kirillov_wei(A, n, r) * B + A * kirillov_wei(B, n, r)


def test_F_pq_cartan_matches_restriction():
    for p, q in generator_indices(3, 2):
        assert F_pq_cartan(3, 2, p, q) == restrict_cartan(F_pq(3, 2, p, q))


def test_bad_ranges_rejected():
    with pytest.raises(ValueError):
        F_pq(2, 1, 2, 1)
    with pytest.raises(ValueError):
        M_pq_closed(2, 1, -1, 1)
