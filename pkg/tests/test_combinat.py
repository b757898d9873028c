import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from bigalg.combinat import (
    act, all_tuples, binom, compositions, distinct_tuples, epsilon, epsilon_bruteforce,
    falling_factorial, perm_sign, permutations_of, set_partitions, sgn_block, sgn_pair,
    stirling2, subsets,
)


@pytest.mark.parametrize("m,k,expected", [(5, 2, 20), (7, 0, 1), (0, 0, 1), (4, 3, 24), (2, 3, 0)])
def test_falling_factorial_examples(m, k, expected):
    assert falling_factorial(m, k) == expected


@given(st.integers(0, 12), st.integers(0, 12))
def test_falling_factorial_is_k_factorial_times_binomial(m, k):
    if k <= m:
        assert falling_factorial(m, k) == math.factorial(k) * math.comb(m, k)
    else:
        assert falling_factorial(m, k) == 0


def test_falling_factorial_negative_k_rejected():
    with pytest.raises(ValueError):
        falling_factorial(3, -1)


@pytest.mark.parametrize("k,l,expected", [(4, 4, 1), (0, 0, 1), (3, 2, 3), (1, 0, 0), (5, 2, 15)])
def test_stirling2_examples(k, l, expected):
    assert stirling2(k, l) == expected


@pytest.mark.parametrize("k", range(0, 7))
def test_stirling2_counts_set_partitions(k):
    by_blocks = {}
    for part in set_partitions(list(range(k))):
        by_blocks[len(part)] = by_blocks.get(len(part), 0) + 1
    for l in range(k + 1):
        assert stirling2(k, l) == by_blocks.get(l, 0)


@given(st.integers(1, 10), st.integers(1, 10))
def test_stirling2_recurrence(k, l):
    assert stirling2(k, l) == l * stirling2(k - 1, l) + stirling2(k - 1, l - 1)


def test_sgn_pair_examples():
    assert sgn_pair((1, 2), (2, 1)) == -1
    assert sgn_pair((1, 2), (1, 3)) == 0
    for perm in permutations_of(4):
        image = tuple(p + 1 for p in perm)
        assert sgn_pair((1, 2, 3, 4), image) == perm_sign(perm)


def test_sgn_pair_length_mismatch():
    with pytest.raises(ValueError):
        sgn_pair((1, 2), (1,))


@pytest.mark.parametrize("p,m", [(p, m) for m in range(1, 6) for p in range(1, min(m, 4) + 1)])
def test_sgn_pair_skew_symmetry_exhaustive(p, m):
    perms = permutations_of(p)
    tuples = distinct_tuples(m, p)
    for I in subsets(m, p):
        for J in tuples:
            base = sgn_pair(I, J)
            for s in perms:
                for tau in perms:
                    lhs = sgn_pair(act(s, I), act(tau, J))
                    assert lhs == perm_sign(s) * perm_sign(tau) * base


def test_sgn_block_examples():
    assert sgn_block([(1,), (2,)], [(1,), (2,)]) == 1
    assert sgn_block([(1,), (2,)], [(2,), (1,)]) == -1
    assert sgn_block([(1, 3), (2,)], [(2, 3), (1,)]) == -1


def test_sgn_block_overlap_rejected():
    with pytest.raises(ValueError):
        sgn_block([(1, 2), (2,)], [(1, 2), (3,)])


def test_epsilon_examples():
    assert epsilon((1, 2), (1, 2), (1,), (1,)) == 1
    assert epsilon((1, 2), (2, 1), (1,), (1,)) == -1
    assert epsilon((1, 2), (1, 3), (1,), (1,)) == 0


def test_epsilon_size_errors():
    with pytest.raises(ValueError):
        epsilon((1,), (1,), (1, 2), (1, 2))
    with pytest.raises(ValueError):
        epsilon((1, 2), (1,), (1,), (1,))
    with pytest.raises(ValueError):
        epsilon((1, 1), (1, 2), (1,), (1,))


def _epsilon_cases(p, q, m):
    for I1 in distinct_tuples(m, p):
        for J1 in distinct_tuples(m, p):
            for I2 in distinct_tuples(m, q):
                for J2 in distinct_tuples(m, q):
                    yield I1, J1, I2, J2


@pytest.mark.parametrize("p,q,m", [(1, 0, 2), (1, 1, 2), (2, 1, 3), (2, 2, 3), (2, 1, 4)])
def test_epsilon_well_defined_and_matches_bruteforce(p, q, m):
    for case in _epsilon_cases(p, q, m):
        values = epsilon_bruteforce(*case)
        assert len(values) == 1, f"choice-dependent sign at {case}"
        assert epsilon(*case) == next(iter(values))


@pytest.mark.parametrize("p,q,m", [(2, 1, 3), (3, 1, 3), (2, 2, 3), (3, 2, 4)])
def test_epsilon_skew_symmetry(p, q, m):
    rng = random.Random(p * 100 + q * 10 + m)
    perms_p, perms_q = permutations_of(p), permutations_of(q)
    cases = list(_epsilon_cases(p, q, m))
    for I1, J1, I2, J2 in rng.sample(cases, min(len(cases), 150)):
        base = epsilon(I1, J1, I2, J2)
        for s1, t1 in itertools.product(perms_p, repeat=2):
            s2, t2 = rng.choice(perms_q), rng.choice(perms_q)
            lhs = epsilon(act(s1, I1), act(t1, J1), act(s2, I2), act(t2, J2))
            sign = perm_sign(s1) * perm_sign(t1) * perm_sign(s2) * perm_sign(t2)
            assert lhs == sign * base


def test_subsets_lexicographic_and_counted():
    assert subsets(4, 2) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert len(distinct_tuples(4, 2)) == 12
    assert len(all_tuples(3, 2)) == 9


def test_subset_sum_is_order_independent():
    items = subsets(6, 3)
    shuffled = items[:]
    random.Random(7).shuffle(shuffled)
    weight = lambda S: sgn_pair(S, tuple(sorted(S, reverse=True))) * math.prod(S)
    assert sum(map(weight, items)) == sum(map(weight, shuffled))


def test_compositions_and_binom():
    assert compositions(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(compositions(3, 3)) == binom(5, 2)
    assert binom(3, 5) == 0
