"""Tuples, subsets, generalized signs and small combinatorial numbers.

Indices are 1-based throughout.
"""
from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterator, Sequence

Tuple = tuple[int, ...]


def falling_factorial(m: int, k: int) -> int:
    if k < 0:
        raise ValueError("k must be non-negative")
    out = 1
    for i in range(k):
        out *= m - i
    return out


@lru_cache(maxsize=None)
def stirling2(k: int, l: int) -> int:
    """Number of partitions of a k-set into l non-empty blocks."""
    if k < 0 or l < 0:
        raise ValueError("arguments must be non-negative")
    if k == l:
        return 1
    if k == 0 or l == 0:
        return 0
    return l * stirling2(k - 1, l) + stirling2(k - 1, l - 1)


@lru_cache(maxsize=None)
def permutations_of(N: int) -> tuple[Tuple, ...]:
    """All permutations of range(N) as 0-based tuples."""
    return tuple(itertools.permutations(range(N)))


def perm_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given in one-line notation (any base)."""
    base = min(perm) if perm else 0
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j] - base
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def act(perm: Sequence[int], I: Sequence[int]) -> Tuple:
    """The action (pi I)_s = I_{pi^{-1}(s)}, perm 0-based one-line."""
    out = [0] * len(I)
    for s, target in enumerate(perm):
        out[target] = I[s]
    return tuple(out)


def subsets(m: int, k: int) -> list[Tuple]:
    """k-element subsets of [m] in lexicographic order."""
    return list(itertools.combinations(range(1, m + 1), k))


def distinct_tuples(m: int, k: int) -> list[Tuple]:
    return list(itertools.permutations(range(1, m + 1), k))


def all_tuples(m: int, k: int) -> list[Tuple]:
    return list(itertools.product(range(1, m + 1), repeat=k))


def sgn_pair(I: Sequence[int], J: Sequence[int]) -> int:
    """Sign of tau with I = tau J, or 0 if I and J differ as sets."""
    if len(I) != len(J):
        raise ValueError("tuples of different length")
    if len(set(I)) != len(I) or len(set(J)) != len(J):
        return 0
    if set(I) != set(J):
        return 0
    pos = {j: s for s, j in enumerate(J)}
    return perm_sign([pos[i] for i in I])


def sgn_block(I_blocks: Sequence[Sequence[int]], J_blocks: Sequence[Sequence[int]]) -> int:
    for blocks in (I_blocks, J_blocks):
        flat = [x for b in blocks for x in b]
        if len(set(flat)) != len(flat):
            raise ValueError("blocks overlap")
    I = tuple(x for b in I_blocks for x in b)
    J = tuple(x for b in J_blocks for x in b)
    return sgn_pair(I, J)


def epsilon(I1: Sequence[int], J1: Sequence[int], I2: Sequence[int], J2: Sequence[int]) -> int:
    """Sign comparing I1, J1 after moving I2, J2 to the front with matching tails."""
    p, q = len(I1), len(I2)
    if len(J1) != p or len(J2) != q or q > p:
        raise ValueError("size mismatch")
    for T in (I1, J1, I2, J2):
        if len(set(T)) != len(T):
            raise ValueError("tuples must have distinct entries")
    if not (set(I2) <= set(I1) and set(J2) <= set(J1)):
        return 0
    tail = set(I1) - set(I2)
    if tail != set(J1) - set(J2):
        return 0
    K = tuple(sorted(tail))
    return sgn_pair(tuple(I2) + K, I1) * sgn_pair(tuple(J2) + K, J1)


def epsilon_bruteforce(I1, J1, I2, J2) -> set[int]:
    """All values sgn(tau1 tau2) over admissible pairs; a singleton when well defined."""
    p, q = len(I1), len(I2)
    values = set()
    for t1 in itertools.permutations(range(p)):
        A = act(t1, I1)
        if A[:q] != tuple(I2):
            continue
        for t2 in itertools.permutations(range(p)):
            B = act(t2, J1)
            if B[:q] != tuple(J2) or B[q:] != A[q:]:
                continue
            values.add(perm_sign(t1) * perm_sign(t2))
    return values or {0}


def set_partitions(items: Sequence) -> Iterator[list[list]]:
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def compositions(m: int, n: int) -> list[Tuple]:
    """Length-n non-negative compositions of m, lexicographically descending."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for a in range(remaining, -1, -1):
            rec(prefix + (a,), remaining - a, slots - 1)

    if n == 0:
        return [()] if m == 0 else []
    rec((), m, n)
    return out


def binom(a: int, b: int) -> int:
    if b < 0 or a < b or a < 0:
        return 0
    return math.comb(a, b)
