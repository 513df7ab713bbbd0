# -*- coding: utf-8 -*-
"""
Permutation algebra and transposition factorizations
"""

import pytest

from core.errors import ParityError, StructuralError
from permutations import (
    Permutation,
    groups_of_k,
    group_permutation,
    pair_decomposition,
    product,
    split_dependent,
)
from permutations.decompose import TranspositionPair
from tests.helpers import random_even_permutation, random_permutation


def test_compose_applies_left_factor_first():
    h1 = Permutation.from_transposition(2, 0, 1)
    h2 = Permutation.from_transposition(2, 1, 2)
    assert h1.compose(h2).apply(0) == 2
    assert h2.compose(h1).apply(0) == 1


def test_cycles_start_at_smallest_code():
    h = Permutation.from_cycles(3, [(5, 2, 7), (4, 1)])
    assert h.cycles() == [(1, 4), (2, 7, 5)]
    assert h.support_size == 5
    assert h.m_param == 3
    assert h.parity() == "odd"


def test_invalid_cycles_are_rejected():
    with pytest.raises(StructuralError):
        Permutation.from_cycles(2, [(0, 1), (1, 2)])
    with pytest.raises(StructuralError):
        Permutation.from_cycles(2, [(0, 4)])


def test_table_round_trip(rng):
    h = random_permutation(rng, 5)
    assert Permutation.from_table(5, h.table()) == h


def test_inverse_and_conjugate(rng):
    h = random_permutation(rng, 4)
    g = random_permutation(rng, 4)
    assert h.compose(h.inverse()).is_identity
    conj = h.conjugate(g)
    assert sorted(len(c) for c in conj.cycles()) == sorted(len(c) for c in h.cycles())


def test_transpositions_multiply_back(rng):
    h = random_permutation(rng, 4)
    factors = [Permutation.from_transposition(4, a, b) for a, b in h.transpositions()]
    assert product(4, factors) == h


def test_lift_is_even_and_acts_on_both_halves():
    h = Permutation.from_transposition(3, 1, 6)
    lifted = h.lift()
    assert h.parity() == "odd"
    assert lifted.is_even
    assert lifted.apply(1) == 6
    assert lifted.apply(1 | 8) == 6 | 8


def test_sparse_detection(tmp_config):
    assert Permutation.from_transposition(12, 3, 4000).is_sparse()
    assert not Permutation.from_table(2, [1, 0, 3, 2]).is_sparse()


# ============ PAIRS ============

def test_pair_decomposition_of_five_cycle():
    h = Permutation.from_cycles(3, [(0, 1, 2, 3, 4)])
    pairs = pair_decomposition(h)
    assert pairs[0] == TranspositionPair((0, 1), (2, 3))
    assert pairs[1].dependent
    assert pairs[1].dependent_form() == (0, 2, 4)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_pair_decomposition_multiplies_back(rng, n):
    for _ in range(20):
        h = random_even_permutation(rng, n)
        pairs = pair_decomposition(h)
        assert product(n, (p.as_permutation(n) for p in pairs)) == h
        # only the last pair may be dependent
        assert all(p.independent for p in pairs[:-1])


def test_odd_permutation_has_no_pair_decomposition():
    with pytest.raises(ParityError):
        pair_decomposition(Permutation.from_transposition(3, 0, 1))


def test_split_dependent_keeps_the_product():
    pair = TranspositionPair((0, 1), (0, 2))
    p1, p2 = split_dependent(pair, 3)
    assert p1.independent and p2.independent
    assert p1.as_permutation(3).compose(p2.as_permutation(3)) == pair.as_permutation(3)


# ============ K-GROUPS ============

@pytest.mark.parametrize("K", [2, 4])
def test_groups_of_k_multiply_back(rng, K):
    n = 6
    for _ in range(10):
        h = random_even_permutation(rng, n)
        decomposition = groups_of_k(h, K)
        factors = [group_permutation(n, g) for g in decomposition.groups] + [decomposition.remainder]
        assert product(n, factors) == h
        for group in decomposition.groups:
            points = [p for t in group for p in t]
            assert len(group) == K and len(set(points)) == 2 * K
        # fewer than K independent transpositions remain
        assert sum(len(c) // 2 for c in decomposition.remainder.cycles()) < K
