# -*- coding: utf-8 -*-
"""
Transposition, pair, K-group and multi-control synthesis
"""

import numpy as np
import pytest

from core import BooleanMapping, Circuit, Gate, circuit_permutation, realizes
from core.errors import BasisError, CapacityError, ParameterError, ParityError
from core.gates import mask_of
from permutations import Permutation, pair_decomposition
from permutations.decompose import TranspositionPair
from synthesis import (
    SynthesisOptions,
    decompose_mct,
    embed_mapping,
    synth_dependent_pair,
    synth_k_group,
    synth_mapping,
    synth_pair,
    synth_permutation,
    synth_transposition,
)
from tests.helpers import random_even_permutation, random_permutation, random_sparse_permutation


def _max_controls(circuit: Circuit) -> int:
    return max((g.controls for g in circuit.gates), default=0)


# ============ SINGLE TRANSPOSITIONS ============

def test_worked_transposition_example():
    # (<0,0,0>, <1,1,0>) with line 0 as the first coordinate
    c = synth_transposition((0, 3), 3)
    assert circuit_permutation(c) == Permutation.from_cycles(3, [(0, 3)])
    assert c.is_palindromic(1)
    assert c.L <= 2 * (3 + 1) + 1


@pytest.mark.parametrize("n", [6, 8, 10])
def test_transposition_gate_bound(rng, n):
    for _ in range(10):
        x, y = rng.sample(range(1 << n), 2)
        c = synth_transposition((x, y), n)
        assert c.L <= 2 * (n + 1) + 1
        assert c.is_palindromic(1)
        assert circuit_permutation(c) == Permutation.from_transposition(n, x, y)


def test_palindrome_check():
    a, b, core = Gate.not_(0), Gate.cnot(0, 1), Gate.toffoli(0, 1, 2)
    assert Circuit(3, (a, b, core, b, a)).is_palindromic(1)
    assert not Circuit(3, (a, b, core, a, b)).is_palindromic(1)
    assert not Circuit(3, (a, core, a)).is_palindromic(2)
    assert Circuit(3, (core,)).is_palindromic(1)
    assert not Circuit(3, (core,)).is_palindromic(4)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_random_transpositions(rng, n):
    for _ in range(15):
        x, y = rng.sample(range(1 << n), 2)
        c = synth_transposition((x, y), n)
        assert circuit_permutation(c) == Permutation.from_transposition(n, x, y)
        # conjugators, one core gate, conjugators mirrored
        assert c.is_palindromic(1)
        assert c.gates[c.L // 2].controls == n - 1


# ============ PAIRS ============

def test_independent_pair_example():
    pair = TranspositionPair((9, 0), (15, 6))
    c = synth_pair(pair, 4)
    assert circuit_permutation(c) == pair.as_permutation(4)
    assert _max_controls(c) <= 2


@pytest.mark.parametrize("n", [4, 5, 6])
def test_random_independent_pairs(rng, n):
    for _ in range(15):
        x, y, z, w = rng.sample(range(1 << n), 4)
        pair = TranspositionPair((x, y), (z, w))
        c = synth_pair(pair, n)
        assert circuit_permutation(c) == pair.as_permutation(n)
        assert _max_controls(c) <= 2


@pytest.mark.parametrize("split", [False, True])
def test_random_dependent_pairs(rng, split):
    n = 5
    for _ in range(15):
        x, y, z = rng.sample(range(1 << n), 3)
        pair = TranspositionPair((x, y), (x, z))
        c = synth_dependent_pair(pair, n, split=split)
        assert circuit_permutation(c) == pair.as_permutation(n)
        assert _max_controls(c) <= 2


def test_pairs_need_room():
    pair = TranspositionPair((0, 1), (2, 3))
    with pytest.raises(BasisError):
        synth_pair(pair, 3, basis="omega2")
    # omega allows three lines
    c = synth_pair(pair, 3, basis="omega")
    assert circuit_permutation(c) == pair.as_permutation(3)


# ============ K-GROUPS ============

@pytest.mark.parametrize("K,n", [(2, 4), (2, 6), (4, 5), (4, 6)])
def test_k_group_realizes_the_product(rng, K, n):
    for _ in range(10):
        points = rng.sample(range(1 << n), 2 * K)
        group = [(points[2 * i], points[2 * i + 1]) for i in range(K)]
        c = synth_k_group(group, n)
        expected = Permutation.from_cycles(n, group)
        assert circuit_permutation(c) == expected
        assert _max_controls(c) <= 2


@pytest.mark.parametrize("K,n", [(2, 4), (2, 6), (2, 8), (4, 5), (4, 8)])
def test_k_group_gate_count_bound(rng, K, n):
    k = 2 * K
    log_k = k.bit_length() - 1
    bound = 12 * n + k * 2 ** (k + 1) + 32 * k * log_k - 10 * log_k
    for _ in range(10):
        points = rng.sample(range(1 << n), k)
        group = [(points[2 * i], points[2 * i + 1]) for i in range(K)]
        assert synth_k_group(group, n).L <= bound
    if K == 2:
        assert bound == 12 * n + 364


def test_k_group_on_tightest_width_over_omega(rng):
    # log2(2K) = n - 1 leaves no line to borrow, so only omega applies
    points = rng.sample(range(16), 8)
    group = [(points[2 * i], points[2 * i + 1]) for i in range(4)]
    c = synth_k_group(group, 4, basis="omega")
    assert circuit_permutation(c) == Permutation.from_cycles(4, group)


@pytest.mark.parametrize("K,n", [(3, 5), (1, 5), (4, 3)])
def test_bad_group_sizes(K, n):
    group = [(2 * i, 2 * i + 1) for i in range(K)]
    with pytest.raises(ParameterError):
        synth_k_group(group, n)


# ============ WHOLE PERMUTATIONS ============

@pytest.mark.parametrize("method", ["B", "K", "face"])
@pytest.mark.parametrize("n", [4, 5])
def test_methods_realize_even_permutations(rng, method, n):
    opts = SynthesisOptions(method=method, K=2)
    for _ in range(5):
        h = random_even_permutation(rng, n)
        c = synth_permutation(h, opts)
        assert c.width == n
        assert circuit_permutation(c) == h
        assert _max_controls(c) <= 2


def test_method_b_gate_count_bound(rng):
    n = 5
    for _ in range(5):
        h = random_even_permutation(rng, n)
        c = synth_permutation(h, SynthesisOptions(method="B"))
        # L <= 7 n 2^m, with slack at this width
        assert c.L <= 1.5 * 7 * n * 2 ** h.m_param


@pytest.mark.parametrize("n", [8, 10, 12])
def test_sparse_permutations_on_wide_registers(rng, n):
    for method, basis in (("A", "omega"), ("B", "omega2"), ("K", "omega2"), ("face", "omega2")):
        h = random_sparse_permutation(rng, n, 12)
        c = synth_permutation(h, SynthesisOptions(method=method, basis=basis, K=2))
        assert c.width == n
        assert circuit_permutation(c) == h


def test_pair_count_bound(rng):
    for _ in range(10):
        h = random_even_permutation(rng, 5)
        assert len(pair_decomposition(h)) <= 2 ** (h.m_param - 1)


def test_small_widths_use_single_transpositions(rng):
    for _ in range(10):
        h = random_permutation(rng, 3)
        c = synth_permutation(h, SynthesisOptions(method="B"))
        assert circuit_permutation(c) == h
        assert _max_controls(c) <= 2


def test_odd_permutation_is_lifted(rng):
    h = Permutation.from_transposition(4, 3, 12)
    c = synth_permutation(h, SynthesisOptions(method="B"))
    assert c.width == 5
    assert c.significant_inputs == 4
    assert realizes(c, BooleanMapping.from_permutation(h))


def test_odd_permutation_without_lift():
    h = Permutation.from_transposition(4, 3, 12)
    with pytest.raises(ParityError):
        synth_permutation(h, SynthesisOptions(method="B", allow_ancilla_lift=False))


def test_method_a_over_omega2_is_refused():
    h = Permutation.from_cycles(4, [(0, 1, 2)])
    with pytest.raises(BasisError):
        synth_permutation(h, SynthesisOptions(method="A", basis="omega2"))
    c = synth_permutation(h, SynthesisOptions(method="A", basis="omega"))
    assert circuit_permutation(c) == h


def test_lupanov_is_for_mappings_only():
    with pytest.raises(ParameterError):
        synth_permutation(Permutation.from_cycles(4, [(0, 1, 2)]), SynthesisOptions(method="lupanov"))


def test_identity_gives_empty_circuit():
    assert synth_permutation(Permutation.identity(5), SynthesisOptions()).L == 0


def test_options_reject_unknown_values():
    with pytest.raises(ParameterError):
        SynthesisOptions(method="Z")
    with pytest.raises(ParameterError):
        SynthesisOptions(basis="nand")


def test_options_from_config_ignore_missing_overrides(tmp_config):
    opts = SynthesisOptions.from_config(method="K", K=None)
    assert opts.method == "K"
    assert opts.K == tmp_config.synthesis.group_size


# ============ MULTI-CONTROL LOWERING ============

def _same_function(big: Gate, lowered: Circuit) -> bool:
    return circuit_permutation(Circuit(lowered.width, (big,))) == circuit_permutation(lowered)


@pytest.mark.parametrize("k", [3, 4, 5, 6, 7, 8])
def test_recursive4_gate_count(k):
    gate = Gate(k, mask_of(range(k)))
    c = decompose_mct(gate, "recursive4", width=k + 2)
    assert c.L == 3 * 2 ** (k - 2) - 2
    assert _max_controls(c) <= 2
    assert _same_function(gate, c)


@pytest.mark.parametrize("k,expected", [(3, 4), (4, 10), (5, 16), (6, 24), (7, 32), (8, 40)])
def test_barenco8_gate_count(k, expected):
    gate = Gate(k, mask_of(range(k)))
    c = decompose_mct(gate, "barenco8", width=k + 2)
    assert c.L == expected
    assert _max_controls(c) <= 2
    assert _same_function(gate, c)


def test_negative_controls_are_peeled():
    gate = Gate.mct(4, pos=[0, 1], neg=[2, 3])
    c = decompose_mct(gate, "barenco8", width=6)
    assert c.L == 10 + 4
    assert _same_function(gate, c)


def test_borrowing_needs_a_free_line():
    with pytest.raises(CapacityError):
        decompose_mct(Gate(3, mask_of(range(3))), "recursive4", width=4)


@pytest.mark.parametrize("k", [3, 4, 5, 6, 7, 8])
def test_ancilla_chains(k):
    gate = Gate(k, mask_of(range(k)))
    ancilla = list(range(k + 1, 2 * k - 1))
    width = 2 * k - 1
    clean = decompose_mct(gate, "clean_ancilla", width=width, ancilla_lines=ancilla)
    dirty = decompose_mct(gate, "dirty_ancilla", width=width, ancilla_lines=ancilla)
    assert clean.L == 2 * k - 3
    assert dirty.L == k - 1
    assert dirty.garbage_lines == frozenset(ancilla)

    target_bit = 1 << k
    for x in range(1 << (k + 1)):
        expected = gate.apply(x)
        assert clean.run(x) == expected
        assert dirty.run(x) & (target_bit | (target_bit - 1)) == expected


# ============ MAPPINGS ============

def test_embedding_below_lower_bound():
    constant = BooleanMapping(2, 2, np.zeros(4, dtype=np.int64))
    with pytest.raises(CapacityError):
        embed_mapping(constant, ancilla=1)
    embedded = embed_mapping(constant, ancilla=2)
    assert embedded.width == 4
    assert embedded.permutation.is_even


def test_conjunction_mapping_is_realized():
    conj = BooleanMapping(2, 1, np.array([0, 0, 0, 1]))
    c = synth_mapping(conj, SynthesisOptions(method="B"))
    assert realizes(c, conj)


def test_random_mapping_is_realized(rng):
    table = np.array([rng.randrange(4) for _ in range(16)], dtype=np.int64)
    f = BooleanMapping(4, 2, table)
    c = synth_mapping(f, SynthesisOptions(method="B"))
    assert c.significant_inputs == 4
    assert realizes(c, f)


def test_bijective_mapping_keeps_its_width(rng):
    h = random_even_permutation(rng, 4)
    f = BooleanMapping.from_permutation(h)
    c = synth_mapping(f, SynthesisOptions(method="B"))
    assert c.width == 4
    assert realizes(c, f)
