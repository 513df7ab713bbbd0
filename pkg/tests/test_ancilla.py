# -*- coding: utf-8 -*-
"""
Ancilla bookkeeping, networks, split synthesis and garbage removal
"""

import numpy as np
import pytest

from ancilla import (
    AncillaBudget,
    LineAllocator,
    LupanovParams,
    basis_ops,
    build_conjunction_network,
    build_xor_network,
    cleanup_by_mirroring,
    conjunction_lines,
    log_depth_copy,
    log_depth_xor,
    lupanov_params,
    lupanov_synth,
    split_out_of_place,
)
from core import BooleanMapping, Circuit, Gate, depth, garbage_free, realizes
from core.errors import CapacityError, ParameterError, StructuralError, VerificationError
from synthesis import SynthesisOptions, synth_mapping


def random_bijection(rng, n: int) -> BooleanMapping:
    table = list(range(1 << n))
    rng.shuffle(table)
    return BooleanMapping(n, n, np.array(table, dtype=np.int64))


# ============ BUDGET ============

def test_allocator_hands_out_lines_above_outputs():
    alloc = LineAllocator(3, 2, max_width=6)
    assert alloc.outputs == (3, 4)
    assert alloc.allocate() == [5]
    assert alloc.budget().free_zeroed == frozenset({5})
    with pytest.raises(CapacityError):
        alloc.one()


def test_budget_validation():
    with pytest.raises(StructuralError):
        AncillaBudget(4, free_zeroed={2}, dirty={2})
    budget = AncillaBudget(6, free_zeroed={4, 5}, dirty={3})
    assert budget.q == 3
    assert budget.require_zeroed(2) == [4, 5]
    with pytest.raises(CapacityError):
        budget.require_zeroed(3)


# ============ NETWORKS ============

def test_basis_operations_on_zeroed_line():
    ops = basis_ops()
    for x in range(4):
        a, b = x & 1, (x >> 1) & 1
        assert (Circuit(3, tuple(ops["not"](0, 2))).run(x) >> 2) & 1 == 1 - a
        assert (Circuit(3, tuple(ops["xor"](0, 1, 2))).run(x) >> 2) & 1 == a ^ b
        assert (Circuit(3, tuple(ops["and"](0, 1, 2))).run(x) >> 2) & 1 == a & b


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_conjunction_network_is_exhaustively_right(n):
    alloc = LineAllocator(n)
    net = build_conjunction_network(range(n), alloc)
    assert alloc.width - n == conjunction_lines(n)
    assert len(net.lines) == 1 << n
    c = net.circuit(alloc.width, significant_inputs=n)
    for x in range(1 << n):
        y = c.run(x)
        assert y & ((1 << n) - 1) == x
        for a, line in enumerate(net.lines):
            assert (y >> line) & 1 == int(a == x)


def test_conjunction_network_checks_capacity():
    with pytest.raises(CapacityError):
        build_conjunction_network(range(3), LineAllocator(3, max_width=10))


def test_xor_network():
    gates = build_xor_network([0, 1, 2], 3)
    c = Circuit(4, tuple(gates))
    for x in range(8):
        assert (c.run(x) >> 3) & 1 == bin(x).count("1") % 2
    with pytest.raises(StructuralError):
        build_xor_network([0, 1], 1)


def test_log_depth_copy():
    net = log_depth_copy(0, list(range(1, 9)))
    c = net.circuit(9)
    assert c.L == 8
    assert depth(c) == 4
    assert c.run(1) == (1 << 9) - 1
    assert c.run(0) == 0


def test_log_depth_xor():
    net = log_depth_xor(list(range(8)))
    c = net.circuit(8)
    assert c.L == 7
    assert depth(c) == 3
    assert net.lines == [0]
    for x in range(256):
        assert c.run(x) & 1 == bin(x).count("1") % 2


# ============ SPLIT SYNTHESIS ============

def test_automatic_parameters():
    assert lupanov_params(6) == LupanovParams(6, 2, 2, 2)
    assert lupanov_params(5) == LupanovParams(5, 2, 1, 4)
    with pytest.raises(ParameterError):
        lupanov_params(2)
    with pytest.raises(ParameterError):
        LupanovParams(6, 3, 0, 1)
    with pytest.raises(ParameterError):
        LupanovParams(6, 2, 2, 3)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_split_synthesis_realizes_bijections(rng, n):
    f = random_bijection(rng, n)
    report = lupanov_synth(f)
    c = report.circuit
    assert realizes(c, f)
    assert c.significant_outputs == tuple(range(n, 2 * n))
    assert sum(report.parts.values()) == report.L
    # inputs are read only
    assert all(g.target >= n for g in c.gates)


def test_split_synthesis_of_six_variables(rng):
    f = random_bijection(rng, 6)
    report = lupanov_synth(f)
    assert report.params == LupanovParams(6, 2, 2, 2)
    assert report.circuit.width > 62
    assert realizes(report.circuit, f)
    assert report.L <= 5 * 2 ** 6


def test_split_synthesis_of_single_output(rng):
    table = np.array([rng.randrange(2) for _ in range(16)], dtype=np.int64)
    f = BooleanMapping(4, 1, table)
    c = synth_mapping(f, SynthesisOptions(method="lupanov"))
    assert realizes(c, f)


def test_split_synthesis_respects_the_line_budget(rng):
    f = random_bijection(rng, 4)
    free = synth_mapping(f, SynthesisOptions(method="lupanov"))
    exact = synth_mapping(f, SynthesisOptions(method="lupanov", ancilla=free.Q))
    assert exact.gates == free.gates
    assert realizes(exact, f)
    with pytest.raises(CapacityError):
        synth_mapping(f, SynthesisOptions(method="lupanov", ancilla=free.Q - 1))


def test_split_synthesis_rejects_foreign_parameters(rng):
    with pytest.raises(ParameterError):
        lupanov_synth(random_bijection(rng, 4), LupanovParams(6, 2, 2, 2))


# ============ GARBAGE REMOVAL ============

def test_split_out_of_place_stages(rng):
    c = lupanov_synth(random_bijection(rng, 3)).circuit
    prepare, final = split_out_of_place(c)
    assert prepare + final == list(c.gates)
    outputs = set(c.significant_outputs)
    assert all(g.target in outputs for g in final)
    assert not any(g.target in outputs for g in prepare)


def test_split_out_of_place_rejects_writes_to_inputs():
    c = Circuit(4, (Gate.cnot(2, 0),), significant_inputs=2, significant_outputs=(2, 3))
    with pytest.raises(VerificationError):
        split_out_of_place(c)


@pytest.mark.parametrize("n", [3, 4])
def test_cleanup_by_mirroring(rng, n):
    f = random_bijection(rng, n)
    c = lupanov_synth(f).circuit
    c_inv = lupanov_synth(f.inverse()).circuit
    assert not garbage_free(c, f)
    result = cleanup_by_mirroring(c, c_inv, f)
    assert realizes(result, f)
    assert garbage_free(result, f)
    assert result.L <= 4 * max(c.L, c_inv.L)


def test_cleanup_needs_the_inverse():
    # 3-cycle on the first three codes: f is not its own inverse
    f = BooleanMapping(3, 3, np.array([1, 2, 0, 3, 4, 5, 6, 7], dtype=np.int64))
    c = lupanov_synth(f).circuit
    with pytest.raises(VerificationError):
        cleanup_by_mirroring(c, c, f)
