# -*- coding: utf-8 -*-
"""
Commutation, replacement rules, the reducer and cube-face search
"""

import itertools
import logging

import pytest

from core import Circuit, Gate, circuit_permutation
from core.errors import ParameterError, StructuralError
from permutations import Permutation
from reduction import (
    RULES,
    SHRINKING,
    apply_rule,
    best_face,
    commutes,
    commutes_by_evaluation,
    face_circuit,
    face_synth,
    find_faces,
    find_pivot,
    reduce_circuit,
    split_off,
    tstar_for_permutation,
    tstar_greedy,
    tstar_naive,
)
from synthesis import SynthesisOptions, synth_permutation
from tests.helpers import random_even_permutation, random_gate
from utils.logging_setup import setup_logging


def all_gates(n: int, max_controls: int = None):
    """Every E(t, I, J) on n lines"""
    gates = []
    for target in range(n):
        others = [i for i in range(n) if i != target]
        for signs in itertools.product((0, 1, 2), repeat=len(others)):
            if max_controls is not None and sum(1 for s in signs if s) > max_controls:
                continue
            pos = sum(1 << i for i, s in zip(others, signs) if s == 1)
            neg = sum(1 << i for i, s in zip(others, signs) if s == 2)
            gates.append(Gate(target, pos, neg))
    return gates


def same_permutation(width, before, after) -> bool:
    return circuit_permutation(Circuit(width, tuple(before))) == circuit_permutation(Circuit(width, tuple(after)))


# ============ COMMUTATION ============

def test_commutation_criterion_is_exact():
    gates = all_gates(4, max_controls=3)
    for g1 in gates:
        for g2 in gates:
            assert commutes(g1, g2) == commutes_by_evaluation(g1, g2, 4), (str(g1), str(g2))


def test_conflicting_controls_commute():
    # line 1 = 1 for the first gate, line 1 = 0 for the second
    assert commutes(Gate.mct(2, pos=[1]), Gate.mct(0, pos=[2], neg=[1]))
    assert not commutes(Gate.mct(2, pos=[1]), Gate.mct(0, pos=[2]))


# ============ RULES ============

def test_every_rule_is_sound_and_fires():
    n = 3
    gates = all_gates(n)
    fired = set()
    for rule_id, rule in RULES.items():
        windows = [(g,) for g in gates] if rule.arity == 1 else itertools.product(gates, repeat=2)
        for window in windows:
            replacement = apply_rule(rule_id, window)
            if replacement is None:
                continue
            fired.add(rule_id)
            assert same_permutation(n, window, replacement), (rule_id, [str(g) for g in window])
    assert fired == set(RULES)


def test_shrinking_rules_shrink():
    gates = all_gates(3)
    for rule_id in SHRINKING:
        for window in itertools.product(gates, repeat=2):
            replacement = apply_rule(rule_id, window)
            if replacement is not None:
                assert len(replacement) < 2


def test_merge_to_not():
    g1 = Gate.mct(2, pos=[0])
    g2 = Gate.mct(2, neg=[0])
    assert apply_rule(2, [g1, g2]) == [Gate.not_(2)]


def test_merge_positive_example():
    g1 = Gate.mct(2, pos=[0, 1])
    g2 = Gate.mct(2, pos=[1])
    assert apply_rule(9, [g1, g2]) == [Gate.mct(2, pos=[1], neg=[0])]


def test_unknown_rule():
    with pytest.raises(ParameterError):
        apply_rule(11, [Gate.not_(0)])


def _random_controls(rng, lines):
    pos = neg = 0
    for i in lines:
        r = rng.randrange(3)
        if r == 1:
            pos |= 1 << i
        elif r == 2:
            neg |= 1 << i
    return pos, neg


def matching_window(rng, rule_id: int, n: int):
    """Random window on n lines built to satisfy the side conditions of the rule"""
    lines = list(range(n))
    rng.shuffle(lines)
    if rule_id in (4, 5, 6):
        # E2 reads the target of E1 and carries all of its controls
        t1, t2, *rest = lines
        pos1, neg1 = _random_controls(rng, rest[: len(rest) // 2])
        pos2, neg2 = _random_controls(rng, rest[len(rest) // 2:])
        if rng.random() < 0.5:
            pos2 |= 1 << t1
        else:
            neg2 |= 1 << t1
        g1 = Gate(t1, pos1, neg1)
        g2 = Gate(t2, pos1 | pos2, neg1 | neg2)
        return (g2, g1) if rule_id == 6 else (g1, g2)

    t, a, b, *rest = lines
    pos, neg = _random_controls(rng, rest)
    ka, kb = 1 << a, 1 << b
    window = {
        1: (Gate(t, pos, neg), Gate(t, pos, neg)),
        2: (Gate(t, pos | ka, neg), Gate(t, pos, neg | ka)),
        3: (Gate(t, pos | ka, neg | kb), Gate(t, pos | kb, neg | ka)),
        7: (Gate(t, pos, neg | ka),),
        8: (Gate(t, pos, neg | ka),),
        9: (Gate(t, pos | ka, neg), Gate(t, pos, neg)),
        10: (Gate(t, pos, neg | ka), Gate(t, pos, neg)),
    }[rule_id]
    return window if rng.random() < 0.5 else tuple(reversed(window))


@pytest.mark.parametrize("n", [4, 5, 6])
@pytest.mark.parametrize("rule_id", sorted(RULES))
def test_rules_on_random_matching_windows(rng, rule_id, n):
    for _ in range(40):
        window = matching_window(rng, rule_id, n)
        replacement = apply_rule(rule_id, window)
        assert replacement is not None, (rule_id, [str(g) for g in window])
        assert same_permutation(n, window, replacement), (rule_id, [str(g) for g in window])


def test_rules_on_random_windows(rng):
    n = 6
    for _ in range(300):
        window = (random_gate(rng, n), random_gate(rng, n))
        for rule_id, rule in RULES.items():
            replacement = apply_rule(rule_id, window[: rule.arity])
            if replacement is not None:
                assert same_permutation(n, window[: rule.arity], replacement), rule_id


# ============ REDUCER ============

def test_duplicate_gates_cancel():
    g = Gate.toffoli(0, 1, 2)
    result = reduce_circuit(Circuit(3, (g, g)))
    assert result.circuit.L == 0
    assert result.removed == 2
    assert str(result.trace[0]) == "pass=0 rule=1 at=0 L=2->0"


def test_merge_across_a_commuting_gate():
    c = Circuit(4, (Gate.mct(2, pos=[0]), Gate.not_(3), Gate.mct(2, neg=[0])))
    result = reduce_circuit(c, exploratory=False)
    assert result.circuit.L == 2
    assert result.trace[0].rule == 2
    assert same_permutation(4, c.gates, result.circuit.gates)


@pytest.mark.parametrize(
    "rule_id,first,last,merged",
    [
        (2, Gate.mct(2, pos=[0, 1]), Gate.mct(2, pos=[1], neg=[0]), Gate.mct(2, pos=[1])),
        (9, Gate.mct(2, pos=[0, 1]), Gate.mct(2, pos=[1]), Gate.mct(2, pos=[1], neg=[0])),
        (10, Gate.mct(2, pos=[1], neg=[0]), Gate.mct(2, pos=[1]), Gate.mct(2, pos=[0, 1])),
    ],
)
def test_merge_reached_through_gate_motion(rule_id, first, last, merged):
    # lines 3 and 4 are disjoint from the merged pair
    c = Circuit(5, (first, Gate.not_(3), Gate.cnot(3, 4), last))
    result = reduce_circuit(c, exploratory=False)
    assert [step.rule for step in result.trace] == [rule_id]
    assert result.circuit.L == 3
    assert merged in result.circuit.gates
    assert same_permutation(5, c.gates, result.circuit.gates)


def test_minimization_pipeline():
    gates = [Gate.not_(1), Gate.not_(0), Gate.cnot(0, 1), Gate.not_(0)]
    original = list(gates)

    # rule 5 moves the CNOT in front of the NOT it reads
    step = apply_rule(5, gates[1:3])
    assert step == [Gate.mct(1, neg=[0]), Gate.not_(0)]
    gates = gates[:1] + step + gates[3:]

    # rule 10 merges the two gates on line 1
    step = apply_rule(10, gates[0:2])
    assert step == [Gate.cnot(0, 1)]
    gates = step + gates[2:]

    # rule 1 drops the two NOTs
    assert apply_rule(1, gates[1:3]) == []
    gates = gates[:1]

    assert gates == [Gate.cnot(0, 1)]
    assert same_permutation(2, original, gates)


def test_reducer_finishes_the_pipeline():
    c = Circuit(2, (Gate.not_(1), Gate.not_(0), Gate.cnot(0, 1), Gate.not_(0)))
    result = reduce_circuit(c, max_passes=3, exploratory=True, trace=False)
    assert result.circuit.gates == (Gate.cnot(0, 1),)
    assert [step.rule for step in result.trace] == [9, 5, 1]


def test_blocked_pair_is_kept():
    # the middle gate reads line 2, so the outer gates cannot meet
    c = Circuit(3, (Gate.mct(2, pos=[0]), Gate.cnot(2, 1), Gate.mct(2, neg=[0])))
    assert find_pivot(list(c.gates), 0, 2) is None
    assert reduce_circuit(c, exploratory=False).circuit.L == 3


def test_pivot_of_adjacent_gates():
    gates = [Gate.not_(0), Gate.not_(0)]
    assert find_pivot(gates, 0, 1) == 0


@pytest.mark.parametrize("n", [3, 4, 5])
def test_reduction_keeps_the_permutation(rng, n):
    for _ in range(5):
        c = Circuit(n, tuple(random_gate(rng, n, max_controls=2) for _ in range(25)))
        result = reduce_circuit(c, max_passes=2)
        assert result.circuit.L <= c.L
        assert circuit_permutation(result.circuit) == circuit_permutation(c)
        assert result.final_L == result.circuit.L
        assert all(step.after < step.before for step in result.trace if step.rule in SHRINKING)


def test_shrinking_is_idempotent(rng):
    c = Circuit(4, tuple(random_gate(rng, 4) for _ in range(30)))
    once = reduce_circuit(c, exploratory=False).circuit
    twice = reduce_circuit(once, exploratory=False)
    assert twice.circuit.L == once.L
    assert twice.trace == []


def test_reduce_synthesized_circuit(rng):
    h = random_even_permutation(rng, 4)
    c = synth_permutation(h, SynthesisOptions(method="B"))
    result = reduce_circuit(c, max_passes=1)
    assert circuit_permutation(result.circuit) == h
    assert result.circuit.L <= c.L


def test_trace_goes_to_rewrites_log(tmp_path):
    setup_logging(log_dir=str(tmp_path), console=False)
    g = Gate.not_(0)
    reduce_circuit(Circuit(1, (g, g)), trace=True)
    for handler in logging.getLogger("rewrites").handlers:
        handler.flush()
    text = (tmp_path / "rewrites.log").read_text(encoding="utf-8")
    assert "| pass=0 rule=1 at=0 L=2->0" in text


# ============ FACES ============

CYCLE = (1, 2, 4, 9, 12, 10)


def test_tstar_greedy_example():
    assert tstar_greedy(8, CYCLE, "left") == [(2, 10), (4, 12)]


def test_tstar_naive_example():
    assert tstar_naive(8, CYCLE, "left") == [(1, 9)]


def test_tstar_transpositions_are_independent(rng):
    for _ in range(10):
        h = random_even_permutation(rng, 4)
        for cycle in h.cycles():
            for d in range(1, 16):
                found = tstar_greedy(d, cycle)
                points = [p for t in found for p in t]
                assert len(points) == len(set(points))
                assert all(a ^ b == d for a, b in found)


def test_unknown_side():
    with pytest.raises(ParameterError):
        tstar_greedy(1, (0, 1), "middle")


def test_face_of_a_square():
    # (0,1)(2,3) is the face x3 = x4 = 0 split along line 0
    h = Permutation.from_cycles(4, [(0, 1), (2, 3)])
    face = best_face(h)
    assert face.d == 1
    assert face.dim == 2
    assert face.transpositions == ((0, 1), (2, 3))
    c = face_circuit(face)
    assert c.L == 1
    assert circuit_permutation(c) == h
    assert split_off(h, face).is_identity


def test_faces_are_sorted_by_dimension(rng):
    h = random_even_permutation(rng, 4)
    faces = find_faces(h)
    dims = [f.dim for f in faces]
    assert dims == sorted(dims, reverse=True)
    for face in faces:
        assert circuit_permutation(face_circuit(face)) == face.as_permutation()
        assert face_circuit(face).L == bin(face.d).count("1")


def test_face_along_two_lines():
    # d = 0b1001 moves lines 0 and 3 together; both swaps of the face are listed
    h = Permutation.from_cycles(4, [(4, 13), (5, 12)])
    faces = find_faces(h)
    assert len(faces) == 1
    face = faces[0]
    assert face.d == 9
    assert face.free_mask == 9
    assert face.fixed_values == 4
    assert face.transpositions == ((4, 13), (5, 12))
    assert face.as_permutation() == h
    assert circuit_permutation(face_circuit(face)) == h
    assert split_off(h, face).is_identity


@pytest.mark.parametrize("side", ["left", "right"])
@pytest.mark.parametrize("n", [4, 5])
def test_face_circuits_match_their_permutations(rng, n, side):
    for _ in range(10):
        h = random_even_permutation(rng, n)
        for face in find_faces(h, side):
            assert circuit_permutation(face_circuit(face)) == face.as_permutation()
            assert len(face.transpositions) == 1 << (face.dim - 1)
            assert set(face.transpositions) <= set(tstar_for_permutation(face.d, h, side))


def test_face_of_a_single_gate_beats_pairs():
    # (0 1)(2 3)(4 5)(6 7) is E(0, {}, {3}): the face x3 = 0 of dimension 3
    h = Permutation.from_cycles(4, [(0, 1), (2, 3), (4, 5), (6, 7)])
    face = best_face(h)
    assert face.dim == 3
    assert face.gates() == [Gate.mct(0, neg=[3])]
    by_face = face_synth(h, SynthesisOptions(method="face"))
    by_pairs = synth_permutation(h, SynthesisOptions(method="B"))
    assert by_face.L == 1
    assert by_face.L <= by_pairs.L
    assert circuit_permutation(by_pairs) == h


@pytest.mark.parametrize("left_right", [False, True])
def test_face_synth_realizes_even_permutations(rng, left_right):
    opts = SynthesisOptions(method="face", left_right_heuristic=left_right)
    for n in (3, 4, 5):
        for _ in range(4):
            h = random_even_permutation(rng, n)
            c = face_synth(h, opts)
            assert circuit_permutation(c) == h
            assert max((g.controls for g in c.gates), default=0) <= 2


def test_face_synth_needs_even_permutation():
    with pytest.raises(StructuralError):
        face_synth(Permutation.from_transposition(4, 0, 1), SynthesisOptions(method="face"))
