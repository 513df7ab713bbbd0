#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Complexity reduction by replacement rules with gate motion

A pair (E_i, E_j), i < j, is reduced when a shrinking rule matches the window
[E_i, E_j] and a pivot s exists such that every gate of (i, s] commutes with
E_i and every gate of (s, j) commutes with E_j. Both gates are removed and the
replacement is inserted between E_s and E_{s+1}.

Exploratory rules (3-8) rewrite one or two adjacent gates; the rewrite is kept
only if the shrinking search that follows makes the circuit strictly shorter.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Set, Tuple

from core.circuit import Circuit
from core.gates import Gate
from .commutation import commutes
from .rules import EXPLORATORY, RULES, SHRINKING

logger = logging.getLogger(__name__)
rewrites_logger = logging.getLogger("rewrites")


@dataclass(frozen=True)
class RewriteStep:
    """One applied rule, in trace-line form"""
    pass_no: int
    rule: int
    at: int
    before: int
    after: int

    def __str__(self) -> str:
        return f"pass={self.pass_no} rule={self.rule} at={self.at} L={self.before}->{self.after}"


@dataclass
class ReductionResult:
    circuit: Circuit
    trace: List[RewriteStep] = field(default_factory=list)
    passes: int = 0
    initial_L: int = 0
    final_L: int = 0

    @property
    def removed(self) -> int:
        return self.initial_L - self.final_L


# =============================================================================
# Gate motion
# =============================================================================

def find_pivot(gates: Sequence[Gate], i: int, j: int) -> Optional[int]:
    """First s in [i, j) that lets E_i and E_j meet, or None"""
    lowest = j
    while lowest > i + 1 and commutes(gates[lowest - 1], gates[j]):
        lowest -= 1
    s = max(i, lowest - 1)
    for k in range(i + 1, s + 1):
        if not commutes(gates[k], gates[i]):
            return None
    return s


def _splice(gates: List[Gate], i: int, j: int, s: int, replacement: List[Gate]) -> List[Gate]:
    return gates[:i] + gates[i + 1:s + 1] + replacement + gates[s + 1:j] + gates[j + 1:]


def _find_shrink(
    gates: List[Gate],
    rule_ids: Sequence[int],
    focus: Optional[Set[int]] = None,
) -> Optional[Tuple[int, int, List[Gate]]]:
    """(rule id, insertion index, new gate list) of the first reducible pair"""
    for i in range(len(gates)):
        for j in range(i + 1, len(gates)):
            if focus is not None and i not in focus and j not in focus:
                continue
            window = (gates[i], gates[j])
            pivot = None
            for rule_id in rule_ids:
                replacement = RULES[rule_id].apply(window)
                if replacement is None:
                    continue
                if pivot is None:
                    pivot = find_pivot(gates, i, j)
                    if pivot is None:
                        break
                return rule_id, pivot, _splice(gates, i, j, pivot, replacement)
    return None


def shrink(
    gates: List[Gate],
    pass_no: int,
    rule_ids: Sequence[int] = SHRINKING,
    focus: Optional[Set[int]] = None,
) -> Tuple[List[Gate], List[RewriteStep]]:
    """Apply shrinking rules until none matches"""
    steps: List[RewriteStep] = []
    while True:
        found = _find_shrink(gates, rule_ids, focus)
        if found is None:
            return gates, steps
        rule_id, at, new_gates = found
        steps.append(RewriteStep(pass_no, rule_id, at, len(gates), len(new_gates)))
        gates = new_gates
        # only the first search is restricted to the rewritten window
        focus = None


# =============================================================================
# Driver
# =============================================================================

def _exploratory_pass(
    gates: List[Gate],
    pass_no: int,
    rule_ids: Sequence[int],
    shrinking: Sequence[int],
) -> Tuple[List[Gate], List[RewriteStep]]:
    steps: List[RewriteStep] = []
    idx = 0
    while idx < len(gates):
        accepted = False
        for rule_id in rule_ids:
            rule = RULES[rule_id]
            if idx + rule.arity > len(gates):
                continue
            replacement = rule.apply(gates[idx:idx + rule.arity])
            if replacement is None:
                continue
            candidate = gates[:idx] + replacement + gates[idx + rule.arity:]
            focus = set(range(idx, idx + len(replacement)))
            shrunk, shrink_steps = shrink(candidate, pass_no, shrinking, focus)
            if len(shrunk) < len(gates):
                steps.append(RewriteStep(pass_no, rule_id, idx, len(gates), len(candidate)))
                steps.extend(shrink_steps)
                gates = shrunk
                accepted = True
                break
        if not accepted:
            idx += 1
    return gates, steps


def reduce_circuit(
    circuit: Circuit,
    max_passes: Optional[int] = None,
    exploratory: Optional[bool] = None,
    shrinking: Sequence[int] = SHRINKING,
    exploratory_rules: Sequence[int] = EXPLORATORY,
    trace: Optional[bool] = None,
) -> ReductionResult:
    """
    Reduce the gate count of a circuit without changing its permutation.

    Pass 0 applies the shrinking rules greedily. Each following pass tries the
    exploratory rules at every position; passes stop after the first pass
    without improvement or after max_passes.
    """
    if max_passes is None or exploratory is None or trace is None:
        from config import get_config
        settings = get_config().reduction
        max_passes = settings.max_passes if max_passes is None else max_passes
        exploratory = settings.exploratory if exploratory is None else exploratory
        trace = settings.trace if trace is None else trace

    initial = circuit.L
    gates, steps = shrink(list(circuit.gates), 0, shrinking)
    passes = 0
    if exploratory:
        for pass_no in range(1, max_passes + 1):
            passes = pass_no
            before = len(gates)
            gates, pass_steps = _exploratory_pass(gates, pass_no, exploratory_rules, shrinking)
            steps.extend(pass_steps)
            if len(gates) >= before:
                break
            # the local searches may leave reductions elsewhere
            gates, tail = shrink(gates, pass_no, shrinking)
            steps.extend(tail)

    if trace:
        for step in steps:
            rewrites_logger.info(str(step))
    result = circuit.with_gates(gates)
    logger.info(f"[Reduce] L {initial} -> {result.L} in {passes} pass(es), {len(steps)} rewrite(s)")
    return ReductionResult(result, steps, passes, initial, result.L)
