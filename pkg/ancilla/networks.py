#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Building blocks of ancilla-based circuits

- basis operations ¬x, x ⊕ y, x ∧ y onto a zeroed line
- all minterms of a set of variables (recursive halves)
- XOR of lines onto a target, copies and XOR trees of logarithmic depth
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

from core.circuit import Circuit
from core.errors import CapacityError, StructuralError
from core.gates import Gate
from .budget import LineAllocator

logger = logging.getLogger(__name__)


# =============================================================================
# Basis operations
# =============================================================================

def not_onto(x: int, out: int) -> List[Gate]:
    return [Gate.cnot(x, out), Gate.not_(out)]


def xor_onto(x: int, y: int, out: int) -> List[Gate]:
    return [Gate.cnot(x, out), Gate.cnot(y, out)]


def and_onto(x: int, y: int, out: int) -> List[Gate]:
    return [Gate.toffoli(x, y, out)]


def basis_ops() -> Dict[str, Callable[..., List[Gate]]]:
    """NOT / XOR / AND, each with at most two gates and one zeroed output line"""
    return {"not": not_onto, "xor": xor_onto, "and": and_onto}


# =============================================================================
# Networks
# =============================================================================

@dataclass
class Network:
    """Gates plus the lines that carry the results"""
    gates: List[Gate] = field(default_factory=list)
    lines: List[int] = field(default_factory=list)

    def circuit(self, width: int, significant_inputs: Optional[int] = None) -> Circuit:
        return Circuit(width, tuple(self.gates), significant_inputs=significant_inputs)


def _products(n: int) -> int:
    if n <= 1:
        return 0
    half = n // 2
    return (1 << n) + _products(half) + _products(n - half)


def conjunction_lines(n: int) -> int:
    """Zeroed lines used by build_conjunction_network on n variables"""
    return n + _products(n) if n > 0 else 0


def build_conjunction_network(variables: Sequence[int], allocator: LineAllocator) -> Network:
    """
    All 2^n minterms of the given variable lines.

    Result line a carries [x restricted to the variables == a], bit i of a
    standing for variables[i]. Inversions cost 2 gates per variable, then
    minterms of the two halves are combined pairwise by Toffoli gates.
    """
    variables = list(variables)
    if not variables:
        raise StructuralError("conjunction network over no variables")
    if allocator.max_width is not None:
        free = allocator.max_width - allocator.width
        if free < conjunction_lines(len(variables)):
            raise CapacityError(
                f"{len(variables)}-variable conjunctions need {conjunction_lines(len(variables))} "
                f"zeroed lines, {free} left"
            )

    net = Network()
    literals = []
    for x in variables:
        neg = allocator.one()
        net.gates.extend(not_onto(x, neg))
        literals.append((neg, x))

    def minterms(lo: int, hi: int) -> List[int]:
        if hi - lo == 1:
            return list(literals[lo])
        mid = lo + (hi - lo) // 2
        low = minterms(lo, mid)
        high = minterms(mid, hi)
        result = []
        for b in high:
            for a in low:
                out = allocator.one()
                net.gates.extend(and_onto(a, b, out))
                result.append(out)
        return result

    net.lines = minterms(0, len(variables))
    logger.debug(f"[Networks] {len(variables)}-variable conjunctions: {len(net.gates)} gates")
    return net


def build_xor_network(sources: Sequence[int], target: int) -> List[Gate]:
    """target ^= XOR of the source lines"""
    if target in sources:
        raise StructuralError(f"target line {target} among the sources")
    return [Gate.cnot(s, target) for s in sources]


def log_depth_copy(source: int, targets: Sequence[int]) -> Network:
    """
    Copy source onto f zeroed lines in ceil(log2(f + 1)) rounds: every line
    that already holds the value feeds one new line per round.
    """
    pending = list(targets)
    if source in pending:
        raise StructuralError(f"source line {source} among the copy targets")
    holders = [source]
    net = Network(lines=list(targets))
    while pending:
        round_gates = []
        for line in list(holders):
            if not pending:
                break
            target = pending.pop(0)
            round_gates.append(Gate.cnot(line, target))
            holders.append(target)
        net.gates.extend(round_gates)
    return net


def log_depth_xor(lines: Sequence[int]) -> Network:
    """
    XOR of f lines into lines[0] in ceil(log2 f) rounds. The other lines are
    left holding partial sums.
    """
    active = list(lines)
    if not active:
        raise StructuralError("xor tree over no lines")
    net = Network(lines=[active[0]])
    while len(active) > 1:
        kept = []
        for i in range(0, len(active), 2):
            if i + 1 < len(active):
                net.gates.append(Gate.cnot(active[i + 1], active[i]))
            kept.append(active[i])
        active = kept
    return net
