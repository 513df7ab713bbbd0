#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Synthesis of K pairwise independent transpositions at once

The k = 2K points x1, y1, x2, y2, ... form the rows of a k x n matrix. A
conjugation script sends row r to the code r | (1..1 << L) with L = log2 k,
so every (x_i, y_i) becomes a pair of codes differing in line 0 only. One gate
E(0, lines L..n-1) then swaps all of them.
"""

import logging
from typing import List, Sequence, Tuple

from core.circuit import Circuit
from core.errors import ParameterError, StructuralError
from core.gates import Gate, lines_of
from .mct import decompose_circuit
from .transposition import apply_script, full_mask

logger = logging.getLogger(__name__)


def check_group_size(K: int, n: int):
    """K a power of two, K >= 2, log2(2K) < n"""
    if K < 2 or K & (K - 1):
        raise ParameterError(f"group size K={K} must be a power of two >= 2")
    L = (2 * K).bit_length() - 1
    if L >= n:
        raise ParameterError(f"log2(2K)={L} must be smaller than n={n}")


def _row_script(rows: List[int], n: int, L: int) -> List[Gate]:
    """Gates moving row r onto code r for every r, without disturbing earlier rows"""
    script: List[Gate] = []

    def emit(gates: Sequence[Gate]):
        for gate in gates:
            script.append(gate)
            for idx in range(len(rows)):
                rows[idx] = gate.apply(rows[idx])

    # row 0 -> 0
    emit([Gate.not_(i) for i in lines_of(rows[0])])

    low = (1 << L) - 1
    for r in range(1, len(rows)):
        v = rows[r]
        if v == r:
            continue
        if not v >> L:
            # only low lines set: push into line L; no earlier row is a superset of v
            emit([Gate(L, v)])
            v = rows[r]
        j = lines_of(v >> L)[0] + L
        mismatched = [i for i in range(n) if i != j and ((v ^ r) >> i) & 1]
        emit([Gate.cnot(j, i) for i in mismatched])
        # clear line j; earlier rows s < r never contain every bit of r
        emit([Gate(j, r & low)])
        if rows[r] != r:
            raise StructuralError(f"row {r} did not reach its canonical code")
    return script


def canonicalize_group(group: Sequence[Tuple[int, int]], n: int) -> List[Gate]:
    K = len(group)
    check_group_size(K, n)
    points = [p for t in group for p in t]
    if len(set(points)) != len(points):
        raise StructuralError("group transpositions are not pairwise independent")
    L = (2 * K).bit_length() - 1
    rows = list(points)
    script = _row_script(rows, n, L)
    high = full_mask(n) & ~((1 << L) - 1)
    script += [Gate.not_(i) for i in lines_of(high)]
    return script


def synth_k_group(
    group: Sequence[Tuple[int, int]],
    n: int,
    basis: str = "omega2",
    mode: str = "barenco8",
) -> Circuit:
    """Realize the product of K independent transpositions"""
    script = canonicalize_group(group, n)
    L = (2 * len(group)).bit_length() - 1
    core = Gate(0, full_mask(n) & ~((1 << L) - 1))
    circuit = Circuit(n, tuple(script + [core] + list(reversed(script))))

    # canonical images: row r sits at r | high, paired with its neighbour in line 0
    high = full_mask(n) & ~((1 << L) - 1)
    for r, point in enumerate(p for t in group for p in t):
        if apply_script(script, point) != (r | high):
            raise StructuralError(f"point {point} missed its canonical code")

    circuit = decompose_circuit(circuit, basis, mode)
    logger.debug(f"[Synth] group of {len(group)} -> L={circuit.L}")
    return circuit
