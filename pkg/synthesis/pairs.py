#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Transposition pair synthesis

Independent pair (x,y) ∘ (z,w): conjugate onto
    x = 1..1, y = x ^ e_i1, z = x ^ e_i2, w = x ^ e_i1 ^ e_i2
then one gate E(i1, all lines but i1 and i2) swaps both transpositions.

Dependent pair (x,y) ∘ (x,z) (the 3-cycle x -> y -> z -> x): conjugate onto
x, y = x ^ e_i1, z = x ^ e_i2 and use four gates of at most n-2 controls.
"""

import logging
from typing import List, Tuple

from core.circuit import Circuit
from core.errors import BasisError, CapacityError, StructuralError
from core.gates import Gate
from permutations.decompose import TranspositionPair, split_dependent
from .mct import decompose_circuit
from .transposition import apply_script, canonicalize_transposition, full_mask

logger = logging.getLogger(__name__)


def _check_basis(n: int, basis: str):
    if basis == "omega2" and n < 4:
        raise BasisError(f"pair synthesis over NOT/CNOT/2-CNOT needs n >= 4, got n={n}")
    if n < 3:
        raise CapacityError(f"pair synthesis needs at least 3 lines, got n={n}")


def _zero_bits(code: int, n: int) -> List[int]:
    return [i for i in range(n) if not (code >> i) & 1]


def _pin_second_line(z: int, i1: int, n: int) -> Tuple[List[Gate], int]:
    """Gates sending z to 1..1 ^ e_i2 while fixing 1..1 and 1..1 ^ e_i1"""
    zeros = _zero_bits(z, n)
    candidates = [i for i in zeros if i != i1]
    if not candidates:
        raise StructuralError(f"code {z} collides with the canonical pair")
    i2 = candidates[0]
    others = [i for i in zeros if i != i2]
    if not others:
        return [], i2
    gates = [Gate.not_(i2)] + [Gate.cnot(i2, i) for i in others] + [Gate.not_(i2)]
    return gates, i2


def canonicalize_pair(x: int, y: int, z: int, w: int, n: int):
    """
    Conjugation script for an independent pair.

    Returns (script, i1, i2); after the script x, y are 1..1 and 1..1 ^ e_i1
    (in some order), z is 1..1 ^ e_i2 and w is 1..1 ^ e_i1 ^ e_i2.
    """
    ones = full_mask(n)
    form = canonicalize_transposition(x, y, n)
    script = list(form.script)
    i1 = form.j
    z = apply_script(script, z)
    w = apply_script(script, w)

    pin, i2 = _pin_second_line(z, i1, n)
    script += pin
    w = apply_script(pin, w)

    # w must end with zeros exactly on i1 and i2
    if (w >> i1) & 1 or (w >> i2) & 1:
        i3 = next(i for i in _zero_bits(w, n) if i not in (i1, i2))
        step = [Gate.not_(i3)]
        if (w >> i1) & 1:
            step.append(Gate.cnot(i3, i1))
        if (w >> i2) & 1:
            step.append(Gate.cnot(i3, i2))
        step.append(Gate.not_(i3))
        script += step
        w = apply_script(step, w)

    fill = [i for i in _zero_bits(w, n) if i not in (i1, i2)]
    if fill:
        flips = [Gate.not_(i1), Gate.not_(i2)]
        step = flips + [Gate.toffoli(i1, i2, i) for i in fill] + flips
        script += step
        w = apply_script(step, w)

    assert w == ones ^ (1 << i1) ^ (1 << i2)
    return script, i1, i2


def _assemble(n: int, script: List[Gate], core: List[Gate], basis: str, mode: str) -> Circuit:
    circuit = Circuit(n, tuple(script + core + list(reversed(script))))
    return decompose_circuit(circuit, basis, mode)


def synth_pair(pair: TranspositionPair, n: int, basis: str = "omega2", mode: str = "barenco8") -> Circuit:
    """Algorithm B for one independent pair"""
    if not pair.independent:
        raise StructuralError(f"pair {pair} is not independent")
    _check_basis(n, basis)
    (x, y), (z, w) = pair.first, pair.second
    script, i1, i2 = canonicalize_pair(x, y, z, w, n)
    core = Gate(i1, full_mask(n) & ~(1 << i1) & ~(1 << i2))
    circuit = _assemble(n, script, [core], basis, mode)
    logger.debug(f"[Synth] pair {pair} -> L={circuit.L}")
    return circuit


def dependent_core(i1: int, i2: int, n: int) -> List[Gate]:
    """
    3-cycle 1..1 -> 1..1 ^ e_i1 -> 1..1 ^ e_i2 -> 1..1:
    C_{i1,j;i2} * C_{I';i1} * C_{i1,j;i2} * C_{I';i1}, j the smallest other line,
    I' every line except j and i1
    """
    j = next(i for i in range(n) if i not in (i1, i2))
    g1 = Gate.toffoli(i1, j, i2)
    g2 = Gate(i1, full_mask(n) & ~(1 << j) & ~(1 << i1))
    return [g1, g2, g1, g2]


def synth_dependent_pair(
    pair: TranspositionPair,
    n: int,
    basis: str = "omega2",
    mode: str = "barenco8",
    split: bool = False,
) -> Circuit:
    """(x,y) ∘ (x,z) directly, or as two independent pairs when split is set"""
    if not pair.dependent:
        raise StructuralError(f"pair {pair} is not dependent")
    _check_basis(n, basis)

    if split:
        p1, p2 = split_dependent(pair, n)
        return synth_pair(p1, n, basis, mode) + synth_pair(p2, n, basis, mode)

    x, y, z = pair.dependent_form()
    ones = full_mask(n)
    form = canonicalize_transposition(x, y, n)
    script = list(form.script)
    i1 = form.j
    pin, i2 = _pin_second_line(apply_script(script, z), i1, n)
    script += pin

    core = dependent_core(i1, i2, n)
    if apply_script(script, x) != ones:
        # x landed on 1..1 ^ e_i1: the cycle runs the other way
        core = list(reversed(core))
    circuit = _assemble(n, script, core, basis, mode)
    logger.debug(f"[Synth] dependent pair {pair} -> L={circuit.L}")
    return circuit


def synth_any_pair(pair: TranspositionPair, n: int, basis: str, mode: str, split: bool = False) -> Circuit:
    if pair.independent:
        return synth_pair(pair, n, basis, mode)
    return synth_dependent_pair(pair, n, basis, mode, split)
