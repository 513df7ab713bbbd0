#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Single transposition synthesis

The pair (x, y) is conjugated by NOT/CNOT gates onto (1..1, 1..1 ^ e_j), where
one gate E(j, all other lines) swaps it. The circuit is
script * core * reversed(script).
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from core.circuit import Circuit
from core.errors import StructuralError
from core.gates import Gate

ConjugationScript = List[Gate]


@dataclass
class CanonicalForm:
    """Script mapping the pair onto the canonical pair, plus the free bit j"""
    script: ConjugationScript
    j: int


def apply_script(script: Iterable[Gate], code: int) -> int:
    for gate in script:
        code = gate.apply(code)
    return code


def full_mask(n: int) -> int:
    return (1 << n) - 1


def canonicalize_transposition(x: int, y: int, n: int) -> CanonicalForm:
    """
    Conjugators taking {x, y} onto {1..1, 1..1 ^ e_j}.

    B10/B01/B00 are the lines where (x_i, y_i) is (1,0)/(0,1)/(0,0).
    """
    if x == y:
        raise StructuralError(f"transposition of a point with itself: {x}")
    size = 1 << n
    if not (0 <= x < size and 0 <= y < size):
        raise StructuralError(f"codes {x}, {y} outside width {n}")

    b10 = [i for i in range(n) if (x >> i) & 1 and not (y >> i) & 1]
    b01 = [i for i in range(n) if not (x >> i) & 1 and (y >> i) & 1]
    b00 = [i for i in range(n) if not (x >> i) & 1 and not (y >> i) & 1]

    script: ConjugationScript = []
    if b10 and b01:
        j, k = b10[0], b01[0]
        script.extend(Gate.cnot(k, i) for i in b10[1:])
        script.extend(Gate.cnot(j, i) for i in b01)
    else:
        diff = b10 or b01
        j = diff[0]
        if len(diff) > 1:
            script.append(Gate.not_(j))
            script.extend(Gate.cnot(j, i) for i in diff[1:])
            script.append(Gate.not_(j))
    script.extend(Gate.not_(i) for i in b00)
    return CanonicalForm(script, j)


def transposition_core(j: int, n: int) -> Gate:
    """E(j, all lines except j)"""
    return Gate(j, full_mask(n) & ~(1 << j))


def synth_transposition(t: Tuple[int, int], n: int) -> Circuit:
    """Algorithm A for one transposition; at most 2(n+1)+1 gates"""
    if n < 1:
        raise StructuralError("transposition synthesis needs at least one line")
    x, y = t
    form = canonicalize_transposition(x, y, n)
    gates = form.script + [transposition_core(form.j, n)] + list(reversed(form.script))
    return Circuit(n, tuple(gates))


def synth_transpositions(transpositions: Sequence[Tuple[int, int]], n: int) -> Circuit:
    """Product t1 ∘ t2 ∘ ... realized transposition by transposition"""
    gates: List[Gate] = []
    for t in transpositions:
        gates.extend(synth_transposition(t, n).gates)
    return Circuit(n, tuple(gates))