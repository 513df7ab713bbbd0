#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Garbage removal for out-of-place realizations of a bijection

An out-of-place circuit c = P + F keeps its inputs, computes scratch values in
P without touching the output lines and XORs results onto the outputs in F
(gates targeting outputs, never controlled by them). Given such circuits for
f and f^-1:

    result = c * mirror(P) * c_inv' * mirror(P_inv')

where c_inv' reads the output lines of c and XORs f^-1(f(x)) = x onto the
input lines. Every line except the outputs ends at 0.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from core.circuit import Circuit, evaluate_codes, garbage_free, realizes
from core.errors import VerificationError
from core.gates import Gate, mask_of
from core.mapping import BooleanMapping

logger = logging.getLogger(__name__)


def split_out_of_place(circuit: Circuit) -> Tuple[List[Gate], List[Gate]]:
    """(P, F) of an out-of-place circuit, or VerificationError"""
    if circuit.significant_outputs is None:
        raise VerificationError("circuit declares no output lines")
    outputs = mask_of(circuit.significant_outputs)
    inputs = (1 << circuit.significant_inputs) - 1
    if outputs & inputs:
        raise VerificationError("output lines overlap the input lines")

    gates = list(circuit.gates)
    cut = next((k for k, g in enumerate(gates) if (1 << g.target) & outputs), len(gates))
    prepare, final = gates[:cut], gates[cut:]
    for g in prepare:
        if g.support & outputs:
            raise VerificationError(f"gate {g} touches an output line before the output stage")
    for g in final:
        if not (1 << g.target) & outputs or g.control_mask & outputs:
            raise VerificationError(f"gate {g} breaks the output stage")
    for g in gates:
        if (1 << g.target) & inputs:
            raise VerificationError(f"gate {g} writes input line {g.target}")
    return prepare, final


def _mapping_of(circuit: Circuit) -> BooleanMapping:
    n = circuit.significant_inputs
    images = evaluate_codes(circuit, np.arange(1 << n, dtype=np.int64))
    table = np.zeros(1 << n, dtype=np.int64)
    for j, line in enumerate(circuit.significant_outputs):
        table |= np.array([(int(v) >> line) & 1 for v in images], dtype=np.int64) << j
    return BooleanMapping(n, len(circuit.significant_outputs), table)


def _scratch(circuit: Circuit) -> List[int]:
    used = set(range(circuit.significant_inputs)) | set(circuit.significant_outputs)
    return [i for i in range(circuit.width) if i not in used]


def cleanup_by_mirroring(
    circuit: Circuit,
    inverse_circuit: Circuit,
    f: Optional[BooleanMapping] = None,
) -> Circuit:
    """
    Garbage-free realization of a bijection f from out-of-place circuits for
    f and f^-1. L(result) <= 2 L(c) + 2 L(c_inv).
    """
    prepare, _ = split_out_of_place(circuit)
    inv_prepare, _ = split_out_of_place(inverse_circuit)
    if f is None:
        f = _mapping_of(circuit)
    elif not realizes(circuit, f):
        raise VerificationError("circuit does not realize the given mapping")
    if not f.is_bijective:
        raise VerificationError("garbage removal by mirroring needs a bijection")
    n = f.n
    if inverse_circuit.significant_inputs != n or len(inverse_circuit.significant_outputs) != n:
        raise VerificationError("inverse circuit has the wrong arity")
    if not realizes(inverse_circuit, f.inverse()):
        raise VerificationError("inverse circuit does not realize f^-1")

    outputs = circuit.significant_outputs
    scratch = _scratch(circuit)
    inv_scratch = _scratch(inverse_circuit)
    width = circuit.width + max(0, len(inv_scratch) - len(scratch))
    scratch += list(range(circuit.width, width))

    relabel: Dict[int, int] = {}
    for i in range(n):
        relabel[i] = outputs[i]
    for j, line in enumerate(inverse_circuit.significant_outputs):
        relabel[line] = j
    for line, target in zip(inv_scratch, scratch):
        relabel[line] = target
    mapping: Sequence[int] = [relabel[i] for i in range(inverse_circuit.width)]

    inv = inverse_circuit.relabel(mapping, width)
    inv_prepare = [g.relabel(mapping) for g in inv_prepare]

    gates = (
        list(circuit.gates)
        + list(reversed(prepare))
        + list(inv.gates)
        + list(reversed(inv_prepare))
    )
    result = Circuit(width, tuple(gates), significant_inputs=n, significant_outputs=outputs)
    if not (realizes(result, f) and garbage_free(result, f)):
        raise VerificationError("mirrored composite is not a garbage-free realization")
    logger.info(
        f"[Cleanup] L={result.L} from L(c)={circuit.L}, L(c_inv)={inverse_circuit.L}, width={width}"
    )
    return result
