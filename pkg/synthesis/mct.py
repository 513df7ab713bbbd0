#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Multi-control Toffoli lowering onto gates with at most two controls

Modes:
- recursive4:    C_{I;t} = C_{ik,l;t} * C_{I-ik;l} * C_{ik,l;t} * C_{I-ik;l}
                 applied recursively with one borrowed line l
- barenco8:      two halves, each a V-chain on borrowed lines, 8(k-3) gates for k >= 5
- clean_ancilla: 2k-3 Toffolis on k-2 zeroed ancilla, restored afterwards
- dirty_ancilla: k-1 Toffolis on k-2 zeroed ancilla, left holding garbage

Borrowed lines may hold any value and are restored.
"""

import logging
from typing import Iterable, List, Optional, Sequence

from core.circuit import Circuit
from core.errors import CapacityError, ParameterError
from core.gates import Gate, lines_of, mask_of

logger = logging.getLogger(__name__)

MODES = ("recursive4", "barenco8", "clean_ancilla", "dirty_ancilla")


def _toffoli(controls: Sequence[int], target: int) -> Gate:
    return Gate(target, mask_of(controls))


def _free_lines(width: int, used: int, candidates: Optional[Iterable[int]] = None) -> List[int]:
    pool = range(width) if candidates is None else candidates
    return sorted(line for line in pool if not (used >> line) & 1 and line < width)


# =============================================================================
# Building blocks
# =============================================================================

def recursive4(controls: Sequence[int], target: int, width: int) -> List[Gate]:
    """
    Gate count 3 * 2^(k-2) - 2 for k >= 2 controls.
    Needs one line outside {target} ∪ controls.
    """
    controls = sorted(controls)
    if len(controls) <= 2:
        return [_toffoli(controls, target)]
    used = mask_of(controls) | (1 << target)
    free = _free_lines(width, used)
    if not free:
        raise CapacityError(f"no free line for a {len(controls)}-control gate on {width} lines")
    l = free[0]
    last, rest = controls[-1], controls[:-1]
    head = [_toffoli([last, l], target)]
    inner = recursive4(rest, l, width)
    return head + inner + head + inner


def v_chain(controls: Sequence[int], target: int, borrowed: Sequence[int]) -> List[Gate]:
    """
    m-control gate with m-2 borrowed lines, 4(m-2) Toffolis.

    U_i = T(c_{i+2}, a_i; a_{i+1}), U_{m-2} = T(c_m, a_{m-2}; t), B = T(c_1, c_2; a_1);
    order U_{m-2}..U_1 B U_1..U_{m-2} U_{m-3}..U_1 B U_1..U_{m-3}.
    """
    c = list(controls)
    m = len(c)
    if m <= 2:
        return [_toffoli(c, target)]
    a = list(borrowed)[: m - 2]
    if len(a) < m - 2:
        raise CapacityError(f"{m}-control chain needs {m - 2} borrowed lines, got {len(a)}")

    def u(i: int) -> Gate:
        # 1-based i
        if i == m - 2:
            return _toffoli([c[m - 1], a[m - 3]], target)
        return _toffoli([c[i + 1], a[i - 1]], a[i])

    base = _toffoli([c[0], c[1]], a[0])
    down = [u(i) for i in range(m - 2, 0, -1)]
    up = [u(i) for i in range(1, m - 1)]
    down2 = [u(i) for i in range(m - 3, 0, -1)]
    up2 = [u(i) for i in range(1, m - 2)]
    return down + [base] + up + down2 + [base] + up2


def barenco8(controls: Sequence[int], target: int, width: int) -> List[Gate]:
    """Split into ceil(k/2) and floor(k/2) controls joined through one borrowed line"""
    controls = sorted(controls)
    k = len(controls)
    if k <= 2:
        return [_toffoli(controls, target)]
    if k == 3:
        return recursive4(controls, target, width)
    used = mask_of(controls) | (1 << target)
    free = _free_lines(width, used)
    if not free:
        raise CapacityError(f"no free line for a {k}-control gate on {width} lines")
    l = free[0]
    m1 = (k + 1) // 2
    c1, c2 = controls[:m1], controls[m1:]

    # E(l, C1) borrows from target and C2, E(t, C2+l) borrows from C1
    first = v_chain(c1, l, [target] + c2 + free[1:])
    second = v_chain(c2 + [l], target, c1 + free[1:])
    return first + second + first + second


def clean_ancilla_chain(controls: Sequence[int], target: int, ancilla: Sequence[int]) -> List[Gate]:
    """2k-3 Toffolis; ancilla start and end at 0"""
    c = sorted(controls)
    k = len(c)
    if k <= 2:
        return [_toffoli(c, target)]
    a = list(ancilla)
    if len(a) < k - 2:
        raise CapacityError(f"{k}-control gate needs {k - 2} ancilla lines, got {len(a)}")
    compute = [_toffoli([c[0], c[1]], a[0])]
    compute += [_toffoli([a[i - 1], c[i + 1]], a[i]) for i in range(1, k - 2)]
    final = _toffoli([a[k - 3], c[k - 1]], target)
    return compute + [final] + list(reversed(compute))


def dirty_ancilla_chain(controls: Sequence[int], target: int, ancilla: Sequence[int]) -> List[Gate]:
    """k-1 Toffolis; ancilla keep the partial conjunctions"""
    c = sorted(controls)
    k = len(c)
    if k <= 2:
        return [_toffoli(c, target)]
    return clean_ancilla_chain(c, target, ancilla)[: k - 1]


def _peel_negative(gate: Gate, body: List[Gate]) -> List[Gate]:
    flips = [Gate.not_(i) for i in lines_of(gate.neg)]
    return flips + body + flips


# =============================================================================
# Public operations
# =============================================================================

def decompose_mct(
    gate: Gate,
    mode: str = "barenco8",
    width: Optional[int] = None,
    free_lines: Optional[Sequence[int]] = None,
    ancilla_lines: Optional[Sequence[int]] = None,
) -> Circuit:
    """
    Lower one k-control gate.

    Args:
        gate: gate to lower; negative controls are peeled with NOT pairs
        mode: one of recursive4, barenco8, clean_ancilla, dirty_ancilla
        width: circuit width (defaults to the smallest one holding every line)
        free_lines: lines recursive4/barenco8 may borrow (default: every unused line)
        ancilla_lines: zeroed lines for the ancilla modes
    """
    if mode not in MODES:
        raise ParameterError(f"unknown mct mode {mode!r}, expected one of {MODES}")
    extra = list(free_lines or []) + list(ancilla_lines or [])
    if width is None:
        width = max([gate.max_line] + extra) + 1
    gate.check_width(width)

    if gate.controls <= 2:
        return Circuit(width, (gate,))

    controls = lines_of(gate.control_mask)
    garbage = frozenset()
    if mode in ("recursive4", "barenco8"):
        if free_lines is not None:
            # restrict the borrowable pool by masking everything else as used
            pool = set(free_lines) - set(gate.lines())
            if not pool:
                raise CapacityError(f"no free line among {list(free_lines)} for {gate}")
            blocked = mask_of(i for i in range(width) if i not in pool and i not in gate.lines())
            body = _lower_with_blocked(controls, gate.target, width, blocked, mode)
        elif mode == "recursive4":
            body = recursive4(controls, gate.target, width)
        else:
            body = barenco8(controls, gate.target, width)
    else:
        ancilla = [a for a in (ancilla_lines or []) if not (gate.support >> a) & 1]
        if mode == "clean_ancilla":
            body = clean_ancilla_chain(controls, gate.target, ancilla)
        else:
            body = dirty_ancilla_chain(controls, gate.target, ancilla)
            garbage = frozenset(ancilla[: len(controls) - 2])

    gates = _peel_negative(gate, body)
    logger.debug(f"[MCT] {gate} -> {len(gates)} gates ({mode})")
    return Circuit(width, tuple(gates), garbage_lines=garbage)


def _lower_with_blocked(controls: List[int], target: int, width: int, blocked: int, mode: str) -> List[Gate]:
    """Lower on a relabelled register holding only the allowed lines"""
    allowed = [i for i in range(width) if not (blocked >> i) & 1]
    index = {line: pos for pos, line in enumerate(allowed)}
    local_controls = [index[c] for c in controls]
    local_target = index[target]
    if mode == "recursive4":
        body = recursive4(local_controls, local_target, len(allowed))
    else:
        body = barenco8(local_controls, local_target, len(allowed))
    return [g.relabel(allowed) for g in body]


def decompose_circuit(circuit: Circuit, basis: str = "omega2", mode: str = "barenco8") -> Circuit:
    """Lower every gate with more than two controls (basis omega2); omega is left as is"""
    if basis == "omega":
        return circuit
    if basis != "omega2":
        raise ParameterError(f"unknown basis {basis!r}")
    if mode not in ("recursive4", "barenco8"):
        raise ParameterError(f"circuit lowering needs a borrowing mode, got {mode!r}")
    gates: List[Gate] = []
    for gate in circuit.gates:
        if gate.controls <= 2:
            gates.append(gate)
        else:
            gates.extend(decompose_mct(gate, mode, circuit.width).gates)
    return circuit.with_gates(gates)
