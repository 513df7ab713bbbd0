#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Reversible circuits: ordered gate lists on a fixed number of lines

Composition is left to right: in ``c1 + c2`` the gates of c1 act first, which
matches the permutation product (h1 ∘ h2)(x) = h2(h1(x)).
"""

from dataclasses import dataclass, field, replace
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import CapacityError, StructuralError
from .gates import Gate, apply_gate


def _default_dense_limit() -> int:
    from config import get_config
    return get_config().general.dense_limit


@dataclass(frozen=True)
class Circuit:
    """Width, gates and the annotations of an ancilla-based realization"""
    width: int
    gates: Tuple[Gate, ...] = ()
    significant_inputs: Optional[int] = None
    significant_outputs: Optional[Tuple[int, ...]] = None
    garbage_lines: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.width < 0:
            raise StructuralError(f"negative width {self.width}")
        object.__setattr__(self, "gates", tuple(self.gates))
        for gate in self.gates:
            if not isinstance(gate, Gate):
                raise StructuralError(f"not a gate: {gate!r}")
            gate.check_width(self.width)
        if self.significant_inputs is None:
            object.__setattr__(self, "significant_inputs", self.width)
        if not 0 <= self.significant_inputs <= self.width:
            raise StructuralError(
                f"significant_inputs {self.significant_inputs} outside 0..{self.width}"
            )
        if self.significant_outputs is not None:
            outputs = tuple(self.significant_outputs)
            if len(set(outputs)) != len(outputs) or any(not 0 <= o < self.width for o in outputs):
                raise StructuralError(f"bad significant_outputs {outputs}")
            object.__setattr__(self, "significant_outputs", outputs)
        object.__setattr__(self, "garbage_lines", frozenset(self.garbage_lines))

    # ---------------------------------------------------------------- metrics

    @property
    def L(self) -> int:
        return len(self.gates)

    @property
    def Q(self) -> int:
        return self.width - self.significant_inputs

    @property
    def max_controls(self) -> int:
        return max((g.controls for g in self.gates), default=0)

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    # -------------------------------------------------------------- building

    def __add__(self, other: "Circuit") -> "Circuit":
        if not isinstance(other, Circuit):
            return NotImplemented
        width = max(self.width, other.width)
        return replace(
            self,
            width=width,
            gates=self.gates + other.gates,
            significant_inputs=self.significant_inputs if self.width == width else other.significant_inputs,
            garbage_lines=self.garbage_lines | other.garbage_lines,
        )

    def append(self, gate: Gate) -> "Circuit":
        return replace(self, gates=self.gates + (gate,))

    def extend(self, gates: Iterable[Gate]) -> "Circuit":
        return replace(self, gates=self.gates + tuple(gates))

    def with_gates(self, gates: Iterable[Gate]) -> "Circuit":
        return replace(self, gates=tuple(gates))

    def with_width(self, width: int) -> "Circuit":
        """Same gates on more lines; extra lines count as ancilla"""
        if width < self.width:
            raise StructuralError(f"cannot shrink width {self.width} to {width}")
        return replace(self, width=width)

    def relabel(self, mapping: Sequence[int], width: int) -> "Circuit":
        """Move line i to line mapping[i] inside a circuit of the given width"""
        gates = tuple(g.relabel(mapping) for g in self.gates)
        outputs = None
        if self.significant_outputs is not None:
            outputs = tuple(mapping[o] for o in self.significant_outputs)
        return Circuit(
            width,
            gates,
            significant_inputs=min(self.significant_inputs, width),
            significant_outputs=outputs,
            garbage_lines=frozenset(mapping[i] for i in self.garbage_lines),
        )

    def is_palindromic(self, core_length: int) -> bool:
        """script * core * reversed(script) structure check"""
        if core_length < 0 or core_length > len(self.gates) or (len(self.gates) - core_length) % 2:
            return False
        half = (len(self.gates) - core_length) // 2
        script = self.gates[:half]
        tail = self.gates[half + core_length:]
        return tuple(reversed(script)) == tail

    # ------------------------------------------------------------ evaluation

    def run(self, code: int) -> int:
        """Image of one integer state code"""
        for gate in self.gates:
            if (code & gate.pos) == gate.pos and not (code & gate.neg):
                code ^= 1 << gate.target
        return code

    def __str__(self) -> str:
        body = " * ".join(str(g) for g in self.gates) or "(empty)"
        return f"Circuit(n={self.width}, L={self.L}): {body}"


# =============================================================================
# Operations
# =============================================================================

def eval_circuit(circuit: Circuit, bits: Sequence[int]) -> List[int]:
    """Left-to-right fold of apply_gate over a bit vector"""
    if len(bits) != circuit.width:
        raise StructuralError(f"vector of length {len(bits)} for width {circuit.width}")
    state = list(bits)
    for gate in circuit.gates:
        state = apply_gate(gate, state)
    return state


WIDE_LINES = 62


def evaluate_codes(circuit: Circuit, codes: np.ndarray) -> np.ndarray:
    """
    Vectorized evaluation of many state codes at once.

    Circuits wider than WIDE_LINES run on an object array of Python ints.
    """
    if circuit.width > WIDE_LINES:
        state = np.array([int(c) for c in codes], dtype=object)
        for gate in circuit.gates:
            fired = np.array([(s & gate.pos) == gate.pos and not s & gate.neg for s in state], dtype=bool)
            if fired.any():
                state = np.where(fired, state ^ (1 << gate.target), state)
        return state
    state = np.array(codes, dtype=np.int64, copy=True)
    for gate in circuit.gates:
        fired = ((state & gate.pos) == gate.pos) & ((state & gate.neg) == 0)
        state ^= fired.astype(np.int64) << gate.target
    return state


def evaluate_all(circuit: Circuit, dense_limit: Optional[int] = None) -> np.ndarray:
    """Images of all 2^width codes"""
    limit = dense_limit if dense_limit is not None else _default_dense_limit()
    if circuit.width > limit:
        raise CapacityError(f"width {circuit.width} exceeds dense limit {limit}")
    return evaluate_codes(circuit, np.arange(1 << circuit.width, dtype=np.int64))


def circuit_permutation(circuit: Circuit, dense_limit: Optional[int] = None):
    """Dense permutation induced by the circuit"""
    from permutations import Permutation
    return Permutation.from_table(circuit.width, evaluate_all(circuit, dense_limit))


def mirror(circuit: Circuit) -> Circuit:
    """Gates in reverse order; realizes the inverse permutation"""
    return replace(circuit, gates=tuple(reversed(circuit.gates)), significant_outputs=None)


def depth_layers(circuit: Circuit) -> List[List[Gate]]:
    """Greedy contiguous segmentation into layers of support-disjoint gates"""
    layers: List[List[Gate]] = []
    used = 0
    for gate in circuit.gates:
        if not layers or gate.support & used:
            layers.append([gate])
            used = gate.support
        else:
            layers[-1].append(gate)
            used |= gate.support
    return layers


def depth(circuit: Circuit) -> int:
    return len(depth_layers(circuit))


def _output_lines(circuit: Circuit, m: int, output_lines: Optional[Sequence[int]]) -> Tuple[int, ...]:
    if output_lines is not None:
        lines = tuple(output_lines)
    elif circuit.significant_outputs is not None:
        lines = circuit.significant_outputs
    else:
        lines = tuple(range(m))
    if len(lines) != m:
        raise StructuralError(f"{len(lines)} declared output lines for {m} outputs")
    if any(not 0 <= line < circuit.width for line in lines):
        raise StructuralError(f"output lines {lines} outside width {circuit.width}")
    return lines


def _significant_images(circuit: Circuit, n: int, dense_limit: Optional[int]) -> np.ndarray:
    limit = dense_limit if dense_limit is not None else _default_dense_limit()
    if n > limit:
        raise CapacityError(f"{n} significant inputs exceed dense limit {limit}")
    return evaluate_codes(circuit, np.arange(1 << n, dtype=np.int64))


def realizes(
    circuit: Circuit,
    mapping,
    perm_outputs: Optional[Sequence[int]] = None,
    output_lines: Optional[Sequence[int]] = None,
    dense_limit: Optional[int] = None,
) -> bool:
    """
    Check that feeding <x, 0...0> and reading the declared output lines yields f(x).

    Output j of the mapping is read from line ``lines[perm_outputs[j]]``;
    without ``perm_outputs`` the realization is strict.
    """
    if circuit.significant_inputs != mapping.n:
        raise StructuralError(
            f"circuit has {circuit.significant_inputs} significant inputs, mapping has {mapping.n}"
        )
    if circuit.width < mapping.m:
        raise StructuralError(f"width {circuit.width} below {mapping.m} outputs")
    lines = _output_lines(circuit, mapping.m, output_lines)
    order = list(perm_outputs) if perm_outputs is not None else list(range(mapping.m))
    if sorted(order) != list(range(mapping.m)):
        raise StructuralError(f"perm_outputs {order} is not a permutation of outputs")

    images = _significant_images(circuit, mapping.n, dense_limit)
    observed = np.zeros_like(images)
    for j in range(mapping.m):
        observed |= ((images >> lines[order[j]]) & 1) << j
    return bool(np.array_equal(observed, mapping.table))


def garbage_free(
    circuit: Circuit,
    mapping,
    output_lines: Optional[Sequence[int]] = None,
    dense_limit: Optional[int] = None,
) -> bool:
    """Every line outside the declared outputs ends at 0 for every significant input"""
    lines = _output_lines(circuit, mapping.m, output_lines)
    keep = 0
    for line in lines:
        keep |= 1 << line
    images = _significant_images(circuit, circuit.significant_inputs, dense_limit)
    if images.dtype == object:
        rest = ((1 << circuit.width) - 1) & ~keep
        return not any(int(v) & rest for v in images)
    return not bool(np.any(images & ~np.int64(keep)))
