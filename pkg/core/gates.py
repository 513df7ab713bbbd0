#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Generalized Toffoli gate E(t, I, J)

A gate flips its target line iff every positive control is 1 and every
negative control is 0. Lines are 0-based; line i is bit i of the integer
code of a state (line 0 = least significant bit).
"""

from dataclasses import dataclass
from typing import Iterable, List, Tuple

from .errors import StructuralError


def mask_of(lines: Iterable[int]) -> int:
    """Bitmask with one bit per line index"""
    mask = 0
    for line in lines:
        if line < 0:
            raise StructuralError(f"negative line index {line}")
        mask |= 1 << line
    return mask


def lines_of(mask: int) -> List[int]:
    """Sorted line indices of a bitmask"""
    lines = []
    index = 0
    while mask:
        if mask & 1:
            lines.append(index)
        mask >>= 1
        index += 1
    return lines


@dataclass(frozen=True, order=True)
class Gate:
    """One generalized Toffoli gate, controls stored as bitmasks"""
    target: int
    pos: int = 0   # I
    neg: int = 0   # J

    def __post_init__(self):
        if self.target < 0:
            raise StructuralError(f"negative target {self.target}")
        if self.pos < 0 or self.neg < 0:
            raise StructuralError("control masks must be non-negative")
        if self.pos & self.neg:
            raise StructuralError(
                f"lines {lines_of(self.pos & self.neg)} are both positive and negative controls"
            )
        if (self.pos | self.neg) >> self.target & 1:
            raise StructuralError(f"target {self.target} is among the controls")

    # ---------------------------------------------------------------- builders

    @classmethod
    def mct(cls, target: int, pos: Iterable[int] = (), neg: Iterable[int] = ()) -> "Gate":
        return cls(target, mask_of(pos), mask_of(neg))

    @classmethod
    def not_(cls, target: int) -> "Gate":
        return cls(target)

    @classmethod
    def cnot(cls, control: int, target: int) -> "Gate":
        return cls(target, 1 << control)

    @classmethod
    def toffoli(cls, c1: int, c2: int, target: int) -> "Gate":
        return cls(target, (1 << c1) | (1 << c2))

    # -------------------------------------------------------------- properties

    @property
    def controls(self) -> int:
        """Total number of controls |I ∪ J|"""
        return bin(self.pos | self.neg).count("1")

    @property
    def control_mask(self) -> int:
        return self.pos | self.neg

    @property
    def support(self) -> int:
        """Mask of every line the gate touches"""
        return self.pos | self.neg | (1 << self.target)

    @property
    def max_line(self) -> int:
        return self.support.bit_length() - 1

    @property
    def kind(self) -> str:
        k = self.controls
        if k == 0:
            return "NOT"
        if k == 1:
            return "CNOT"
        if k == 2:
            return "2-CNOT"
        return f"{k}-CNOT"

    def pos_lines(self) -> List[int]:
        return lines_of(self.pos)

    def neg_lines(self) -> List[int]:
        return lines_of(self.neg)

    def lines(self) -> List[int]:
        return lines_of(self.support)

    def key(self) -> Tuple[int, int, int]:
        return (self.target, self.pos, self.neg)

    # -------------------------------------------------------------- semantics

    def fires(self, code: int) -> bool:
        return (code & self.pos) == self.pos and not (code & self.neg)

    def apply(self, code: int) -> int:
        """Image of one state code"""
        if (code & self.pos) == self.pos and not (code & self.neg):
            return code ^ (1 << self.target)
        return code

    def check_width(self, width: int):
        if self.max_line >= width:
            raise StructuralError(f"gate {self} uses line {self.max_line} >= width {width}")

    def relabel(self, mapping) -> "Gate":
        """Same gate with every line index i replaced by mapping[i]"""
        return Gate(
            mapping[self.target],
            mask_of(mapping[i] for i in lines_of(self.pos)),
            mask_of(mapping[i] for i in lines_of(self.neg)),
        )

    def __str__(self) -> str:
        controls = [str(i) for i in lines_of(self.pos)] + [f"{i}'" for i in lines_of(self.neg)]
        if not controls:
            return f"N[{self.target}]"
        return f"C[{','.join(controls)};{self.target}]"


def apply_gate(gate: Gate, bits: List[int]) -> List[int]:
    """Apply a gate to a bit vector (bits[i] is line i)"""
    width = len(bits)
    gate.check_width(width)
    code = 0
    for i, bit in enumerate(bits):
        if bit not in (0, 1):
            raise StructuralError(f"bit vector entry {i} is {bit!r}")
        code |= bit << i
    out = gate.apply(code)
    return [(out >> i) & 1 for i in range(width)]
