#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Ancilla bookkeeping

Lines are laid out as inputs first, then outputs, then scratch lines handed
out in order by the allocator.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple

from core.errors import CapacityError, StructuralError


@dataclass(frozen=True)
class AncillaBudget:
    """Lines available to a construction beyond its inputs"""
    total_lines: int
    free_zeroed: FrozenSet[int] = field(default_factory=frozenset)
    dirty: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "free_zeroed", frozenset(self.free_zeroed))
        object.__setattr__(self, "dirty", frozenset(self.dirty))
        if self.free_zeroed & self.dirty:
            raise StructuralError(f"lines {sorted(self.free_zeroed & self.dirty)} both zeroed and dirty")
        for line in self.free_zeroed | self.dirty:
            if not 0 <= line < self.total_lines:
                raise StructuralError(f"line {line} outside 0..{self.total_lines - 1}")

    @property
    def q(self) -> int:
        return len(self.free_zeroed) + len(self.dirty)

    def require_zeroed(self, count: int) -> List[int]:
        if count > len(self.free_zeroed):
            raise CapacityError(f"need {count} zeroed lines, budget has {len(self.free_zeroed)}")
        return sorted(self.free_zeroed)[:count]


class LineAllocator:
    """Hands out fresh zeroed lines above the inputs and outputs"""

    def __init__(self, n_inputs: int, n_outputs: int = 0, max_width: Optional[int] = None):
        if n_inputs < 0 or n_outputs < 0:
            raise StructuralError(f"negative line counts {n_inputs}/{n_outputs}")
        self.n_inputs = n_inputs
        self.n_outputs = n_outputs
        self.max_width = max_width
        self._next = n_inputs + n_outputs
        if max_width is not None and self._next > max_width:
            raise CapacityError(f"{self._next} input/output lines exceed width {max_width}")

    @property
    def inputs(self) -> Tuple[int, ...]:
        return tuple(range(self.n_inputs))

    @property
    def outputs(self) -> Tuple[int, ...]:
        return tuple(range(self.n_inputs, self.n_inputs + self.n_outputs))

    @property
    def scratch(self) -> Tuple[int, ...]:
        return tuple(range(self.n_inputs + self.n_outputs, self._next))

    @property
    def width(self) -> int:
        return self._next

    def allocate(self, count: int = 1) -> List[int]:
        if self.max_width is not None and self._next + count > self.max_width:
            raise CapacityError(
                f"cannot allocate {count} line(s): {self._next} of {self.max_width} in use"
            )
        lines = list(range(self._next, self._next + count))
        self._next += count
        return lines

    def one(self) -> int:
        return self.allocate(1)[0]

    def budget(self) -> AncillaBudget:
        return AncillaBudget(self.width, free_zeroed=frozenset(self.scratch))
