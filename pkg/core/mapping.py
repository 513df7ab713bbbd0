#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Boolean mappings Z_2^n -> Z_2^m given by a full truth table

Input code x uses bit i for variable x_{i+1}; the table entry is the output
code with bit j for output j+1.
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import CapacityError, StructuralError


@dataclass(frozen=True)
class BooleanMapping:
    """Truth table of a mapping with n inputs and m outputs"""
    n: int
    m: int
    table: np.ndarray = field(repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise StructuralError(f"negative arity n={self.n} m={self.m}")
        table = np.asarray(self.table, dtype=np.int64)
        if table.shape != (1 << self.n,):
            raise StructuralError(f"table has shape {table.shape}, expected ({1 << self.n},)")
        if table.size and (table.min() < 0 or table.max() >= (1 << self.m)):
            raise StructuralError(f"table entries outside 0..{(1 << self.m) - 1}")
        table = table.copy()
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BooleanMapping):
            return NotImplemented
        return self.n == other.n and self.m == other.m and bool(np.array_equal(self.table, other.table))

    def __hash__(self) -> int:
        return hash((self.n, self.m, self.table.tobytes()))

    # ---------------------------------------------------------------- builders

    @classmethod
    def from_function(cls, n: int, m: int, func: Callable[[int], int], dense_limit: Optional[int] = None):
        if dense_limit is None:
            from config import get_config
            dense_limit = get_config().general.dense_limit
        if n > dense_limit:
            raise CapacityError(f"{n} inputs exceed dense limit {dense_limit}")
        return cls(n, m, np.fromiter((func(x) for x in range(1 << n)), dtype=np.int64, count=1 << n))

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, np.arange(1 << n, dtype=np.int64))

    @classmethod
    def from_permutation(cls, perm):
        return cls(perm.n, perm.n, perm.table())

    # -------------------------------------------------------------- properties

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    @property
    def is_bijective(self) -> bool:
        if self.n != self.m:
            return False
        return int(np.unique(self.table).size) == self.table.size

    @property
    def max_preimage(self) -> int:
        """d: the largest number of inputs sharing one output"""
        if not self.table.size:
            return 0
        return int(np.bincount(self.table).max())

    def output_bit(self, j: int) -> np.ndarray:
        """Column of output j as a 0/1 array over all inputs"""
        return (self.table >> j) & 1

    def as_permutation(self):
        if not self.is_bijective:
            raise StructuralError("mapping is not a bijection")
        from permutations import Permutation
        return Permutation.from_table(self.n, self.table)

    def inverse(self) -> "BooleanMapping":
        if not self.is_bijective:
            raise StructuralError("only bijective mappings have an inverse")
        inv = np.empty_like(self.table)
        inv[self.table] = np.arange(self.table.size, dtype=np.int64)
        return BooleanMapping(self.n, self.n, inv)


def min_ancilla(mapping: BooleanMapping) -> int:
    """
    Lower bound on the additional inputs of any realization.

    With d the largest preimage size, the outputs plus ceil(log2 d) index
    bits must fit on n + q lines; for n -> n mappings this is q >= ceil(log2 d).
    """
    d = mapping.max_preimage
    index_bits = math.ceil(math.log2(d)) if d > 1 else 0
    return max(0, mapping.m + index_bits - mapping.n)
