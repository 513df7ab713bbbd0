#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Permutations of Z_2^n

Only moved points are stored, so sparse permutations on wide codes stay
cheap; a dense numpy table is produced on demand.

Product convention: (h ∘ g)(x) = g(h(x)), i.e. h acts first.
"""

import math
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from core.errors import CapacityError, StructuralError

Transposition = Tuple[int, int]
Cycle = Tuple[int, ...]


def transposition(a: int, b: int) -> Transposition:
    """Unordered pair stored as (min, max)"""
    if a == b:
        raise StructuralError(f"transposition of a point with itself: {a}")
    return (a, b) if a < b else (b, a)


def _dense_limit(limit: Optional[int]) -> int:
    if limit is not None:
        return limit
    from config import get_config
    return get_config().general.dense_limit


class Permutation:
    """Bijection on the 2^n codes of n lines"""

    __slots__ = ("n", "_map", "_hash")

    def __init__(self, n: int, moves: Optional[Dict[int, int]] = None, _checked: bool = False):
        if n < 0:
            raise StructuralError(f"negative width {n}")
        self.n = n
        self._hash = None
        moves = {x: y for x, y in (moves or {}).items() if x != y}
        if not _checked:
            size = 1 << n
            if any(not 0 <= x < size or not 0 <= y < size for x, y in moves.items()):
                raise StructuralError(f"code outside 0..{size - 1}")
            if set(moves) != set(moves.values()):
                raise StructuralError("moves do not form a bijection")
        self._map = moves

    # ---------------------------------------------------------------- builders

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n, {}, _checked=True)

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Disjoint cycles (a1 a2 ... ak): a1 -> a2 -> ... -> ak -> a1"""
        moves: Dict[int, int] = {}
        for cycle in cycles:
            cycle = list(cycle)
            if len(set(cycle)) != len(cycle):
                raise StructuralError(f"repeated code in cycle {cycle}")
            for i, x in enumerate(cycle):
                if x in moves:
                    raise StructuralError(f"cycles are not disjoint at code {x}")
                moves[x] = cycle[(i + 1) % len(cycle)]
        return cls(n, moves)

    @classmethod
    def from_transposition(cls, n: int, a: int, b: int) -> "Permutation":
        a, b = transposition(a, b)
        return cls(n, {a: b, b: a})

    @classmethod
    def from_table(cls, n: int, table) -> "Permutation":
        table = np.asarray(table, dtype=np.int64)
        size = 1 << n
        if table.shape != (size,):
            raise StructuralError(f"table has shape {table.shape}, expected ({size},)")
        if table.min(initial=0) < 0 or table.max(initial=0) >= size:
            raise StructuralError(f"table entries outside 0..{size - 1}")
        if np.unique(table).size != size:
            raise StructuralError("table is not a bijection")
        moved = np.nonzero(table != np.arange(size, dtype=np.int64))[0]
        return cls(n, {int(x): int(table[x]) for x in moved}, _checked=True)

    @classmethod
    def from_function(cls, n: int, func: Callable[[int], int], dense_limit: Optional[int] = None) -> "Permutation":
        limit = _dense_limit(dense_limit)
        if n > limit:
            raise CapacityError(f"width {n} exceeds dense limit {limit}")
        return cls.from_table(n, np.fromiter((func(x) for x in range(1 << n)), dtype=np.int64, count=1 << n))

    # -------------------------------------------------------------- accessors

    def apply(self, x: int) -> int:
        return self._map.get(x, x)

    __call__ = apply

    def moves(self) -> Dict[int, int]:
        return dict(self._map)

    def moved_points(self) -> List[int]:
        """M = {x : h(x) != x}, sorted"""
        return sorted(self._map)

    @property
    def support_size(self) -> int:
        return len(self._map)

    @property
    def m_param(self) -> int:
        """m = ceil(log2 |M|)"""
        size = len(self._map)
        return math.ceil(math.log2(size)) if size > 1 else 0

    def is_sparse(self, ratio: Optional[int] = None) -> bool:
        if ratio is None:
            from config import get_config
            ratio = get_config().general.sparse_ratio
        return len(self._map) * ratio <= (1 << self.n)

    @property
    def is_identity(self) -> bool:
        return not self._map

    def table(self, dense_limit: Optional[int] = None) -> np.ndarray:
        limit = _dense_limit(dense_limit)
        if self.n > limit:
            raise CapacityError(f"width {self.n} exceeds dense limit {limit}")
        table = np.arange(1 << self.n, dtype=np.int64)
        if self._map:
            keys = np.fromiter(self._map.keys(), dtype=np.int64, count=len(self._map))
            values = np.fromiter(self._map.values(), dtype=np.int64, count=len(self._map))
            table[keys] = values
        return table

    # ------------------------------------------------------------- structure

    def cycles(self) -> List[Cycle]:
        """Disjoint cycles, each starting at its smallest code, sorted by that code"""
        seen = set()
        result: List[Cycle] = []
        for start in sorted(self._map):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self._map[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self._map[x]
            result.append(tuple(cycle))
        return result

    @property
    def length(self) -> int:
        """Sum of cycle lengths (= |M|)"""
        return len(self._map)

    def transpositions(self) -> List[Transposition]:
        """(a1 a2 ... ak) = (a1,a2) ∘ (a1,a3) ∘ ... ∘ (a1,ak), cycle by cycle"""
        result: List[Transposition] = []
        for cycle in self.cycles():
            head = cycle[0]
            result.extend((head, x) for x in cycle[1:])
        return result

    def parity(self) -> str:
        odd = sum(len(c) - 1 for c in self.cycles()) % 2
        return "odd" if odd else "even"

    @property
    def is_even(self) -> bool:
        return self.parity() == "even"

    # ------------------------------------------------------------- algebra

    def _check_width(self, other: "Permutation"):
        if self.n != other.n:
            raise StructuralError(f"width mismatch {self.n} != {other.n}")

    def compose(self, other: "Permutation") -> "Permutation":
        """self ∘ other: self acts first"""
        self._check_width(other)
        moves = {}
        for x in set(self._map) | set(other._map):
            y = other.apply(self.apply(x))
            if y != x:
                moves[x] = y
        return Permutation(self.n, moves, _checked=True)

    __mul__ = compose

    def inverse(self) -> "Permutation":
        return Permutation(self.n, {y: x for x, y in self._map.items()}, _checked=True)

    def conjugate(self, g: "Permutation") -> "Permutation":
        """h^g = g^-1 ∘ h ∘ g"""
        return g.inverse().compose(self).compose(g)

    def lift(self) -> "Permutation":
        """Same permutation on both halves of one extra top line (always even)"""
        high = 1 << self.n
        moves = dict(self._map)
        moves.update({x | high: y | high for x, y in self._map.items()})
        return Permutation(self.n + 1, moves, _checked=True)

    def extend_to(self, width: int) -> "Permutation":
        """Act on the low lines and leave the extra high lines untouched"""
        if width < self.n:
            raise StructuralError(f"cannot extend width {self.n} to {width}")
        if width == self.n:
            return self
        moves = {}
        for high in range(1 << (width - self.n)):
            offset = high << self.n
            moves.update({x | offset: y | offset for x, y in self._map.items()})
        return Permutation(width, moves, _checked=True)

    # ---------------------------------------------------------------- dunder

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.n == other.n and self._map == other._map

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._map.items())))
        return self._hash

    def __repr__(self) -> str:
        body = "".join("(" + " ".join(str(x) for x in c) + ")" for c in self.cycles()) or "()"
        return f"Permutation(n={self.n}, {body})"


# =============================================================================
# Module-level operations
# =============================================================================

def compose(h1: Permutation, h2: Permutation) -> Permutation:
    return h1.compose(h2)


def inverse(h: Permutation) -> Permutation:
    return h.inverse()


def cycle_decomposition(h: Permutation) -> List[Cycle]:
    return h.cycles()


def parity(h: Permutation) -> str:
    return h.parity()


def conjugate(h: Permutation, g: Permutation) -> Permutation:
    return h.conjugate(g)


def product(n: int, factors: Iterable[Permutation]) -> Permutation:
    """Left-to-right product of a sequence of permutations"""
    result = Permutation.identity(n)
    for factor in factors:
        result = result.compose(factor)
    return result
