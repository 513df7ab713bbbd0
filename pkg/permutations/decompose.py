#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Factorizations used by the synthesis algorithms

- pair_decomposition: h = p1 ∘ p2 ∘ ... where every p is a product of two
  transpositions, independent except possibly the last one
- groups_of_k: h = G1 ∘ ... ∘ Gt ∘ h' where every G is K pairwise
  independent transpositions and h' is small
"""

import logging
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from core.errors import CapacityError, ParameterError, ParityError, StructuralError
from .permutation import Cycle, Permutation, Transposition, product, transposition

logger = logging.getLogger(__name__)


# =============================================================================
# Types
# =============================================================================

@dataclass(frozen=True)
class TranspositionPair:
    """first ∘ second"""
    first: Transposition
    second: Transposition

    @property
    def points(self) -> Tuple[int, ...]:
        return self.first + self.second

    @property
    def independent(self) -> bool:
        return len(set(self.points)) == 4

    @property
    def dependent(self) -> bool:
        return len(set(self.points)) == 3

    def as_permutation(self, n: int) -> Permutation:
        return Permutation.from_transposition(n, *self.first).compose(
            Permutation.from_transposition(n, *self.second)
        )

    def dependent_form(self) -> Tuple[int, int, int]:
        """(x, y, z) such that the pair is (x,y) ∘ (x,z)"""
        if not self.dependent:
            raise StructuralError(f"pair {self} is not dependent")
        shared = set(self.first) & set(self.second)
        x = shared.pop()
        y = self.first[1] if self.first[0] == x else self.first[0]
        z = self.second[1] if self.second[0] == x else self.second[0]
        return x, y, z


@dataclass
class KGroupDecomposition:
    """h = G1 ∘ G2 ∘ ... ∘ Gt ∘ remainder"""
    groups: List[List[Transposition]] = field(default_factory=list)
    remainder: Permutation = None


# =============================================================================
# Pair decomposition
# =============================================================================

def _drop(cycle: Cycle, point: int) -> Cycle:
    return tuple(x for x in cycle if x != point)


def pair_decomposition(h: Permutation) -> List[TranspositionPair]:
    """
    Split an even permutation into transposition pairs.

    A cycle of length >= 4 gives (i1,i2) ∘ (i3,i4) and keeps (i1,i3,i5,...);
    two cycles give (i1,i2) ∘ (j1,j2) and lose i2 and j2; a lone 3-cycle
    (i1,i2,i3) is returned as the dependent pair (i1,i2) ∘ (i1,i3).
    """
    if not h.is_even:
        raise ParityError(f"odd permutation on {h.n} lines has no pair decomposition")

    cycles = h.cycles()
    pairs: List[TranspositionPair] = []
    while cycles:
        c = cycles[0]
        if len(c) >= 4:
            pairs.append(TranspositionPair(transposition(c[0], c[1]), transposition(c[2], c[3])))
            rest = (c[0], c[2]) + c[4:]
            cycles = ([rest] if len(rest) >= 2 else []) + cycles[1:]
        elif len(cycles) >= 2:
            d = cycles[1]
            pairs.append(TranspositionPair(transposition(c[0], c[1]), transposition(d[0], d[1])))
            rests = [r for r in (_drop(c, c[1]), _drop(d, d[1])) if len(r) >= 2]
            cycles = rests + cycles[2:]
        elif len(c) == 3:
            pairs.append(TranspositionPair(transposition(c[0], c[1]), transposition(c[0], c[2])))
            cycles = []
        else:
            # unreachable for even h
            raise ParityError(f"single transposition {c} left over")
        cycles.sort(key=lambda cyc: cyc[0])

    logger.debug(f"[Decompose] {len(pairs)} pairs for |M|={h.support_size}")
    return pairs


def split_dependent(pair: TranspositionPair, n: int) -> Tuple[TranspositionPair, TranspositionPair]:
    """
    (x,y) ∘ (x,z) = ((x,y) ∘ (a,b)) ∘ ((a,b) ∘ (x,z)),
    a and b the two smallest codes outside {x, y, z}
    """
    x, y, z = pair.dependent_form()
    if (1 << n) < 5:
        raise CapacityError(f"{n} lines leave no room for an auxiliary transposition")
    free = [c for c in range(5) if c not in (x, y, z)]
    a, b = free[0], free[1]
    return (
        TranspositionPair(transposition(x, y), transposition(a, b)),
        TranspositionPair(transposition(a, b), transposition(x, z)),
    )


# =============================================================================
# K-groups
# =============================================================================

def independent_transpositions(cycle: Sequence[int], count: int) -> Tuple[List[Transposition], Cycle]:
    """
    Peel up to ``count`` independent transpositions off a cycle:
    (a1..al) = (a1,a2) ∘ (a3,a4) ∘ ... ∘ (a1,a3,...,rest)
    """
    cycle = tuple(cycle)
    taken = min(count, len(cycle) // 2)
    trans = [transposition(cycle[2 * i], cycle[2 * i + 1]) for i in range(taken)]
    partners = {cycle[2 * i + 1] for i in range(taken)}
    rest = tuple(x for x in cycle if x not in partners)
    return trans, (rest if len(rest) >= 2 else ())


def groups_of_k(h: Permutation, K: int) -> KGroupDecomposition:
    """Greedy extraction of groups of K independent transpositions"""
    if K < 1:
        raise ParameterError(f"group size K={K} must be positive")

    result = KGroupDecomposition()
    cycles = h.cycles()
    while sum(len(c) // 2 for c in cycles) >= K:
        group: List[Transposition] = []
        remaining: List[Cycle] = []
        for c in cycles:
            need = K - len(group)
            if need > 0:
                trans, rest = independent_transpositions(c, need)
                group.extend(trans)
                if rest:
                    remaining.append(rest)
            else:
                remaining.append(c)
        result.groups.append(group)
        cycles = sorted(remaining, key=lambda cyc: cyc[0])

    result.remainder = Permutation.from_cycles(h.n, cycles)
    logger.debug(
        f"[Decompose] {len(result.groups)} groups of {K}, remainder |M|={result.remainder.support_size}"
    )
    return result


def group_permutation(n: int, group: Sequence[Transposition]) -> Permutation:
    return product(n, (Permutation.from_transposition(n, a, b) for a, b in group))
