#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Discrete power / logarithm truth tables

    f'_pow(v) = alpha^v        for v != 1..1,   f'_pow(1..1) = 0
    f_log(v)  = log_alpha(v)   for v != 0,      f_log(0)     = 1..1

Both tables are bijections and f_log is the inverse of f'_pow. Squaring an
element rotates its exponent left by one position, so the logarithm only has
to be tabulated for one representative per cyclic class {y, y^2, y^4, ...}.
"""

import logging
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from core.errors import DomainError, ParameterError
from core.mapping import BooleanMapping
from .field import Gf2PolyField

logger = logging.getLogger(__name__)

STRATEGIES = ("k_min", "k_max", "k_dist", "random")


def rotl(k: int, n: int, shift: int = 1) -> int:
    """Rotate the n-bit exponent k left"""
    if n <= 0:
        return k
    shift %= n
    mask = (1 << n) - 1
    return ((k << shift) | (k >> (n - shift))) & mask


def _popcount(x: int) -> int:
    return bin(x).count("1")


# =============================================================================
# Tables
# =============================================================================

def table_pow(field: Gf2PolyField) -> BooleanMapping:
    n = field.n
    table = np.empty(1 << n, dtype=np.int64)
    table[: field.M] = field.powers
    table[field.M] = 0
    return BooleanMapping(n, n, table)


def table_log(field: Gf2PolyField) -> BooleanMapping:
    n = field.n
    table = field.logs.copy()
    table[0] = field.M
    return BooleanMapping(n, n, table)


# =============================================================================
# Cyclic classes
# =============================================================================

@dataclass(frozen=True)
class CyclicClass:
    """R(y) = {y, y^2, y^4, ...}; members[i] = members[0]^(2^i)"""
    members: Tuple[int, ...]
    representative: int
    representative_exponent: int

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, y: int) -> bool:
        return y in self.members


def _choose(field: Gf2PolyField, members: List[int], strategy: str, rng: random.Random) -> int:
    exponents = {y: field.log(y) for y in members}
    if strategy == "k_min":
        return min(members, key=lambda y: exponents[y])
    if strategy == "k_max":
        return max(members, key=lambda y: exponents[y])
    if strategy == "k_dist":
        return min(
            members,
            key=lambda d: (sum(_popcount(exponents[d] ^ y) for y in members), exponents[d]),
        )
    return rng.choice(members)


def cyclic_classes(field: Gf2PolyField, strategy: str = "k_min", seed: Optional[int] = None) -> List[CyclicClass]:
    """Partition of the nonzero elements, each class starting at its smallest code"""
    if strategy not in STRATEGIES:
        raise ParameterError(f"unknown strategy {strategy!r}, expected one of {STRATEGIES}")
    if strategy == "random" and seed is None:
        from config import get_config
        seed = get_config().general.seed
    rng = random.Random(seed)

    seen = set()
    classes = []
    for y in range(1, field.M + 1):
        if y in seen:
            continue
        members = [y]
        z = field.square(y)
        while z != y:
            members.append(z)
            z = field.square(z)
        seen.update(members)
        d = _choose(field, members, strategy, rng)
        classes.append(CyclicClass(tuple(members), d, field.log(d)))
    logger.debug(f"[GF2] {len(classes)} cyclic classes for n={field.n} ({strategy})")
    return classes


def class_index(classes: List[CyclicClass]) -> Dict[int, CyclicClass]:
    return {y: cls for cls in classes for y in cls.members}


def reduced_log_table(field: Gf2PolyField, strategy: str = "k_min", seed: Optional[int] = None) -> BooleanMapping:
    """
    g(v) = exponent of the representative of R(v) for v != 0; g(0) = 1..1
    like f_log.
    """
    index = class_index(cyclic_classes(field, strategy, seed))
    n = field.n
    table = np.empty(1 << n, dtype=np.int64)
    table[0] = field.M
    for y in range(1, field.M + 1):
        table[y] = index[y].representative_exponent
    return BooleanMapping(n, n, table)


def exponent_recovery(field: Gf2PolyField, cls: CyclicClass, y: int) -> int:
    """k with alpha^k = y from the representative exponent by rotation"""
    if y not in cls:
        raise DomainError(f"{y} is not in the class of {cls.representative}")
    z = cls.representative
    for i in range(cls.size):
        if z == y:
            return rotl(cls.representative_exponent, field.n, i)
        z = field.square(z)
    raise DomainError(f"{y} is not reached from the representative {cls.representative}")


def reconstruct_log_table(field: Gf2PolyField, classes: List[CyclicClass]) -> BooleanMapping:
    """f_log rebuilt from the class representatives and exponent_recovery"""
    index = class_index(classes)
    n = field.n
    table = np.empty(1 << n, dtype=np.int64)
    table[0] = field.M
    for y in range(1, field.M + 1):
        table[y] = exponent_recovery(field, index[y], y)
    return BooleanMapping(n, n, table)
