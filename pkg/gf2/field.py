#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Arithmetic in GF(2^n) = GF(2)[x] / f(x)

Elements and polynomials are bitmasks with bit i holding the coefficient of
x^i (a vector <v_1, ..., v_n> is v_1 + v_2 x + ... + v_n x^(n-1)).
"""

import logging
import re
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Tuple

import numpy as np

from core.errors import DomainError, ParameterError

logger = logging.getLogger(__name__)


# =============================================================================
# Polynomials over GF(2)
# =============================================================================

def degree(a: int) -> int:
    return a.bit_length() - 1


def poly_mod(a: int, m: int) -> int:
    dm = degree(m)
    while a and degree(a) >= dm:
        a ^= m << (degree(a) - dm)
    return a


def poly_mulmod(a: int, b: int, m: int) -> int:
    dm = degree(m)
    result = 0
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if (a >> dm) & 1:
            a ^= m
    return result


def is_irreducible(poly: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2"""
    d = degree(poly)
    if d < 1:
        return False
    if d == 1:
        return True
    for divisor in range(2, 1 << (d // 2 + 1)):
        if poly_mod(poly, divisor) == 0:
            return False
    return True


def _prime_factors(m: int) -> List[int]:
    factors = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            factors.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        factors.append(m)
    return factors


_TERM = re.compile(r"^(?:(1)|x(?:\^?(\d+))?)$")


def parse_poly(text: str) -> int:
    """'x^4+x+1', '1 + x', '0x13' or '0b10011' as a bitmask"""
    s = text.replace(" ", "").lower()
    if not s:
        raise ParameterError("empty polynomial")
    if s.startswith("0x"):
        return int(s, 16)
    if s.startswith("0b"):
        return int(s, 2)
    if s.isdigit() and s not in ("0", "1"):
        raise ParameterError(f"ambiguous polynomial {text!r}; use 0x.. or 0b..")
    if s == "0":
        return 0
    value = 0
    for term in s.split("+"):
        match = _TERM.match(term)
        if not match:
            raise ParameterError(f"bad polynomial term {term!r} in {text!r}")
        if match.group(1):
            exponent = 0
        else:
            exponent = int(match.group(2)) if match.group(2) else 1
        value ^= 1 << exponent
    return value


def format_poly(a: int) -> str:
    if a == 0:
        return "0"
    terms = []
    for i in range(degree(a), -1, -1):
        if (a >> i) & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return " + ".join(terms)


# =============================================================================
# Field
# =============================================================================

class Gf2PolyField:
    """GF(2^n) with a primitive generator alpha"""

    def __init__(self, modulus: int, alpha: Optional[int] = None):
        if not is_irreducible(modulus):
            raise ParameterError(f"modulus {format_poly(modulus)} is not irreducible")
        self.modulus = modulus
        self.n = degree(modulus)
        self.M = (1 << self.n) - 1
        if alpha is None:
            alpha = find_primitive_element(self)
        alpha = poly_mod(alpha, modulus)
        if not self.is_primitive(alpha):
            raise ParameterError(
                f"alpha = {format_poly(alpha)} is not primitive modulo {format_poly(modulus)}"
            )
        self.alpha = alpha
        logger.debug(f"[GF2] field n={self.n} f={format_poly(modulus)} alpha={format_poly(alpha)}")

    # ------------------------------------------------------------ arithmetic

    def _check(self, a: int):
        if not 0 <= a <= self.M:
            raise DomainError(f"{a} is not an element of GF(2^{self.n})")

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return poly_mulmod(a, b, self.modulus)

    def square(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, k: int) -> int:
        self._check(a)
        if k < 0:
            a, k = self.inverse(a), -k
        if a == 0:
            return 1 if k == 0 else 0
        k %= self.M
        result = 1
        while k:
            if k & 1:
                result = poly_mulmod(result, a, self.modulus)
            a = poly_mulmod(a, a, self.modulus)
            k >>= 1
        return result

    def inverse(self, a: int) -> int:
        if a == 0:
            raise DomainError("0 has no inverse")
        return self.pow(a, self.M - 1)

    def sqrt(self, a: int) -> int:
        """a^((M+1)/2): every element is a square"""
        return self.pow(a, (self.M + 1) // 2) if a else 0

    # --------------------------------------------------------------- orders

    def element_order(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise DomainError("0 has no multiplicative order")
        order = self.M
        for p in _prime_factors(self.M):
            while order % p == 0 and self.pow(a, order // p) == 1:
                order //= p
        return order

    def is_primitive(self, a: int) -> bool:
        return a != 0 and self.element_order(a) == self.M

    # --------------------------------------------------------------- tables

    @cached_property
    def powers(self) -> np.ndarray:
        """powers[k] = alpha^k, k = 0..M-1"""
        table = np.empty(self.M, dtype=np.int64)
        value = 1
        for k in range(self.M):
            table[k] = value
            value = poly_mulmod(value, self.alpha, self.modulus)
        return table

    @cached_property
    def logs(self) -> np.ndarray:
        """logs[y] = k with alpha^k = y for y != 0; logs[0] = -1"""
        table = np.full(self.M + 1, -1, dtype=np.int64)
        table[self.powers] = np.arange(self.M, dtype=np.int64)
        return table

    def exp(self, k: int) -> int:
        return int(self.powers[k % self.M])

    def log(self, y: int) -> int:
        self._check(y)
        if y == 0:
            raise DomainError("log of 0 is undefined")
        return int(self.logs[y])

    def __repr__(self) -> str:
        return f"Gf2PolyField(n={self.n}, f={format_poly(self.modulus)}, alpha={format_poly(self.alpha)})"


def find_primitive_element(field: Gf2PolyField) -> int:
    """x, x + 1, x^2 + x + 1, ...: the first primitive irreducible polynomial in code order"""
    for candidate in range(2, 1 << (field.n + 1)):
        if not is_irreducible(candidate):
            continue
        element = poly_mod(candidate, field.modulus)
        if element and field.is_primitive(element):
            return element
    raise ParameterError(f"no primitive element found modulo {format_poly(field.modulus)}")


# =============================================================================
# Reference fields
# =============================================================================

@dataclass(frozen=True)
class ReferenceField:
    """
    A modulus of the benchmark family with its generator and reference costs:
    plain synthesis of f_log, synthesis with additional memory, and the
    reduced-table costs for the k_min / k_max / k_dist representatives.
    """
    n: int
    modulus_text: str
    alpha_text: str
    l_plain: int
    l_memory: int
    l_reduced: Tuple[int, int, int]

    @property
    def modulus(self) -> int:
        return parse_poly(self.modulus_text)

    @property
    def alpha(self) -> int:
        return parse_poly(self.alpha_text)

    def field(self) -> Gf2PolyField:
        return Gf2PolyField(self.modulus, self.alpha)


REFERENCE_MODULI: Tuple[ReferenceField, ...] = (
    ReferenceField(2, "x^2+x+1", "x", 3, 3, (3, 3, 3)),
    ReferenceField(3, "x^3+x+1", "x", 6, 7, (5, 5, 5)),
    ReferenceField(3, "x^3+x^2+1", "x", 8, 7, (7, 7, 7)),
    ReferenceField(4, "x^4+x+1", "x", 23, 18, (8, 8, 12)),
    ReferenceField(4, "x^4+x^3+x^2+x+1", "x+1", 18, 15, (11, 11, 16)),
    ReferenceField(4, "x^4+x^3+1", "x", 22, 17, (11, 11, 11)),
    ReferenceField(5, "x^5+x^2+1", "x", 53, 41, (23, 23, 33)),
    ReferenceField(5, "x^5+x^4+x^3+x^2+1", "x", 53, 42, (29, 29, 45)),
    ReferenceField(5, "x^5+x^4+x^2+x+1", "x", 55, 37, (26, 26, 29)),
    ReferenceField(5, "x^5+x^3+x^2+x+1", "x", 60, 41, (22, 22, 27)),
    ReferenceField(6, "x^6+x+1", "x", 178, 85, (50, 51, 60)),
    ReferenceField(6, "x^6+x^4+x^2+x+1", "x+1", 168, 91, (48, 50, 64)),
    ReferenceField(6, "x^6+x^5+x^2+x+1", "x", 156, 85, (57, 56, 80)),
    ReferenceField(6, "x^6+x^3+1", "x+1", 145, 90, (54, 40, 57)),
    ReferenceField(7, "x^7+x+1", "x", 415, 184, (124, 119, 138)),
    ReferenceField(7, "x^7+x^3+1", "x", 407, 190, (119, 119, 128)),
    ReferenceField(7, "x^7+x^5+x^2+x+1", "x", 400, 191, (128, 117, 146)),
    ReferenceField(7, "x^7+x^6+x^4+x+1", "x", 358, 191, (123, 108, 169)),
    ReferenceField(8, "x^8+x^4+x^3+x^2+1", "x", 951, 422, (276, 265, 341)),
    ReferenceField(8, "x^8+x^6+x^5+x^2+1", "x", 987, 417, (273, 260, 378)),
    ReferenceField(8, "x^8+x^7+x^6+x+1", "x", 1019, 414, (279, 272, 358)),
    ReferenceField(8, "x^8+x^6+x^3+x^2+1", "x", 943, 401, (261, 257, 357)),
    ReferenceField(9, "x^9+x^4+1", "x", 2698, 858, (600, 598, 795)),
    ReferenceField(9, "x^9+x^8+x^4+x+1", "x", 2691, 873, (595, 609, 814)),
    ReferenceField(9, "x^9+x^8+1", "x^2+x+1", 2780, 892, (584, 596, 780)),
    ReferenceField(9, "x^9+x^7+x^6+x^4+1", "x", 2679, 849, (618, 605, 775)),
    ReferenceField(10, "x^10+x^3+1", "x", 6312, 1840, (1334, 1311, 1549)),
    ReferenceField(10, "x^10+x^9+x^5+x+1", "x+1", 6419, 1873, (1339, 1331, 1763)),
    ReferenceField(10, "x^10+x^6+x^2+x+1", "x+1", 6437, 1858, (1312, 1288, 1587)),
    ReferenceField(10, "x^10+x^8+x^7+x^6+1", "x^2+x+1", 6289, 1847, (1332, 1305, 1650)),
    ReferenceField(11, "x^11+x^2+1", "x", 14659, 3947, (2850, 2891, 3703)),
    ReferenceField(11, "x^11+x^5+x^3+x+1", "x", 14429, 3952, (2856, 2841, 3444)),
    ReferenceField(11, "x^11+x^7+x^6+x^5+1", "x", 14636, 3941, (2882, 2881, 3591)),
    ReferenceField(11, "x^11+x^7+x^5+x^3+1", "x", 14559, 3921, (2823, 2864, 3396)),
)
