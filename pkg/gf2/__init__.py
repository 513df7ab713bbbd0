# -*- coding: utf-8 -*-
"""
GF(2^n) arithmetic and the discrete power / logarithm benchmark tables
"""

from .field import (
    REFERENCE_MODULI,
    Gf2PolyField,
    ReferenceField,
    find_primitive_element,
    format_poly,
    is_irreducible,
    parse_poly,
)
from .tables import (
    STRATEGIES,
    CyclicClass,
    cyclic_classes,
    exponent_recovery,
    reconstruct_log_table,
    reduced_log_table,
    rotl,
    table_log,
    table_pow,
)

__all__ = [
    "REFERENCE_MODULI",
    "Gf2PolyField",
    "ReferenceField",
    "find_primitive_element",
    "format_poly",
    "is_irreducible",
    "parse_poly",
    "STRATEGIES",
    "CyclicClass",
    "cyclic_classes",
    "exponent_recovery",
    "reconstruct_log_table",
    "reduced_log_table",
    "rotl",
    "table_log",
    "table_pow",
]
