# -*- coding: utf-8 -*-
"""
Permutation algebra on Z_2^n
"""

from .permutation import (
    Permutation,
    Transposition,
    Cycle,
    transposition,
    compose,
    inverse,
    cycle_decomposition,
    parity,
    conjugate,
    product,
)
from .decompose import (
    TranspositionPair,
    KGroupDecomposition,
    pair_decomposition,
    split_dependent,
    independent_transpositions,
    groups_of_k,
    group_permutation,
)

__all__ = [
    "Permutation",
    "Transposition",
    "Cycle",
    "transposition",
    "compose",
    "inverse",
    "cycle_decomposition",
    "parity",
    "conjugate",
    "product",
    "TranspositionPair",
    "KGroupDecomposition",
    "pair_decomposition",
    "split_dependent",
    "independent_transpositions",
    "groups_of_k",
    "group_permutation",
]
