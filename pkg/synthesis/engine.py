#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Synthesis Engine

Dispatches a target permutation to one of the methods:
- A:    one transposition at a time, (n-1)-control core gates
- B:    pairs of transpositions, NOT/CNOT/2-CNOT reachable
- K:    groups of K independent transpositions, remainder through B
- face: cube-face search, pairs as fallback

Odd targets on n >= 4 lines cannot be realized by gates with fewer than
n-1 controls; they are lifted onto one extra line when allowed.
"""

import logging
from typing import Optional

from core.circuit import Circuit
from core.errors import BasisError, ParameterError, ParityError
from permutations import Permutation, groups_of_k, pair_decomposition
from .k_group import check_group_size, synth_k_group
from .mct import decompose_circuit
from .options import SynthesisOptions
from .pairs import synth_any_pair
from .transposition import synth_transpositions

logger = logging.getLogger(__name__)

SMALL_WIDTH = 4


def synth_method_a(h: Permutation, basis: str = "omega") -> Circuit:
    """Algorithm A on every transposition of h"""
    n = h.n
    if basis == "omega2" and n - 1 > 2:
        raise BasisError(
            f"method A needs {n - 1}-control gates with no free line; use basis omega or another method"
        )
    return synth_transpositions(h.transpositions(), n)


def synth_method_b(h: Permutation, opts: SynthesisOptions) -> Circuit:
    n = h.n
    circuit = Circuit(n)
    for pair in pair_decomposition(h):
        circuit = circuit + synth_any_pair(pair, n, opts.basis, opts.mct_mode, opts.split_dependent)
    return circuit


def synth_method_k(h: Permutation, opts: SynthesisOptions) -> Circuit:
    n = h.n
    check_group_size(opts.K, n)
    decomposition = groups_of_k(h, opts.K)
    circuit = Circuit(n)
    for group in decomposition.groups:
        circuit = circuit + synth_k_group(group, n, opts.basis, opts.mct_mode)
    if not decomposition.remainder.is_identity:
        circuit = circuit + synth_method_b(decomposition.remainder, opts)
    logger.debug(
        f"[Synth] K={opts.K}: {len(decomposition.groups)} groups, "
        f"remainder |M|={decomposition.remainder.support_size}"
    )
    return circuit


def _synth_even(h: Permutation, opts: SynthesisOptions) -> Circuit:
    if opts.method == "K":
        return synth_method_k(h, opts)
    if opts.method == "face" or opts.face_search:
        from reduction.faces import face_synth
        return face_synth(h, opts)
    return synth_method_b(h, opts)


def synth_permutation(h: Permutation, opts: Optional[SynthesisOptions] = None) -> Circuit:
    """
    Circuit realizing h.

    Width n for even h (or any h with method A / n < 4); width n+1 with
    significant_inputs = n when an odd h is lifted.
    """
    if opts is None:
        opts = SynthesisOptions.from_config()
    if opts.method == "lupanov":
        raise ParameterError("method lupanov synthesizes mappings; use synth_mapping")

    n = h.n
    if h.is_identity:
        return Circuit(n)

    if n < SMALL_WIDTH:
        # every permutation of <= 3 lines is a product of <= 2-control transposition gates
        circuit = synth_method_a(h, "omega")
    elif opts.method == "A":
        circuit = synth_method_a(h, opts.basis)
    elif h.is_even:
        circuit = _synth_even(h, opts)
    elif opts.allow_ancilla_lift:
        logger.info(f"[Synth] odd permutation on {n} lines, lifting onto {n + 1}")
        lifted = _synth_even(h.lift(), opts)
        circuit = Circuit(
            n + 1,
            lifted.gates,
            significant_inputs=n,
            significant_outputs=tuple(range(n)),
        )
    else:
        raise ParityError(f"odd permutation on {n} >= {SMALL_WIDTH} lines and ancilla lift disabled")

    circuit = decompose_circuit(circuit, opts.basis, opts.mct_mode)
    logger.info(f"[Synth] method={opts.method} basis={opts.basis} n={n} |M|={h.support_size} -> L={circuit.L}")
    return circuit
