# -*- coding: utf-8 -*-
"""
Synthesis algorithms: transpositions, pairs, K-groups, multi-control lowering
"""

from .options import SynthesisOptions
from .transposition import (
    ConjugationScript,
    apply_script,
    canonicalize_transposition,
    synth_transposition,
    synth_transpositions,
)
from .mct import decompose_mct, decompose_circuit, recursive4, barenco8, v_chain
from .pairs import synth_pair, synth_dependent_pair, synth_any_pair, canonicalize_pair
from .k_group import synth_k_group, check_group_size
from .engine import synth_permutation, synth_method_a, synth_method_b, synth_method_k
from .embedding import EmbeddedMapping, embed_mapping, embedding_width, synth_mapping

__all__ = [
    "SynthesisOptions",
    "ConjugationScript",
    "apply_script",
    "canonicalize_transposition",
    "synth_transposition",
    "synth_transpositions",
    "decompose_mct",
    "decompose_circuit",
    "recursive4",
    "barenco8",
    "v_chain",
    "synth_pair",
    "synth_dependent_pair",
    "synth_any_pair",
    "canonicalize_pair",
    "synth_k_group",
    "check_group_size",
    "synth_permutation",
    "synth_method_a",
    "synth_method_b",
    "synth_method_k",
    "EmbeddedMapping",
    "embed_mapping",
    "embedding_width",
    "synth_mapping",
]
