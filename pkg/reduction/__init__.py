# -*- coding: utf-8 -*-
"""
Rewrite calculus: commutation, replacement rules, reduction and face search
"""

from .commutation import commutes, commutes_by_evaluation
from .rules import RULES, SHRINKING, EXPLORATORY, RewriteRule, apply_rule
from .reducer import ReductionResult, RewriteStep, find_pivot, reduce_circuit, shrink
from .faces import (
    FaceCandidate,
    best_face,
    face_circuit,
    face_synth,
    split_off,
    find_faces,
    tstar_for_permutation,
    tstar_greedy,
    tstar_naive,
)

__all__ = [
    "commutes",
    "commutes_by_evaluation",
    "RULES",
    "SHRINKING",
    "EXPLORATORY",
    "RewriteRule",
    "apply_rule",
    "ReductionResult",
    "RewriteStep",
    "find_pivot",
    "reduce_circuit",
    "shrink",
    "FaceCandidate",
    "best_face",
    "face_circuit",
    "face_synth",
    "split_off",
    "find_faces",
    "tstar_for_permutation",
    "tstar_greedy",
    "tstar_naive",
]
