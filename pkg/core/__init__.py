# -*- coding: utf-8 -*-
"""
Core model: gates, circuits, evaluation, metrics and boolean mappings
"""

from .errors import (
    RevSynthError,
    StructuralError,
    CapacityError,
    ParityError,
    BasisError,
    ParameterError,
    DomainError,
    VerificationError,
    FormatError,
)
from .gates import Gate, apply_gate, mask_of, lines_of
from .circuit import (
    Circuit,
    eval_circuit,
    evaluate_codes,
    evaluate_all,
    circuit_permutation,
    mirror,
    depth,
    depth_layers,
    realizes,
    garbage_free,
)
from .metrics import CostReport, cost_report, scaled_weights
from .mapping import BooleanMapping, min_ancilla

__all__ = [
    "RevSynthError",
    "StructuralError",
    "CapacityError",
    "ParityError",
    "BasisError",
    "ParameterError",
    "DomainError",
    "VerificationError",
    "FormatError",
    "Gate",
    "apply_gate",
    "mask_of",
    "lines_of",
    "Circuit",
    "eval_circuit",
    "evaluate_codes",
    "evaluate_all",
    "circuit_permutation",
    "mirror",
    "depth",
    "depth_layers",
    "realizes",
    "garbage_free",
    "CostReport",
    "cost_report",
    "scaled_weights",
    "BooleanMapping",
    "min_ancilla",
]
