# -*- coding: utf-8 -*-
"""
Constructions with additional lines: networks, split synthesis, garbage removal
"""

from .budget import AncillaBudget, LineAllocator
from .networks import (
    Network,
    and_onto,
    basis_ops,
    build_conjunction_network,
    build_xor_network,
    conjunction_lines,
    log_depth_copy,
    log_depth_xor,
    not_onto,
    xor_onto,
)
from .lupanov import LupanovParams, LupanovReport, lupanov_params, lupanov_synth
from .cleanup import cleanup_by_mirroring, split_out_of_place

__all__ = [
    "AncillaBudget",
    "LineAllocator",
    "Network",
    "and_onto",
    "basis_ops",
    "build_conjunction_network",
    "build_xor_network",
    "conjunction_lines",
    "log_depth_copy",
    "log_depth_xor",
    "not_onto",
    "xor_onto",
    "LupanovParams",
    "LupanovReport",
    "lupanov_params",
    "lupanov_synth",
    "cleanup_by_mirroring",
    "split_out_of_place",
]
