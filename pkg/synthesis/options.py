#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Options shared by every synthesis entry point
"""

from dataclasses import dataclass, replace
from typing import Optional

from core.errors import ParameterError

BASES = ("omega2", "omega")
METHODS = ("A", "B", "K", "face", "lupanov")
MCT_MODES = ("recursive4", "barenco8")


@dataclass(frozen=True)
class SynthesisOptions:
    """
    basis:  omega2 = NOT/CNOT/2-CNOT only, omega = any k-CNOT
    method: A (one wide gate per transposition), B (transposition pairs),
            K (groups of K independent transpositions), face (cube-face search),
            lupanov (ancilla-based, mappings only)
    """
    basis: str = "omega2"
    method: str = "B"
    K: int = 2
    allow_ancilla_lift: bool = True
    left_right_heuristic: bool = False
    face_search: bool = False
    split_dependent: bool = False
    mct_mode: str = "barenco8"
    ancilla: Optional[int] = None
    seed: Optional[int] = None

    def __post_init__(self):
        if self.basis not in BASES:
            raise ParameterError(f"unknown basis {self.basis!r}, expected one of {BASES}")
        if self.method not in METHODS:
            raise ParameterError(f"unknown method {self.method!r}, expected one of {METHODS}")
        if self.mct_mode not in MCT_MODES:
            raise ParameterError(f"unknown mct mode {self.mct_mode!r}, expected one of {MCT_MODES}")
        if self.K < 1:
            raise ParameterError(f"group size K={self.K} must be positive")
        if self.ancilla is not None and self.ancilla < 0:
            raise ParameterError(f"negative ancilla budget {self.ancilla}")

    @classmethod
    def from_config(cls, config=None, **overrides) -> "SynthesisOptions":
        """Defaults from the synthesis/general config sections, then overrides"""
        if config is None:
            from config import get_config
            config = get_config()
        s = config.synthesis
        opts = cls(
            basis=s.basis,
            method=s.method,
            K=s.group_size,
            allow_ancilla_lift=s.allow_ancilla_lift,
            left_right_heuristic=s.left_right_heuristic,
            face_search=s.face_search,
            split_dependent=s.split_dependent,
            mct_mode=s.mct_mode,
            seed=config.general.seed,
        )
        overrides = {k: v for k, v in overrides.items() if v is not None}
        return replace(opts, **overrides) if overrides else opts

    def with_(self, **changes) -> "SynthesisOptions":
        return replace(self, **changes)
