#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Circuit Cost Metrics

Computes the six figures reported for every circuit:
- L   gate count (complexity)
- D   depth (contiguous support-disjoint layers)
- L_C NOT/CNOT count, L_T 2-CNOT count
- W   quantum weight
- Q   number of additional (ancilla) lines
"""

from dataclasses import dataclass, asdict
from typing import Dict, Optional

from .circuit import Circuit, depth


@dataclass
class CostReport:
    """Result of cost_report()"""
    L: int
    D: int
    L_C: int
    L_T: int
    L_big: int      # gates with more than 2 controls
    W: float
    Q: int

    def as_dict(self) -> Dict[str, float]:
        return asdict(self)

    def as_lines(self) -> str:
        """key=value lines, as printed by the stats command"""
        return "\n".join(f"{k}={v}" for k, v in self.as_dict().items())


def cost_report(circuit: Circuit, weights=None) -> CostReport:
    """
    Measure a circuit.

    Args:
        circuit: circuit to measure
        weights: WeightsConfig-like object with ``weight_of(controls)``;
            defaults to the configured weights (W_C=1, W_T=5)
    """
    if weights is None:
        from config import get_config
        weights = get_config().weights

    l_c = l_t = l_big = 0
    w = 0.0
    for gate in circuit.gates:
        k = gate.controls
        if k <= 1:
            l_c += 1
        elif k == 2:
            l_t += 1
        else:
            l_big += 1
        w += weights.weight_of(k)

    return CostReport(
        L=circuit.L,
        D=depth(circuit),
        L_C=l_c,
        L_T=l_t,
        L_big=l_big,
        W=w,
        Q=circuit.Q,
    )


def scaled_weights(weights, factor: float):
    """Copy of a weights model with every weight multiplied by factor"""
    update: Dict[str, Optional[float]] = {
        "not_cnot": weights.not_cnot * factor,
        "toffoli": weights.toffoli * factor,
        "big": weights.big * factor,
    }
    if weights.big_per_control is not None:
        update["big_per_control"] = weights.big_per_control * factor
    return weights.model_copy(update=update)
