#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Commutation test for generalized Toffoli gates
"""

from core.gates import Gate


def commutes(g1: Gate, g2: Gate) -> bool:
    """
    E(t1,I1,J1) and E(t2,I2,J2) commute iff
    t1 ∉ I2 ∪ J2 and t2 ∉ I1 ∪ J1 (equal targets included),
    or I1 ∩ J2 ≠ ∅, or I2 ∩ J1 ≠ ∅.
    """
    if not (g2.control_mask >> g1.target) & 1 and not (g1.control_mask >> g2.target) & 1:
        return True
    return bool(g1.pos & g2.neg) or bool(g2.pos & g1.neg)


def commutes_by_evaluation(g1: Gate, g2: Gate, width: int) -> bool:
    """Reference check over every state of the given width"""
    return all(g2.apply(g1.apply(x)) == g1.apply(g2.apply(x)) for x in range(1 << width))
