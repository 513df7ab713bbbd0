#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Replacement rules for compositions of generalized Toffoli gates

Each rule takes a window of one or two adjacent gates and returns the
replacement gate list, or None when its side conditions do not hold.

 1  E * E                                   -> (nothing)
 2  merge:  I1 = I2+k, J2 = J1+k            -> E(t, I2, J1)
 3  swap one positive and one negative control between the two gates
 4  non-commuting move of E2 to the front   -> E(t2, I1∪I2-t1, J1∪J2-t1) * E2 * E1
 5  corollary of 4 when I1 ⊆ I2, J1 ⊆ J2   -> two gates
 6  mirror of 4 (with its own corollary when I2 ⊆ I1, J2 ⊆ J1)
 7  negative controls as NOT conjugation
 8  split one negative control k           -> E(t, I+k, J-k) * E(t, I, J-k)
 9  I1 = I2+k, same J                      -> E(t, I2, J+k)
10  J1 = J2+k, same I                      -> E(t, I+k, J2)
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

from core.errors import ParameterError, StructuralError
from core.gates import Gate, lines_of
from .commutation import commutes

Window = Sequence[Gate]
Replacement = Optional[List[Gate]]


def _single_bit(mask: int) -> bool:
    return mask != 0 and mask & (mask - 1) == 0


def _gate(target: int, pos: int, neg: int) -> Optional[Gate]:
    try:
        return Gate(target, pos, neg)
    except StructuralError:
        return None


# =============================================================================
# Rules
# =============================================================================

def rule_duplicate(g1: Gate, g2: Gate) -> Replacement:
    return [] if g1 == g2 else None


def rule_merge(g1: Gate, g2: Gate) -> Replacement:
    if g1.target != g2.target:
        return None
    for a, b in ((g1, g2), (g2, g1)):
        k = a.pos & ~b.pos
        if not _single_bit(k):
            continue
        if a.pos == b.pos | k and b.neg == a.neg | k and not a.neg & k:
            merged = _gate(a.target, b.pos, a.neg)
            if merged is not None:
                return [merged]
    return None


def rule_reduce_controls(g1: Gate, g2: Gate) -> Replacement:
    if g1.target != g2.target:
        return None
    p = g1.pos & ~g2.pos
    q = g2.pos & ~g1.pos
    if not (_single_bit(p) and _single_bit(q)):
        return None
    if not (p & g2.neg and q & g1.neg):
        return None
    if g2.pos != (g1.pos & ~p) | q or g2.neg != (g1.neg & ~q) | p:
        return None
    j3 = g1.neg & ~q
    a = _gate(g1.target, g1.pos, j3)
    b = _gate(g1.target, g2.pos, j3)
    if a is None or b is None:
        return None
    return [a, b]


def _rule4_applies(g1: Gate, g2: Gate) -> bool:
    t1 = 1 << g1.target
    t2 = 1 << g2.target
    return bool(g2.control_mask & t1) and not g1.control_mask & t2 and not commutes(g1, g2)


def rule_move_front(g1: Gate, g2: Gate) -> Replacement:
    if not _rule4_applies(g1, g2):
        return None
    t1 = 1 << g1.target
    extra = _gate(g2.target, (g1.pos | g2.pos) & ~t1, (g1.neg | g2.neg) & ~t1)
    if extra is None:
        return None
    return [extra, g2, g1]


def rule_move_front_swap(g1: Gate, g2: Gate) -> Replacement:
    if not _rule4_applies(g1, g2):
        return None
    if g1.pos & ~g2.pos or g1.neg & ~g2.neg:
        return None
    t1 = 1 << g1.target
    if g2.neg & t1:
        moved = _gate(g2.target, g2.pos | t1, g2.neg & ~t1)
    else:
        moved = _gate(g2.target, g2.pos & ~t1, g2.neg | t1)
    if moved is None:
        return None
    return [moved, g1]


def _rule6_applies(g1: Gate, g2: Gate) -> bool:
    t1 = 1 << g1.target
    t2 = 1 << g2.target
    return bool(g1.control_mask & t2) and not g2.control_mask & t1 and not commutes(g1, g2)


def rule_move_back(g1: Gate, g2: Gate) -> Replacement:
    if not _rule6_applies(g1, g2):
        return None
    t2 = 1 << g2.target
    if not (g2.pos & ~g1.pos or g2.neg & ~g1.neg):
        # corollary: I2 ⊆ I1, J2 ⊆ J1
        if g1.neg & t2:
            moved = _gate(g1.target, g1.pos | t2, g1.neg & ~t2)
        else:
            moved = _gate(g1.target, g1.pos & ~t2, g1.neg | t2)
        return None if moved is None else [g2, moved]
    extra = _gate(g1.target, (g1.pos | g2.pos) & ~t2, (g1.neg | g2.neg) & ~t2)
    if extra is None:
        return None
    return [g2, g1, extra]


def rule_polarity_expansion(g: Gate) -> Replacement:
    if not g.neg:
        return None
    flips = [Gate.not_(i) for i in lines_of(g.neg)]
    return flips + [Gate(g.target, g.pos | g.neg)] + flips


def rule_split(g: Gate) -> Replacement:
    if not g.neg:
        return None
    k = g.neg & -g.neg
    return [Gate(g.target, g.pos | k, g.neg & ~k), Gate(g.target, g.pos, g.neg & ~k)]


def rule_merge_positive(g1: Gate, g2: Gate) -> Replacement:
    if g1.target != g2.target or g1.neg != g2.neg:
        return None
    for a, b in ((g1, g2), (g2, g1)):
        k = a.pos & ~b.pos
        if _single_bit(k) and a.pos == b.pos | k:
            merged = _gate(a.target, b.pos, a.neg | k)
            if merged is not None:
                return [merged]
    return None


def rule_merge_negative(g1: Gate, g2: Gate) -> Replacement:
    if g1.target != g2.target or g1.pos != g2.pos:
        return None
    for a, b in ((g1, g2), (g2, g1)):
        k = a.neg & ~b.neg
        if _single_bit(k) and a.neg == b.neg | k:
            merged = _gate(a.target, a.pos | k, b.neg)
            if merged is not None:
                return [merged]
    return None


# =============================================================================
# Registry
# =============================================================================

@dataclass(frozen=True)
class RewriteRule:
    id: int
    name: str
    arity: int
    shrinking: bool
    func: Callable[..., Replacement]

    def apply(self, window: Window) -> Replacement:
        if len(window) != self.arity:
            return None
        return self.func(*window)


RULES: Dict[int, RewriteRule] = {
    rule.id: rule
    for rule in (
        RewriteRule(1, "duplicate", 2, True, rule_duplicate),
        RewriteRule(2, "merge", 2, True, rule_merge),
        RewriteRule(3, "reduce-controls", 2, False, rule_reduce_controls),
        RewriteRule(4, "move-front", 2, False, rule_move_front),
        RewriteRule(5, "move-front-swap", 2, False, rule_move_front_swap),
        RewriteRule(6, "move-back", 2, False, rule_move_back),
        RewriteRule(7, "polarity-expansion", 1, False, rule_polarity_expansion),
        RewriteRule(8, "split", 1, False, rule_split),
        RewriteRule(9, "merge-positive", 2, True, rule_merge_positive),
        RewriteRule(10, "merge-negative", 2, True, rule_merge_negative),
    )
}

SHRINKING = (1, 2, 9, 10)
EXPLORATORY = (5, 3, 6, 4, 8, 7)


def apply_rule(rule_id: int, window: Window) -> Replacement:
    """Replacement for the window, or None when the rule does not match"""
    rule = RULES.get(rule_id)
    if rule is None:
        raise ParameterError(f"unknown rule {rule_id}")
    return rule.apply(list(window))
