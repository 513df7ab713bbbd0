#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Cube-face search synthesis

For a difference vector d, T*(d, h) is a large set of pairwise independent
transpositions (x, x ^ d) that can be split off h one after another. When the
points of those transpositions contain a whole face of the Boolean cube whose
free positions include d, the product of the face transpositions is realized
by |d| gates controlled by the fixed positions only.

Two multiplication sides are supported:
- left:  h = g ∘ h', h' = g ∘ h  (face gates go in front)
- right: h = h' ∘ g, h' = h ∘ g  (face gates go at the end)
"""

import logging
from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from core.circuit import Circuit
from core.errors import ParameterError, StructuralError
from core.gates import Gate, lines_of
from permutations import Permutation, pair_decomposition
from permutations.permutation import Transposition, transposition
from synthesis.mct import decompose_circuit
from synthesis.options import SynthesisOptions
from synthesis.pairs import synth_any_pair
from synthesis.transposition import full_mask, synth_transpositions

logger = logging.getLogger(__name__)

SIDES = ("left", "right")
PAIR_WIDTH = 4


def _check_side(side: str):
    if side not in SIDES:
        raise ParameterError(f"unknown side {side!r}, expected one of {SIDES}")


# =============================================================================
# T*(d, c)
# =============================================================================

def _difference_pairs(cycle: Sequence[int], d: int) -> List[Tuple[int, int]]:
    position = {x: k for k, x in enumerate(cycle)}
    pairs = []
    for i, x in enumerate(cycle):
        j = position.get(x ^ d)
        if j is not None and j > i:
            pairs.append((i, j))
    return pairs


def _split_cycle(cycle: Sequence[int], a: int, b: int, side: str) -> List[Tuple[int, ...]]:
    """Cycles of τ∘c (left) or c∘τ (right) for τ = (a, b), each listed from its first point in c"""
    succ = {x: cycle[(k + 1) % len(cycle)] for k, x in enumerate(cycle)}
    swap = {a: b, b: a}
    if side == "left":
        step = {x: succ[swap.get(x, x)] for x in cycle}
    else:
        step = {x: swap.get(succ[x], succ[x]) for x in cycle}

    seen = set()
    result = []
    for start in cycle:
        if start in seen:
            continue
        part = [start]
        seen.add(start)
        x = step[start]
        while x != start:
            part.append(x)
            seen.add(x)
            x = step[x]
        if len(part) > 1:
            result.append(tuple(part))
    return result


def _pick_greedy(pairs: List[Tuple[int, int]], length: int) -> Tuple[int, int]:
    # w(x) = number of pairs (i, j) with i <= x <= j
    delta = [0] * (length + 1)
    for i, j in pairs:
        delta[i] += 1
        delta[j + 1] -= 1
    w = []
    running = 0
    for k in range(length):
        running += delta[k]
        w.append(running)
    return min(pairs, key=lambda p: (w[p[0]] + w[p[1]], p[0], p[1]))


def _tstar(d: int, cycle: Sequence[int], side: str, naive: bool) -> List[Transposition]:
    _check_side(side)
    result: List[Transposition] = []
    queue = deque([tuple(cycle)])
    while queue:
        c = queue.popleft()
        pairs = _difference_pairs(c, d)
        if not pairs:
            continue
        i, j = pairs[0] if naive else _pick_greedy(pairs, len(c))
        result.append(transposition(c[i], c[j]))
        queue.extend(_split_cycle(c, c[i], c[j], side))
    return sorted(result)


def tstar_greedy(d: int, cycle: Sequence[int], side: str = "left") -> List[Transposition]:
    """T*(d, c): at every step take the pair (i, j) minimizing w(i) + w(j)"""
    return _tstar(d, cycle, side, naive=False)


def tstar_naive(d: int, cycle: Sequence[int], side: str = "left") -> List[Transposition]:
    """First-found variant: the lexicographically first pair at every step"""
    return _tstar(d, cycle, side, naive=True)


def tstar_for_permutation(d: int, h: Permutation, side: str = "left", naive: bool = False) -> List[Transposition]:
    result: List[Transposition] = []
    for cycle in h.cycles():
        result.extend(_tstar(d, cycle, side, naive))
    return sorted(result)


# =============================================================================
# Faces
# =============================================================================

@dataclass(frozen=True)
class FaceCandidate:
    """
    Face of B^n with free positions free_mask ⊇ d; the fixed positions carry
    the values of fixed_values. transpositions lists (x, x ^ d) for the points
    x of the face whose lowest d position is 0, so all 2^(dim-1) swaps done by
    the |d| gates are listed.
    """
    n: int
    d: int
    free_mask: int
    fixed_values: int
    transpositions: Tuple[Transposition, ...]
    tstar_size: int
    side: str = "left"

    def __post_init__(self):
        if self.d & self.fixed_mask:
            raise StructuralError(f"difference {self.d:#b} meets the fixed positions {self.fixed_mask:#b}")
        if self.fixed_values & ~self.fixed_mask:
            raise StructuralError("fixed values outside the fixed positions")

    @property
    def fixed_mask(self) -> int:
        return full_mask(self.n) & ~self.free_mask

    @property
    def dim(self) -> int:
        return bin(self.free_mask).count("1")

    @property
    def fixed_positions(self) -> List[Tuple[int, int]]:
        """(line, value) for every fixed position"""
        return [(i, (self.fixed_values >> i) & 1) for i in lines_of(self.fixed_mask)]

    def sort_key(self):
        return (-self.dim, -self.tstar_size, self.fixed_mask, self.fixed_values, self.d)

    def gates(self) -> List[Gate]:
        pos = self.fixed_values
        neg = self.fixed_mask & ~self.fixed_values
        return [Gate(i, pos, neg) for i in lines_of(self.d)]

    def as_permutation(self) -> Permutation:
        return Permutation.from_cycles(self.n, self.transpositions)


def face_circuit(face: FaceCandidate) -> Circuit:
    """∘ E(i, I, J) over the lines i of d; I/J are the fixed positions set to 1/0"""
    return Circuit(face.n, tuple(face.gates()))


def _differences(h: Permutation) -> List[int]:
    found = set()
    for cycle in h.cycles():
        for a, b in combinations(cycle, 2):
            found.add(a ^ b)
    return sorted(found)


def _face_swaps(d: int, free: int, values: int, points) -> Tuple[Transposition, ...]:
    """(x, x ^ d) for the face points x whose lowest d position is 0"""
    low = d & -d
    return tuple(sorted(transposition(x, x ^ d) for x in points if x & ~free == values and not x & low))


def _largest_face(n: int, d: int, tstar: Sequence[Transposition]) -> Optional[Tuple[int, int]]:
    """(free mask, fixed values) of the largest face with d free whose swaps all lie in T*"""
    pairs = set(tstar)
    points = {x for t in pairs for x in t}
    base = bin(d).count("1")
    top = min(n, max(len(points), 1).bit_length() - 1)
    others = lines_of(full_mask(n) & ~d)
    for k in range(top, base - 1, -1):
        best = None
        for extra in combinations(others, k - base):
            free = d
            for i in extra:
                free |= 1 << i
            counts = Counter(x & ~free for x in points)
            for values, count in counts.items():
                if count != 1 << k:
                    continue
                # every face point must be matched with its partner inside T*
                if not set(_face_swaps(d, free, values, points)) <= pairs:
                    continue
                key = (full_mask(n) & ~free, values)
                if best is None or key < best[0]:
                    best = (key, free)
        if best is not None:
            return best[1], best[0][1]
    return None


def find_faces(h: Permutation, side: str = "left", naive: bool = False) -> List[FaceCandidate]:
    """Largest face for every difference occurring inside a cycle of h, best first"""
    _check_side(side)
    n = h.n
    candidates = []
    for d in _differences(h):
        tstar = tstar_for_permutation(d, h, side, naive)
        found = _largest_face(n, d, tstar)
        if found is None:
            continue
        free, values = found
        points = {x for t in tstar for x in t}
        covered = _face_swaps(d, free, values, points)
        candidates.append(FaceCandidate(n, d, free, values, covered, len(tstar), side))
    candidates.sort(key=FaceCandidate.sort_key)
    return candidates


def _transposition_count(h: Permutation) -> int:
    """Fewest transpositions whose product is h"""
    return h.support_size - len(h.cycles())


def split_off(h: Permutation, face: FaceCandidate) -> Permutation:
    """h' with h = g ∘ h' (left) or h = h' ∘ g (right), g the face product"""
    g = face.as_permutation()
    return g.compose(h) if face.side == "left" else h.compose(g)


def best_face(
    h: Permutation,
    side: str = "left",
    min_transpositions: int = 2,
    require_progress: bool = False,
) -> Optional[FaceCandidate]:
    """First candidate covering enough transpositions; with require_progress it must also shorten h"""
    weight = _transposition_count(h)
    for face in find_faces(h, side):
        if len(face.transpositions) < min_transpositions:
            continue
        if require_progress and _transposition_count(split_off(h, face)) >= weight:
            continue
        return face
    return None


# =============================================================================
# Synthesis
# =============================================================================

def _pick(h: Permutation, opts: SynthesisOptions) -> Optional[FaceCandidate]:
    left = best_face(h, "left", require_progress=True)
    if not opts.left_right_heuristic:
        return left
    right = best_face(h, "right", require_progress=True)
    if right is None:
        return left
    if left is None or (right.dim, len(right.transpositions)) > (left.dim, len(left.transpositions)):
        return right
    return left


def face_synth(h: Permutation, opts: Optional[SynthesisOptions] = None) -> Circuit:
    """
    Realize an even h by repeatedly splitting off face products covering at
    least two transpositions, and the first transposition pair otherwise.
    """
    if opts is None:
        opts = SynthesisOptions.from_config()
    if not h.is_even:
        raise StructuralError("face synthesis needs an even permutation")
    n = h.n
    prefix: List[Gate] = []
    suffix: List[Gate] = []
    current = h
    faces = fallbacks = 0

    while not current.is_identity:
        face = _pick(current, opts)
        if face is not None:
            if face.side == "left":
                prefix.extend(face.gates())
            else:
                suffix[:0] = face.gates()
            current = split_off(current, face)
            faces += 1
            logger.debug(f"[Faces] {face.side} face d={face.d:#b} dim={face.dim} covers {len(face.transpositions)}")
            continue

        pair = pair_decomposition(current)[0]
        if n < PAIR_WIDTH:
            part = synth_transpositions([pair.first, pair.second], n)
        else:
            part = synth_any_pair(pair, n, opts.basis, opts.mct_mode, opts.split_dependent)
        prefix.extend(part.gates)
        current = pair.as_permutation(n).inverse().compose(current)
        fallbacks += 1

    circuit = decompose_circuit(Circuit(n, tuple(prefix + suffix)), opts.basis, opts.mct_mode)
    logger.info(f"[Faces] n={n} |M|={h.support_size}: {faces} face(s), {fallbacks} pair(s) -> L={circuit.L}")
    return circuit
