# -*- coding: utf-8 -*-
"""
Random gates and permutations for the test-suites
"""

import random
from typing import Optional

from core.gates import Gate
from permutations import Permutation


def random_gate(rng: random.Random, n: int, max_controls: Optional[int] = None) -> Gate:
    target = rng.randrange(n)
    pos = neg = 0
    others = [i for i in range(n) if i != target]
    rng.shuffle(others)
    limit = len(others) if max_controls is None else min(max_controls, len(others))
    for i in others[: rng.randint(0, limit)]:
        if rng.random() < 0.5:
            pos |= 1 << i
        else:
            neg |= 1 << i
    return Gate(target, pos, neg)


def random_permutation(rng: random.Random, n: int) -> Permutation:
    table = list(range(1 << n))
    rng.shuffle(table)
    return Permutation.from_table(n, table)


def random_even_permutation(rng: random.Random, n: int) -> Permutation:
    h = random_permutation(rng, n)
    if not h.is_even:
        h = h.compose(Permutation.from_transposition(n, 0, 1))
    return h


def random_sparse_permutation(rng: random.Random, n: int, support: int) -> Permutation:
    """Even permutation moving at most `support` codes"""
    points = rng.sample(range(1 << n), support)
    images = points[:]
    rng.shuffle(images)
    h = Permutation(n, dict(zip(points, images)))
    if not h.is_even:
        h = h.compose(Permutation.from_transposition(n, points[0], points[1]))
    return h
