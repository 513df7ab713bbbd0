#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Non-bijective mappings

A mapping f: Z_2^n -> Z_2^m is embedded into a permutation on
w = max(n, m + ceil(log2 d)) lines: input <x, 0> goes to <f(x), index>, where
index numbers the inputs sharing the output f(x). The remaining codes are
matched in increasing order, with one swap to make the permutation even.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from core.circuit import Circuit
from core.errors import CapacityError
from core.mapping import BooleanMapping, min_ancilla
from permutations import Permutation
from .engine import synth_permutation
from .options import SynthesisOptions

logger = logging.getLogger(__name__)


@dataclass
class EmbeddedMapping:
    """Permutation on `width` lines whose restriction to <x, 0> realizes f"""
    permutation: Permutation
    width: int
    n: int
    output_lines: Tuple[int, ...]
    index_lines: Tuple[int, ...]


def embedding_width(f: BooleanMapping, ancilla: Optional[int] = None) -> int:
    d = f.max_preimage
    index_bits = math.ceil(math.log2(d)) if d > 1 else 0
    needed = max(f.n, f.m + index_bits)
    if ancilla is None:
        return needed
    if ancilla < min_ancilla(f):
        raise CapacityError(
            f"{ancilla} additional lines is below the lower bound {min_ancilla(f)} "
            f"(max preimage size d={d})"
        )
    return max(needed, f.n + ancilla)


def embed_mapping(f: BooleanMapping, ancilla: Optional[int] = None) -> EmbeddedMapping:
    """Even permutation extending f; ancilla is the number of lines above n"""
    width = embedding_width(f, ancilla)
    d = f.max_preimage
    index_bits = math.ceil(math.log2(d)) if d > 1 else 0
    from config import get_config
    limit = get_config().general.dense_limit
    if width > limit:
        raise CapacityError(f"embedding width {width} exceeds dense limit {limit}")

    size = 1 << width
    table = np.full(size, -1, dtype=np.int64)
    seen: Dict[int, int] = {}
    for x in range(1 << f.n):
        y = int(f.table[x])
        idx = seen.get(y, 0)
        seen[y] = idx + 1
        table[x] = y | (idx << f.m)

    used = np.zeros(size, dtype=bool)
    used[table[: 1 << f.n]] = True
    free_images = np.nonzero(~used)[0]
    free_domain = np.arange(1 << f.n, size, dtype=np.int64)
    table[free_domain] = free_images

    perm = Permutation.from_table(width, table)
    if not perm.is_even and free_domain.size >= 2:
        a, b = int(free_domain[-2]), int(free_domain[-1])
        table[a], table[b] = table[b], table[a]
        perm = Permutation.from_table(width, table)

    logger.debug(f"[Embed] {f.n}->{f.m} mapping on {width} lines, d={d}, parity={perm.parity()}")
    return EmbeddedMapping(
        permutation=perm,
        width=width,
        n=f.n,
        output_lines=tuple(range(f.m)),
        index_lines=tuple(range(f.m, f.m + index_bits)),
    )


def synth_mapping(f: BooleanMapping, opts: Optional[SynthesisOptions] = None) -> Circuit:
    """Circuit realizing f: reading output lines 0..m-1 of <x, 0...0> gives f(x)"""
    if opts is None:
        opts = SynthesisOptions.from_config()

    if opts.method == "lupanov":
        from ancilla.lupanov import lupanov_synth
        max_width = None if opts.ancilla is None else f.n + opts.ancilla
        return lupanov_synth(f, max_width=max_width).circuit

    if f.is_bijective and (opts.ancilla in (None, 0)):
        circuit = synth_permutation(f.as_permutation(), opts)
        return Circuit(
            circuit.width,
            circuit.gates,
            significant_inputs=f.n,
            significant_outputs=tuple(range(f.m)),
        )

    embedded = embed_mapping(f, opts.ancilla)
    circuit = synth_permutation(embedded.permutation, opts)
    outputs = tuple(range(f.m))
    garbage = frozenset(i for i in range(circuit.width) if i not in outputs)
    return Circuit(
        circuit.width,
        circuit.gates,
        significant_inputs=f.n,
        significant_outputs=outputs,
        garbage_lines=garbage,
    )
