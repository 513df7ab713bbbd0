#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Synthesis with additional memory by splitting the truth table

With x' the first k variables and x'' the remaining n - k ones,

    f_j(x', x'') = XOR over σ of [x'' = σ] ∧ f_j(x', σ)

and each column f_j(·, σ) is the XOR of its restrictions to p groups of s
consecutive rows. A group restriction is an XOR of x'-minterms, so every
output bit becomes a sum of Toffoli terms over precomputed lines:

    S1  minterms of x'
    S2  group functions (only the ones some column references)
    S3  per (σ, j): XOR of the group functions of column σ, output j
    S4  minterms of x''
    S5  Toffoli(minterm σ of x'', S3 line) onto output j

Inputs are never written and S5 only targets output lines.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from core.circuit import Circuit
from core.errors import CapacityError, ParameterError
from core.gates import Gate
from core.mapping import BooleanMapping
from .budget import LineAllocator
from .networks import build_conjunction_network, build_xor_network

logger = logging.getLogger(__name__)

PARTS = ("S1", "S2", "S3", "S4", "S5")


@dataclass(frozen=True)
class LupanovParams:
    """k row variables, groups of s rows, p = ceil(2^k / s) groups"""
    n: int
    k: int
    s: int
    p: int

    def __post_init__(self):
        if self.n < 3:
            raise ParameterError(f"split synthesis needs n >= 3, got {self.n}")
        if not 1 <= self.k or 2 * self.k >= self.n:
            raise ParameterError(f"k={self.k} outside 1 <= k < n/2 for n={self.n}")
        if self.s != self.n - 2 * self.k:
            raise ParameterError(f"s={self.s} must equal n - 2k = {self.n - 2 * self.k}")
        if self.p != math.ceil((1 << self.k) / self.s):
            raise ParameterError(f"p={self.p} must equal ceil(2^k / s) = {math.ceil((1 << self.k) / self.s)}")

    @property
    def estimated_L(self) -> int:
        """2^k + p 2^(s+1) + p n 2^(n-k) + 2^(n-k) + n 2^(n-k)"""
        rest = 1 << (self.n - self.k)
        return (1 << self.k) + self.p * (1 << (self.s + 1)) + self.p * self.n * rest + rest + self.n * rest


def lupanov_params(n: int, k: Optional[int] = None) -> LupanovParams:
    """
    Split parameters for n variables. The automatic choice uses
    φ(n) = max(2, floor(n / (log2 n + log2 log2 (n + 2)))), k = ceil(n / φ(n))
    clamped to k <= (n - 1) / 2.
    """
    if n < 3:
        raise ParameterError(f"split synthesis needs n >= 3, got {n}")
    if k is None:
        phi = max(2, math.floor(n / (math.log2(n) + math.log2(math.log2(n + 2)))))
        k = max(1, min(math.ceil(n / phi), (n - 1) // 2))
    s = n - 2 * k
    if s < 1:
        raise ParameterError(f"k={k} leaves no group width for n={n}")
    return LupanovParams(n, k, s, math.ceil((1 << k) / s))


@dataclass
class LupanovReport:
    circuit: Circuit
    params: LupanovParams
    parts: Dict[str, int] = field(default_factory=dict)

    @property
    def L(self) -> int:
        return self.circuit.L

    @property
    def Q(self) -> int:
        return self.circuit.Q

    def as_dict(self) -> Dict[str, int]:
        row = {"n": self.params.n, "k": self.params.k, "s": self.params.s, "p": self.params.p}
        row.update(self.parts)
        row.update({"L": self.L, "Q": self.Q})
        return row


def lupanov_synth(
    f: BooleanMapping,
    params: Optional[LupanovParams] = None,
    dense_limit: Optional[int] = None,
    max_width: Optional[int] = None,
) -> LupanovReport:
    """
    Circuit with inputs on lines 0..n-1, f on lines n..n+m-1 and scratch above.
    Scratch lines are left dirty (garbage_lines). With max_width set, running
    out of lines raises CapacityError.
    """
    n, m = f.n, f.m
    if dense_limit is None:
        from config import get_config
        dense_limit = get_config().general.dense_limit
    if n > dense_limit:
        raise CapacityError(f"{n} inputs exceed dense limit {dense_limit}")
    if params is None:
        params = lupanov_params(n)
    elif params.n != n:
        raise ParameterError(f"parameters for n={params.n} given for a {n}-input mapping")
    k, s = params.k, params.s
    rows = 1 << k

    alloc = LineAllocator(n, m, max_width=max_width)
    outputs = alloc.outputs
    parts: Dict[str, List[Gate]] = {name: [] for name in PARTS}

    s1 = build_conjunction_network(range(k), alloc)
    parts["S1"] = s1.gates
    row_minterm = s1.lines

    groups: Dict[Tuple[int, int], int] = {}

    def group_line(i: int, v: int) -> int:
        key = (i, v)
        if key not in groups:
            selected = [row_minterm[i * s + t] for t in range(s) if (v >> t) & 1]
            if len(selected) == 1:
                groups[key] = selected[0]
            else:
                line = alloc.one()
                parts["S2"].extend(build_xor_network(selected, line))
                groups[key] = line
        return groups[key]

    # columns[σ][r] = f(r | σ << k)
    columns = f.table.reshape(1 << (n - k), rows)
    terms: List[Tuple[int, int, int]] = []
    for sigma in range(1 << (n - k)):
        column = [int(v) for v in columns[sigma]]
        for j in range(m):
            refs = []
            for i in range(params.p):
                v = 0
                for t in range(s):
                    r = i * s + t
                    if r < rows and (column[r] >> j) & 1:
                        v |= 1 << t
                if v:
                    refs.append(group_line(i, v))
            if not refs:
                continue
            if len(refs) == 1:
                terms.append((sigma, j, refs[0]))
            else:
                line = alloc.one()
                parts["S3"].extend(build_xor_network(refs, line))
                terms.append((sigma, j, line))

    s4 = build_conjunction_network(range(k, n), alloc)
    parts["S4"] = s4.gates
    parts["S5"] = [Gate.toffoli(s4.lines[sigma], line, outputs[j]) for sigma, j, line in terms]

    gates = [g for name in PARTS for g in parts[name]]
    circuit = Circuit(
        alloc.width,
        tuple(gates),
        significant_inputs=n,
        significant_outputs=outputs,
        garbage_lines=frozenset(alloc.scratch),
    )
    counts = {name: len(parts[name]) for name in PARTS}
    logger.info(
        f"[Lupanov] n={n} m={m} k={k} s={s} p={params.p}: L={circuit.L} Q={circuit.Q} "
        + " ".join(f"{name}={counts[name]}" for name in PARTS)
    )
    return LupanovReport(circuit, params, counts)
