#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Truth-table files

    .i 2
    .o 2
    00 01
    10 11
    01 10
    11 00

Bits are written x_1 first, so the leftmost character is bit 0 of the code.
An output character `-` is a don't-care: it parses, but such a table cannot
be turned into a BooleanMapping.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Union

import numpy as np

from core.errors import FormatError, ParameterError
from core.mapping import BooleanMapping

logger = logging.getLogger(__name__)


def bits_to_code(bits: str) -> int:
    return sum(1 << i for i, ch in enumerate(bits) if ch == "1")


def code_to_bits(code: int, width: int) -> str:
    return "".join("1" if (code >> i) & 1 else "0" for i in range(width))


@dataclass(frozen=True)
class TruthTableFile:
    """Rows indexed by input code; care[x] has bit j set when output j is specified"""
    n: int
    m: int
    values: np.ndarray
    care: np.ndarray

    @property
    def has_dont_care(self) -> bool:
        full = (1 << self.m) - 1
        return bool(np.any(self.care != full))

    def to_mapping(self) -> BooleanMapping:
        if self.has_dont_care:
            raise ParameterError("truth table has don't-care outputs; synthesis needs a complete table")
        return BooleanMapping(self.n, self.m, self.values)


def read_truth_table(text: str) -> TruthTableFile:
    n = m = None
    values = care = None
    seen = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("."):
            directive, _, rest = line.partition(" ")
            if directive == ".e":
                break
            if directive not in (".i", ".o"):
                raise FormatError(f"unknown directive {directive!r}", line_no)
            try:
                value = int(rest.strip())
            except ValueError:
                raise FormatError(f"bad count {rest.strip()!r}", line_no)
            if value < 0:
                raise FormatError(f"negative count {value}", line_no)
            if directive == ".i":
                n = value
            else:
                m = value
            continue

        if n is None or m is None:
            raise FormatError("row before .i/.o header", line_no)
        if values is None:
            values = np.zeros(1 << n, dtype=np.int64)
            care = np.zeros(1 << n, dtype=np.int64)
            seen = np.zeros(1 << n, dtype=bool)

        parts = line.split()
        if len(parts) != 2 or len(parts[0]) != n or len(parts[1]) != m:
            raise FormatError(f"expected '<{n} bits> <{m} bits>', got {line!r}", line_no)
        inputs, outputs = parts
        if set(inputs) - {"0", "1"} or set(outputs) - {"0", "1", "-"}:
            raise FormatError(f"bad characters in row {line!r}", line_no)
        x = bits_to_code(inputs)
        if seen[x]:
            raise FormatError(f"input {inputs} listed twice", line_no)
        seen[x] = True
        values[x] = bits_to_code(outputs)
        care[x] = sum(1 << j for j, ch in enumerate(outputs) if ch != "-")

    if n is None or m is None:
        raise FormatError("missing .i or .o header")
    if values is None:
        values = np.zeros(1 << n, dtype=np.int64)
        care = np.zeros(1 << n, dtype=np.int64)
        seen = np.zeros(1 << n, dtype=bool)
    missing = int((~seen).sum())
    if missing:
        raise FormatError(f"{missing} of {1 << n} rows missing")
    logger.debug(f"[TruthTable] parsed n={n} m={m}")
    return TruthTableFile(n, m, values, care)


def parse_truth_table(text: str) -> BooleanMapping:
    return read_truth_table(text).to_mapping()


def emit_truth_table(mapping: BooleanMapping) -> str:
    lines = [f".i {mapping.n}", f".o {mapping.m}"]
    for x in range(1 << mapping.n):
        lines.append(f"{code_to_bits(x, mapping.n)} {code_to_bits(mapping(x), mapping.m)}")
    return "\n".join(lines) + "\n"


def load_truth_table(path: Union[str, Path]) -> TruthTableFile:
    return read_truth_table(Path(path).read_text(encoding="utf-8"))


def save_truth_table(path: Union[str, Path], mapping: BooleanMapping):
    Path(path).write_text(emit_truth_table(mapping), encoding="utf-8")
    logger.info(f"[TruthTable] wrote {path} (n={mapping.n}, m={mapping.m})")
