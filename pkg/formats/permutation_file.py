#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Permutation files, dense or sparse

    .table 2            .n 8
    1 0 2 3             (1 2 3)
                        (0b0001 0b1000)

Codes are decimal or 0b-prefixed; a table may spread over several lines.
"""

import logging
import re
from pathlib import Path
from typing import List, Optional, Union

from core.errors import FormatError, StructuralError
from permutations import Permutation

logger = logging.getLogger(__name__)

_CYCLE = re.compile(r"\(([^()]*)\)")


def _code(token: str, line_no: int) -> int:
    try:
        return int(token, 2) if token.lower().startswith("0b") else int(token, 10)
    except ValueError:
        raise FormatError(f"bad code {token!r}", line_no)


def parse_permutation(text: str) -> Permutation:
    mode = None
    n = None
    images: List[int] = []
    cycles: List[List[int]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("."):
            directive, _, rest = line.partition(" ")
            if mode is not None:
                raise FormatError(f"second header {directive!r}", line_no)
            if directive not in (".table", ".n"):
                raise FormatError(f"unknown directive {directive!r}", line_no)
            mode = directive
            n = _code(rest.strip(), line_no)
            continue
        if mode is None:
            raise FormatError("data before .table or .n header", line_no)
        if mode == ".table":
            images.extend(_code(tok, line_no) for tok in line.split())
        else:
            found = _CYCLE.findall(line)
            if not found or _CYCLE.sub("", line).strip():
                raise FormatError(f"expected cycles like (1 2 3), got {line!r}", line_no)
            cycles.extend([_code(tok, line_no) for tok in body.replace(",", " ").split()] for body in found)

    if mode is None:
        raise FormatError("missing .table or .n header")
    try:
        if mode == ".table":
            if len(images) != 1 << n:
                raise FormatError(f"{len(images)} images for {1 << n} codes")
            return Permutation.from_table(n, images)
        return Permutation.from_cycles(n, cycles)
    except StructuralError as e:
        raise FormatError(str(e)) from e


def emit_permutation(perm: Permutation, sparse: Optional[bool] = None) -> str:
    """Cycle form for sparse permutations, a table otherwise"""
    if sparse is None:
        sparse = perm.is_sparse()
    if sparse:
        lines = [f".n {perm.n}"]
        lines.extend("(" + " ".join(str(x) for x in cycle) + ")" for cycle in perm.cycles())
    else:
        lines = [f".table {perm.n}", " ".join(str(int(y)) for y in perm.table())]
    return "\n".join(lines) + "\n"


def load_permutation(path: Union[str, Path]) -> Permutation:
    return parse_permutation(Path(path).read_text(encoding="utf-8"))


def save_permutation(path: Union[str, Path], perm: Permutation, sparse: Optional[bool] = None):
    Path(path).write_text(emit_permutation(perm, sparse), encoding="utf-8")
    logger.info(f"[Perm] wrote {path} (n={perm.n}, |M|={perm.support_size})")
