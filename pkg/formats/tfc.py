#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
TFC circuit files

    # seed=2024 method=B
    .v a,b,c,d
    .i a,b,c
    .c 0
    .o a,b
    .g c,d
    BEGIN
    t1 a
    t3 a,b',c
    END

`.v` names every line, `.i` the leading input lines, `.c` the constant
values of the remaining lines, `.o` the significant outputs in order and
`.g` the lines that may carry garbage. In a gate `tN l1,...,lN` the last
name is the target and a trailing `'` marks a negative control.
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

from core.circuit import Circuit
from core.errors import FormatError, StructuralError
from core.gates import Gate

logger = logging.getLogger(__name__)

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_GATE = re.compile(r"^t(\d+)\s+(.+)$")


def default_names(width: int) -> List[str]:
    """a, b, ..., z, then x26, x27, ..."""
    return [chr(ord("a") + i) if i < 26 else f"x{i}" for i in range(width)]


@dataclass
class TfcDocument:
    circuit: Circuit
    names: List[str]
    header: Dict[str, str] = field(default_factory=dict)


# =============================================================================
# Parsing
# =============================================================================

def _split_names(text: str, line_no: int) -> List[str]:
    names = [part.strip() for part in text.split(",") if part.strip()]
    for name in names:
        if not _NAME.match(name.rstrip("'")):
            raise FormatError(f"bad line name {name!r}", line_no)
    return names


def _parse_header_comment(text: str, header: Dict[str, str]):
    for token in text.split():
        if "=" in token:
            key, _, value = token.partition("=")
            header[key] = value


def read_tfc(text: str) -> TfcDocument:
    names: Optional[List[str]] = None
    inputs: Optional[List[str]] = None
    outputs: Optional[List[str]] = None
    garbage: List[str] = []
    constants = ""
    header: Dict[str, str] = {}
    gates: List[Gate] = []
    in_body = False
    ended = False

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if not in_body:
                _parse_header_comment(line[1:], header)
            continue
        if ended:
            raise FormatError(f"content after END: {line!r}", line_no)
        upper = line.upper()
        if upper == "BEGIN":
            if names is None:
                raise FormatError("BEGIN before .v", line_no)
            in_body = True
            continue
        if upper == "END":
            if not in_body:
                raise FormatError("END without BEGIN", line_no)
            ended = True
            continue

        if not in_body:
            directive, _, rest = line.partition(" ")
            rest = rest.strip()
            if directive == ".v":
                names = _split_names(rest, line_no)
                if len(set(names)) != len(names):
                    raise FormatError("repeated line name in .v", line_no)
            elif directive == ".i":
                inputs = _split_names(rest, line_no)
            elif directive == ".o":
                outputs = _split_names(rest, line_no)
            elif directive == ".g":
                garbage = _split_names(rest, line_no)
            elif directive == ".c":
                constants = rest.replace(",", "").replace(" ", "")
                if set(constants) - {"0", "1"}:
                    raise FormatError(f"bad constants {rest!r}", line_no)
            else:
                raise FormatError(f"unknown directive {directive!r}", line_no)
            continue

        match = _GATE.match(line)
        if not match:
            raise FormatError(f"bad gate line {line!r}", line_no)
        operands = _split_names(match.group(2), line_no)
        if int(match.group(1)) != len(operands):
            raise FormatError(f"t{match.group(1)} with {len(operands)} operands", line_no)
        index = {name: i for i, name in enumerate(names)}
        *controls, target = operands
        if target.endswith("'"):
            raise FormatError(f"negated target {target!r}", line_no)
        if target not in index:
            raise FormatError(f"unknown line name {target!r}", line_no)
        pos, neg = [], []
        for c in controls:
            bare = c.rstrip("'")
            if bare not in index:
                raise FormatError(f"unknown line name {bare!r}", line_no)
            (neg if c.endswith("'") else pos).append(index[bare])
        try:
            gates.append(Gate.mct(index[target], pos, neg))
        except StructuralError as e:
            raise FormatError(str(e), line_no) from e

    if names is None:
        raise FormatError("missing .v line", 0)
    if in_body and not ended:
        raise FormatError("missing END", 0)

    index = {name: i for i, name in enumerate(names)}
    significant = len(names)
    if inputs is not None:
        if inputs != names[: len(inputs)]:
            raise FormatError(".i must list the leading lines of .v in order", 0)
        significant = len(inputs)
    if constants and len(constants) != len(names) - significant:
        raise FormatError(f".c has {len(constants)} values for {len(names) - significant} constant lines", 0)
    if "1" in constants:
        raise FormatError("constant 1 lines are not supported; add a NOT gate instead", 0)
    for name in (outputs or []) + garbage:
        if name not in index:
            raise FormatError(f"unknown line name {name!r}", 0)

    circuit = Circuit(
        len(names),
        tuple(gates),
        significant_inputs=significant,
        significant_outputs=tuple(index[o] for o in outputs) if outputs is not None else None,
        garbage_lines=frozenset(index[g] for g in garbage),
    )
    logger.debug(f"[TFC] parsed {circuit.width} lines, {circuit.L} gates")
    return TfcDocument(circuit, list(names), header)


def parse_tfc(text: str) -> Circuit:
    return read_tfc(text).circuit


# =============================================================================
# Emission
# =============================================================================

def _gate_line(gate: Gate, names: Sequence[str]) -> str:
    operands = [names[i] for i in gate.pos_lines()] + [f"{names[i]}'" for i in gate.neg_lines()]
    operands.sort(key=lambda s: names.index(s.rstrip("'")))
    operands.append(names[gate.target])
    return f"t{len(operands)} " + ",".join(operands)


def emit_tfc(
    circuit: Circuit,
    names: Optional[Sequence[str]] = None,
    header: Optional[Dict[str, object]] = None,
) -> str:
    names = list(names) if names is not None else default_names(circuit.width)
    if len(names) != circuit.width:
        raise StructuralError(f"{len(names)} names for {circuit.width} lines")
    lines = []
    if header:
        lines.append("# " + " ".join(f"{k}={v}" for k, v in header.items()))
    lines.append(".v " + ",".join(names))
    lines.append(".i " + ",".join(names[: circuit.significant_inputs]))
    if circuit.significant_inputs < circuit.width:
        lines.append(".c " + "0" * (circuit.width - circuit.significant_inputs))
    if circuit.significant_outputs is not None:
        lines.append(".o " + ",".join(names[o] for o in circuit.significant_outputs))
    if circuit.garbage_lines:
        lines.append(".g " + ",".join(names[g] for g in sorted(circuit.garbage_lines)))
    lines.append("BEGIN")
    lines.extend(_gate_line(g, names) for g in circuit.gates)
    lines.append("END")
    return "\n".join(lines) + "\n"


def load_tfc(path: Union[str, Path]) -> TfcDocument:
    return read_tfc(Path(path).read_text(encoding="utf-8"))


def save_tfc(path: Union[str, Path], circuit: Circuit, header: Optional[Dict[str, object]] = None):
    Path(path).write_text(emit_tfc(circuit, header=header), encoding="utf-8")
    logger.info(f"[TFC] wrote {path} ({circuit.L} gates)")
