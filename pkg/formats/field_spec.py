#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Field specifications: `n:4;f:0x13;alpha:x`

Keys may be separated by `;`, `,` or blanks and bound with `:` or `=`, so
`n=2 f=111` is accepted too. The modulus and alpha are binary when written
with 0/1 digits only (x^n first), hex with 0x, or polynomial text.
"""

from typing import Dict, Optional

from core.errors import FormatError, ParameterError
from gf2.field import Gf2PolyField, degree, format_poly, parse_poly


def _poly_value(text: str) -> int:
    s = text.strip().lower()
    if s and set(s) <= {"0", "1"}:
        return int(s, 2)
    try:
        return parse_poly(s)
    except (ParameterError, ValueError) as e:
        raise FormatError(f"bad polynomial {text!r}: {e}")


def _pairs(text: str) -> Dict[str, str]:
    pairs: Dict[str, str] = {}
    for token in text.replace(";", " ").replace(",", " ").split():
        sep = ":" if ":" in token else "="
        key, found, value = token.partition(sep)
        if not found or not value:
            raise FormatError(f"expected key{sep}value, got {token!r}")
        key = key.strip().lower()
        if key not in ("n", "f", "alpha"):
            raise FormatError(f"unknown field key {key!r}")
        pairs[key] = value.strip()
    return pairs


def parse_field_spec(text: str) -> Gf2PolyField:
    pairs = _pairs(text)
    if "f" not in pairs:
        raise FormatError("field specification needs a modulus f")
    modulus = _poly_value(pairs["f"])
    if "n" in pairs:
        try:
            n = int(pairs["n"])
        except ValueError:
            raise FormatError(f"bad degree {pairs['n']!r}")
        if degree(modulus) != n:
            raise FormatError(f"modulus {format_poly(modulus)} has degree {degree(modulus)}, not {n}")
    alpha: Optional[int] = _poly_value(pairs["alpha"]) if "alpha" in pairs else None
    return Gf2PolyField(modulus, alpha)


def format_field_spec(field: Gf2PolyField) -> str:
    return f"n:{field.n};f:{field.modulus:#x};alpha:{format_poly(field.alpha).replace(' ', '')}"
