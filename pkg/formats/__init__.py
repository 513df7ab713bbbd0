# -*- coding: utf-8 -*-
"""
Text formats: TFC circuits, truth tables, permutations, field specifications
"""

from .tfc import TfcDocument, default_names, emit_tfc, load_tfc, parse_tfc, read_tfc, save_tfc
from .truth_table import (
    TruthTableFile,
    emit_truth_table,
    load_truth_table,
    parse_truth_table,
    read_truth_table,
    save_truth_table,
)
from .permutation_file import emit_permutation, load_permutation, parse_permutation, save_permutation
from .field_spec import format_field_spec, parse_field_spec

__all__ = [
    "TfcDocument",
    "default_names",
    "emit_tfc",
    "load_tfc",
    "parse_tfc",
    "read_tfc",
    "save_tfc",
    "TruthTableFile",
    "emit_truth_table",
    "load_truth_table",
    "parse_truth_table",
    "read_truth_table",
    "save_truth_table",
    "emit_permutation",
    "load_permutation",
    "parse_permutation",
    "save_permutation",
    "format_field_spec",
    "parse_field_spec",
]
