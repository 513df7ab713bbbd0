#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Services module
"""

from .bench import (
    BenchManifest, BenchTarget, BenchRow,
    load_manifest, run_job, run_bench, summarize
)

__all__ = [
    "BenchManifest", "BenchTarget", "BenchRow",
    "load_manifest", "run_job", "run_bench", "summarize"
]
