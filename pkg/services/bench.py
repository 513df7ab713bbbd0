#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Benchmark harness
Runs every (target, method) pair of a manifest and writes one CSV row each

Manifest (YAML):

    methods: [B, face]
    reduce: true
    targets:
      - name: log_x4_x_1
        field: "n:4;f:0x13;alpha:x"
        table: log                 # pow | log | reduced
        strategy: k_min            # reduced tables only
      - name: rd32
        truth_table: rd32.tt       # paths are relative to the manifest
      - name: sparse12
        permutation: sparse12.perm
"""

import csv
import logging
import time
from concurrent.futures import ProcessPoolExecutor, TimeoutError as FutureTimeout
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

import yaml

from config import get_config
from core.circuit import realizes
from core.errors import FormatError, RevSynthError
from core.mapping import BooleanMapping
from core.metrics import cost_report

logger = logging.getLogger(__name__)

CSV_COLUMNS = (
    "target", "n", "m", "method", "L", "D", "W", "Q", "L_reduced",
    "L_reference", "seconds", "verified", "error",
)


# =============================================================================
# Manifest
# =============================================================================

@dataclass
class BenchTarget:
    name: str
    field: Optional[str] = None
    table: str = "log"
    strategy: str = "k_min"
    truth_table: Optional[str] = None
    permutation: Optional[str] = None

    def load(self) -> BooleanMapping:
        """Truth table of the target"""
        if self.field:
            from formats.field_spec import parse_field_spec
            from gf2.tables import reduced_log_table, table_log, table_pow
            gf = parse_field_spec(self.field)
            if self.table == "pow":
                return table_pow(gf)
            if self.table == "log":
                return table_log(gf)
            if self.table == "reduced":
                return reduced_log_table(gf, self.strategy)
            raise FormatError(f"unknown table kind {self.table!r} for target {self.name}")
        if self.truth_table:
            from formats.truth_table import load_truth_table
            return load_truth_table(self.truth_table).to_mapping()
        if self.permutation:
            from formats.permutation_file import load_permutation
            return BooleanMapping.from_permutation(load_permutation(self.permutation))
        raise FormatError(f"target {self.name} has no field, truth_table or permutation")

    def reference_L(self) -> Optional[int]:
        """Published gate count of the plain log table when the modulus is a reference one"""
        if not self.field or self.table not in ("log", "reduced"):
            return None
        from formats.field_spec import parse_field_spec
        from gf2.field import REFERENCE_MODULI
        gf = parse_field_spec(self.field)
        for ref in REFERENCE_MODULI:
            if ref.modulus == gf.modulus and ref.alpha == gf.alpha:
                if self.table == "log":
                    return ref.l_plain
                strategies = ("k_min", "k_max", "k_dist")
                if self.strategy in strategies:
                    return ref.l_reduced[strategies.index(self.strategy)]
        return None


@dataclass
class BenchManifest:
    targets: List[BenchTarget]
    methods: List[str] = field(default_factory=lambda: ["B"])
    reduce: bool = True


def load_manifest(path: Union[str, Path]) -> BenchManifest:
    path = Path(path)
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict) or not data.get("targets"):
        raise FormatError(f"manifest {path} lists no targets")

    targets = []
    for i, entry in enumerate(data["targets"]):
        if not isinstance(entry, dict):
            raise FormatError(f"target #{i} is not a mapping")
        entry = dict(entry)
        entry.setdefault("name", f"target{i}")
        for key in ("truth_table", "permutation"):
            if entry.get(key):
                entry[key] = str(path.parent / entry[key])
        try:
            targets.append(BenchTarget(**entry))
        except TypeError as e:
            raise FormatError(f"target {entry['name']}: {e}")

    methods = data.get("methods") or ["B"]
    return BenchManifest(targets, [str(m) for m in methods], bool(data.get("reduce", True)))


# =============================================================================
# Jobs
# =============================================================================

@dataclass
class BenchRow:
    target: str
    n: int = 0
    m: int = 0
    method: str = ""
    L: Optional[int] = None
    D: Optional[int] = None
    W: Optional[float] = None
    Q: Optional[int] = None
    L_reduced: Optional[int] = None
    L_reference: Optional[int] = None
    seconds: float = 0.0
    verified: bool = False
    error: str = ""


def run_job(target: BenchTarget, method: str, reduce: bool = True, seed: Optional[int] = None) -> BenchRow:
    """One synthesis run; errors are reported in the row, never raised"""
    from reduction.reducer import reduce_circuit
    from synthesis.embedding import synth_mapping
    from synthesis.options import SynthesisOptions

    row = BenchRow(target=target.name, method=method)
    start = time.perf_counter()
    try:
        f = target.load()
        row.n, row.m = f.n, f.m
        row.L_reference = target.reference_L()
        opts = SynthesisOptions.from_config(method=method, seed=seed)
        circuit = synth_mapping(f, opts)
        report = cost_report(circuit)
        row.L, row.D, row.W, row.Q = report.L, report.D, report.W, report.Q
        if reduce:
            circuit = reduce_circuit(circuit, trace=False).circuit
            row.L_reduced = circuit.L
        row.verified = realizes(circuit, f)
    except RevSynthError as e:
        row.error = f"{type(e).__name__}: {e}"
        logger.warning(f"[Bench] {target.name}/{method} failed: {row.error}")
    row.seconds = round(time.perf_counter() - start, 4)
    return row


def _write_csv(path: Union[str, Path], rows: Sequence[BenchRow]):
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ("" if v is None else v) for k, v in asdict(row).items()})


def run_bench(
    manifest: BenchManifest,
    csv_path: Optional[Union[str, Path]] = None,
    workers: Optional[int] = None,
    timeout_s: Optional[int] = None,
    seed: Optional[int] = None,
) -> List[BenchRow]:
    """Run the manifest, in a process pool when workers > 1, and write the CSV"""
    cfg = get_config().bench
    csv_path = csv_path or cfg.csv_path
    workers = workers or cfg.workers
    timeout_s = timeout_s or cfg.timeout_s

    jobs = [(t, m) for t in manifest.targets for m in manifest.methods]
    logger.info(f"[Bench] {len(jobs)} job(s) on {workers} worker(s)")

    rows: List[BenchRow] = []
    if workers <= 1:
        for target, method in jobs:
            rows.append(run_job(target, method, manifest.reduce, seed))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                (t, m, pool.submit(run_job, t, m, manifest.reduce, seed)) for t, m in jobs
            ]
            for target, method, future in futures:
                try:
                    rows.append(future.result(timeout=timeout_s))
                except FutureTimeout:
                    future.cancel()
                    logger.error(f"[Bench] {target.name}/{method} timed out after {timeout_s}s")
                    rows.append(BenchRow(target=target.name, method=method, error=f"timeout after {timeout_s}s"))

    _write_csv(csv_path, rows)
    failed = sum(1 for r in rows if r.error or not r.verified)
    logger.info(f"[Bench] wrote {len(rows)} row(s) to {csv_path}, {failed} failed")
    return rows


def summarize(rows: Sequence[BenchRow]) -> Dict[str, int]:
    return {
        "rows": len(rows),
        "verified": sum(1 for r in rows if r.verified),
        "errors": sum(1 for r in rows if r.error),
    }
