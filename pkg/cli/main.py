#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Reversible Synthesis CLI
Synthesis, reduction, verification and benchmark commands
"""

import functools
import os
import sys
from pathlib import Path
from typing import Optional

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import click
import numpy as np
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from config import get_config, get_config_path, load_config
from core.errors import RevSynthError

console = Console(stderr=True)

TABLE_KINDS = ("pow", "log", "reduced")


def get_version() -> str:
    """Read version from VERSION file"""
    version_file = Path(__file__).parent.parent / "VERSION"
    if version_file.exists():
        return version_file.read_text().strip()
    return "unknown"


def handle_errors(func):
    """Every RevSynthError becomes one `error=... message=...` line and exit code 2"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except RevSynthError as e:
            message = " ".join(str(e).split())
            click.echo(f"error={type(e).__name__} message={message}", err=True)
            sys.exit(2)
    return wrapper


def _write(text: str, output: Optional[str]):
    if output and output != "-":
        Path(output).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _read_target(stream):
    """Truth table or permutation file, told apart by the first directive"""
    from core.mapping import BooleanMapping
    from formats.permutation_file import parse_permutation
    from formats.truth_table import read_truth_table

    text = stream.read()
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith(".table") or line.startswith(".n "):
            return BooleanMapping.from_permutation(parse_permutation(text))
        break
    return read_truth_table(text).to_mapping()


@click.group()
@click.option("--config", "-c", "config_path", help="Path to config file")
@click.option("--log-level", help="Override the configured log level")
@click.version_option(version=get_version(), prog_name="revsynth")
@click.pass_context
def cli(ctx, config_path, log_level):
    """Reversible Synthesis CLI - Synthesize, reduce and verify reversible circuits"""
    ctx.ensure_object(dict)

    if config_path:
        os.environ["REVSYNTH_CONFIG_PATH"] = config_path
        load_config(reload=True)
    else:
        load_config()

    from utils.logging_setup import setup_logging
    setup_logging(level=log_level)


# ============ INFO COMMAND ============

@cli.command("info")
def info_cmd():
    """Show version and configuration files"""
    version = get_version()
    console.print(Panel(f"[bold cyan]RevSynth v{version}[/bold cyan]"))

    config_dir = get_config_path().parent
    table = Table(title="Configuration Files")
    table.add_column("File", style="cyan")
    table.add_column("Status", style="green")

    files = {
        "settings.yaml": "Main config",
        ".env": "Environment overrides (optional)",
    }
    for filename, desc in files.items():
        path = config_dir / filename if filename != ".env" else Path.cwd() / filename
        if path.exists():
            table.add_row(filename, f"✅ Found - {desc}")
        elif (config_dir / filename.replace(".yaml", ".example.yaml")).exists() and filename.endswith(".yaml"):
            table.add_row(filename, "⚠️  Missing (example available)")
        else:
            table.add_row(filename, "❌ Not found")

    console.print(table)


# ============ CONFIG COMMANDS ============

@cli.group()
def config():
    """Configuration management"""
    pass


@config.command("show")
def config_show():
    """Show current configuration"""
    cfg = get_config()
    console.print(Panel("[bold]Current Configuration[/bold]"))

    for section_name, section in cfg:
        table = Table(title=section_name.capitalize())
        table.add_column("Setting", style="cyan")
        table.add_column("Value", style="green")
        for key, value in section.model_dump().items():
            table.add_row(key, str(value))
        console.print(table)


# ============ SYNTHESIS COMMANDS ============

@cli.command("synth")
@click.argument("source", type=click.File("r"), default="-")
@click.option("--output", "-o", help="TFC output file (default: stdout)")
@click.option("--method", type=click.Choice(["A", "B", "K", "face", "lupanov"]), help="Synthesis method")
@click.option("--basis", type=click.Choice(["omega2", "omega"]), help="Gate basis")
@click.option("--ancilla", type=int, help="Number of additional lines")
@click.option("--group-size", "-k", type=int, help="K for the K-group method")
@click.option("--seed", type=int, help="Seed recorded in the header")
@click.option("--face-search", is_flag=True, default=None, help="Use cube-face search")
@click.option("--reduce/--no-reduce", "do_reduce", default=False, help="Run the reducer on the result")
@click.option("--max-passes", type=int, help="Reducer passes")
@handle_errors
def synth(source, output, method, basis, ancilla, group_size, seed, face_search, do_reduce, max_passes):
    """Synthesize a circuit from a truth table or permutation file"""
    from formats.tfc import emit_tfc
    from synthesis.embedding import synth_mapping
    from synthesis.options import SynthesisOptions

    f = _read_target(source)
    opts = SynthesisOptions.from_config(
        method=method, basis=basis, ancilla=ancilla, K=group_size, seed=seed, face_search=face_search or None,
    )
    circuit = synth_mapping(f, opts)
    if do_reduce:
        from reduction.reducer import reduce_circuit
        circuit = reduce_circuit(circuit, max_passes=max_passes).circuit

    header = {"seed": opts.seed, "method": opts.method, "basis": opts.basis}
    _write(emit_tfc(circuit, header=header), output)


@cli.command("reduce")
@click.argument("source", type=click.File("r"), default="-")
@click.option("--output", "-o", help="TFC output file (default: stdout)")
@click.option("--max-passes", type=int, help="Exploratory passes")
@click.option("--no-explore", is_flag=True, help="Shrinking rules only")
@click.option("--trace/--no-trace", default=True, help="Print the rule trace on stderr")
@handle_errors
def reduce_cmd(source, output, max_passes, no_explore, trace):
    """Reduce the gate count of a TFC circuit"""
    from formats.tfc import emit_tfc, read_tfc
    from reduction.reducer import reduce_circuit

    doc = read_tfc(source.read())
    result = reduce_circuit(doc.circuit, max_passes=max_passes, exploratory=False if no_explore else None)
    if trace:
        for step in result.trace:
            click.echo(str(step), err=True)
    header = dict(doc.header)
    header["reduced"] = f"{result.initial_L}->{result.final_L}"
    _write(emit_tfc(result.circuit, doc.names, header), output)


def _first_mismatch(circuit, f, perm_outputs):
    from core.circuit import evaluate_codes
    lines = circuit.significant_outputs or tuple(range(f.m))
    order = perm_outputs or list(range(f.m))
    images = evaluate_codes(circuit, np.arange(1 << f.n, dtype=np.int64))
    for x in range(1 << f.n):
        got = sum(((int(images[x]) >> lines[order[j]]) & 1) << j for j in range(f.m))
        if got != f(x):
            return x, f(x), got
    return None


@cli.command("verify")
@click.argument("circuit_file", type=click.File("r"))
@click.argument("table_file", type=click.File("r"))
@click.option("--perm", "perm_text", help="Output order pi as 1-based lines, e.g. 2,1")
@click.option("--garbage-free", is_flag=True, help="Also require clean non-output lines")
@handle_errors
def verify(circuit_file, table_file, perm_text, garbage_free):
    """Check that a TFC circuit realizes a truth table (exit 0 / 1)"""
    from core.circuit import garbage_free as is_garbage_free
    from core.circuit import realizes
    from core.errors import ParameterError
    from formats.tfc import parse_tfc
    from formats.truth_table import code_to_bits

    circuit = parse_tfc(circuit_file.read())
    f = _read_target(table_file)
    perm_outputs = None
    if perm_text:
        try:
            perm_outputs = [int(tok) - 1 for tok in perm_text.replace(" ", "").split(",")]
        except ValueError:
            raise ParameterError(f"bad output permutation {perm_text!r}")

    if not realizes(circuit, f, perm_outputs):
        x, expected, got = _first_mismatch(circuit, f, perm_outputs)
        click.echo(
            f"FAIL input={code_to_bits(x, f.n)} expected={code_to_bits(expected, f.m)} got={code_to_bits(got, f.m)}"
        )
        sys.exit(1)
    if garbage_free and not is_garbage_free(circuit, f):
        click.echo("FAIL garbage on non-output lines")
        sys.exit(1)
    click.echo("OK")


@cli.command("stats")
@click.argument("source", type=click.File("r"), default="-")
@handle_errors
def stats(source):
    """Cost report of a TFC circuit as key=value lines"""
    from core.metrics import cost_report
    from formats.tfc import parse_tfc

    circuit = parse_tfc(source.read())
    click.echo(cost_report(circuit).as_lines())


@cli.command("dlog-gen", context_settings={"ignore_unknown_options": True})
@click.argument("tokens", nargs=-1, required=True)
@click.option("--strategy", type=click.Choice(["k_min", "k_max", "k_dist", "random"]), default="k_min",
              help="Representative choice for reduced tables")
@click.option("--seed", type=int, help="Seed of the random strategy")
@click.option("--output", "-o", help="Truth-table output file (default: stdout)")
@handle_errors
def dlog_gen(tokens, strategy, seed, output):
    """Discrete power / log truth table, e.g. `dlog-gen n=2 f=111 log`"""
    from core.errors import ParameterError
    from formats.field_spec import parse_field_spec
    from formats.truth_table import emit_truth_table
    from gf2.tables import reduced_log_table, table_log, table_pow

    kinds = [t for t in tokens if t in TABLE_KINDS or t == "reduced-log"]
    if len(kinds) != 1:
        raise ParameterError(f"expected exactly one of {TABLE_KINDS}")
    spec = " ".join(t for t in tokens if t not in kinds)
    gf = parse_field_spec(spec)

    kind = kinds[0]
    if kind == "pow":
        mapping = table_pow(gf)
    elif kind == "log":
        mapping = table_log(gf)
    else:
        mapping = reduced_log_table(gf, strategy, seed)
    _write(emit_truth_table(mapping), output)


# ============ BENCH COMMAND ============

@cli.command("bench")
@click.argument("manifest", type=click.Path(exists=True, dir_okay=False))
@click.option("--csv", "csv_path", help="CSV output (default from config)")
@click.option("--workers", "-w", type=int, help="Worker processes")
@click.option("--timeout", type=int, help="Per-job timeout in seconds")
@click.option("--seed", type=int, help="Seed passed to every job")
@handle_errors
def bench(manifest, csv_path, workers, timeout, seed):
    """Run a benchmark manifest and write a CSV table"""
    from services.bench import load_manifest, run_bench

    rows = run_bench(load_manifest(manifest), csv_path, workers, timeout, seed)

    table = Table(title="Benchmark")
    for column in ("target", "method", "L", "L_reduced", "L_reference", "D", "W", "Q", "seconds", "verified"):
        table.add_column(column)
    for row in rows:
        table.add_row(
            row.target, row.method,
            *("" if v is None else str(v) for v in (row.L, row.L_reduced, row.L_reference, row.D, row.W, row.Q)),
            f"{row.seconds:.2f}",
            "✅" if row.verified else f"❌ {row.error}",
        )
    console.print(table)


if __name__ == "__main__":
    cli()
