"""
Command-line interface for catalantri.
Provides commands for printing triangles, verifying identities, running the
path-enumeration oracles, checking bijections and checking series.

Data goes to stdout; status lines and errors go to stderr.
Exit codes: 0 = everything passed, 1 = a counterexample was found,
2 = usage error.
"""

import json
import logging
import re
from enum import Enum
from typing import Dict, List, Optional, Tuple

import typer
from rich.console import Console
from rich.table import Table

from catalantri.config import Config, setup_logging
from catalantri.core.exact import Scalar, parse_rational
from catalantri.exceptions import CatalanError
from catalantri.identities.engine import certify, verify, verify_all
from catalantri.identities.registry import REGISTRY, get_identity
from catalantri.models.schema import IdentityDescriptor, OutputFormat, TriangleKind, VerificationReport
from catalantri.paths.bijections import check_dyck_split, check_phi, dyck_split, phi_pairing
from catalantri.paths.lattice import LatticePath, iter_dyck
from catalantri.paths.oracle import check_ballot_oracle, check_dyck_oracle, check_motzkin_oracle
from catalantri.reporting.formatters import render_pairing, render_reports, render_table
from catalantri.series.power_series import check_catalan_series, check_riordan
from catalantri.triangles.transforms import get_triangle

USAGE_ERROR = 2

# Create Typer app
app = typer.Typer(
    name="catalantri",
    help="Exact Catalan triangles, identity checks and lattice-path bijections",
    no_args_is_help=True,
)

# Rich console for status lines and errors (stdout stays clean for data)
console = Console(stderr=True)

_PARAM_RANGE = re.compile(r"^\s*(\w+)\s*=\s*(.+?)\s*$")


class OracleCheck(str, Enum):
    MOTZKIN = "motzkin"
    BALLOT = "ballot"
    DYCK = "dyck"


class BijectionKind(str, Enum):
    PHI = "phi"
    DYCK_SPLIT = "dyck-split"


class SeriesCheck(str, Enum):
    RIORDAN = "riordan"
    CATALAN = "catalan"


def _usage_error(e: Exception) -> None:
    console.print(f"[red]✗ Error:[/red] {e}")
    raise typer.Exit(code=USAGE_ERROR)


def _rational_option(value: Optional[str]) -> Optional[Scalar]:
    if value is None:
        return None
    try:
        return parse_rational(value)
    except CatalanError as e:
        raise typer.BadParameter(str(e))


def _rational_list_option(values: Optional[List[str]]) -> Optional[List[Scalar]]:
    if not values:
        return None
    return [_rational_option(v) for v in values]


def _resolve_format(fmt: Optional[OutputFormat]) -> OutputFormat:
    return fmt if fmt is not None else OutputFormat(Config.get_format())


def _emit_reports(reports: List[VerificationReport], fmt: OutputFormat) -> None:
    """Print reports to stdout and exit 1 if any failed."""
    typer.echo(render_reports(reports, fmt))
    failed = [r for r in reports if not r.passed]
    if fmt is OutputFormat.ASCII:
        if failed:
            console.print(f"[red]✗ {len(failed)} of {len(reports)} checks failed[/red]")
        else:
            console.print(f"[green]✓ All {len(reports)} checks passed[/green]")
    if failed:
        raise typer.Exit(code=1)


def _format_option():
    return typer.Option(
        None, "--format", "-f", case_sensitive=False,
        help="Output format (default from CATALANTRI_FORMAT)",
    )


@app.callback()
def setup(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress to stderr"),
):
    """Exact Catalan triangles, identity checks and lattice-path bijections."""
    try:
        level = logging.DEBUG if verbose else Config.get_log_level()
    except CatalanError as e:
        _usage_error(e)
    setup_logging(level, console)


@app.command()
def table(
    triangle: TriangleKind = typer.Option(
        ..., "--triangle", "-t", case_sensitive=False, help="C, B, A, M, X, Y, Z or W"
    ),
    rows: int = typer.Option(8, "--rows", "-n", min=0, help="Number of rows (0 .. rows-1)"),
    x: Optional[str] = typer.Option(
        None, "--x", callback=_rational_option, help="Weight x for triangle M (p or p/q)"
    ),
    y: Optional[str] = typer.Option(
        None, "--y", callback=_rational_option, help="Weight y for triangle M (p or p/q)"
    ),
    fmt: Optional[OutputFormat] = _format_option(),
):
    """Print rows 0 .. rows-1 of a triangle."""
    try:
        tri = get_triangle(triangle, x, y)
        text = render_table(tri, triangle, rows, _resolve_format(fmt), x, y)
    except CatalanError as e:
        _usage_error(e)
    typer.echo(text)


def _range_values(descriptor: IdentityDescriptor, name: str, lo: Optional[int], hi: Optional[int]):
    spec = descriptor.param(name)
    if lo is None:
        lo = min(spec.default) if spec.default else 0
    if hi is None:
        hi = max(spec.default) if spec.default else lo - 1
    return range(int(lo), int(hi) + 1)


def _parse_param_range(text: str) -> Tuple[str, List[Scalar]]:
    """'n=0..5' or 'x=1,1/2,-3' into a name and its values."""
    match = _PARAM_RANGE.match(text)
    if not match:
        raise typer.BadParameter(f"expected NAME=LO..HI or NAME=V1,V2,..., got {text!r}")
    name, values = match.groups()
    try:
        if ".." in values:
            lo, hi = (parse_rational(v) for v in values.split("..", 1))
            return name, list(range(int(lo), int(hi) + 1))
        return name, [parse_rational(v) for v in values.split(",")]
    except CatalanError as e:
        raise typer.BadParameter(str(e))


def build_box(
    descriptor: IdentityDescriptor,
    ranges: Dict[str, Tuple[Optional[int], Optional[int]]],
    explicit: Dict[str, List[Scalar]],
) -> Dict[str, List[Scalar]]:
    """
    Turn the range flags given on the command line into a box.

    Raises:
        DomainError: via the engine, when a flag names a parameter the
            identity does not declare
    """
    box: Dict[str, List[Scalar]] = {}
    for name, (lo, hi) in ranges.items():
        if lo is None and hi is None:
            continue
        if name not in descriptor.param_names:
            box[name] = []
            continue
        box[name] = list(_range_values(descriptor, name, lo, hi))
    box.update(explicit)
    return box


@app.command(name="verify")
def verify_command(
    identity: str = typer.Option(..., "--identity", "-i", help="Identity id (see 'identities')"),
    n_max: Optional[int] = typer.Option(None, "--n-max"),
    m_max: Optional[int] = typer.Option(None, "--m-max"),
    l_max: Optional[int] = typer.Option(None, "--l-max"),
    k_max: Optional[int] = typer.Option(None, "--k-max"),
    p_min: Optional[int] = typer.Option(None, "--p-min"),
    p_max: Optional[int] = typer.Option(None, "--p-max"),
    r_min: Optional[int] = typer.Option(None, "--r-min"),
    r_max: Optional[int] = typer.Option(None, "--r-max"),
    x: Optional[List[str]] = typer.Option(
        None, "--x", callback=_rational_list_option, help="x values (repeatable)"
    ),
    y: Optional[List[str]] = typer.Option(
        None, "--y", callback=_rational_list_option, help="y values (repeatable)"
    ),
    param: Optional[List[str]] = typer.Option(
        None, "--param", help="Any parameter as NAME=LO..HI or NAME=V1,V2 (repeatable)"
    ),
    certify_weights: bool = typer.Option(
        False, "--certify",
        help="Prove the identity as a polynomial in its rational parameters instead of sampling them",
    ),
    fmt: Optional[OutputFormat] = _format_option(),
):
    """Verify one identity over a box of parameters."""
    try:
        descriptor = get_identity(identity)
        explicit: Dict[str, List[Scalar]] = {}
        if x:
            explicit["x"] = x
        if y:
            explicit["y"] = y
        for text in param or []:
            name, values = _parse_param_range(text)
            explicit[name] = values
        box = build_box(
            descriptor,
            {
                "n": (None, n_max), "m": (None, m_max), "l": (None, l_max),
                "k": (None, k_max), "p": (p_min, p_max), "r": (r_min, r_max),
            },
            explicit,
        )
        report = certify(identity, box) if certify_weights else verify(identity, box)
    except CatalanError as e:
        _usage_error(e)
    _emit_reports([report], _resolve_format(fmt))


@app.command(name="verify-all")
def verify_all_command(
    workers: Optional[int] = typer.Option(
        None, "--workers", "-w", min=1, help="Worker threads (default from CATALANTRI_WORKERS)"
    ),
    max_size: Optional[int] = typer.Option(
        None, "--max-size", min=0, help="Cap every integer parameter for a quick run"
    ),
    fmt: Optional[OutputFormat] = _format_option(),
):
    """Verify every registered identity over its default box."""
    try:
        reports = verify_all(
            max_workers=workers if workers is not None else Config.get_workers(),
            max_size=max_size,
        )
        resolved = _resolve_format(fmt)
    except CatalanError as e:
        _usage_error(e)
    _emit_reports(reports, resolved)


@app.command()
def oracle(
    check: OracleCheck = typer.Option(..., "--check", "-c", case_sensitive=False),
    n_max: int = typer.Option(6, "--n-max", min=0, help="Largest path length / semilength"),
    fmt: Optional[OutputFormat] = _format_option(),
):
    """Compare closed forms and recurrences against exhaustive path enumeration."""
    try:
        if check is OracleCheck.MOTZKIN:
            report = check_motzkin_oracle(n_max)
        elif check is OracleCheck.BALLOT:
            report = check_ballot_oracle(n_max)
        else:
            report = check_dyck_oracle(n_max)
        resolved = _resolve_format(fmt)
    except CatalanError as e:
        _usage_error(e)
    _emit_reports([report], resolved)


def _render_splits(n: int, m: int) -> str:
    lines = []
    for word in iter_dyck(n + m + 1):
        split = dyck_split(LatticePath(steps=word), n)
        lines.append(
            f"{split.source} -> {split.pivot} k={split.k} "
            f"({split.first or '-'}, {split.second_reversed or '-'})"
        )
    return "\n".join(lines)


@app.command()
def bijection(
    which: BijectionKind = typer.Option(..., "--which", case_sensitive=False),
    n: int = typer.Option(1, "--n", min=0),
    m: int = typer.Option(1, "--m", min=0),
    r: int = typer.Option(1, "--r", min=0, help="Shift r (phi only)"),
    y: Optional[str] = typer.Option(
        None, "--y", callback=_rational_option, help="Weight y for the phi weight check"
    ),
    list_pairs: bool = typer.Option(False, "--list", help="Dump the pairing instead of checking it"),
    fmt: Optional[OutputFormat] = _format_option(),
):
    """Check (or list) the phi bijection or the Dyck-path split."""
    try:
        if list_pairs:
            if which is BijectionKind.PHI:
                text = render_pairing(phi_pairing(n, m, r))
            else:
                text = _render_splits(n, m)
        elif which is BijectionKind.PHI:
            report = check_phi(n, m, r, y if y is not None else 1)
        else:
            report = check_dyck_split(n, m)
        resolved = _resolve_format(fmt)
    except CatalanError as e:
        _usage_error(e)
    if list_pairs:
        typer.echo(text)
        return
    _emit_reports([report], resolved)


@app.command()
def series(
    check: SeriesCheck = typer.Option(SeriesCheck.RIORDAN, "--check", "-c", case_sensitive=False),
    order: int = typer.Option(12, "--order", min=0, help="Truncation order N"),
    k_max: int = typer.Option(6, "--k-max", min=0, help="Largest column k (riordan)"),
    fmt: Optional[OutputFormat] = _format_option(),
):
    """Check the generating-function descriptions of the triangles."""
    try:
        if check is SeriesCheck.RIORDAN:
            report = check_riordan(k_max, order)
        else:
            report = check_catalan_series(order)
        resolved = _resolve_format(fmt)
    except CatalanError as e:
        _usage_error(e)
    _emit_reports([report], resolved)


@app.command()
def identities(fmt: Optional[OutputFormat] = _format_option()):
    """List the registered identities."""
    try:
        resolved = _resolve_format(fmt)
    except CatalanError as e:
        _usage_error(e)

    if resolved is OutputFormat.JSON:
        typer.echo(json.dumps([
            {"id": d.id, "title": d.title, "statement": d.statement, "params": list(d.param_names)}
            for d in REGISTRY.values()
        ], indent=2))
        return
    if resolved is OutputFormat.CSV:
        typer.echo("id,params,title")
        for d in REGISTRY.values():
            typer.echo(f"{d.id},{' '.join(d.param_names)},\"{d.title}\"")
        return

    # Create table
    listing = Table(title=f"Identities ({len(REGISTRY)} registered)")
    listing.add_column("ID", style="cyan")
    listing.add_column("Params", style="yellow")
    listing.add_column("Title", style="green")
    for d in REGISTRY.values():
        listing.add_row(d.id, ", ".join(d.param_names), d.title)
    Console().print(listing)


@app.command()
def config_check():
    """Check configuration and show the effective settings."""
    console.print("[bold]Configuration Check[/bold]\n")

    try:
        Config.validate()
        console.print("[green]✓ All configuration is valid[/green]\n")

        console.print(f"Log level: {logging.getLevelName(Config.get_log_level())}")
        console.print(f"Workers: {Config.get_workers()}")
        console.print(f"Default format: {Config.get_format()}")
        console.print(f"Project root: {Config.get_project_root()}")

        env_file = Config.get_project_root() / ".env"
        if env_file.exists():
            console.print("\n[green]✓ .env file loaded[/green]")
        else:
            console.print("\n[yellow]⚠ No .env file; using defaults and the environment[/yellow]")

    except CatalanError as e:
        console.print(f"[red]✗ Configuration error:[/red]\n{e}")
        raise typer.Exit(code=USAGE_ERROR)


def main():
    """Main entry point for the CLI."""
    app()


if __name__ == "__main__":
    main()
