"""Command-line interface for heapknot."""

import logging
import re
from collections.abc import Callable
from pathlib import Path
from typing import NoReturn

import typer
from pydantic import BaseModel
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from . import __version__
from .algebra import heap_is_tsd, make_group
from .cohomology import (
    class_rank,
    cocycle_from_spec,
    parse_coefficients,
    parse_variant,
    second_cohomology,
)
from .config import Settings, get_settings, set_settings
from .exceptions import GroupSpecError, LinkSpecError
from .fundamental import (
    Presentation,
    abelianization,
    check_homomorphism,
    heap_presentation,
    parse_target,
    tietze_simplify,
)
from .knots import (
    FramedLink,
    PretzelLink,
    enumerate_colorings,
    invariant,
    parse_link,
    pretzel,
    telephone_cord,
    torus_link,
)
from .models import (
    CocycleFamilyReport,
    CocycleReport,
    CohomologyReport,
    ColoringReport,
    GroupReport,
    HomomorphismReport,
    InvariantReport,
    PresentationReport,
    ReproduceReport,
)
from .models.reproduce import CaseKind
from .reproduce import ReproduceRunner, TargetLoader
from .storage import ReportStorage

app = typer.Typer(
    name="heapknot",
    help="Heap colorings, ribbon cocycle invariants and fundamental heaps of framed links",
    add_completion=False,
)
console = Console()

# Shared options
VERBOSE = typer.Option(False, "--verbose", "-v", help="Enable verbose output")
DEBUG = typer.Option(False, "--debug", "-d", help="Enable debug mode")
JSON = typer.Option(False, "--json", help="Print the report as JSON")
OUTPUT = typer.Option(None, "--output", "-o", help="Write the JSON report to a file")
CONFIG = typer.Option(None, "--config", help="YAML settings file")
WORKERS = typer.Option(None, "--workers", "-w", help="Enumeration worker processes")
GROUP = typer.Option(..., "--group", "-g", help="Group spec, e.g. Z3, D3, Z2xZ2")
COEFF = typer.Option("Z", "--coeff", "-c", help="Coefficients: Z or Z<m>")
STRANDS = typer.Option(1, "--strands", "-n", help="Braid strand count")
BRAID = typer.Option("", "--braid", "-b", help='Signed letters, e.g. "1 1 -2"')
FRAMINGS = typer.Option("", "--framings", "-f", help='Framing per component, e.g. "0 0"')
TORUS = typer.Option(None, "--torus", help="Use T(2,q) with q crossings")
CORD = typer.Option(None, "--cord", help="Use the telephone cord with this many kinks")


def setup_logging(verbose: bool, debug: bool) -> None:
    """Setup logging configuration."""
    level = logging.DEBUG if debug else logging.INFO if verbose else logging.WARNING
    logging.basicConfig(
        level=level, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )


def load_config(config: Path | None) -> None:
    """Install settings from a YAML file, if one is given."""
    if config is not None:
        set_settings(Settings.from_yaml(config))


def parse_ints(text: str) -> list[int]:
    """Integers separated by commas or whitespace.

    Raises:
        LinkSpecError: On a non-integer token
    """
    try:
        return [int(t) for t in re.split(r"[\s,]+", text.strip()) if t]
    except ValueError:
        raise LinkSpecError(f"expected integers, got {text!r}") from None


def build_link(
    strands: int,
    braid: str,
    framings: str,
    torus: int | None = None,
    cord: int | None = None,
    twists: str | None = None,
) -> FramedLink | PretzelLink:
    """The link selected by the link options; --torus, --cord and --pretzel win over --braid."""
    values = parse_ints(framings) if framings.strip() else None
    if torus is not None:
        return torus_link(torus, values)
    if cord is not None:
        return telephone_cord(cord)
    if twists:
        return pretzel(parse_ints(twists), values)
    return parse_link(braid, strands, values)


def framed_link(link: FramedLink | PretzelLink) -> FramedLink:
    if not isinstance(link, FramedLink):
        raise LinkSpecError("pretzel links are only supported by fundheap")
    return link


def emit(
    report: BaseModel, json_output: bool, output: Path | None, render: Callable[[], None]
) -> None:
    """Write the report to a file, print it as JSON, or render it for humans."""
    storage = ReportStorage()
    if output is not None:
        storage.save_report(report, output)
        if not json_output:
            console.print(f"[green]✓ Report saved to {output}[/green]")
    if json_output:
        if output is None:
            typer.echo(storage.dumps(report))
        return
    render()


def fail(e: Exception, debug: bool) -> NoReturn:
    """Turn malformed input into a usage error; report anything else and exit 1."""
    if isinstance(e, GroupSpecError | LinkSpecError):
        raise typer.BadParameter(str(e)) from e
    if debug:
        console.print_exception()
    else:
        console.print(f"[red]Error: {e}[/red]")
    raise typer.Exit(1)


@app.command()
def cohomology(
    group: str = GROUP,
    coeff: str = COEFF,
    variant: str = typer.Option(
        "full", "--variant", "-V", help="full|dh|ndh|loc:G=..|rel:G=..|loc2:G=..,F=..|rel2:G=..,F=.."
    ),
    basis: bool = typer.Option(True, "--basis/--no-basis", help="Include representative cocycles"),
    json_output: bool = JSON,
    output: Path | None = OUTPUT,
    config: Path | None = CONFIG,
    verbose: bool = VERBOSE,
    debug: bool = DEBUG,
) -> None:
    """Compute the second cohomology of a group heap."""
    setup_logging(verbose, debug)
    try:
        load_config(config)
        X = make_group(group)
        result = second_cohomology(X, parse_coefficients(coeff), parse_variant(variant, X))
        report = CohomologyReport.from_result(result, with_basis=basis)
    except Exception as e:
        fail(e, debug)

    def render() -> None:
        table = Table(show_header=True, header_style="bold magenta")
        table.add_column("Group", style="cyan")
        table.add_column("Coefficients")
        table.add_column("Variant")
        table.add_column("Rank", justify="right", style="green")
        table.add_column("Torsion", justify="right", style="yellow")
        table.add_row(
            report.group,
            report.coefficients,
            report.variant,
            str(report.rank),
            ", ".join(map(str, report.torsion)) or "-",
        )
        console.print(table)
        console.print(f"[bold]{report.description}[/bold]")
        console.print(f"[dim]{report.cocycle_generators} cocycle generators[/dim]")

    emit(report, json_output, output, render)


@app.command()
def cocycles(
    group: str = GROUP,
    coeff: str = COEFF,
    cocycle: list[str] = typer.Option(
        [], "--cocycle", help="deg | ring:a,b,c | phi:i | psi:i | cob:f0,f1,... (repeatable)"
    ),
    family: str | None = typer.Option(
        None, "--family", help="phi or psi: every member of the family"
    ),
    json_output: bool = JSON,
    output: Path | None = OUTPUT,
    config: Path | None = CONFIG,
    verbose: bool = VERBOSE,
    debug: bool = DEBUG,
) -> None:
    """Verify explicit cocycles and the rank of their classes."""
    setup_logging(verbose, debug)
    try:
        load_config(config)
        X = make_group(group)
        modulus = parse_coefficients(coeff)
        named = [cocycle_from_spec(spec, X, modulus) for spec in cocycle]
        if family is not None:
            if family not in ("phi", "psi"):
                raise GroupSpecError(f"unknown family {family!r}")
            n = X.order if family == "phi" else X.order // 2
            named.extend(
                cocycle_from_spec(f"{family}:{i}", X, modulus) for i in range(1, n)
            )
        if not named:
            raise GroupSpecError("give --cocycle or --family")
        rank = class_rank(named) if modulus is None else None
        report = CocycleFamilyReport(
            group=X.label,
            cocycles=[CocycleReport.from_cocycle(c) for c in named],
            class_rank=rank,
        )
    except Exception as e:
        fail(e, debug)

    def render() -> None:
        table = Table(show_header=True, header_style="bold magenta")
        table.add_column("Cocycle", style="cyan")
        table.add_column("Coefficients")
        table.add_column("Support", justify="right")
        table.add_column("Cocycle?", justify="center")
        for c in report.cocycles:
            mark = "[green]✓[/green]" if c.verified else "[red]✗[/red]"
            table.add_row(c.label, c.coefficients, str(len(c.values)), mark)
        console.print(table)
        if report.class_rank is not None:
            console.print(f"Rank of the classes in H²: [bold]{report.class_rank}[/bold]")

    emit(report, json_output, output, render)


@app.command()
def color(
    group: str = GROUP,
    strands: int = STRANDS,
    braid: str = BRAID,
    framings: str = FRAMINGS,
    torus: int | None = TORUS,
    cord: int | None = CORD,
    records: bool = typer.Option(False, "--records", help="Include every coloring"),
    workers: int | None = WORKERS,
    json_output: bool = JSON,
    output: Path | None = OUTPUT,
    config: Path | None = CONFIG,
    verbose: bool = VERBOSE,
    debug: bool = DEBUG,
) -> None:
    """Count heap colorings of a framed braid closure."""
    setup_logging(verbose, debug)
    try:
        load_config(config)
        X = make_group(group)
        L = framed_link(build_link(strands, braid, framings, torus, cord))
        colorings = enumerate_colorings(
            L, X, workers=workers, progress=False if json_output else None
        )
        report = ColoringReport.from_colorings(L, X.label, colorings, with_records=records)
    except Exception as e:
        fail(e, debug)

    def render() -> None:
        console.print(f"[dim]{L.text()}[/dim]")
        table = Table(show_header=True, header_style="bold magenta")
        table.add_column("Pattern", style="cyan")
        table.add_column("Colorings", justify="right", style="green")
        for pattern, count in report.tallies.items():
            table.add_row(pattern, str(count))
        console.print(table)
        console.print(f"Col_{report.group}: [bold]{report.count}[/bold]")

    emit(report, json_output, output, render)


@app.command(name="invariant")
def invariant_command(
    group: str = GROUP,
    coeff: str = COEFF,
    cocycle: str = typer.Option(..., "--cocycle", help="deg | ring:a,b,c | phi:i | psi:i | cob:..."),
    strands: int = STRANDS,
    braid: str = BRAID,
    framings: str = FRAMINGS,
    torus: int | None = TORUS,
    cord: int | None = CORD,
    workers: int | None = WORKERS,
    json_output: bool = JSON,
    output: Path | None = OUTPUT,
    config: Path | None = CONFIG,
    verbose: bool = VERBOSE,
    debug: bool = DEBUG,
) -> None:
    """Evaluate the ribbon cocycle invariant of a framed link."""
    setup_logging(verbose, debug)
    try:
        load_config(config)
        X = make_group(group)
        L = framed_link(build_link(strands, braid, framings, torus, cord))
        named = cocycle_from_spec(cocycle, X, parse_coefficients(coeff))
        colorings = enumerate_colorings(
            L, X, workers=workers, progress=False if json_output else None
        )
        value = invariant(L, X, named, colorings=colorings)
        report = InvariantReport.from_value(L, X.label, named.label, value)
    except Exception as e:
        fail(e, debug)

    def render() -> None:
        console.print(f"[dim]{L.text()}[/dim]")
        table = Table(show_header=True, header_style="bold magenta")
        table.add_column("(B0, B1) per component", style="cyan")
        table.add_column("Multiplicity", justify="right", style="green")
        for term in report.terms:
            table.add_row(", ".join(f"({b0}, {b1})" for b0, b1 in term.key), str(term.mult))
        console.print(table)
        console.print(
            Panel(report.description, title=f"[cyan]Ψ_{report.cocycle}[/cyan]", border_style="blue")
        )

    emit(report, json_output, output, render)


@app.command()
def fundheap(
    strands: int = STRANDS,
    braid: str = BRAID,
    framings: str = FRAMINGS,
    torus: int | None = TORUS,
    cord: int | None = CORD,
    twists: str | None = typer.Option(
        None, "--pretzel", help='Pretzel half-twist counts k_i of P(2k_1, ...), e.g. "1,1,1"'
    ),
    simplify: bool = typer.Option(False, "--simplify", help="Apply Tietze eliminations"),
    abelianize: bool = typer.Option(False, "--abelianize", help="Report the abelianization"),
    map_to: str | None = typer.Option(
        None, "--map-to", help="vinberg:k | triangle:k,l,m | pretzel-vinberg:.. | map:a1=g;a2=h"
    ),
    group: str | None = typer.Option(None, "--group", "-g", help="Target group for map:"),
    json_output: bool = JSON,
    output: Path | None = OUTPUT,
    config: Path | None = CONFIG,
    verbose: bool = VERBOSE,
    debug: bool = DEBUG,
) -> None:
    """Present the fundamental heap of a framed link."""
    setup_logging(verbose, debug)
    try:
        load_config(config)
        L = build_link(strands, braid, framings, torus, cord, twists)
        p = heap_presentation(L)
        if simplify:
            reduced = tietze_simplify(p.without_free_factor())
            p = Presentation(
                p.free_generators + reduced.generators, reduced.relators, p.free_generators
            )
        check = None
        if map_to is not None:
            target = parse_target(map_to, make_group(group) if group else None)
            check = HomomorphismReport.from_check(map_to, check_homomorphism(p, target))
        report = PresentationReport.from_presentation(
            L.text(),
            p,
            abelian=abelianization(p.without_free_factor()) if abelianize else None,
            check=check,
        )
    except Exception as e:
        fail(e, debug)

    def render() -> None:
        console.print(f"[dim]{report.source}[/dim]")
        console.print(f"Free factor: [bold]F_{len(report.free_generators)}[/bold]")
        console.print(Panel(report.text, title="[cyan]Presentation[/cyan]", border_style="blue"))
        if report.abelianization is not None:
            console.print(f"Abelianization of the reduced heap: [bold]{report.abelianization}[/bold]")
        if report.homomorphism is not None:
            hom = report.homomorphism
            table = Table(show_header=True, header_style="bold magenta")
            table.add_column("Relator", style="cyan")
            table.add_column("Image")
            table.add_column("Trivial", justify="center")
            for step in hom.trace:
                mark = "[green]✓[/green]" if step.trivial else "[red]✗[/red]"
                table.add_row(step.relator, step.image, mark)
            console.print(table)
            verdict = "[green]holds[/green]" if hom.holds else "[yellow]not verified[/yellow]"
            console.print(f"Map to {hom.target}: {verdict}")

    emit(report, json_output, output, render)


@app.command()
def reproduce(
    only: CaseKind | None = typer.Option(None, "--only", help="Run only cases of this kind"),
    case: list[str] = typer.Option([], "--case", help="Run only these case ids (repeatable)"),
    slow: bool = typer.Option(False, "--slow", help="Include slow cases"),
    catalogue: Path | None = typer.Option(None, "--catalogue", help="Alternative target file"),
    workers: int | None = WORKERS,
    json_output: bool = JSON,
    output: Path | None = OUTPUT,
    config: Path | None = CONFIG,
    verbose: bool = VERBOSE,
    debug: bool = DEBUG,
) -> None:
    """Run the acceptance targets and print a pass/fail table."""
    setup_logging(verbose, debug)
    try:
        load_config(config)
        cases = TargetLoader(catalogue).load_cases(only, include_slow=slow, ids=case or None)
        show_progress = get_settings().enumeration.show_progress and not json_output
        report: ReproduceReport = ReproduceRunner(workers).run(cases, verbose=show_progress)
    except Exception as e:
        fail(e, debug)

    def render() -> None:
        table = Table(show_header=True, header_style="bold magenta")
        table.add_column("Case", style="cyan")
        table.add_column("Kind")
        table.add_column("Result", justify="center")
        table.add_column("Seconds", justify="right", style="dim")
        table.add_column("Detail")
        for r in report.results:
            mark = "[green]pass[/green]" if r.passed else "[red]FAIL[/red]"
            detail = "" if r.passed else (r.error or f"observed {r.observed}")
            table.add_row(r.id, r.kind.value, mark, f"{r.seconds:.2f}", detail)
        console.print(table)
        color_name = "green" if report.failed == 0 else "red"
        console.print(
            f"[bold {color_name}]{report.passed} passed, {report.failed} failed[/bold {color_name}]"
        )

    emit(report, json_output, output, render)
    if report.failed:
        raise typer.Exit(1)


@app.command(name="group")
def group_command(
    group: str = GROUP,
    tsd: bool = typer.Option(False, "--tsd", help="Check the heap TSD axiom exhaustively"),
    json_output: bool = JSON,
    output: Path | None = OUTPUT,
    verbose: bool = VERBOSE,
    debug: bool = DEBUG,
) -> None:
    """Show a group's multiplication table."""
    setup_logging(verbose, debug)
    try:
        X = make_group(group)
        report = GroupReport.from_group(X, heap_is_tsd(X) if tsd else None)
    except Exception as e:
        fail(e, debug)

    def render() -> None:
        console.print(
            f"[bold]{report.label}[/bold]: order {report.order}, "
            f"{'abelian' if report.abelian else 'non-abelian'}"
        )
        table = Table(show_header=True, header_style="bold magenta")
        table.add_column("·", style="cyan")
        for name in report.names:
            table.add_column(name, justify="right")
        for name, row in zip(report.names, report.mul_table, strict=True):
            table.add_row(name, *(report.names[k] for k in row))
        console.print(table)
        if report.heap_is_tsd is not None:
            console.print(f"Heap is TSD: {report.heap_is_tsd}")

    emit(report, json_output, output, render)


@app.command()
def version() -> None:
    """Show version information."""
    console.print(f"heapknot version {__version__}")


def cli() -> None:
    """Main CLI entry point."""
    app()


if __name__ == "__main__":
    cli()
