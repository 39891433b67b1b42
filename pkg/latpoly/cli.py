"""latpoly CLI implementation."""
import json
import sys
from pathlib import Path
from typing import Callable, List, Optional, Tuple

import click
import typer

from . import __doc__, __name__, version_callback
from .utils import iou, render, report
from .utils._exceptions import (
    BaseOSError,
    DomainError,
    LatpolyError,
    UnparsablePolygonFile,
)
from .utils.config import USAGE_EXIT, Config
from .utils.ehrhart import ehrhart_series, quasipolynomial, refined_boundary_count
from .utils.enumeration import EnumerationBox, default_box, enumerate_polygons
from .utils.extremal import (
    COLLINEAR,
    DIM2,
    FamilyId,
    Member,
    Theorem,
    area_maximizers,
    area_minimizers,
    b_max,
    half_integral_maximizers,
    scott_maximizer,
)
from .utils.geometry import denominator
from .utils.lattice import integer_hull, lattice_stats, lattice_width
from .utils.verify import TASKS, RunOptions, run_task

app = typer.Typer(name=__name__, add_completion=True, help=__doc__)

KINDS = ("scott", "min", "max", "half-max")

# Shared options.
CONFIG = typer.Option(
    None, "--config", show_default=False, help="Read configuration from a file."
)
VERBOSE = typer.Option(
    False, "--verbose", "-v", show_default=True, help="Also emit equality classes."
)
QUIET = typer.Option(
    False,
    "--quiet",
    "-q",
    show_default=True,
    help="Do not emit non-error messages. Errors are still emitted.",
)
SILENCE = typer.Option(
    False, "--silence", "-s", show_default=True, help="Silence both stdout and stderr."
)


@app.callback(context_settings=dict(help_option_names=["-h", "--help"]))
def main(
    version: bool = typer.Option(  # pylint: disable=W0613
        None,
        "--version",
        callback=version_callback,
        is_eager=True,
        help="Show the version and exit.",
    ),
):
    pass


# Override main function `__doc__`.
# This `__doc__` has read from `pyproject.toml`.
main.__doc__ = __doc__


def _finish(reporter: report.Report) -> None:
    # Print the report, then exit with its code.
    typer.echo(str(reporter), nl=False)
    raise typer.Exit(reporter.exit_code)


def _guarded(reporter: report.Report, action: Callable[[], None]) -> None:
    """Run `action`, mapping latpoly errors onto the exit code contract."""
    try:
        action()
    except (UnparsablePolygonFile, BaseOSError) as err:
        reporter.failure(str(err))
    except DomainError as err:
        reporter.failure(str(err), domain=True)
    except LatpolyError as err:
        reporter.failure(f"{type(err).__name__}: {err}", domain=True)
    _finish(reporter)


@app.command()
def stats(
    path: Path = typer.Argument(..., help="Polygon file (JSON or YAML)."),
    config: Optional[Path] = CONFIG,
    verbose: bool = VERBOSE,
    quiet: bool = QUIET,
    silence: bool = SILENCE,
):
    """Print lattice point statistics, lattice width and integer hull."""
    configs = Config(config=config, verbose=verbose, quiet=quiet, silence=silence)
    reporter = report.Report(configs)

    def action() -> None:
        polygon = iou.read_polygon(path).polygon
        lw, direction = lattice_width(polygon)
        hull = integer_hull(polygon)
        reporter.info(str(lattice_stats(polygon)))
        reporter.info(f"lw={lw} direction={direction}")
        reporter.info(
            f"hull={hull.kind} " + " ".join(str(v) for v in hull.vertices)
        )
        reporter.examined(1)

    _guarded(reporter, action)


def _members(
    kind: str, k: int, i: int, b: Optional[int], collinear: bool
) -> List[Member]:
    if kind == "scott":
        family = FamilyId(Theorem.SCOTT_MAX, "2c", k, i, b_max(k, i))
        return [(family, scott_maximizer(k, i))]
    if b is None:
        raise DomainError("extremal", f"--kind {kind} needs -b")
    if kind == "min":
        return area_minimizers(k, i, b, COLLINEAR if collinear else DIM2)
    if kind == "max":
        return area_maximizers(k, i, b)
    return half_integral_maximizers(i, b)


def _file_name(family: FamilyId) -> str:
    name = f"{family.theorem.value}-{family.label}-k{family.k}-i{family.i}-b{family.b}"
    return name + (f"-x{family.x}" if family.x is not None else "") + ".json"


@app.command()
def extremal(
    kind: str = typer.Option(..., "--kind", help=f"One of {', '.join(KINDS)}."),
    k: int = typer.Option(2, "-k", help="Denominator."),
    i: int = typer.Option(1, "-i", help="Interior lattice points."),
    b: Optional[int] = typer.Option(None, "-b", help="Boundary lattice points."),
    collinear: bool = typer.Option(
        False, "--collinear", help="Minimizers with a collinear integer hull."
    ),
    output: Optional[Path] = typer.Option(
        None, "--output", "-o", help="Directory for the polygon files and manifest."
    ),
    config: Optional[Path] = CONFIG,
    verbose: bool = VERBOSE,
    quiet: bool = QUIET,
    silence: bool = SILENCE,
):
    """Write the extremal family members of a bound, one file each."""
    configs = Config(
        config=config, output=output, verbose=verbose, quiet=quiet, silence=silence
    )
    reporter = report.Report(configs)
    if kind not in KINDS:
        reporter.failure(f"--kind: {kind!r} is not one of {', '.join(KINDS)}")
        _finish(reporter)

    def action() -> None:
        directory = configs.output or Path(".")
        manifest = {}
        for family, polygon in _members(kind, k, i, b, collinear):
            path = directory / _file_name(family)
            iou.write_polygon(path, polygon, str(family))
            written = lattice_stats(iou.read_polygon(path).polygon)
            if (written.i, written.b, written.k) != (family.i, family.b, family.k):
                reporter.failure(f"{path} does not re-verify: {written}", domain=True)
                continue
            manifest[str(family)] = path.name
            reporter.written_file(path)
        manifest_path = directory / "manifest.json"
        iou.write_json(manifest_path, manifest)
        reporter.written_file(manifest_path)

    _guarded(reporter, action)


@app.command()
def ehrhart(
    path: Path = typer.Argument(..., help="Polygon file (JSON or YAML)."),
    tmax: int = typer.Option(12, "--tmax", help="Largest dilation t."),
    config: Optional[Path] = CONFIG,
    verbose: bool = VERBOSE,
    quiet: bool = QUIET,
    silence: bool = SILENCE,
):
    """Print Ehrhart counts and the Ehrhart quasipolynomial."""
    configs = Config(
        config=config,
        tmax=tmax,
        verbose=verbose,
        quiet=quiet,
        silence=silence,
    )
    reporter = report.Report(configs)

    def action() -> None:
        polygon = iou.read_polygon(path).polygon
        counts = ehrhart_series(polygon, configs.tmax)
        reporter.info("ehr=" + " ".join(str(c) for c in counts))
        reporter.info(quasipolynomial(polygon).to_json())
        if denominator(polygon) == 2:
            reporter.info(f"b(2P)={refined_boundary_count(polygon, 2)}")
        reporter.examined(1)

    _guarded(reporter, action)


def _box(k: int, i: int, box: Optional[Tuple[int, int]], strip: bool) -> EnumerationBox:
    base = default_box(k, i, strip)
    if box is None:
        return base
    return EnumerationBox(
        k, box[0], box[1], i_target=i, strip=strip, note="given on the command line"
    )


@app.command()
def verify(  # pylint: disable=R0913,R0914
    task: str = typer.Option(..., "--task", "-t", help=f"One of {', '.join(TASKS)}."),
    k: int = typer.Option(2, "-k", help="Denominator."),
    i: int = typer.Option(1, "-i", help="Interior lattice points."),
    box: Optional[Tuple[int, int]] = typer.Option(
        None, "--box", help="Search box X Y in grid units of (1/k)Z²."
    ),
    strip: bool = typer.Option(False, "--strip", help="Search R × [-1, 1/k] only."),
    budget: Optional[int] = typer.Option(
        None, "--budget", help="Search node budget per partition."
    ),
    threads: Optional[int] = typer.Option(
        None, "--threads", "-j", help="Worker processes (capped by LATPOLY_THREADS)."
    ),
    saturation: bool = typer.Option(
        False, "--saturation", help="Re-run in a box grown by 2 and report new classes."
    ),
    output: Optional[Path] = typer.Option(
        None, "--report", "-o", help="Write the JSON report here instead of stdout."
    ),
    config: Optional[Path] = CONFIG,
    verbose: bool = VERBOSE,
    quiet: bool = QUIET,
    silence: bool = SILENCE,
):
    """Replay a bound on an exhaustive enumeration.

    Exit 0 pass, 1 violation, 2 incomplete.
    """
    configs = Config(
        config=config,
        threads=threads,
        budget=budget,
        saturation=saturation,
        verbose=verbose,
        quiet=quiet,
        silence=silence,
    )
    reporter = report.Report(configs)
    if task not in TASKS:
        reporter.failure(f"--task: {task!r} is not one of {', '.join(TASKS)}")
        _finish(reporter)

    def action() -> None:
        run_k = 2 if task not in ("scott", "area-lower", "area-upper") else k
        search = None
        if box is not None or strip:
            search = _box(run_k, i, box, strip or task == "area-upper")
        outcome = run_task(
            task,
            k=k,
            i=i,
            box=search,
            options=RunOptions(configs.threads, configs.budget, configs.saturation),
        )
        reporter.examined(outcome.examined)
        for entry in outcome.equality_classes:
            reporter.equality_class(str(entry.polygon), entry.family)
        for violation in outcome.violations:
            reporter.violation(
                f"{violation.polygon} {violation.reason}:"
                f" observed {violation.observed}, expected {violation.expected}"
            )
        for finding in outcome.findings:
            reporter.finding(finding)
        if not outcome.complete:
            reporter.incomplete("the node budget was exhausted, the run is incomplete")
        document = outcome.to_dict()
        if output is not None:
            iou.write_json(output, document)
            reporter.written_file(output)
        else:
            reporter.info(json.dumps(document, indent=2))

    _guarded(reporter, action)


@app.command(name="enumerate")
def enumerate_(  # pylint: disable=R0913
    k: int = typer.Option(..., "-k", help="Denominator."),
    i: int = typer.Option(..., "-i", help="Interior lattice points."),
    box: Optional[Tuple[int, int]] = typer.Option(
        None, "--box", help="Search box X Y in grid units of (1/k)Z²."
    ),
    strip: bool = typer.Option(False, "--strip", help="Search R × [-1, 1/k] only."),
    budget: Optional[int] = typer.Option(None, "--budget", help="Node budget."),
    threads: Optional[int] = typer.Option(None, "--threads", "-j", help="Workers."),
    output: Optional[Path] = typer.Option(
        None, "--output", "-o", help="Directory for one file per class."
    ),
    config: Optional[Path] = CONFIG,
    verbose: bool = VERBOSE,
    quiet: bool = QUIET,
    silence: bool = SILENCE,
):
    """Enumerate polygons up to equivalence, one representative per class."""
    configs = Config(
        config=config,
        threads=threads,
        budget=budget,
        output=output,
        verbose=verbose,
        quiet=quiet,
        silence=silence,
    )
    reporter = report.Report(configs)

    def action() -> None:
        result = enumerate_polygons(
            _box(k, i, box, strip), threads=configs.threads, budget=configs.budget
        )
        reporter.examined(len(result))
        for index, polygon in enumerate(result, start=1):
            if configs.output is None:
                reporter.info(str(polygon))
                continue
            path = configs.output / f"polygon-{index:05d}.json"
            iou.write_polygon(path, polygon)
            reporter.written_file(path)
        if not result.complete:
            reporter.incomplete("the node budget was exhausted, the run is incomplete")

    _guarded(reporter, action)


@app.command(name="render")
def render_(
    spec: Path = typer.Argument(..., help="Figure spec (JSON or YAML)."),
    output: Path = typer.Option(..., "--output", "-o", help="SVG (or TikZ) file."),
    tikz: bool = typer.Option(
        False, "--tikz", help="Write TikZ source instead of SVG."
    ),
    config: Optional[Path] = CONFIG,
    verbose: bool = VERBOSE,
    quiet: bool = QUIET,
    silence: bool = SILENCE,
):
    """Draw polygons on their lattice grids, rows keyed by b."""
    configs = Config(
        config=config, tikz=tikz, verbose=verbose, quiet=quiet, silence=silence
    )
    reporter = report.Report(configs)

    def action() -> None:
        figure = render.read_figure_spec(spec)
        draw = render.render_tikz if configs.tikz else render.render_svg
        document = draw(figure)
        iou.safe_write(output, document)
        reporter.examined(len(figure.polygons))
        reporter.written_file(output)

    _guarded(reporter, action)


def run(prog_name: Optional[str] = None) -> None:
    """Console entry point; usage errors exit with 64 instead of click's 2."""
    try:
        code = app(prog_name=prog_name, standalone_mode=False)
    except click.UsageError as err:
        err.show()
        sys.exit(USAGE_EXIT)
    except click.Abort:
        typer.secho("Aborted!", bold=True, err=True)
        sys.exit(1)
    sys.exit(code or 0)
