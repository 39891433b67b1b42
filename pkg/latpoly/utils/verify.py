"""latpoly verification harness.

Each `verify_*` task enumerates a certified box, replays one inequality on
every class found and matches the classes attaining it against the
constructors of `extremal`. The outcome is a `VerificationReport`.
"""
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import ceil, floor, gcd, lcm
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from ._exceptions import DomainError, UnreachableArea
from .ehrhart import (
    B2PBoundInput,
    b2p_lower_bound,
    conjecture_value,
    count_distinct_quasipolynomials,
    find_b2p_witness,
    refined_boundary_count,
)
from .enumeration import (
    EnumerationBox,
    EnumerationResult,
    default_box,
    enumerate_polygons,
    saturation_check,
)
from .extremal import (
    DIM2,
    FamilyId,
    Member,
    Theorem,
    area_maximizers,
    area_minimizers,
    b_max,
    half_integral_max_area,
    half_integral_maximizers,
    is_conjectural,
    max_area_formula,
    min_area_normalized,
    scott_maximizer,
)
from .geometry import Point, Polygon, convex_hull, denominator
from .iou import polygon_to_data
from .lattice import LatticeStats, lattice_stats, lattice_width
from .unimodular import canonical_form, fits_in_threefold_triangle, realizable_in_strip

# Constants.
UNLISTED = "UNLISTED"
TASKS = (
    "scott",
    "area-lower",
    "area-upper",
    "half-integral",
    "b2p",
    "maximizer-structure",
    "conjecture",
)

#: Largest lattice width of a half-integral polygon with i interior points.
LW_MAX_TABLE = {1: 3, 2: 3, 3: 4}


@dataclass(frozen=True)
class Violation:

    polygon: Optional[Polygon]
    observed: Any
    expected: Any
    reason: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "polygon": polygon_to_data(self.polygon) if self.polygon else None,
            "observed": str(self.observed),
            "expected": str(self.expected),
            "reason": self.reason,
        }


@dataclass(frozen=True)
class EqualityClass:

    polygon: Polygon

    #: `str(FamilyId)` of the matching member, or "UNLISTED".
    family: str

    def to_dict(self) -> Dict[str, Any]:
        return {"polygon": polygon_to_data(self.polygon), "family": self.family}


@dataclass
class VerificationReport:

    """Outcome of one verification task.

    Passing means no violation; a run cut short by the node budget is
    incomplete regardless.
    """

    task: str
    grid: Dict[str, Any]
    examined: int = 0
    violations: List[Violation] = field(default_factory=list)
    equality_classes: List[EqualityClass] = field(default_factory=list)
    elapsed: float = 0.0
    complete: bool = True

    #: Task specific values (histograms, lattice widths, counts).
    details: Dict[str, Any] = field(default_factory=dict)

    #: Observations that are not failures.
    findings: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def exit_code(self) -> int:
        if self.violations:
            return 1
        return 0 if self.complete else 2

    def violate(
        self, polygon: Optional[Polygon], observed: Any, expected: Any, reason: str
    ) -> None:
        self.violations.append(Violation(polygon, observed, expected, reason))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "task": self.task,
            "grid": self.grid,
            "examined": self.examined,
            "passed": self.passed,
            "complete": self.complete,
            "elapsed": round(self.elapsed, 3),
            "violations": [v.to_dict() for v in self.violations],
            "equality_classes": [e.to_dict() for e in self.equality_classes],
            "details": self.details,
            "findings": self.findings,
        }


@dataclass(frozen=True)
class RunOptions:

    """Enumeration settings shared by every task."""

    threads: int = 1
    budget: Optional[int] = None
    saturation: bool = False


def _enumerate(
    report: VerificationReport, box: EnumerationBox, options: RunOptions
) -> EnumerationResult:
    result = enumerate_polygons(box, threads=options.threads, budget=options.budget)
    report.examined += len(result)
    report.complete = report.complete and result.complete
    report.details.setdefault("boxes", []).append(
        {
            "k": box.k,
            "x_max": box.x_max,
            "y_max": box.y_max,
            "strip": box.strip,
            "note": box.note,
        }
    )
    if options.saturation:
        saturation = saturation_check(
            box, baseline=result, threads=options.threads, budget=options.budget
        )
        report.complete = report.complete and saturation.complete
        for polygon in saturation.extra:
            report.findings.append(f"{polygon} only appears after growing the box")
    return result


def _match_classes(
    report: VerificationReport,
    found: Iterable[Polygon],
    members: List[Member],
    what: str,
) -> None:
    """Match attaining classes against constructor members in both directions."""
    expected = {canonical_form(p): str(f) for f, p in members}
    seen = set()
    for polygon in found:
        canonical = canonical_form(polygon)
        family = expected.get(canonical, UNLISTED)
        report.equality_classes.append(EqualityClass(canonical, family))
        if family == UNLISTED:
            report.violate(canonical, "attains", what, "equality class not listed")
        seen.add(canonical)
    if report.complete:
        for canonical, family in expected.items():
            if canonical not in seen:
                report.violate(canonical, "missing", family, "listed member not found")


def _finish(report: VerificationReport, start: float) -> VerificationReport:
    report.elapsed = time.perf_counter() - start
    report.equality_classes.sort(key=lambda e: (e.family, e.polygon.vertices))
    return report


def verify_scott(
    k: int,
    i: int,
    *,
    box: Optional[EnumerationBox] = None,
    options: RunOptions = RunOptions(),
) -> VerificationReport:
    """Replay `b <= b_max(k, i)` and its equality case on an enumeration."""
    start = time.perf_counter()
    bound = b_max(k, i)
    report = VerificationReport("scott", {"k": k, "i": i})
    result = _enumerate(report, box or default_box(k, i), options)
    attaining = []
    max_b = 0
    for polygon in result:
        b = lattice_stats(polygon).b
        max_b = max(max_b, b)
        if b > bound:
            report.violate(polygon, b, bound, "b exceeds b_max")
        elif b == bound:
            attaining.append(polygon)
    report.details["max_b"] = max_b
    report.details["b_max"] = bound
    family = FamilyId(Theorem.SCOTT_MAX, "2c", k, i, bound)
    _match_classes(report, attaining, [(family, scott_maximizer(k, i))], f"b = {bound}")
    return _finish(report, start)


def _histogram(
    result: EnumerationResult, key: Callable[[LatticeStats], Tuple]
) -> Dict[Tuple, List[Tuple[int, Polygon]]]:
    groups: Dict[Tuple, List[Tuple[int, Polygon]]] = {}
    for polygon in result:
        stats = lattice_stats(polygon)
        groups.setdefault(key(stats), []).append((stats.area_k, polygon))
    return groups


def _verify_lower(
    report: VerificationReport,
    k: int,
    i: int,
    options: RunOptions,
    box: Optional[EnumerationBox],
) -> None:
    result = _enumerate(report, box or default_box(k, i), options)
    groups = _histogram(
        result,
        lambda s: (s.b, DIM2 if s.hull_dim == 2 else 1),
    )
    table = {}
    for (b, dim), entries in sorted(groups.items()):
        observed = min(a for a, _ in entries)
        try:
            bound = min_area_normalized(k, i, b, dim)
        except DomainError:
            table[f"{b}/{dim}"] = {"observed": observed}
            continue
        table[f"{b}/{dim}"] = {"observed": observed, "bound": bound}
        for area, polygon in entries:
            if area < bound:
                report.violate(polygon, area, bound, "Area_k below the lower bound")
        if report.complete and observed != bound:
            report.violate(entries[0][1], observed, bound, "lower bound not attained")
        attaining = [p for a, p in entries if a == bound]
        members = area_minimizers(k, i, b, dim)
        _match_classes(report, attaining, members, f"Area_k = {bound}")
    report.details["histogram"] = table


def _verify_upper(
    report: VerificationReport,
    k: int,
    i: int,
    options: RunOptions,
    box: Optional[EnumerationBox],
) -> None:
    box = box or default_box(k, i, strip=True)
    strict = k >= 4
    if is_conjectural(k):
        report.details["label"] = "conjectural: only verified inside R × [-1, 1/k]"
    result = _enumerate(report, box, options)
    groups = _histogram(result, lambda s: (s.b,))
    table = {}
    for (b,), entries in sorted(groups.items()):
        observed = max(a for a, _ in entries)
        bound = max_area_formula(k, i, b)
        table[str(b)] = {"observed": observed, "bound": bound}
        for area, polygon in entries:
            if area > bound:
                message = f"{polygon} has Area_k {area} above {bound}"
                if strict:
                    report.violate(polygon, area, bound, "Area_k above the upper bound")
                else:
                    report.findings.append(message)
        if k >= 3:
            attaining = [p for a, p in entries if a == bound]
            if attaining:
                members = area_maximizers(k, i, b)
                _match_classes(report, attaining, members, f"Area_k = {bound}")
    report.details["histogram"] = table


def _verify_half(
    report: VerificationReport,
    i: int,
    options: RunOptions,
    box: Optional[EnumerationBox],
) -> None:
    result = _enumerate(report, box or default_box(2, i), options)
    groups = _histogram(result, lambda s: (s.b,))
    table = {}
    for (b,), entries in sorted(groups.items()):
        observed = max(a for a, _ in entries)
        try:
            bound = (8 * half_integral_max_area(i, b)).numerator
        except DomainError:
            for _, polygon in entries:
                report.violate(polygon, b, f"b <= {3 * i + 6}", "b out of range")
            continue
        table[str(b)] = {"observed": observed, "bound": bound}
        for area, polygon in entries:
            if area > bound:
                report.violate(
                    polygon, area, bound, "Area_2 above the half-integral bound"
                )
        if report.complete and observed != bound:
            report.violate(
                entries[0][1], observed, bound, "half-integral bound not attained"
            )
        strip_families = {
            canonical_form(p): str(f) for f, p in half_integral_maximizers(i, b)
        }
        for area, polygon in entries:
            if area != bound:
                continue
            canonical = canonical_form(polygon)
            kind = classify_half_integral_maximizer(polygon)
            if kind == "strip":
                family = strip_families.get(canonical, UNLISTED)
            elif kind == "m1p1":
                family = str(FamilyId(Theorem.STRIP_EQUALITY, "m1p1", 2, i, b))
            elif kind == "n2":
                family = str(FamilyId(Theorem.HALF_INTEGRAL_N2, "n2", 2, i, b))
            else:
                family = UNLISTED
            report.equality_classes.append(EqualityClass(canonical, family))
            if family == UNLISTED:
                report.violate(
                    canonical, kind, "strip | m1p1 | n2", "unlisted maximizer"
                )
    report.details["histogram"] = table


def verify_area_bounds(
    k: int,
    i: int,
    side: str,
    *,
    box: Optional[EnumerationBox] = None,
    options: RunOptions = RunOptions(),
) -> VerificationReport:
    """Replay the lower, upper or half-integral area bound on an enumeration.

    :param side: "lower", "upper" or "half-integral" (k must be 2).
    :raises DomainError: for an unknown side or a half-integral run at k != 2.
    """
    start = time.perf_counter()
    report = VerificationReport(f"area-{side}", {"k": k, "i": i})
    if side == "lower":
        _verify_lower(report, k, i, options, box)
    elif side == "upper":
        if k < 2:
            raise DomainError("verify_area_bounds", f"k={k} < 2")
        _verify_upper(report, k, i, options, box)
    elif side == "half-integral":
        if k != 2:
            raise DomainError(
                "verify_area_bounds", f"the half-integral side needs k=2, got {k}"
            )
        _verify_half(report, i, options, box)
    else:
        raise DomainError("verify_area_bounds", f"unknown side {side!r}")
    return _finish(report, start)


def verify_b2p(
    i: int, *, box: Optional[EnumerationBox] = None, options: RunOptions = RunOptions()
) -> VerificationReport:
    """Replay the lower bound on `b(2P)` over denominator 2 classes with b >= 3."""
    start = time.perf_counter()
    report = VerificationReport("b2p", {"i": i})
    result = _enumerate(report, box or default_box(2, i), options)
    cells: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for polygon in result:
        stats = lattice_stats(polygon)
        if stats.b < 3:
            continue
        params = B2PBoundInput(i, stats.b, stats.area_k)
        bound = b2p_lower_bound(params)
        observed = refined_boundary_count(polygon, 2)
        if observed < bound:
            report.violate(polygon, observed, bound, "b(2P) below its lower bound")
        cell = (stats.b, stats.area_k)
        cells[cell] = (min(cells.get(cell, (observed,))[0], observed), bound)
    templates: Dict[str, str] = {}
    for (b, area), (observed, bound) in sorted(cells.items()):
        if report.complete and observed != bound:
            report.findings.append(
                f"cell b={b} A={area}: minimum b(2P) {observed} > {bound}"
            )
        try:
            templates[f"{b}/{area}"] = find_b2p_witness(i, b, area).template
        except UnreachableArea:
            templates[f"{b}/{area}"] = "enumeration"
    report.details["cells"] = {
        f"{b}/{a}": {"min_b2p": o, "bound": n}
        for (b, a), (o, n) in sorted(cells.items())
    }
    report.details["witness_templates"] = templates
    return _finish(report, start)


def interior_line_count(polygon: Polygon, w: Tuple[int, int]) -> int:
    """Number n of integral lines `⟨w, ·⟩ = c` meeting the interior of P."""
    values = [v.dot(w) for v in polygon.vertices]
    return -floor(-max(values)) - floor(min(values)) - 1


def proof_bound_f(n: int) -> Fraction:
    """`(4n²-5n+1)/(2n-4)` for n >= 3."""
    if n < 3:
        raise DomainError("proof_bound_f", f"n={n} < 3")
    return Fraction(4 * n * n - 5 * n + 1, 2 * n - 4)


def interior_lower_bound(n: int) -> Fraction:
    """`(n²-2n)/4`, a lower bound on i for n interior lines."""
    return Fraction(n * n - 2 * n, 4)


def strip_area_bound(i: int, b: int, n: int) -> Fraction:
    """`8i + 8n + 2b + 2i/⌊n/2⌋ + 4` bounding `Area_2` for n >= 2 interior lines."""
    if n < 2:
        raise DomainError("strip_area_bound", f"n={n} < 2")
    return 8 * i + 8 * n + 2 * b + Fraction(2 * i, n // 2) + 4


def classify_half_integral_maximizer(polygon: Polygon) -> str:
    """Which kind of half-integral area maximizer P is.

    :returns: "strip" (inside `R × [-1, 1/2]`), "m1p1" (inside
        `R × [-1, 1]`), "n2" (two interior lines in a lattice width
        direction) or "UNLISTED".
    """
    if realizable_in_strip(polygon, Fraction(-1), Fraction(1, 2)):
        return "strip"
    if realizable_in_strip(polygon, Fraction(-1), Fraction(1)):
        return "m1p1"
    _, direction = lattice_width(polygon)
    if interior_line_count(polygon, direction) == 2:
        return "n2"
    return UNLISTED


def verify_maximizer_structure(
    i: int, *, box: Optional[EnumerationBox] = None, options: RunOptions = RunOptions()
) -> VerificationReport:
    """Replay the structure of half-integral area maximizers with i interior points."""
    start = time.perf_counter()
    report = VerificationReport("maximizer-structure", {"i": i})
    box = box or default_box(2, i)
    box = replace(box, i_target=i, exact_denominator=False)
    result = _enumerate(report, box, options)
    lw_max = Fraction(0)
    n_max = 0
    kinds: Dict[str, int] = {}
    for polygon in result:
        stats = lattice_stats(polygon)
        lw, direction = lattice_width(polygon)
        lw_max = max(lw_max, lw)
        n = interior_line_count(polygon, direction)
        n_max = max(n_max, n)
        if n >= 3 and stats.i < interior_lower_bound(n):
            report.violate(
                polygon, stats.i, interior_lower_bound(n), "i below (n²-2n)/4"
            )
        try:
            if stats.area != half_integral_max_area(i, stats.b):
                continue
        except DomainError:
            report.violate(polygon, stats.b, f"b <= {3 * i + 6}", "b out of range")
            continue
        kind = classify_half_integral_maximizer(polygon)
        kinds[kind] = kinds.get(kind, 0) + 1
        canonical = canonical_form(polygon)
        report.equality_classes.append(EqualityClass(canonical, kind))
        if kind == UNLISTED:
            report.violate(canonical, f"n={n}", "n <= 2", "maximizer with n >= 3")
        elif kind == "n2":
            if i not in (1, 2):
                report.violate(canonical, f"i={i}", "i in {1, 2}", "n = 2 maximizer")
            if i == 1 and not fits_in_threefold_triangle(polygon):
                report.violate(
                    canonical, "not contained", "threefold triangle", "n = 2 maximizer"
                )
    report.details.update(
        {
            "lw_max": str(lw_max),
            "n_max": n_max,
            "maximizer_kinds": kinds,
            "f": {str(n): str(proof_bound_f(n)) for n in range(3, max(n_max, 3) + 3)},
        }
    )
    expected = LW_MAX_TABLE.get(i)
    if expected is not None and report.complete and lw_max != expected:
        report.violate(
            None,
            lw_max,
            expected,
            "maximal lattice width differs from the table",
        )
    return _finish(report, start)


def _outer_edge_lines(polygon: Polygon) -> List[Tuple[Tuple[int, int], Fraction]]:
    """Primitive outer normal n and level `⟨n, p⟩` of every edge of P."""
    lines = []
    for p, q in polygon.edges():
        dx, dy = q.x - p.x, q.y - p.y
        scale = lcm(dx.denominator, dy.denominator)
        nx, ny = int(dy * scale), int(-dx * scale)
        g = gcd(nx, ny)
        normal = (nx // g, ny // g)
        lines.append((normal, normal[0] * p.x + normal[1] * p.y))
    return lines


def lattice_neighbourhood(polygon: Polygon) -> List[Point]:
    """Points of `(1/2)Z²` outside P at lattice distance at most 1 from it.

    That is every v with `⟨n, v⟩ <= level + 1` for each edge, n being the
    primitive outer normal of the edge.
    """
    lines = _outer_edge_lines(polygon)
    corners = []
    for (n1, c1), (n2, c2) in zip(lines, lines[1:] + lines[:1]):
        det = n1[0] * n2[1] - n1[1] * n2[0]
        c1, c2 = c1 + 1, c2 + 1
        corners.append(
            ((c1 * n2[1] - c2 * n1[1]) / det, (n1[0] * c2 - n2[0] * c1) / det)
        )
    xs = [x for x, _ in corners]
    ys = [y for _, y in corners]
    out = []
    for sx in range(floor(2 * min(xs)), ceil(2 * max(xs)) + 1):
        for sy in range(floor(2 * min(ys)), ceil(2 * max(ys)) + 1):
            point = Point(Fraction(sx, 2), Fraction(sy, 2))
            if polygon.contains(point):
                continue
            if all(n[0] * point.x + n[1] * point.y <= c + 1 for n, c in lines):
                out.append(point)
    return out


def is_maximal_half_integral(polygon: Polygon) -> bool:
    """Check that no half-integral point can be added to P without changing i.

    Only `lattice_neighbourhood(P)` is searched; a farther point always
    captures a new interior lattice point.

    :raises DomainError: if the denominator of P is not 1 or 2.
    """
    if denominator(polygon) not in (1, 2):
        raise DomainError("is_maximal_half_integral", f"{polygon} is not half-integral")
    interior = lattice_stats(polygon).i
    for point in lattice_neighbourhood(polygon):
        hull = convex_hull(list(polygon.vertices) + [point])
        if lattice_stats(hull.polygon).i == interior:
            return False
    return True


def verify_conjecture(
    i: int, *, box: Optional[EnumerationBox] = None, options: RunOptions = RunOptions()
) -> VerificationReport:
    """Count distinct quasipolynomials of half-integral polygons with b >= 3."""
    start = time.perf_counter()
    report = VerificationReport("conjecture", {"i": i})
    result = _enumerate(report, box or default_box(2, i), options)
    count = count_distinct_quasipolynomials(i, result, complete=result.complete)
    expected = conjecture_value(i)
    report.details.update(
        {
            "count": count.count,
            "conjecture_value": expected,
            "match": count.count == expected,
        }
    )
    if report.complete and count.count != expected:
        report.findings.append(
            f"{count.count} quasipolynomials, the formula gives {expected}"
        )
    return _finish(report, start)


def run_task(
    task: str,
    *,
    k: int = 2,
    i: int = 1,
    box: Optional[EnumerationBox] = None,
    options: RunOptions = RunOptions(),
) -> VerificationReport:
    """Dispatch a task name of `TASKS`.

    :raises DomainError: for parameters outside of the task's range.
    :raises ValueError: for an unknown task.
    """
    if task == "scott":
        return verify_scott(k, i, box=box, options=options)
    if task == "area-lower":
        return verify_area_bounds(k, i, "lower", box=box, options=options)
    if task == "area-upper":
        return verify_area_bounds(k, i, "upper", box=box, options=options)
    if task == "half-integral":
        return verify_area_bounds(2, i, "half-integral", box=box, options=options)
    if task == "b2p":
        return verify_b2p(i, box=box, options=options)
    if task == "maximizer-structure":
        return verify_maximizer_structure(i, box=box, options=options)
    if task == "conjecture":
        return verify_conjecture(i, box=box, options=options)
    raise ValueError(f"unknown task {task!r}, expected one of {', '.join(TASKS)}")
