"""latpoly lattice point utility.

Counting is done on the integer cycle of `kP` (k = denominator): a lattice
point `z` of P is a point `kz` of `kP` whose coordinates are multiples of k.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, gcd, isqrt, lcm
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .geometry import (
    Hull,
    IntPoint,
    Point,
    Polygon,
    convex_hull,
    cross,
    denominator,
    normalized_area,
    polygon_area,
)

# Types
Direction = Tuple[int, int]


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _row_bounds(
    cycle: Sequence[IntPoint], k: int, row: int, strict: bool
) -> Optional[Tuple[int, int]]:
    """Integer x-range of the lattice points of P on the line `y = row`.

    :param cycle: integer CCW vertex cycle of `kP`.
    :param k: the scale of `cycle`.
    :param row: lattice row (in P's coordinates).
    :param strict: count interior points only.
    :returns: `(low, high)` or None when the row is empty.
    """
    y_scaled = k * row
    low: Optional[int] = None
    high: Optional[int] = None
    count = len(cycle)
    for j in range(count):
        (px, py), (qx, qy) = cycle[j], cycle[(j + 1) % count]
        dy = qy - py
        c = (qx - px) * (y_scaled - py) + dy * px
        if dy == 0:
            if c < 0 or (strict and c == 0):
                return None
            continue
        denom = k * dy
        if dy > 0:
            bound = _ceil_div(c, denom) - 1 if strict else c // denom
            high = bound if high is None else min(high, bound)
        else:
            bound = c // denom + 1 if strict else _ceil_div(c, denom)
            low = bound if low is None else max(low, bound)
    if low is None or high is None or low > high:
        return None
    return low, high


def _rows(cycle: Sequence[IntPoint], k: int, strict: bool) -> range:
    ys = [y for _, y in cycle]
    if strict:
        return range(min(ys) // k + 1, _ceil_div(max(ys), k))
    return range(_ceil_div(min(ys), k), max(ys) // k + 1)


def interior_count_scaled(cycle: Sequence[IntPoint], k: int) -> int:
    """Number of interior lattice points of P, given the cycle of `kP`."""
    total = 0
    for row in _rows(cycle, k, strict=True):
        bounds = _row_bounds(cycle, k, row, strict=True)
        if bounds:
            total += bounds[1] - bounds[0] + 1
    return total


def _half_open_count(p: IntPoint, q: IntPoint, k: int) -> int:
    """Multiples of k (in both coordinates) on the half-open segment [p, q)."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    g = gcd(dx, dy)
    if g == 0:
        return 0
    sx, sy = dx // g, dy // g
    total = 0
    for t0 in range(min(g, k)):
        if (p[0] + t0 * sx) % k == 0 and (p[1] + t0 * sy) % k == 0:
            total += _ceil_div(g - t0, k)
    return total


def boundary_count_scaled(cycle: Sequence[IntPoint], k: int) -> int:
    """Number of boundary lattice points of P, given the cycle of `kP`."""
    count = len(cycle)
    return sum(
        _half_open_count(cycle[j], cycle[(j + 1) % count], k) for j in range(count)
    )


def lattice_points(polygon: Polygon) -> List[Point]:
    """All lattice points of P (boundary included), sorted lexicographically."""
    k = denominator(polygon)
    cycle = polygon.scaled(k)
    found = []
    for row in _rows(cycle, k, strict=False):
        bounds = _row_bounds(cycle, k, row, strict=False)
        if bounds:
            found.extend(Point(x, row) for x in range(bounds[0], bounds[1] + 1))
    return sorted(found)


def integer_hull(polygon: Polygon) -> Hull:
    """The integer hull `conv(P ∩ Z²)`; only row extremes are hulled."""
    k = denominator(polygon)
    cycle = polygon.scaled(k)
    extremes = []
    for row in _rows(cycle, k, strict=False):
        bounds = _row_bounds(cycle, k, row, strict=False)
        if bounds:
            extremes.append(Point(bounds[0], row))
            extremes.append(Point(bounds[1], row))
    return convex_hull(extremes)


def segment_lattice_count(a: Point, b: Point) -> int:
    """Number of integral points on the closed segment `[a, b]`."""
    scale = lcm(a.x.denominator, a.y.denominator, b.x.denominator, b.y.denominator)
    p = ((a.x * scale).numerator, (a.y * scale).numerator)
    q = ((b.x * scale).numerator, (b.y * scale).numerator)
    closing = int(b.is_integral)
    return _half_open_count(p, q, scale) + closing


@dataclass(frozen=True)
class LatticeStats:

    """Lattice point statistics of a rational polygon."""

    #: Interior lattice points.
    i: int

    #: Boundary lattice points.
    b: int

    #: Denominator.
    k: int

    area: Fraction

    #: `2k²·area` at k = denominator.
    area_k: int

    #: Dimension of the integer hull (-1 when empty).
    hull_dim: int

    def __str__(self) -> str:
        return (
            f"i={self.i} b={self.b} k={self.k} area={self.area}"
            f" area_k={self.area_k} hull_dim={self.hull_dim}"
        )


def lattice_stats(polygon: Polygon) -> LatticeStats:
    """Compute `LatticeStats` of `polygon` exactly."""
    k = denominator(polygon)
    cycle = polygon.scaled(k)
    return LatticeStats(
        i=interior_count_scaled(cycle, k),
        b=boundary_count_scaled(cycle, k),
        k=k,
        area=polygon_area(polygon),
        area_k=normalized_area(polygon, k),
        hull_dim=integer_hull(polygon).dim,
    )


def width(polygon: Polygon, w: Direction) -> Fraction:
    """`max⟨w,v⟩ - min⟨w,v⟩` over the vertices of P."""
    if w == (0, 0):
        raise ValueError("width direction must be nonzero")
    values = [v.dot(w) for v in polygon.vertices]
    return max(values) - min(values)


def _min_euclidean_width_squared(polygon: Polygon) -> Fraction:
    # The minimal euclidean width is attained with a supporting line on an edge.
    best: Optional[Fraction] = None
    for p, q in polygon.edges():
        norm = (q.x - p.x) ** 2 + (q.y - p.y) ** 2
        height = max(cross(p, q, v) ** 2 for v in polygon.vertices) / norm
        best = height if best is None else min(best, height)
    return best


def directions_within(polygon: Polygon, limit: Fraction) -> Iterator[Direction]:
    """All primitive directions w with `width(P, w) <= limit`.

    Directions have a positive first nonzero entry and come out in
    lexicographic order. Since `width(P, w) >= |w|·h` with h the euclidean
    width of P, only `|w|² <= limit²/h²` needs to be searched.
    """
    radius_sq = Fraction(limit) ** 2 / _min_euclidean_width_squared(polygon)
    radius = isqrt(floor(radius_sq))
    if radius_sq >= 1 and width(polygon, (0, 1)) <= limit:
        yield (0, 1)
    for a in range(1, radius + 1):
        reach = isqrt(floor(radius_sq - a * a))
        for b in range(-reach, reach + 1):
            if gcd(a, b) == 1 and width(polygon, (a, b)) <= limit:
                yield (a, b)


def lattice_width(polygon: Polygon) -> Tuple[Fraction, Direction]:
    """Lattice width of P and the lexicographically smallest direction."""
    incumbent = min(width(polygon, (0, 1)), width(polygon, (1, 0)))
    best: Optional[Tuple[Fraction, Direction]] = None
    for w in directions_within(polygon, incumbent):
        value = width(polygon, w)
        if best is None or value < best[0]:
            best = (value, w)
    return best


@dataclass(frozen=True)
class StripProfile:

    """Horizontal line data of a polygon in its given position."""

    #: Number of integral horizontal lines meeting the interior.
    n: int

    #: Requested heights y ↦ length of `P ∩ (R × {y})`.
    lengths: Dict[Fraction, Fraction] = field(default_factory=dict)

    #: Lattice row j ↦ boundary lattice points on it.
    boundary_counts: Dict[int, int] = field(default_factory=dict)

    #: Lattice row j ↦ interior lattice points on it.
    interior_counts: Dict[int, int] = field(default_factory=dict)


def interior_lines(polygon: Polygon) -> List[int]:
    """Integral heights whose horizontal line meets the interior of P."""
    low, high = polygon.y_range
    return list(range(floor(low) + 1, -floor(-high)))


def section_length(polygon: Polygon, y: Fraction) -> Fraction:
    section = polygon.section(y)
    return section[1] - section[0] if section else Fraction(0)


def strip_profile(
    polygon: Polygon, heights: Iterable[Fraction] = ()
) -> StripProfile:
    """Compute the `StripProfile` of P.

    :param polygon: a polygon, positioned by the caller.
    :param heights: heights y for which the length `ℓ_y` is reported.
    """
    k = denominator(polygon)
    cycle = polygon.scaled(k)
    boundary_counts: Dict[int, int] = {}
    interior_counts: Dict[int, int] = {}
    for row in _rows(cycle, k, strict=False):
        closed = _row_bounds(cycle, k, row, strict=False)
        if not closed:
            continue
        opened = _row_bounds(cycle, k, row, strict=True)
        total = closed[1] - closed[0] + 1
        inner = opened[1] - opened[0] + 1 if opened else 0
        boundary_counts[row] = total - inner
        interior_counts[row] = inner
    return StripProfile(
        n=len(interior_lines(polygon)),
        lengths={Fraction(y): section_length(polygon, Fraction(y)) for y in heights},
        boundary_counts=boundary_counts,
        interior_counts=interior_counts,
    )
