"""latpoly exact geometry utility.

Points, strictly convex polygons, hulls and areas over `fractions.Fraction`.
Every value here is immutable and every operation is exact.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from ._exceptions import DomainError, InvalidPolygon, NonIntegralNormalization

# Types
Coordinate = Union[int, str, Fraction]
IntPoint = Tuple[int, int]
IntCycle = Tuple[IntPoint, ...]


def to_fraction(value: Coordinate) -> Fraction:
    """Convert an int, a "p/q" string or a Fraction into a reduced Fraction.

    :param value: coordinate like value.
    :returns: exact `Fraction`.
    :raises ValueError: if `value` is a float or a malformed string.
    """
    if isinstance(value, float):
        raise ValueError(f"floats are not exact coordinates: {value!r}")
    if isinstance(value, str):
        value = value.strip()
        if "/" in value:
            num, _, den = value.partition("/")
            if int(den) == 0:
                raise ValueError(f"zero denominator in {value!r}")
            return Fraction(int(num), int(den))
        return Fraction(int(value))
    return Fraction(value)


@dataclass(frozen=True, order=True)
class Point:

    """A point of Q² ordered lexicographically by (x, y)."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", to_fraction(self.x))
        object.__setattr__(self, "y", to_fraction(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, factor: Coordinate) -> "Point":
        factor = to_fraction(factor)
        return Point(self.x * factor, self.y * factor)

    def dot(self, w: Tuple[int, int]) -> Fraction:
        return self.x * w[0] + self.y * w[1]

    @property
    def is_integral(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


def cross(origin: Point, a: Point, b: Point) -> Fraction:
    """Cross product of `a - origin` and `b - origin` (> 0 for a left turn)."""
    return (a.x - origin.x) * (b.y - origin.y) - (a.y - origin.y) * (b.x - origin.x)


def icross(origin: IntPoint, a: IntPoint, b: IntPoint) -> int:
    """Integer version of `cross`."""
    return (a[0] - origin[0]) * (b[1] - origin[1]) - (a[1] - origin[1]) * (
        b[0] - origin[0]
    )


def points(*pairs: Tuple[Coordinate, Coordinate]) -> List[Point]:
    """Build a list of points from coordinate pairs."""
    return [Point(x, y) for x, y in pairs]


@dataclass(frozen=True)
class Polygon:

    """Strictly convex counterclockwise vertex cycle.

    The cycle is rotated so that it starts at its lexicographically smallest
    vertex, which makes structural equality meaningful.

    :raises InvalidPolygon: for fewer than 3 vertices, a non left turn, or a
        cycle that winds more than once.
    """

    vertices: Tuple[Point, ...]

    def __post_init__(self):
        vertices = tuple(
            v if isinstance(v, Point) else Point(*v) for v in self.vertices
        )
        count = len(vertices)
        if count < 3:
            raise InvalidPolygon(f"a polygon needs 3 vertices, got {count}")
        # Every vertex strictly left of every edge it is not on.
        for j in range(count):
            p, q = vertices[j], vertices[(j + 1) % count]
            for m in range(count):
                if m in (j, (j + 1) % count):
                    continue
                if cross(p, q, vertices[m]) <= 0:
                    raise InvalidPolygon(
                        "vertices are not in strictly convex counterclockwise"
                        f" position at edge {p}->{q}"
                    )
        start = min(range(count), key=vertices.__getitem__)
        object.__setattr__(self, "vertices", vertices[start:] + vertices[:start])

    @classmethod
    def from_cycle(cls, vertices: Sequence[Point]) -> "Polygon":
        """Build a polygon from a strictly convex cycle of either orientation."""
        vertices = tuple(vertices)
        if len(vertices) >= 3 and cross(*vertices[:3]) < 0:
            vertices = vertices[::-1]
        return cls(vertices)

    @classmethod
    def hull_of(cls, pts: Iterable[Point]) -> "Polygon":
        """Convex hull of `pts`, which must be two dimensional.

        Duplicate and collinear points are dropped.
        """
        hull = convex_hull(pts)
        if not isinstance(hull, Poly):
            raise InvalidPolygon(f"the convex hull is {hull.kind}, not a polygon")
        return hull.polygon

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.vertices)

    def __str__(self) -> str:
        return "conv(" + ",".join(map(str, self.vertices)) + ")"

    def edges(self) -> Iterator[Tuple[Point, Point]]:
        count = len(self.vertices)
        for j in range(count):
            yield self.vertices[j], self.vertices[(j + 1) % count]

    def scaled(self, k: int) -> IntCycle:
        """Integer vertex cycle of the dilation `kP`.

        :raises DomainError: if `kP` is not a lattice polygon.
        """
        out = []
        for v in self.vertices:
            x, y = v.x * k, v.y * k
            if x.denominator != 1 or y.denominator != 1:
                raise DomainError("scaled", f"{k}·{v} is not integral")
            out.append((x.numerator, y.numerator))
        return tuple(out)

    @classmethod
    def from_scaled(cls, cycle: Sequence[IntPoint], k: int) -> "Polygon":
        """Inverse of `scaled`."""
        return cls(tuple(Point(Fraction(x, k), Fraction(y, k)) for x, y in cycle))

    def dilate(self, t: Coordinate) -> "Polygon":
        t = to_fraction(t)
        if t <= 0:
            raise DomainError("dilate", f"factor must be positive, got {t}")
        return Polygon(tuple(v.scale(t) for v in self.vertices))

    def translate(self, offset: Point) -> "Polygon":
        return Polygon(tuple(v + offset for v in self.vertices))

    def contains(self, point: Point, strict: bool = False) -> bool:
        """Check whether `point` lies in P (or in its interior if `strict`)."""
        for p, q in self.edges():
            side = cross(p, q, point)
            if side < 0 or (strict and side == 0):
                return False
        return True

    @property
    def y_range(self) -> Tuple[Fraction, Fraction]:
        ys = [v.y for v in self.vertices]
        return min(ys), max(ys)

    def section(self, y: Coordinate) -> Optional[Tuple[Fraction, Fraction]]:
        """The segment `P ∩ (R × {y})` as an x-interval, or None."""
        y = to_fraction(y)
        low: Optional[Fraction] = None
        high: Optional[Fraction] = None
        for p, q in self.edges():
            dy = q.y - p.y
            # cross(p, q, (X, y)) >= 0  <=>  dy·X <= c.
            c = (q.x - p.x) * (y - p.y) + dy * p.x
            if dy > 0:
                high = c / dy if high is None else min(high, c / dy)
            elif dy < 0:
                low = c / dy if low is None else max(low, c / dy)
            elif c < 0:
                return None
        if low is None or high is None or low > high:
            return None
        return low, high


@dataclass(frozen=True)
class Empty:

    """Hull of the empty set."""

    kind: str = field(default="empty", init=False)
    dim: int = field(default=-1, init=False)

    @property
    def vertices(self) -> Tuple[Point, ...]:
        return ()


@dataclass(frozen=True)
class SinglePoint:

    """Hull of a single point."""

    point: Point
    kind: str = field(default="point", init=False)
    dim: int = field(default=0, init=False)

    @property
    def vertices(self) -> Tuple[Point, ...]:
        return (self.point,)


@dataclass(frozen=True)
class Segment:

    """Hull of collinear points; `start` < `end` lexicographically."""

    start: Point
    end: Point
    kind: str = field(default="segment", init=False)
    dim: int = field(default=1, init=False)

    def __post_init__(self):
        if self.start == self.end:
            raise InvalidPolygon("segment endpoints must be distinct")
        if self.end < self.start:
            start, end = self.end, self.start
            object.__setattr__(self, "start", start)
            object.__setattr__(self, "end", end)

    @property
    def vertices(self) -> Tuple[Point, ...]:
        return (self.start, self.end)


@dataclass(frozen=True)
class Poly:

    """Two dimensional hull."""

    polygon: Polygon
    kind: str = field(default="polygon", init=False)
    dim: int = field(default=2, init=False)

    @property
    def vertices(self) -> Tuple[Point, ...]:
        return self.polygon.vertices


Hull = Union[Empty, SinglePoint, Segment, Poly]


def _half_chain(pts: Sequence[Point]) -> List[Point]:
    chain: List[Point] = []
    for p in pts:
        while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= 0:
            chain.pop()
        chain.append(p)
    return chain


def convex_hull(pts: Iterable[Point]) -> Hull:
    """Convex hull of a finite point set (monotone chain).

    :param pts: any finite iterable of points, possibly empty.
    :returns: the hull classified as `Empty`, `SinglePoint`, `Segment` or
        `Poly`.
    """
    unique = sorted(set(pts))
    if not unique:
        return Empty()
    if len(unique) == 1:
        return SinglePoint(unique[0])
    lower = _half_chain(unique)
    upper = _half_chain(unique[::-1])
    cycle = lower[:-1] + upper[:-1]
    if len(cycle) < 3:
        return Segment(unique[0], unique[-1])
    return Poly(Polygon(tuple(cycle)))


def twice_area_scaled(cycle: Sequence[IntPoint]) -> int:
    """Shoelace sum of an integer cycle (twice the signed area)."""
    total = 0
    count = len(cycle)
    for j in range(count):
        (x0, y0), (x1, y1) = cycle[j], cycle[(j + 1) % count]
        total += x0 * y1 - x1 * y0
    return total


def polygon_area(polygon: Polygon) -> Fraction:
    """Exact Euclidean area by the shoelace formula."""
    total = Fraction(0)
    for p, q in polygon.edges():
        total += p.x * q.y - q.x * p.y
    return total / 2


def fan_triangulation_area(polygon: Polygon) -> Fraction:
    """Area as a sum of the triangles fanned out from vertex 0."""
    apex = polygon.vertices[0]
    rest = polygon.vertices[1:]
    return sum(
        (cross(apex, a, b) / 2 for a, b in zip(rest, rest[1:])), Fraction(0)
    )


def denominator(polygon: Polygon) -> int:
    """Least k >= 1 such that kP has integral vertices."""
    return reduce(
        lcm, (c.denominator for v in polygon.vertices for c in (v.x, v.y)), 1
    )


def normalized_area(polygon: Polygon, k: int) -> int:
    """The k-normalized area `2k²·area(P)`.

    :param polygon: a polygon.
    :param k: a positive multiple of the denominator of `polygon`.
    :returns: the integer `2k²·area(P)`.
    :raises NonIntegralNormalization: if the value is not an integer.
    """
    if k < 1:
        raise DomainError("normalized_area", f"k must be positive, got {k}")
    area = polygon_area(polygon)
    value = 2 * k * k * area
    if value.denominator != 1:
        raise NonIntegralNormalization(area, k)
    return value.numerator
