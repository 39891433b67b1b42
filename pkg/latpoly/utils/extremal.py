"""latpoly extremal polygons utility.

Closed-form boundary point and area bounds together with the polygons
attaining them. Every constructor re-verifies its output with
`lattice_stats` before returning it.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from ._exceptions import ConstructionError, DomainError, UnreachableArea
from .geometry import (
    IntPoint,
    Point,
    Polygon,
    convex_hull,
    denominator,
    normalized_area,
    twice_area_scaled,
)
from .lattice import lattice_stats, strip_profile

# Types
Member = Tuple["FamilyId", Polygon]

#: Hull dimension selector of the lower bound.
DIM2 = 2
COLLINEAR = 1


class Theorem(str, Enum):

    """Which bound a family attains; the value prefixes `str(FamilyId)`."""

    SCOTT_MAX = "scott"
    AREA_MIN_2D = "min"
    AREA_MIN_COLLINEAR = "mincol"
    AREA_MAX = "max"
    HALF_INTEGRAL_N2 = "half"
    STRIP_EQUALITY = "strip-eq"


def b_max(k: int, i: int) -> int:
    """Sharp upper bound `(k+1)(i+1)+3` on b for denominator k >= 2.

    :raises DomainError: for k < 2 or i < 1.
    """
    if k < 2:
        raise DomainError(
            "b_max", f"k={k} < 2, use scott_classical_bound for lattice polygons"
        )
    if i < 1:
        raise DomainError("b_max", f"i={i} < 1")
    return (k + 1) * (i + 1) + 3


def scott_classical_bound(i: int) -> int:
    """Scott's bound for lattice polygons: 9 for i = 1, else 2i+6."""
    if i < 1:
        raise DomainError("scott_classical_bound", f"i={i} < 1")
    return 9 if i == 1 else 2 * i + 6


def _x_range_min_2a(k: int, i: int, b: int) -> range:
    return range((b_max(k, i) - b) // 2 + 1)


def _x_range_max_2a(k: int, i: int, b: int) -> range:
    return range((b_max(k, i) - b) // 2)


def _no_x(k: int, i: int, b: int) -> range:
    return range(0)


#: (theorem, label) ↦ (b predicate, x range); an empty x range means no x.
_FAMILIES: Dict[
    Tuple[Theorem, str],
    Tuple[Callable[[int, int, int], bool], Callable[[int, int, int], range]],
] = {
    (Theorem.SCOTT_MAX, "2c"): (lambda k, i, b: b == b_max(k, i), _no_x),
    (Theorem.AREA_MIN_2D, "0a"): (
        lambda k, i, b: b == b_max(k, i) - 2 * (k + 1),
        _no_x,
    ),
    (Theorem.AREA_MIN_2D, "1a"): (
        lambda k, i, b: 2 <= b <= b_max(k, i) - (k + 1),
        _no_x,
    ),
    (Theorem.AREA_MIN_2D, "1b"): (lambda k, i, b: (i, b) == (3, 3), _no_x),
    (Theorem.AREA_MIN_2D, "2a"): (
        lambda k, i, b: 3 <= b <= b_max(k, i),
        _x_range_min_2a,
    ),
    (Theorem.AREA_MIN_2D, "2b"): (
        lambda k, i, b: (i, b) == (1, 5),
        lambda k, i, b: range(k + 1),
    ),
    (Theorem.AREA_MIN_COLLINEAR, "0c"): (lambda k, i, b: b == 0, _no_x),
    (Theorem.AREA_MIN_COLLINEAR, "1c"): (lambda k, i, b: b == 1, _no_x),
    (Theorem.AREA_MIN_COLLINEAR, "2c"): (
        lambda k, i, b: b == 2,
        lambda k, i, b: range(k * (i + 1) + 1),
    ),
    (Theorem.AREA_MAX, "0a"): (lambda k, i, b: b == b_max(k, i) - 4, _no_x),
    (Theorem.AREA_MAX, "0b"): (lambda k, i, b: b == 0, _no_x),
    (Theorem.AREA_MAX, "1a"): (lambda k, i, b: 1 <= b <= b_max(k, i) - 3, _no_x),
    (Theorem.AREA_MAX, "2a"): (
        lambda k, i, b: 2 <= b <= b_max(k, i) - 2,
        _x_range_max_2a,
    ),
    (Theorem.AREA_MAX, "2b"): (lambda k, i, b: b == b_max(k, i) - 1, _no_x),
    (Theorem.AREA_MAX, "2c"): (lambda k, i, b: b == b_max(k, i), _no_x),
}


@dataclass(frozen=True)
class FamilyId:

    """Label of one member of an extremal family.

    Serializes as `"min/2a?k=3&i=1&b=3&x=0"`.
    """

    theorem: Theorem
    label: str
    k: int
    i: int
    b: int

    #: Family offset (x or x'), None for families without one.
    x: Optional[int] = None

    #: False only for a (1a) minimizer with b = 2 outside of (k, i) = (2, 1).
    global_minimum: bool = field(default=True, compare=False)

    #: True for upper bound families at k = 3.
    conjectural: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "theorem", Theorem(self.theorem))
        # Half-integral strip maximizers reuse the upper bound ranges at k = 2.
        key_theorem = (
            Theorem.AREA_MAX
            if self.theorem == Theorem.HALF_INTEGRAL_N2
            else self.theorem
        )
        if self.theorem == Theorem.STRIP_EQUALITY or self.label == "n2":
            return
        spec = _FAMILIES.get((key_theorem, self.label))
        if spec is None:
            raise DomainError(
                "FamilyId", f"unknown family {self.theorem.value}/{self.label}"
            )
        accepts, x_range = spec
        if not accepts(self.k, self.i, self.b):
            raise DomainError("FamilyId", f"{self} is outside of its b range")
        offsets = x_range(self.k, self.i, self.b)
        if len(offsets) == 0 and self.x is not None:
            raise DomainError("FamilyId", f"{self} takes no offset")
        if len(offsets) and self.x not in offsets:
            raise DomainError("FamilyId", f"{self} offset not in {offsets}")

    def __str__(self) -> str:
        query = f"k={self.k}&i={self.i}&b={self.b}"
        if self.x is not None:
            query += f"&x={self.x}"
        return f"{self.theorem.value}/{self.label}?{query}"

    @classmethod
    def from_string(cls, text: str) -> "FamilyId":
        head, _, query = text.partition("?")
        theorem, _, label = head.partition("/")
        params = dict(item.split("=", 1) for item in query.split("&") if item)
        return cls(
            Theorem(theorem),
            label,
            int(params["k"]),
            int(params["i"]),
            int(params["b"]),
            int(params["x"]) if "x" in params else None,
        )


def _conv(*pairs: Tuple[Fraction, Fraction]) -> Polygon:
    hull = convex_hull(Point(x, y) for x, y in pairs)
    if hull.dim != 2:
        raise ConstructionError(f"family vertices span a {hull.kind}")
    return hull.polygon


def _verified(
    family: FamilyId,
    polygon: Polygon,
    *,
    area_k: Optional[int] = None,
    hull_dim: Optional[int] = None,
) -> Member:
    stats = lattice_stats(polygon)
    expected = {"i": family.i, "b": family.b, "k": family.k}
    observed = {"i": stats.i, "b": stats.b, "k": stats.k}
    if area_k is not None:
        expected["area_k"], observed["area_k"] = area_k, stats.area_k
    if hull_dim is not None:
        expected["dim2"], observed["dim2"] = hull_dim == DIM2, stats.hull_dim == 2
    if observed != expected:
        raise ConstructionError(f"{family}: {polygon} has {observed}, not {expected}")
    return family, polygon


def _check_ki(operation: str, k: int, i: int, k_min: int = 2) -> None:
    if k < k_min:
        raise DomainError(operation, f"k={k} < {k_min}")
    if i < 1:
        raise DomainError(operation, f"i={i} < 1")


def scott_maximizer(k: int, i: int) -> Polygon:
    """The unique polygon with b = b_max: conv((0,1/k),(0,-1),((k+1)(i+1),-1))."""
    _check_ki("scott_maximizer", k, i)
    top = Fraction(1, k)
    polygon = _conv((0, top), (0, -1), ((k + 1) * (i + 1), -1))
    family = FamilyId(Theorem.SCOTT_MAX, "2c", k, i, b_max(k, i))
    return _verified(family, polygon)[1]


def min_area_formula(k: int, i: int, b: int, hull_dim: int = DIM2) -> Fraction:
    """Lower area bound without domain checks (used for k = 1 comparisons)."""
    if hull_dim == DIM2:
        return Fraction(i * (k + 1) + 1, 2 * k) + Fraction(b, 2) - 1
    if b == 0:
        return Fraction(i - 1, k) + Fraction(3, 2 * k * k)
    if b == 1:
        return Fraction(i, k) + Fraction(1, 2 * k * k)
    return Fraction(i + 1, k)


def _check_min(operation: str, k: int, i: int, b: int, hull_dim: int) -> None:
    _check_ki(operation, k, i)
    if hull_dim == DIM2:
        if not 2 <= b <= b_max(k, i):
            raise DomainError(operation, f"b={b} outside of [2, {b_max(k, i)}]")
    elif hull_dim < 2:
        if not 0 <= b <= 2:
            raise DomainError(operation, f"b={b} > 2 with a collinear integer hull")
    else:
        raise DomainError(operation, f"hull_dim={hull_dim} is not 2 or < 2")


def min_area(k: int, i: int, b: int, hull_dim: int = DIM2) -> Fraction:
    """Sharp lower area bound of a polygon of denominator k.

    :param hull_dim: 2 for a two dimensional integer hull, less than 2
        for a collinear one.
    :raises DomainError: on parameters outside of the bound's range.
    """
    _check_min("min_area", k, i, b, hull_dim)
    return min_area_formula(k, i, b, DIM2 if hull_dim == DIM2 else COLLINEAR)


def min_area_normalized(k: int, i: int, b: int, hull_dim: int = DIM2) -> int:
    value = 2 * k * k * min_area(k, i, b, hull_dim)
    return value.numerator


def _minimizer_polygon(label: str, k: int, i: int, b: int, x: Optional[int]) -> Polygon:
    top = Fraction(1, k)
    if label == "0a":
        return _conv((0, -1), (i * (k + 1) - k + 1, -1), (-top, top))
    if label == "1a":
        return _conv((0, -1), (b - 2, -1), (i, 0), (-top, top))
    if label == "1b":
        return _conv((0, -2), (2, 0), (-top, top))
    if label == "2a":
        return _conv((0, 0), (0, -1), (b - 3, -1), (i + 1, 0), (Fraction(x, k), top))
    if label == "2b":
        return _conv((0, 0), (0, -2), (2, 0), (Fraction(x, k), top))
    if label == "0c":
        return _conv((1, top), (1 - top, -top), (i + top, 0))
    if label == "1c":
        return _conv((1, top), (1 - top, -top), (i + 1, 0))
    return _conv((0, 0), (0, top), (Fraction(x, k), -top), (i + 1, 0))


def _members(
    theorem: Theorem, k: int, i: int, b: int
) -> Iterator[Tuple[str, Optional[int]]]:
    for (family_theorem, label), (accepts, x_range) in _FAMILIES.items():
        if family_theorem != theorem or not accepts(k, i, b):
            continue
        offsets = x_range(k, i, b)
        if len(offsets) == 0:
            yield label, None
        else:
            yield from ((label, x) for x in offsets)


def area_minimizers(k: int, i: int, b: int, hull_dim: int = DIM2) -> List[Member]:
    """All polygons attaining `min_area(k, i, b, hull_dim)` up to equivalence."""
    _check_min("area_minimizers", k, i, b, hull_dim)
    theorem = Theorem.AREA_MIN_2D if hull_dim == DIM2 else Theorem.AREA_MIN_COLLINEAR
    target = min_area_normalized(k, i, b, hull_dim)
    found = []
    for label, x in _members(theorem, k, i, b):
        family = FamilyId(
            theorem,
            label,
            k,
            i,
            b,
            x,
            global_minimum=not (label == "1a" and b == 2 and (k, i) != (2, 1)),
        )
        polygon = _minimizer_polygon(label, k, i, b, x)
        found.append(_verified(family, polygon, area_k=target, hull_dim=hull_dim))
    return found


def max_area_formula(k: int, i: int, b: int) -> int:
    """The normalized upper bound `k(k+1)²(i+1) - ...` without domain checks."""
    top = (k + 1) * (i + 1) + 3
    tilde = top - b
    base = k * (k + 1) ** 2 * (i + 1)
    if b >= top - 1:
        return base - tilde
    if b >= 1:
        return base - (2 + k * (tilde - 2))
    return base - (3 + k * (tilde - 2))


def is_conjectural(k: int) -> bool:
    """The upper bound is only verified, not proven, at k = 3."""
    return k == 3


def _check_max(operation: str, k: int, i: int, b: int) -> None:
    if k == 2:
        raise DomainError(operation, "k=2 is covered by half_integral_max_area")
    _check_ki(operation, k, i, k_min=3)
    if not 0 <= b <= b_max(k, i):
        raise DomainError(operation, f"b={b} outside of [0, {b_max(k, i)}]")


def max_area(k: int, i: int, b: int) -> Fraction:
    """Sharp upper area bound of a polygon of denominator k >= 3.

    The k = 3 value is conjectural (see `is_conjectural`).
    """
    _check_max("max_area", k, i, b)
    return Fraction(max_area_formula(k, i, b), 2 * k * k)


def max_area_normalized(k: int, i: int, b: int) -> int:
    _check_max("max_area_normalized", k, i, b)
    return max_area_formula(k, i, b)


def _maximizer_polygon(label: str, k: int, i: int, b: int, x: Optional[int]) -> Polygon:
    top = Fraction(1, k)
    wide = (k + 1) * (i + 1)
    if label == "0a":
        return _conv((0, top), (top, -1), (wide - top, -1))
    if label == "0b":
        return _conv((0, top), (top, -1), (1 - top, -1), (k * (i + 1) - top, top - 1))
    if label == "1a":
        return _conv((0, top), (top, -1), (b - top, -1), (k * (i + 1), top - 1))
    if label == "2a":
        return _conv(
            (0, top),
            (0, top - 1),
            (x + top, -1),
            (x + b - 1 - top, -1),
            (k * (i + 1), top - 1),
        )
    if label == "2b":
        return _conv((0, top), (0, top - 1), (top, -1), (wide, -1))
    return _conv((0, top), (0, -1), (wide, -1))


def area_maximizers(k: int, i: int, b: int) -> List[Member]:
    """All polygons attaining `max_area(k, i, b)` up to equivalence."""
    _check_max("area_maximizers", k, i, b)
    target = max_area_formula(k, i, b)
    found = []
    for label, x in _members(Theorem.AREA_MAX, k, i, b):
        family = FamilyId(
            Theorem.AREA_MAX, label, k, i, b, x, conjectural=is_conjectural(k)
        )
        polygon = _maximizer_polygon(label, k, i, b, x)
        found.append(_verified(family, polygon, area_k=target))
    return found


def half_integral_max_area(i: int, b: int) -> Fraction:
    """Sharp upper area bound of a polygon of denominator 2."""
    if i < 1:
        raise DomainError("half_integral_max_area", f"i={i} < 1")
    if i == 1:
        if not 0 <= b <= 9:
            raise DomainError("half_integral_max_area", f"b={b} outside of [0, 9]")
        eighths = 21 if b <= 6 else 27 - b
        return Fraction(b, 4) + Fraction(eighths, 8)
    if not 0 <= b <= 3 * i + 6:
        raise DomainError(
            "half_integral_max_area", f"b={b} outside of [0, {3 * i + 6}]"
        )
    eighths = 8 if b <= 3 * i + 4 else 8 - (b - 3 * i - 4)
    return Fraction(3 * i, 2) + Fraction(b, 4) + Fraction(eighths, 8)


def half_integral_maximizers(i: int, b: int) -> List[Member]:
    """Strip shaped upper bound families at k = 2 attaining the half-integral bound."""
    target = 8 * half_integral_max_area(i, b)
    found = []
    for label, x in _members(Theorem.AREA_MAX, 2, i, b):
        polygon = _maximizer_polygon(label, 2, i, b, x)
        stats = lattice_stats(polygon)
        if (stats.i, stats.b, stats.k, stats.area_k) == (i, b, 2, target):
            family = FamilyId(Theorem.HALF_INTEGRAL_N2, label, 2, i, b, x)
            found.append((family, polygon))
    return found


def strip_equality_area_bound(i: int, b: int) -> int:
    """`Area_2` bound `12i+2b+8` of half-integral polygons in R × [-1, 1]."""
    return 12 * i + 2 * b + 8


def strip_boundary_bound(i: int) -> int:
    return 2 * i + 6


@dataclass
class StripEqualityCheck:

    """Outcome of `strip_equality_check`."""

    holds: bool
    area_2: int
    bound: int

    #: Failed equality conditions.
    diagnosis: List[str] = field(default_factory=list)


def strip_equality_check(polygon: Polygon) -> StripEqualityCheck:
    """Check the equality case `Area_2(P) = 12i+2b+8`.

    :param polygon: a denominator 2 polygon inside `R × [-1, 1]`.
    :raises DomainError: for another denominator or a polygon leaving the strip.
    """
    if denominator(polygon) != 2:
        raise DomainError("strip_equality_check", f"{polygon} is not half-integral")
    low, high = polygon.y_range
    if low < -1 or high > 1:
        raise DomainError("strip_equality_check", f"{polygon} leaves R × [-1, 1]")
    stats = lattice_stats(polygon)
    profile = strip_profile(polygon, (Fraction(-1), Fraction(0), Fraction(1)))
    counts = {j: profile.boundary_counts.get(j, 0) for j in (-1, 0, 1)}
    diagnosis = []
    for j in (1, -1):
        if profile.lengths[Fraction(j)] != counts[j]:
            diagnosis.append(f"l_{j} != b_{j}")
    middle = stats.i + Fraction(2, 3) + Fraction(counts[0], 6)
    if profile.lengths[Fraction(0)] != middle:
        diagnosis.append("l_0 != i + 2/3 + b_0/6")
    if any(v.y == 0 for v in polygon.vertices):
        diagnosis.append("not a trapezoid")
    bound = strip_equality_area_bound(stats.i, stats.b)
    return StripEqualityCheck(stats.area_k == bound, stats.area_k, bound, diagnosis)


def strip_bound_formulas(k: int, i: int, h: Optional[int] = None) -> Fraction:
    """Normalized area bounds for polygons outside of a thin strip.

    Without `h`: `max(k²(4i+5), k(k+2)²(i+1)/2)` for polygons not equivalent
    to one in `R × [-1, 1]`. With `h`: `k(k²/h + 2k + h)(i+1)` for polygons
    in `R × [-1, h/k]`.
    """
    if k < 2:
        raise DomainError("strip_bound_formulas", f"k={k} < 2")
    if h is None:
        return max(
            Fraction(k * k * (4 * i + 5)), Fraction(k * (k + 2) ** 2 * (i + 1), 2)
        )
    if not 2 <= h <= k:
        raise DomainError("strip_bound_formulas", f"h={h} outside of [2, {k}]")
    return k * (Fraction(k * k, h) + 2 * k + h) * (i + 1)


def _intermediate_cycles(k: int, i: int, b: int) -> Iterator[List[IntPoint]]:
    """Point sets of `kP` reachable from the (2a) maximizer by the three moves.

    The top edge carries (0,1) and an optional (t,1). The left side is either
    the corner (0,-k) or the cut (0,-c),(a,-k). The bottom row ends at
    (beta,-k) and the right side either meets (k(i+1),0) directly or through
    (e,1-k). Row 0 always spans [0, i+1].
    """
    right = k * (i + 1)
    lefts: List[Tuple[int, List[IntPoint]]] = [(0, [(0, -k)])]
    lefts += [
        (1, [(0, -c), (a, -k)]) for c in range(1, k) for a in range(1, k)
    ]
    for t in range(k):
        top = [(0, 1)] + ([(t, 1)] if t else [])
        for first, left in lefts:
            for beta in range(k * (b - 3 + first), k * (b - 2 + first)):
                base = top + [(0, 0)] + left + [(beta, -k), (right, 0)]
                yield base
                low = (beta * (k - 1) + right) // k + 1
                for e in range(low, k * right - (k - 1) * t + 1):
                    yield base + [(e, 1 - k)]


@lru_cache(maxsize=64)
def _intermediate_table(k: int, i: int, b: int) -> Dict[int, Tuple[IntPoint, ...]]:
    table: Dict[int, Tuple[IntPoint, ...]] = {}
    for pts in _intermediate_cycles(k, i, b):
        hull = convex_hull(Point(x, y) for x, y in pts)
        if hull.dim != 2:
            continue
        cycle = hull.polygon.scaled(1)
        value = twice_area_scaled(cycle)
        if value in table:
            continue
        polygon = Polygon.from_scaled(cycle, k)
        stats = lattice_stats(polygon)
        if (stats.i, stats.b, stats.k) == (i, b, k):
            table[value] = cycle
    return table


def intermediate_polygon(k: int, i: int, b: int, area_k: int) -> Polygon:
    """A polygon of denominator k with stats (i, b) and `Area_k = area_k`.

    Any value between the lower and upper normalized bounds is attained by
    shortening the bottom edge, adding a top vertex (l/k, 1/k) and moving the
    vertex on `y = -1 + 1/k` inwards, starting from a (2a) maximizer.

    :raises DomainError: outside of k >= 3 and 3 <= b <= b_max - 2.
    :raises UnreachableArea: if `area_k` is outside of the bounds or no
        polygon of the family attains it.
    """
    _check_ki("intermediate_polygon", k, i, k_min=3)
    if not 3 <= b <= b_max(k, i) - 2:
        raise DomainError(
            "intermediate_polygon", f"b={b} outside of [3, {b_max(k, i) - 2}]"
        )
    low = min_area_normalized(k, i, b)
    high = max_area_formula(k, i, b)
    if not low <= area_k <= high:
        raise UnreachableArea("intermediate_polygon", area_k, low, high)
    cycle = _intermediate_table(k, i, b).get(area_k)
    if cycle is None:
        raise UnreachableArea("intermediate_polygon", area_k)
    polygon = Polygon.from_scaled(cycle, k)
    if normalized_area(polygon, k) != area_k:
        raise ConstructionError(f"{polygon} does not have Area_{k} = {area_k}")
    return polygon

