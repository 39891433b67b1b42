"""latpoly Ehrhart quasipolynomial utility."""
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Set, Tuple

from ._exceptions import ConstructionError, DomainError, UnreachableArea
from .geometry import IntCycle, Point, Polygon, convex_hull, denominator, polygon_area
from .lattice import boundary_count_scaled, interior_count_scaled, lattice_stats

# Types
QuasiKey = Tuple[int, int, Fraction, int]


def _dilated_cycle(polygon: Polygon, t: int) -> Tuple[IntCycle, int]:
    k = denominator(polygon)
    return tuple((t * x, t * y) for x, y in polygon.scaled(k)), k


def ehrhart_count(polygon: Polygon, t: int) -> int:
    """`|tP ∩ Z²|` for an integer t >= 1."""
    if t < 1:
        raise DomainError("ehrhart_count", f"t={t} < 1")
    cycle, k = _dilated_cycle(polygon, t)
    return interior_count_scaled(cycle, k) + boundary_count_scaled(cycle, k)


def ehrhart_series(polygon: Polygon, tmax: int) -> List[int]:
    """Counts `ehr_P(1), ..., ehr_P(tmax)`."""
    return [ehrhart_count(polygon, t) for t in range(1, tmax + 1)]


def refined_boundary_count(polygon: Polygon, m: int) -> int:
    """`|∂P ∩ (1/m)Z²|`, i.e. the boundary lattice points of `mP`."""
    if m < 1:
        raise DomainError("refined_boundary_count", f"m={m} < 1")
    cycle, k = _dilated_cycle(polygon, m)
    return boundary_count_scaled(cycle, k)


@dataclass(frozen=True)
class QuasiPolynomial:

    """`t ↦ leading·t² + c1(t)·t + c2(t)` with coefficients of period `period`.

    `c1[r - 1]` and `c2[r - 1]` hold the coefficients of residue r, where
    residue `period` stands for 0.
    """

    period: int
    leading: Fraction
    c1: Tuple[Fraction, ...]
    c2: Tuple[Fraction, ...]

    def evaluate(self, t: int) -> Fraction:
        r = t % self.period or self.period
        return self.leading * t * t + self.c1[r - 1] * t + self.c2[r - 1]

    def to_json(self) -> str:
        return json.dumps(
            {
                "period": self.period,
                "leading": str(self.leading),
                "c1": [str(c) for c in self.c1],
                "c2": [str(c) for c in self.c2],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "QuasiPolynomial":
        data = json.loads(text)
        return cls(
            int(data["period"]),
            Fraction(data["leading"]),
            tuple(Fraction(c) for c in data["c1"]),
            tuple(Fraction(c) for c in data["c2"]),
        )


def quasipolynomial(polygon: Polygon) -> QuasiPolynomial:
    """Ehrhart quasipolynomial of P, interpolated from `ehr_P`.

    The leading coefficient is recovered from the second difference of
    `ehr_P(r + m·k)` in m, then c1(r), c2(r) from `t = r` and `t = r + k`.
    The result is checked against `ehrhart_count` for all `t <= 4k`.
    """
    k = denominator(polygon)
    counts = [0] + ehrhart_series(polygon, 4 * k)

    leading = Fraction(counts[1 + 2 * k] - 2 * counts[1 + k] + counts[1], 2 * k * k)
    c1, c2 = [], []
    for r in range(1, k + 1):
        low = counts[r] - leading * r * r
        high = counts[r + k] - leading * (r + k) ** 2
        slope = (high - low) / k
        c1.append(slope)
        c2.append(low - slope * r)
    result = QuasiPolynomial(k, leading, tuple(c1), tuple(c2))

    if leading != polygon_area(polygon):
        raise ConstructionError(
            f"leading coefficient {leading} is not the area of {polygon}"
        )
    for t in range(1, 4 * k + 1):
        if result.evaluate(t) != counts[t]:
            raise ConstructionError(f"quasipolynomial of {polygon} mispredicts t={t}")
    return result


def quasipolynomial_key(polygon: Polygon) -> QuasiKey:
    """`(i, b, area, b(2P))`, which determines a half-integral quasipolynomial."""
    stats = lattice_stats(polygon)
    return stats.i, stats.b, stats.area, refined_boundary_count(polygon, 2)


@dataclass(frozen=True)
class B2PBoundInput:

    """Parameters of the lower bound on `b(2P)`."""

    i: int
    b: int

    #: `Area_2(P)`.
    A: int

    def __post_init__(self):
        if self.i < 2 or self.b < 3 or self.A < 0:
            raise DomainError(
                "b2p_lower_bound", f"needs i >= 2, b >= 3 and A >= 0, got {self}"
            )

    @property
    def r(self) -> int:
        return self.A % 2


def b2p_lower_bound(params: B2PBoundInput) -> int:
    """Sharp lower bound on the half-integral boundary points `b(2P)`."""
    bonus = 0
    if params.A == 12 * params.i + 2 * params.b + 8 and params.b != 2 * params.i + 4:
        bonus = 2
    return 2 * params.b + params.r + bonus


@dataclass(frozen=True)
class B2PWitness:

    """A polygon attaining `b2p_lower_bound` and how it was found."""

    template: str
    polygon: Polygon

    #: Horizontal offset of the (q, -1/2) vertex found by search.
    solved_offset: Optional[Fraction] = None

    #: Offset `2i+2 - ⌊Ã/2⌋/2` printed alongside the template.
    printed_offset: Optional[Fraction] = None


def _conv(*pairs) -> Optional[Polygon]:
    hull = convex_hull(Point(x, y) for x, y in pairs)
    return hull.polygon if hull.dim == 2 else None


def _attains(polygon: Optional[Polygon], params: B2PBoundInput) -> bool:
    if polygon is None or denominator(polygon) != 2:
        return False
    stats = lattice_stats(polygon)
    return (
        (stats.i, stats.b, stats.area_k) == (params.i, params.b, params.A)
        and refined_boundary_count(polygon, 2) == b2p_lower_bound(params)
    )


def find_b2p_witness(i: int, b: int, A: int) -> B2PWitness:
    """Build and verify a witness for the sharpness of `b2p_lower_bound`.

    :raises UnreachableArea: if no template realizes A.
    """
    params = B2PBoundInput(i, b, A)
    half = Fraction(1, 2)
    candidates = []
    if A == 12 * i + 2 * b + 8:
        if b == 2 * i + 4:
            candidates.append(
                ("triangle", _conv((-half, -1), (2 * i + 3 * half, -1), (half, 1)))
            )
        else:
            # The (2a) strip maximizer at k = 2.
            candidates.append(
                (
                    "strip-maximizer",
                    _conv(
                        (0, half),
                        (0, -half),
                        (half, -1),
                        (b - 1 - half, -1),
                        (2 * (i + 1), -half),
                    ),
                )
            )
    if A == 6 * i + 4 * b - 5:
        candidates.append(
            (
                "near-minimizer",
                _conv((0, half), (half, half), (i + 1, 0), (b - 3, -1), (0, -1)),
            )
        )
    for template, polygon in candidates:
        if _attains(polygon, params):
            return B2PWitness(template, polygon)

    tilde = 12 * i + 2 * b - 7 - A
    printed = 2 * i + 2 - Fraction(tilde // 2, 2)
    corner = b - 3 + Fraction(params.r, 2)
    for step in range(0, 8 * (i + b + 2) + 1):
        offset = Fraction(step, 2)
        polygon = _conv((0, half), (0, -1), (corner, -1), (offset, -half), (i + 1, 0))
        if _attains(polygon, params):
            return B2PWitness("offset", polygon, offset, printed)
    raise UnreachableArea("b2p_witness", A)


def b2p_witness(i: int, b: int, A: int) -> Polygon:
    """A half-integral polygon with stats (i, b), `Area_2 = A` and minimal `b(2P)`."""
    return find_b2p_witness(i, b, A).polygon


def conjecture_value(i: int) -> int:
    """Conjectured number of half-integral quasipolynomials with i interior points."""
    if i < 2:
        raise DomainError("conjecture_value", f"i={i} < 2")
    value = Fraction(9, 2) * i ** 3 + 36 * i * i + Fraction(175, 2) * i + 53
    if value.denominator != 1:
        raise ConstructionError(f"conjecture value {value} is not an integer")
    return value.numerator


@dataclass(frozen=True)
class QuasiPolynomialCount:

    """Number of distinct quasipolynomials seen in an enumeration."""

    count: int
    complete: bool


def count_distinct_quasipolynomials(
    i: int,
    polygons: Iterable[Polygon],
    *,
    complete: bool = True,
    include_lattice: bool = False,
) -> QuasiPolynomialCount:
    """Count the distinct `quasipolynomial_key` values of a polygon stream.

    :param i: interior lattice points to keep.
    :param polygons: stream of polygons (any representatives).
    :param complete: whether the stream is a complete enumeration.
    :param include_lattice: also count denominator 1 polygons.
    """
    keys: Set[QuasiKey] = set()
    allowed = {1, 2} if include_lattice else {2}
    for polygon in polygons:
        if denominator(polygon) not in allowed:
            continue
        key = quasipolynomial_key(polygon)
        if key[0] == i and key[1] >= 3:
            keys.add(key)
    return QuasiPolynomialCount(len(keys), complete)
