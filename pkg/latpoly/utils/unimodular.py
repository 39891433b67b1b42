"""latpoly affine unimodular equivalence utility."""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor, gcd
from typing import Iterator, List, Optional, Sequence, Tuple

from .geometry import IntCycle, IntPoint, Point, Polygon, denominator
from .lattice import Direction, directions_within, lattice_stats, lattice_width

# Types
Matrix = Tuple[Tuple[int, int], Tuple[int, int]]
InvariantKey = Tuple[int, int, int, int, Fraction, int]

IDENTITY: Matrix = ((1, 0), (0, 1))
REFLECTION: Matrix = ((1, 0), (0, -1))


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return `(g, s, t)` with `s·a + t·b = g = gcd(a, b)`."""
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, s, t = extended_gcd(b, a % b)
    return g, t, s - (a // b) * t


@dataclass(frozen=True)
class UnimodularAffineMap:

    """The map `v ↦ matrix·v + translation` with `|det(matrix)| = 1`."""

    matrix: Matrix = IDENTITY
    translation: Tuple[int, int] = (0, 0)

    def __post_init__(self):
        if abs(self.det) != 1:
            raise ValueError(f"{self.matrix} is not unimodular (det={self.det})")

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    @classmethod
    def identity(cls) -> "UnimodularAffineMap":
        return cls()

    @classmethod
    def shift(cls, x: int, y: int) -> "UnimodularAffineMap":
        return cls(IDENTITY, (x, y))

    @classmethod
    def from_direction(cls, w: Direction) -> "UnimodularAffineMap":
        """A linear map whose new y-coordinate is `⟨w, v⟩`.

        Hence `width(P, w)` becomes the height of the image.
        """
        g, s, t = extended_gcd(*w)
        if g != 1:
            raise ValueError(f"{w} is not a primitive direction")
        # det [[t, -s], [w0, w1]] = t·w1 + s·w0 = 1.
        return cls(((t, -s), (w[0], w[1])))

    def apply_point(self, point: Point) -> Point:
        (a, b), (c, d) = self.matrix
        return Point(
            a * point.x + b * point.y + self.translation[0],
            c * point.x + d * point.y + self.translation[1],
        )

    def apply(self, polygon: Polygon) -> Polygon:
        return Polygon.from_cycle([self.apply_point(v) for v in polygon.vertices])

    def compose(self, other: "UnimodularAffineMap") -> "UnimodularAffineMap":
        """`self ∘ other`, i.e. apply `other` first."""
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        tx, ty = other.translation
        return UnimodularAffineMap(
            ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)),
            (
                a * tx + b * ty + self.translation[0],
                c * tx + d * ty + self.translation[1],
            ),
        )

    def inverse(self) -> "UnimodularAffineMap":
        (a, b), (c, d) = self.matrix
        det = self.det
        inv = ((d * det, -b * det), (-c * det, a * det))
        tx, ty = self.translation
        return UnimodularAffineMap(
            inv,
            (-(inv[0][0] * tx + inv[0][1] * ty), -(inv[1][0] * tx + inv[1][1] * ty)),
        )


def apply_map(polygon: Polygon, umap: UnimodularAffineMap) -> Polygon:
    """Image of `polygon` under `umap`, re-oriented counterclockwise."""
    return umap.apply(polygon)


def _apply_matrix(matrix: Matrix, cycle: Sequence[IntPoint]) -> List[IntPoint]:
    (a, b), (c, d) = matrix
    return [(a * x + b * y, c * x + d * y) for x, y in cycle]


def _anchored(cycle: Sequence[IntPoint], k: int) -> IntCycle:
    # Translate by kZ² to put the smallest vertex into [0, k)², start there.
    start = min(range(len(cycle)), key=cycle.__getitem__)
    ox = cycle[start][0] // k * k
    oy = cycle[start][1] // k * k
    shifted = [(x - ox, y - oy) for x, y in cycle]
    return tuple(shifted[start:] + shifted[:start])


def _edge_frames(cycle: Sequence[IntPoint]) -> Iterator[Matrix]:
    """One linear frame per vertex of a CCW integer cycle.

    At vertex v_j the frame maps the primitive next edge direction to (1, 0)
    and the previous edge `p = v_{j-1} - v_j` to a vector with `0 <= p.x <
    p.y`. Such a frame is unique, so frames commute with equivalence.
    """
    count = len(cycle)
    for j in range(count):
        vx, vy = cycle[j]
        nx, ny = cycle[(j + 1) % count]
        px, py = cycle[j - 1]
        ex, ey = nx - vx, ny - vy
        g = gcd(ex, ey)
        ux, uy = ex // g, ey // g
        _, s, t = extended_gcd(ux, uy)
        # [[s, t], [-uy, ux]] has det 1 and sends u to (1, 0).
        frame: Matrix = ((s, t), (-uy, ux))
        (a, b), (c, d) = frame
        pa, pb = a * (px - vx) + b * (py - vy), c * (px - vx) + d * (py - vy)
        shear = -(pa // pb)
        yield ((a + shear * c, b + shear * d), (c, d))


def canonical_cycle(cycle: Sequence[IntPoint], k: int) -> IntCycle:
    """Normal form of an integer CCW cycle of `kP` under `GL₂(Z) ⋉ kZ²`."""
    mirrored = _apply_matrix(REFLECTION, cycle)[::-1]
    best: Optional[IntCycle] = None
    for base in (list(cycle), mirrored):
        for frame in _edge_frames(base):
            candidate = _anchored(_apply_matrix(frame, base), k)
            if best is None or candidate < best:
                best = candidate
    return best


@lru_cache(maxsize=4096)
def canonical_form(polygon: Polygon) -> Polygon:
    """Distinguished representative of the equivalence class of P.

    Over all vertex frames of both orientations, the lexicographically
    smallest anchored integer cycle of `kP` is taken.
    """
    k = denominator(polygon)
    return Polygon.from_scaled(canonical_cycle(polygon.scaled(k), k), k)


def invariant_key(polygon: Polygon) -> InvariantKey:
    """Cheap equivalence invariants: (k, i, b, Area_k, lattice width, #vertices)."""
    stats = lattice_stats(polygon)
    return (
        stats.k,
        stats.i,
        stats.b,
        stats.area_k,
        lattice_width(polygon)[0],
        len(polygon),
    )


def equivalent(first: Polygon, second: Polygon) -> bool:
    """Check affine unimodular equivalence of two polygons."""
    if invariant_key(first) != invariant_key(second):
        return False
    return canonical_form(first) == canonical_form(second)


def strip_map(
    polygon: Polygon, low: Fraction, high: Fraction
) -> Optional[UnimodularAffineMap]:
    """A unimodular map placing P inside `R × [low, high]`, if one exists.

    Only directions of width at most `high - low` can be turned vertical and
    each of them is tried with both signs and the lowest fitting shift.
    """
    low, high = Fraction(low), Fraction(high)
    for w in directions_within(polygon, high - low):
        for sign in (1, -1):
            direction = (sign * w[0], sign * w[1])
            values = [v.dot(direction) for v in polygon.vertices]
            shift = -floor(min(values) - low)
            if max(values) + shift <= high:
                base = UnimodularAffineMap.from_direction(direction)
                return UnimodularAffineMap.shift(0, shift).compose(base)
    return None


def realizable_in_strip(polygon: Polygon, low: Fraction, high: Fraction) -> bool:
    """Check whether P is equivalent to a polygon in `R × [low, high]`."""
    return strip_map(polygon, low, high) is not None


def fits_in_threefold_triangle(polygon: Polygon) -> bool:
    """Check whether P is contained in a polygon equivalent to conv((0,0),(3,0),(0,3)).

    With rows n1, n2 of the linear part and n3 = -n1-n2, containment needs
    `floor(m1) + floor(m2) + floor(m3) >= -3` where `m_j = min⟨n_j, P⟩`; every
    n_j is a direction of width at most 3.
    """
    candidates: List[Direction] = []
    for w in directions_within(polygon, Fraction(3)):
        candidates.extend((w, (-w[0], -w[1])))
    mins = {n: min(v.dot(n) for v in polygon.vertices) for n in candidates}
    for n1 in candidates:
        for n2 in candidates:
            if abs(n1[0] * n2[1] - n1[1] * n2[0]) != 1:
                continue
            n3 = (-n1[0] - n2[0], -n1[1] - n2[1])
            if n3 not in mins:
                continue
            if floor(mins[n1]) + floor(mins[n2]) + floor(mins[n3]) >= -3:
                return True
    return False
