"""latpoly exhaustive polygon enumeration utility.

Polygons are grown as counterclockwise convex chains of points of the grid
`Z²` of `kP`, starting at their lowest (then leftmost) vertex, and reduced
to one representative per equivalence class with `canonical_cycle`.
"""
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import cached_property
from math import gcd, isqrt
from typing import Iterator, List, Optional, Set, Tuple

from ._exceptions import DomainError, ResourceLimit
from .geometry import IntCycle, IntPoint, Polygon, icross
from .lattice import boundary_count_scaled, interior_count_scaled
from .unimodular import canonical_cycle

#: Environment variable capping the number of worker processes.
THREADS_ENV = "LATPOLY_THREADS"


@dataclass(frozen=True)
class EnumerationBox:

    """Search region in grid units of `(1/k)Z²`.

    A class is found when one of its representatives has x-extent at most
    `x_max` and y-extent at most `y_max`. With `strip` set, vertices must
    instead lie in `R × [0, y_max]` itself.
    """

    k: int
    x_max: int
    y_max: int
    i_target: Optional[int] = None

    #: Keep only polygons whose denominator is exactly k.
    exact_denominator: bool = True

    b_min: Optional[int] = None
    b_max: Optional[int] = None
    strip: bool = False

    #: Which bound justified the box.
    note: str = ""

    def __post_init__(self):
        if self.k < 1 or self.x_max < 1 or self.y_max < 1:
            raise DomainError("EnumerationBox", f"invalid box {self}")

    def grown(self, by: int = 2) -> "EnumerationBox":
        return replace(
            self,
            x_max=self.x_max + by,
            y_max=self.y_max + by,
            note=f"{self.note} (grown by {by})".strip(),
        )

    def accepts(self, cycle: IntCycle, interior: int) -> bool:
        if self.i_target is not None and interior != self.i_target:
            return False
        if self.exact_denominator:
            common = self.k
            for x, y in cycle:
                common = gcd(common, x, y)
            if common != 1:
                return False
        if self.b_min is not None or self.b_max is not None:
            boundary = boundary_count_scaled(cycle, self.k)
            if self.b_min is not None and boundary < self.b_min:
                return False
            if self.b_max is not None and boundary > self.b_max:
                return False
        return True


def _ceil_sqrt(value: int) -> int:
    root = isqrt(value)
    return root if root * root == value else root + 1


def default_box(k: int, i: int, strip: bool = False) -> EnumerationBox:
    """Box certified by the known bounds for denominator k and i interior points.

    Height: with a lattice width direction vertical, the height is the
    lattice width, and `lw² <= 8/3·area`. Polygons not equivalent to one in
    `R × [-1, 1]` have `Area_k <= max(k²(4i+5), k(k+2)²(i+1)/2)`, so the
    scaled height h satisfies `h² <= 4/3·Area_k`; the others have height 2.
    Width: `k((k+1)(i+1)+2)`. In strip mode the region is `R × [-1, 1/k]`.
    """
    width = k * ((k + 1) * (i + 1) + 2)
    if strip:
        return EnumerationBox(
            k, width, k + 1, i_target=i, strip=True, note="strip R × [-1, 1/k]"
        )
    outside = max(k * k * (4 * i + 5), (k * (k + 2) ** 2 * (i + 1) + 1) // 2)
    height = max(2 * k, _ceil_sqrt(-(-4 * outside // 3)))
    return EnumerationBox(
        k,
        width,
        height,
        i_target=i,
        note="lattice width² <= 8/3·area with the strip area bound",
    )


def resolve_threads(requested: Optional[int] = None) -> int:
    """Worker count: `requested` (default: CPU count) capped by `LATPOLY_THREADS`."""
    threads = requested or os.cpu_count() or 1
    cap = os.environ.get(THREADS_ENV)
    if cap and cap.strip().isdigit() and int(cap) > 0:
        threads = min(threads, int(cap))
    return max(1, threads)


class _BudgetExceeded(Exception):

    """Internal signal ending a partition search."""


@dataclass
class _Partition:

    """DFS state of the partition rooted at one lowest vertex."""

    box: EnumerationBox
    root: IntPoint
    budget: Optional[int]
    nodes: int = 0
    found: Set[IntCycle] = field(default_factory=set)

    def candidates(self) -> List[IntPoint]:
        x0, y0 = self.root
        box = self.box
        top = box.y_max if box.strip else y0 + box.y_max
        return [
            (x, y)
            for y in range(y0, top + 1)
            for x in range(x0 - box.x_max, x0 + box.x_max + 1)
            if y > y0 or x > x0
        ]

    def run(self) -> None:
        self._grow([self.root], self.root[0], self.root[0], self.root[1])

    def _grow(self, chain: List[IntPoint], min_x: int, max_x: int, max_y: int) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExceeded
        box = self.box
        if len(chain) >= 3:
            cycle = tuple(chain)
            interior = interior_count_scaled(cycle, box.k)
            if box.accepts(cycle, interior):
                self.found.add(canonical_cycle(cycle, box.k))
        root = chain[0]
        last = chain[-1]
        y_limit = box.y_max if box.strip else root[1] + box.y_max
        for point in self._points:
            if point[1] > y_limit:
                continue
            lo, hi = min(min_x, point[0]), max(max_x, point[0])
            if hi - lo > box.x_max:
                continue
            if len(chain) >= 2:
                if icross(chain[-2], last, point) <= 0:
                    continue
                if icross(root, chain[1], point) <= 0:
                    continue
                if icross(last, point, root) <= 0:
                    continue
                extended = chain + [point]
                if (
                    box.i_target is not None
                    and interior_count_scaled(extended, box.k) > box.i_target
                ):
                    continue
            else:
                extended = chain + [point]
            self._grow(extended, lo, hi, max(max_y, point[1]))

    @cached_property
    def _points(self) -> List[IntPoint]:
        return self.candidates()


def _search_partition(
    job: Tuple[EnumerationBox, IntPoint, Optional[int]]
) -> Tuple[Set[IntCycle], int, bool]:
    box, root, budget = job
    partition = _Partition(box, root, budget)
    try:
        partition.run()
    except _BudgetExceeded:
        return partition.found, partition.nodes - 1, False
    return partition.found, partition.nodes, True


def partitions(box: EnumerationBox) -> List[IntPoint]:
    """Lowest vertex positions, one search partition each."""
    rows = range(box.y_max + 1) if box.strip else range(box.k)
    return [(x, y) for y in rows for x in range(box.k)]


@dataclass
class EnumerationResult:

    """Sorted canonical classes found in a box."""

    box: EnumerationBox
    cycles: List[IntCycle]
    explored: int
    complete: bool
    elapsed: float = 0.0

    @property
    def polygons(self) -> List[Polygon]:
        return [Polygon.from_scaled(c, self.box.k) for c in self.cycles]

    def __iter__(self) -> Iterator[Polygon]:
        return iter(self.polygons)

    def __len__(self) -> int:
        return len(self.cycles)


def enumerate_polygons(
    box: EnumerationBox,
    *,
    threads: int = 1,
    budget: Optional[int] = None,
    strict: bool = False,
) -> EnumerationResult:
    """Enumerate one representative per equivalence class meeting `box`.

    :param box: the search region and filters.
    :param threads: worker processes; partitions merge deterministically.
    :param budget: DFS node budget per partition, None for unlimited.
    :param strict: raise instead of returning an incomplete result.
    :raises ResourceLimit: in strict mode, when a partition runs out of budget.
    """
    start = time.perf_counter()
    jobs = [(box, root, budget) for root in partitions(box)]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as executor:
            outcomes = list(executor.map(_search_partition, jobs))
    else:
        outcomes = [_search_partition(job) for job in jobs]

    classes: Set[IntCycle] = set()
    explored = 0
    complete = True
    for found, nodes, finished in outcomes:
        classes |= found
        explored += nodes
        complete = complete and finished
    if strict and not complete:
        raise ResourceLimit(budget, explored)
    return EnumerationResult(
        box, sorted(classes), explored, complete, time.perf_counter() - start
    )


@dataclass
class SaturationResult:

    """Outcome of re-running an enumeration in a grown box."""

    stable: bool

    #: Classes that only appear in the grown box.
    extra: List[Polygon] = field(default_factory=list)

    complete: bool = True


def saturation_check(
    box: EnumerationBox,
    *,
    baseline: Optional[EnumerationResult] = None,
    threads: int = 1,
    budget: Optional[int] = None,
    by: int = 2,
) -> SaturationResult:
    """Check that growing `box` by `by` grid units adds no class."""
    if baseline is None:
        baseline = enumerate_polygons(box, threads=threads, budget=budget)
    grown = enumerate_polygons(box.grown(by), threads=threads, budget=budget)
    known = set(baseline.cycles)
    extra = [c for c in grown.cycles if c not in known]
    return SaturationResult(
        not extra,
        [Polygon.from_scaled(c, box.k) for c in extra],
        baseline.complete and grown.complete,
    )
