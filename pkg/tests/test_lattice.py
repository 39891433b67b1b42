"""latpoly/utils/lattice.py tests."""
# pylint: disable=R0201,W0613
from fractions import Fraction

import pytest

from latpoly.utils import lattice
from latpoly.utils.geometry import Point, Polygon, points

# Constants.
THREEFOLD = Polygon.hull_of(points((0, 0), (3, 0), (0, 3)))
SCOTT_3_1 = Polygon.hull_of(points((0, "1/3"), (0, -1), (8, -1)))
STRIP_MAX = Polygon.hull_of(
    points((0, "1/2"), (0, "-1/2"), ("1/2", -1), ("7/2", -1), (6, "-1/2"))
)
TINY = Polygon.hull_of(points((0, 0), ("1/2", 0), (0, "1/2")))
SLIVER = Polygon.hull_of(points((0, 0), (1, 0), ("1/2", "1/2")))
HOLLOW = Polygon.hull_of(points(("1/3", "1/3"), ("2/3", "1/3"), ("1/3", "2/3")))


class TestLatticeStats:

    """`lattice_stats` function tests."""

    @pytest.mark.parametrize(
        "polygon, expec",
        [
            pytest.param(THREEFOLD, (1, 9, 1, Fraction(9, 2), 9, 2), id="threefold"),
            pytest.param(SCOTT_3_1, (1, 11, 3, Fraction(16, 3), 96, 2), id="scott"),
            pytest.param(STRIP_MAX, (2, 5, 2, Fraction(21, 4), 42, 2), id="strip"),
            pytest.param(TINY, (0, 1, 2, Fraction(1, 8), 1, 0), id="single point"),
            pytest.param(SLIVER, (0, 2, 2, Fraction(1, 4), 2, 1), id="segment hull"),
            pytest.param(HOLLOW, (0, 0, 3, Fraction(1, 18), 1, -1), id="empty hull"),
        ],
    )
    def test_lattice_stats(self, polygon, expec):
        stats = lattice.lattice_stats(polygon)
        assert (
            stats.i,
            stats.b,
            stats.k,
            stats.area,
            stats.area_k,
            stats.hull_dim,
        ) == expec

    def test_str(self):
        assert str(lattice.lattice_stats(THREEFOLD)) == (
            "i=1 b=9 k=1 area=9/2 area_k=9 hull_dim=2"
        )

    @pytest.mark.parametrize(
        "pairs",
        [
            pytest.param([(0, 0), (4, 0), (0, 2)], id="triangle"),
            pytest.param([(0, 0), (3, 1), (1, 3), (-1, 2)], id="quadrilateral"),
            pytest.param([(0, 0), (5, 0), (5, 1), (0, 1)], id="thin rectangle"),
        ],
    )
    def test_pick_on_lattice_polygons(self, pairs):
        stats = lattice.lattice_stats(Polygon.hull_of(points(*pairs)))
        assert stats.area == stats.i + Fraction(stats.b, 2) - 1


class TestLatticePoints:

    """Lattice point helpers tests."""

    def test_lattice_points(self):
        found = lattice.lattice_points(SCOTT_3_1)
        assert len(found) == 12
        assert found[0] == Point(0, -1)
        assert Point(1, 0) in found and Point(3, 0) not in found

    def test_integer_hull(self):
        hull = lattice.integer_hull(SCOTT_3_1)
        assert hull.kind == "polygon"
        assert hull.vertices == tuple(points((0, -1), (8, -1), (2, 0), (0, 0)))

    @pytest.mark.parametrize(
        "a, b, expec",
        [
            pytest.param(Point(0, 0), Point(3, 3), 4, id="diagonal"),
            pytest.param(Point("1/2", 0), Point("5/2", 0), 2, id="rational ends"),
            pytest.param(Point("1/3", 0), Point("2/3", 0), 0, id="no points"),
            pytest.param(Point(0, 0), Point(0, 0), 1, id="degenerate"),
        ],
    )
    def test_segment_lattice_count(self, a, b, expec):
        assert lattice.segment_lattice_count(a, b) == expec


class TestLatticeWidth:

    """Width functions tests."""

    def test_width(self):
        assert lattice.width(THREEFOLD, (1, -1)) == 6
        with pytest.raises(ValueError):
            lattice.width(THREEFOLD, (0, 0))

    def test_directions_within(self):
        found = list(lattice.directions_within(THREEFOLD, Fraction(3)))
        assert found == [(0, 1), (1, 0), (1, 1)]

    @pytest.mark.parametrize(
        "polygon, expec",
        [
            pytest.param(THREEFOLD, (Fraction(3), (0, 1)), id="threefold"),
            pytest.param(STRIP_MAX, (Fraction(3, 2), (0, 1)), id="strip"),
            pytest.param(
                Polygon.hull_of(points((0, 0), (5, 5), (6, 5), (1, 0))),
                (Fraction(1), (1, -1)),
                id="sheared parallelogram",
            ),
        ],
    )
    def test_lattice_width(self, polygon, expec):
        assert lattice.lattice_width(polygon) == expec


class TestStripProfile:

    """`strip_profile` function tests."""

    def test_strip_profile(self):
        profile = lattice.strip_profile(SCOTT_3_1, heights=[Fraction(0)])
        assert profile.n == 1
        assert profile.lengths == {Fraction(0): Fraction(2)}
        assert profile.boundary_counts == {-1: 9, 0: 2}
        assert profile.interior_counts == {-1: 0, 0: 1}

    def test_interior_lines(self):
        assert lattice.interior_lines(STRIP_MAX) == [0]
        assert lattice.interior_lines(THREEFOLD) == [1, 2]

    def test_section_length_outside(self):
        assert lattice.section_length(THREEFOLD, Fraction(5)) == 0
