"""latpoly/utils/geometry.py tests."""
# pylint: disable=R0201,W0613
from fractions import Fraction

import pytest

from latpoly.utils import geometry
from latpoly.utils._exceptions import (
    DomainError,
    InvalidPolygon,
    NonIntegralNormalization,
)
from latpoly.utils.geometry import Point, Polygon, points

# Constants.
HALF = Fraction(1, 2)
THREEFOLD = Polygon.hull_of(points((0, 0), (3, 0), (0, 3)))
UNIT_SQUARE = Polygon.hull_of(points((0, 0), (1, 0), (1, 1), (0, 1)))


class TestToFraction:

    """`to_fraction` function tests."""

    @pytest.mark.parametrize(
        "value, expec",
        [
            pytest.param(3, Fraction(3), id="int"),
            pytest.param("-7/14", Fraction(-1, 2), id="reduced string"),
            pytest.param(" 5 ", Fraction(5), id="padded string"),
            pytest.param(Fraction(2, 3), Fraction(2, 3), id="fraction"),
        ],
    )
    def test_to_fraction(self, value, expec):
        assert geometry.to_fraction(value) == expec

    @pytest.mark.parametrize(
        "value",
        [
            pytest.param(0.5, id="float"),
            pytest.param("3/0", id="zero denominator"),
            pytest.param("a/b", id="garbage"),
        ],
    )
    def test_to_fraction_rejects(self, value):
        with pytest.raises(ValueError):
            geometry.to_fraction(value)


class TestPoint:

    """`Point` class tests."""

    def test_arithmetic(self):
        p, q = Point("1/2", 1), Point(1, "-1/3")
        assert p + q == Point("3/2", "2/3")
        assert p - q == Point("-1/2", "4/3")
        assert p.scale(2) == Point(1, 2)
        assert p.dot((2, -1)) == 0

    def test_order_and_str(self):
        assert Point(0, 5) < Point(1, -5) < Point(1, 0)
        assert str(Point("1/2", -1)) == "(1/2,-1)"
        assert Point(2, 0).is_integral and not Point(HALF, 0).is_integral


class TestPolygon:

    """`Polygon` class tests."""

    def test_rotates_to_smallest_vertex(self):
        polygon = Polygon(tuple(points((3, 0), (0, 3), (0, 0))))
        assert polygon.vertices[0] == Point(0, 0)
        assert polygon == THREEFOLD

    def test_from_cycle_reorients(self):
        clockwise = points((0, 0), (0, 3), (3, 0))
        assert Polygon.from_cycle(clockwise) == THREEFOLD

    @pytest.mark.parametrize(
        "pairs",
        [
            pytest.param([(0, 0), (1, 0)], id="too few"),
            pytest.param([(0, 0), (1, 0), (2, 0)], id="collinear"),
            pytest.param([(0, 0), (0, 3), (3, 0)], id="clockwise"),
            pytest.param([(0, 0), (2, 0), (1, 1), (2, 2), (0, 2)], id="reflex"),
        ],
    )
    def test_invalid(self, pairs):
        with pytest.raises(InvalidPolygon):
            Polygon(tuple(points(*pairs)))

    def test_hull_of_degenerate(self):
        with pytest.raises(InvalidPolygon):
            Polygon.hull_of(points((0, 0), (1, 1), (2, 2)))

    def test_scaled_round_trip(self):
        polygon = Polygon.hull_of(points((0, "1/3"), (0, -1), (8, -1)))
        cycle = polygon.scaled(3)
        assert cycle == ((0, -3), (24, -3), (0, 1))
        assert Polygon.from_scaled(cycle, 3) == polygon
        with pytest.raises(DomainError):
            polygon.scaled(2)

    def test_dilate_translate(self):
        assert UNIT_SQUARE.dilate(3).vertices[2] == Point(3, 3)
        assert UNIT_SQUARE.translate(Point(1, 1)).vertices[0] == Point(1, 1)
        with pytest.raises(DomainError):
            UNIT_SQUARE.dilate(0)

    @pytest.mark.parametrize(
        "point, strict, expec",
        [
            pytest.param(Point(1, 1), True, True, id="interior"),
            pytest.param(Point(3, 0), False, True, id="vertex"),
            pytest.param(Point(3, 0), True, False, id="vertex strict"),
            pytest.param(Point(2, 2), False, False, id="outside"),
        ],
    )
    def test_contains(self, point, strict, expec):
        assert THREEFOLD.contains(point, strict) is expec

    @pytest.mark.parametrize(
        "y, expec",
        [
            pytest.param(0, (Fraction(0), Fraction(3)), id="base"),
            pytest.param(HALF, (Fraction(0), Fraction(5, 2)), id="half"),
            pytest.param(3, (Fraction(0), Fraction(0)), id="apex"),
            pytest.param(4, None, id="above"),
        ],
    )
    def test_section(self, y, expec):
        assert THREEFOLD.section(y) == expec

    def test_str_and_edges(self):
        assert str(THREEFOLD) == "conv((0,0),(3,0),(0,3))"
        assert len(list(THREEFOLD.edges())) == len(THREEFOLD) == 3
        assert THREEFOLD.y_range == (0, 3)


class TestConvexHull:

    """`convex_hull` function tests."""

    @pytest.mark.parametrize(
        "pairs, expec_kind, expec_dim",
        [
            pytest.param([], "empty", -1, id="empty"),
            pytest.param([(1, 1), (1, 1)], "point", 0, id="point"),
            pytest.param([(2, 2), (0, 0), (1, 1)], "segment", 1, id="segment"),
            pytest.param(
                [(0, 0), (3, 0), (0, 3), (1, 1), (1, 0)], "polygon", 2, id="polygon"
            ),
        ],
    )
    def test_kinds(self, pairs, expec_kind, expec_dim):
        hull = geometry.convex_hull(points(*pairs))
        assert (hull.kind, hull.dim) == (expec_kind, expec_dim)

    def test_segment_endpoints_ordered(self):
        hull = geometry.convex_hull(points((2, 2), (0, 0), (1, 1)))
        assert hull.vertices == (Point(0, 0), Point(2, 2))

    def test_drops_collinear(self):
        hull = geometry.convex_hull(points((0, 0), (1, 0), (2, 0), (0, 2)))
        assert len(hull.vertices) == 3


class TestArea:

    """Area functions tests."""

    @pytest.mark.parametrize(
        "polygon, expec",
        [
            pytest.param(THREEFOLD, Fraction(9, 2), id="threefold"),
            pytest.param(UNIT_SQUARE, Fraction(1), id="square"),
            pytest.param(
                Polygon.hull_of(points((0, 0), (HALF, 0), (0, HALF))),
                Fraction(1, 8),
                id="half triangle",
            ),
        ],
    )
    def test_area(self, polygon, expec):
        assert geometry.polygon_area(polygon) == expec
        assert geometry.fan_triangulation_area(polygon) == expec

    def test_denominator(self):
        polygon = Polygon.hull_of(points((0, "1/3"), ("1/2", 0), (1, 1)))
        assert geometry.denominator(polygon) == 6
        assert geometry.denominator(THREEFOLD) == 1

    def test_normalized_area(self):
        polygon = Polygon.hull_of(points((0, "1/3"), (0, -1), (8, -1)))
        assert geometry.normalized_area(polygon, 3) == 96
        quarter = Polygon.hull_of(points((0, 0), (HALF, 0), (0, 1)))
        with pytest.raises(NonIntegralNormalization):
            geometry.normalized_area(quarter, 1)
        with pytest.raises(DomainError):
            geometry.normalized_area(THREEFOLD, 0)
