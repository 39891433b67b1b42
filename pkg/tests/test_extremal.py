"""latpoly/utils/extremal.py tests."""
# pylint: disable=R0201,W0613
from fractions import Fraction

import pytest

from latpoly.utils import extremal
from latpoly.utils._exceptions import DomainError, UnreachableArea
from latpoly.utils.extremal import COLLINEAR, FamilyId, Theorem
from latpoly.utils.geometry import Polygon, points
from latpoly.utils.lattice import lattice_stats

# Constants.
STRIP_MAX = Polygon.hull_of(
    points((0, "1/2"), (0, "-1/2"), ("1/2", -1), ("7/2", -1), (6, "-1/2"))
)


class TestBounds:

    """Closed-form bounds tests."""

    @pytest.mark.parametrize(
        "k, i, expec",
        [
            pytest.param(2, 1, 9, id="k=2"),
            pytest.param(3, 1, 11, id="k=3"),
            pytest.param(4, 2, 18, id="k=4"),
        ],
    )
    def test_b_max(self, k, i, expec):
        assert extremal.b_max(k, i) == expec

    @pytest.mark.parametrize(
        "k, i",
        [
            pytest.param(1, 1, id="lattice"),
            pytest.param(2, 0, id="no interior point"),
        ],
    )
    def test_b_max_domain(self, k, i):
        with pytest.raises(DomainError):
            extremal.b_max(k, i)

    def test_scott_classical_bound(self):
        assert extremal.scott_classical_bound(1) == 9
        assert extremal.scott_classical_bound(4) == 14

    @pytest.mark.parametrize(
        "k, i, b, hull_dim, expec",
        [
            pytest.param(2, 1, 9, 2, Fraction(9, 2), id="at b_max"),
            pytest.param(3, 1, 8, 2, Fraction(23, 6), id="2d"),
            pytest.param(3, 2, 0, COLLINEAR, Fraction(1, 2), id="b=0"),
            pytest.param(3, 2, 1, COLLINEAR, Fraction(13, 18), id="b=1"),
            pytest.param(3, 2, 2, COLLINEAR, Fraction(1), id="b=2"),
        ],
    )
    def test_min_area(self, k, i, b, hull_dim, expec):
        assert extremal.min_area(k, i, b, hull_dim) == expec

    @pytest.mark.parametrize(
        "k, i, b, hull_dim",
        [
            pytest.param(3, 1, 1, 2, id="b too small"),
            pytest.param(3, 1, 12, 2, id="b too large"),
            pytest.param(3, 1, 3, COLLINEAR, id="collinear b too large"),
            pytest.param(1, 1, 3, 2, id="lattice"),
        ],
    )
    def test_min_area_domain(self, k, i, b, hull_dim):
        with pytest.raises(DomainError):
            extremal.min_area(k, i, b, hull_dim)

    @pytest.mark.parametrize(
        "b, expec",
        [
            pytest.param(13, 200, id="b_max"),
            pytest.param(9, 190, id="middle"),
            pytest.param(1, 158, id="b=1"),
            pytest.param(0, 153, id="b=0"),
        ],
    )
    def test_max_area_normalized(self, b, expec):
        assert extremal.max_area_normalized(4, 1, b) == expec
        assert extremal.max_area(4, 1, b) == Fraction(expec, 32)

    def test_max_area_domain(self):
        with pytest.raises(DomainError):
            extremal.max_area(2, 1, 5)
        with pytest.raises(DomainError):
            extremal.max_area(3, 1, 12)
        assert extremal.is_conjectural(3) and not extremal.is_conjectural(4)

    @pytest.mark.parametrize(
        "i, b, expec",
        [
            pytest.param(1, 9, Fraction(9, 2), id="i=1 b_max"),
            pytest.param(1, 6, Fraction(33, 8), id="i=1 plateau"),
            pytest.param(2, 5, Fraction(21, 4), id="i=2"),
            pytest.param(2, 12, Fraction(27, 4), id="i=2 b_max"),
        ],
    )
    def test_half_integral_max_area(self, i, b, expec):
        assert extremal.half_integral_max_area(i, b) == expec

    def test_half_integral_max_area_domain(self):
        with pytest.raises(DomainError):
            extremal.half_integral_max_area(1, 10)
        with pytest.raises(DomainError):
            extremal.half_integral_max_area(0, 3)

    def test_strip_bound_formulas(self):
        assert extremal.strip_bound_formulas(2, 1) == 36
        assert extremal.strip_bound_formulas(4, 2) == 216
        assert extremal.strip_bound_formulas(2, 1, h=2) == 32
        with pytest.raises(DomainError):
            extremal.strip_bound_formulas(2, 1, h=1)


class TestFamilyId:

    """`FamilyId` class tests."""

    def test_str_round_trip(self):
        family = FamilyId(Theorem.AREA_MIN_2D, "2a", 3, 1, 3, 0)
        assert str(family) == "min/2a?k=3&i=1&b=3&x=0"
        assert FamilyId.from_string(str(family)) == family

    @pytest.mark.parametrize(
        "args",
        [
            pytest.param((Theorem.AREA_MAX, "2c", 3, 1, 5, None), id="b range"),
            pytest.param((Theorem.AREA_MAX, "zz", 3, 1, 5, None), id="unknown"),
            pytest.param((Theorem.AREA_MAX, "0a", 3, 1, 7, 1), id="extra offset"),
            pytest.param((Theorem.AREA_MIN_2D, "2a", 3, 1, 3, 9), id="bad offset"),
        ],
    )
    def test_invalid(self, args):
        with pytest.raises(DomainError):
            FamilyId(*args)


class TestConstructors:

    """Extremal family constructors tests."""

    @pytest.mark.parametrize(
        "k, i, expec",
        [
            pytest.param(2, 1, "i=1 b=9 k=2", id="k=2"),
            pytest.param(3, 1, "i=1 b=11 k=3", id="k=3"),
            pytest.param(5, 3, "i=3 b=27 k=5", id="k=5"),
        ],
    )
    def test_scott_maximizer(self, k, i, expec):
        assert str(lattice_stats(extremal.scott_maximizer(k, i))).startswith(expec)

    def test_scott_maximizer_domain(self):
        with pytest.raises(DomainError):
            extremal.scott_maximizer(1, 1)

    def test_area_minimizers(self):
        members = extremal.area_minimizers(3, 1, 3)
        assert len(members) == 7
        labels = sorted({family.label for family, _ in members})
        assert labels == ["0a", "1a", "2a"]
        for family, polygon in members:
            stats = lattice_stats(polygon)
            assert (stats.i, stats.b, stats.k, stats.hull_dim) == (1, 3, 3, 2)
            assert stats.area_k == extremal.min_area_normalized(3, 1, 3)
            assert str(family).startswith("min/")

    def test_area_minimizers_collinear(self):
        members = extremal.area_minimizers(2, 1, 2, hull_dim=COLLINEAR)
        assert [family.x for family, _ in members] == [0, 1, 2, 3, 4]
        for family, polygon in members:
            assert str(family).startswith("mincol/2c")
            assert lattice_stats(polygon).hull_dim < 2

    def test_global_minimum_flag(self):
        members = extremal.area_minimizers(3, 1, 2)
        flags = {family.label: family.global_minimum for family, _ in members}
        assert flags == {"1a": False}

    def test_area_maximizers(self):
        members = extremal.area_maximizers(4, 1, 9)
        assert len(members) == 4
        for family, polygon in members:
            assert not family.conjectural
            assert lattice_stats(polygon).area_k == 190

    def test_area_maximizers_conjectural(self):
        members = extremal.area_maximizers(3, 1, 11)
        assert [str(f) for f, _ in members] == ["max/2c?k=3&i=1&b=11"]
        assert all(family.conjectural for family, _ in members)

    def test_half_integral_maximizers(self):
        members = extremal.half_integral_maximizers(2, 5)
        assert members
        for family, polygon in members:
            assert family.theorem == Theorem.HALF_INTEGRAL_N2
            assert lattice_stats(polygon).area == Fraction(21, 4)


class TestStripEquality:

    """Strip equality case tests."""

    def test_equality_holds(self):
        check = extremal.strip_equality_check(STRIP_MAX)
        assert check.holds
        assert check.area_2 == check.bound == 42
        assert check.diagnosis == []

    def test_not_attained(self):
        polygon = Polygon.hull_of(points((0, "1/2"), (0, "-1/2"), (2, "-1/2")))
        check = extremal.strip_equality_check(polygon)
        assert not check.holds
        assert check.area_2 < check.bound

    @pytest.mark.parametrize(
        "polygon",
        [
            pytest.param(Polygon.hull_of(points((0, 0), (3, 0), (0, 3))), id="lattice"),
            pytest.param(
                Polygon.hull_of(points((0, "1/2"), (0, "-3/2"), (3, "-1/2"))),
                id="leaves strip",
            ),
        ],
    )
    def test_domain(self, polygon):
        with pytest.raises(DomainError):
            extremal.strip_equality_check(polygon)

    def test_bounds(self):
        assert extremal.strip_equality_area_bound(2, 5) == 42
        assert extremal.strip_boundary_bound(2) == 10


class TestIntermediatePolygon:

    """`intermediate_polygon` function tests."""

    @pytest.mark.parametrize("area_k", range(69, 92))
    def test_every_value_attained(self, area_k):
        polygon = extremal.intermediate_polygon(3, 1, 8, area_k)
        stats = lattice_stats(polygon)
        assert (stats.i, stats.b, stats.k, stats.area_k) == (1, 8, 3, area_k)

    @pytest.mark.parametrize(
        "args, expec_err",
        [
            pytest.param((3, 1, 8, 68), UnreachableArea, id="below"),
            pytest.param((3, 1, 8, 92), UnreachableArea, id="above"),
            pytest.param((2, 1, 5, 30), DomainError, id="k=2"),
            pytest.param((3, 1, 10, 90), DomainError, id="b too large"),
        ],
    )
    def test_domain(self, args, expec_err):
        with pytest.raises(expec_err):
            extremal.intermediate_polygon(*args)
