"""latpoly/utils/iou.py tests."""
# pylint: disable=R0201,W0613
import json
from pathlib import Path

import pytest
import yaml
from oschmod import set_mode

from latpoly import ISWIN
from latpoly.utils import iou
from latpoly.utils._exceptions import (
    ReadPermissionError,
    UnparsablePolygonFile,
    WritePermissionError,
)
from latpoly.utils.geometry import Point, Polygon, points

from . import ISROOT, POLYGONS_DIR
from .utils import sysu

# Constants.
MOCK = "latpoly.utils.iou.%s"
NO_ACCESS = pytest.mark.skipif(
    ISWIN or ISROOT, reason="os.access doesn't restrict Windows or root."
)
THREEFOLD = Polygon.hull_of(points((0, 0), (3, 0), (0, 3)))


class TestIOU:

    """`iou.py` functions test case."""

    @pytest.mark.parametrize(
        "content, expec_err, chmod",
        [
            pytest.param('{"vertices": []}', sysu.Pass, 0o0644, id="best case"),
            pytest.param(
                "{}", ReadPermissionError, 0o000, id="no read permission", marks=NO_ACCESS
            ),
        ],
    )
    def test_safe_read(self, content, expec_err, chmod):
        with pytest.raises(expec_err):
            with sysu.reopenable_temp_file(content) as tmp_path:
                set_mode(str(tmp_path), chmod)
                assert iou.safe_read(tmp_path) == content
            raise sysu.Pass()

    def test_safe_read_missing(self):
        with pytest.raises(UnparsablePolygonFile):
            iou.safe_read(Path("does/not/exist.json"))

    @pytest.mark.parametrize(
        "expec_err, chmod",
        [
            pytest.param(sysu.Pass, 0o0644, id="best case"),
            pytest.param(
                WritePermissionError, 0o444, id="no write permission", marks=NO_ACCESS
            ),
        ],
    )
    def test_safe_write(self, expec_err, chmod):
        with pytest.raises(expec_err):
            with sysu.reopenable_temp_file("") as tmp_path:
                set_mode(str(tmp_path), chmod)
                iou.safe_write(tmp_path, "content\n")
                with open(tmp_path, "rb") as tmp:
                    assert tmp.read() == b"content\n"
            raise sysu.Pass()

    def test_safe_write_creates_parents(self, tmp_path):
        target = tmp_path.joinpath("a", "b", "polygon.json")
        iou.safe_write(target, "{}\n")
        assert target.read_text() == "{}\n"


class TestPolygonFiles:

    """Polygon file reading and writing tests."""

    @pytest.mark.parametrize(
        "name, expec_first, expec_label",
        [
            pytest.param(
                "threefold.json",
                Point(0, 0),
                "threefold standard triangle",
                id="json",
            ),
            pytest.param(
                "scott_3_1.yaml", Point(0, -1), "scott/2c?k=3&i=1&b=11", id="yaml"
            ),
            pytest.param("strip_max_2_5.json", Point(0, "-1/2"), None, id="no label"),
        ],
    )
    def test_read_polygon(self, name, expec_first, expec_label):
        parsed = iou.read_polygon(POLYGONS_DIR.joinpath(name))
        assert parsed.polygon.vertices[0] == expec_first
        assert parsed.label == expec_label

    @pytest.mark.parametrize(
        "name",
        [
            pytest.param("bad_fraction.json", id="zero denominator"),
            pytest.param("not_convex.json", id="not convex"),
        ],
    )
    def test_read_polygon_unparsable(self, name):
        with pytest.raises(UnparsablePolygonFile):
            iou.read_polygon(POLYGONS_DIR.joinpath(name))

    @pytest.mark.parametrize(
        "content, suffix",
        [
            pytest.param("[1, 2, 3]", ".json", id="not a mapping"),
            pytest.param("{not json", ".json", id="bad json"),
            pytest.param("a: [b", ".yaml", id="bad yaml"),
            pytest.param('{"vertices": [[0.5, 0], [1, 0], [0, 1]]}', ".json", id="float"),
            pytest.param('{"vertices": [[0, 0], [1, 0]]}', ".json", id="two vertices"),
            pytest.param('{"vertices": [[0, 0, 0], [1, 0], [0, 1]]}', ".json", id="triple"),
        ],
    )
    def test_unparsable_content(self, content, suffix):
        with sysu.reopenable_temp_file(content, suffix=suffix) as tmp_path:
            with pytest.raises(UnparsablePolygonFile):
                iou.read_polygon(tmp_path)

    def test_clockwise_input_accepted(self):
        content = sysu.polygon_json((0, 0), (0, 3), (3, 0))
        with sysu.reopenable_temp_file(content) as tmp_path:
            assert iou.read_polygon(tmp_path).polygon == THREEFOLD

    @pytest.mark.parametrize(
        "suffix, loads",
        [
            pytest.param(".json", json.loads, id="json"),
            pytest.param(".yaml", yaml.safe_load, id="yaml"),
        ],
    )
    def test_write_polygon(self, tmp_path, suffix, loads):
        target = tmp_path.joinpath("polygon" + suffix)
        iou.write_polygon(target, THREEFOLD.dilate("1/2"), "half")
        data = loads(target.read_text())
        assert data == {
            "vertices": [["0", "0"], ["3/2", "0"], ["0", "3/2"]],
            "label": "half",
        }
        assert iou.read_polygon(target).polygon == THREEFOLD.dilate("1/2")

    def test_write_json(self, tmp_path):
        target = tmp_path.joinpath("report.json")
        iou.write_json(target, {"passed": True})
        assert target.read_text() == '{\n  "passed": true\n}\n'
