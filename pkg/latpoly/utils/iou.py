"""latpoly file IO utility."""
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from ._exceptions import (
    InvalidPolygon,
    ReadPermissionError,
    UnparsablePolygonFile,
    WritePermissionError,
)
from .geometry import Point, Polygon

# Constants.
JSON_SUFFIX = ".json"
YAML_SUFFIXES = (".yaml", ".yml")
LF = "\n"

# Types
FileContent = str
PolygonData = List[List[str]]


@dataclass(frozen=True)
class PolygonFile:

    """A parsed polygon file: `{"vertices": [["p/q", "p/q"], ...], "label": ...}`."""

    polygon: Polygon
    label: Optional[str] = None


def safe_read(path: Path, permissions: tuple = (os.R_OK,)) -> FileContent:
    """Read a text file after checking its permissions.

    :param path: file path.
    :returns: the file content.
    :raises ReadPermissionError: when `os.R_OK` in permissions
        and the file does not have read permission.
    """
    if not path.is_file():
        raise UnparsablePolygonFile(path, FileNotFoundError("no such file"))
    for permission in permissions:
        if not os.access(path, permission):
            if permission is os.R_OK:
                raise ReadPermissionError(13, "Permission denied [READ]", path)
            elif permission is os.W_OK:
                raise WritePermissionError(13, "Permission denied [WRITE]", path)
    with open(path, encoding="utf-8") as stream:
        return stream.read()


def safe_write(path: Path, content: FileContent) -> None:
    """Write `content`, creating parent directories as needed.

    :param path: file path.
    :param content: text to write.
    :raises WritePermissionError: when the file or its directory is not writable.
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    target = path if path.exists() else path.parent
    if not os.access(target, os.W_OK):
        raise WritePermissionError(13, "Permission denied [WRITE]", path)
    with open(path, mode="w", encoding="utf-8", newline=LF) as destination:
        destination.write(content)


def load_mapping(path: Path) -> Dict[str, Any]:
    """Load a JSON or YAML mapping.

    :raises UnparsablePolygonFile: on syntax errors or a non-mapping document.
    """
    content = safe_read(path)
    try:
        if path.suffix == JSON_SUFFIX:
            data = json.loads(content)
        else:
            data = yaml.load(content, Loader=yaml.SafeLoader)
    except (ValueError, yaml.YAMLError) as err:
        raise UnparsablePolygonFile(path, err) from err
    if not isinstance(data, dict):
        raise UnparsablePolygonFile(path, ValueError("expected a mapping"))
    return data


def polygon_from_data(data: Any) -> Polygon:
    """Build a polygon from a list of coordinate pairs.

    Coordinates are integers or strings "p" / "p/q"; floats are refused.

    :raises ValueError: on malformed coordinates.
    :raises InvalidPolygon: when the vertices are not in strictly convex position.
    """
    if not isinstance(data, list) or len(data) < 3:
        raise ValueError("'vertices' must list at least three coordinate pairs")
    vertices = []
    for pair in data:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ValueError(f"{pair!r} is not a coordinate pair")
        vertices.append(Point(*pair))
    return Polygon.from_cycle(vertices)


def polygon_to_data(polygon: Polygon) -> PolygonData:
    """Vertices as exact strings, lowest terms."""
    return [[str(v.x), str(v.y)] for v in polygon.vertices]


def parse_polygon(data: Dict[str, Any], path: Path) -> PolygonFile:
    try:
        polygon = polygon_from_data(data.get("vertices"))
    except (ValueError, TypeError, InvalidPolygon) as err:
        raise UnparsablePolygonFile(path, err) from err
    label = data.get("label")
    return PolygonFile(polygon, str(label) if label is not None else None)


def read_polygon(path: Path) -> PolygonFile:
    """Read a polygon file (JSON, or YAML for any other suffix).

    :raises UnparsablePolygonFile: if the file cannot be parsed into a polygon.
    :raises ReadPermissionError: if the file is not readable.
    """
    return parse_polygon(load_mapping(path), path)


def dumps(data: Dict[str, Any], path: Path) -> FileContent:
    if path.suffix in YAML_SUFFIXES:
        return yaml.safe_dump(data, sort_keys=False)
    return json.dumps(data, indent=2) + LF


def write_polygon(path: Path, polygon: Polygon, label: Optional[str] = None) -> None:
    """Write a polygon file; the format follows the suffix (JSON by default)."""
    data: Dict[str, Any] = {"vertices": polygon_to_data(polygon)}
    if label is not None:
        data["label"] = label
    safe_write(path, dumps(data, path))


def write_json(path: Path, data: Any) -> None:
    safe_write(path, json.dumps(data, indent=2) + LF)
