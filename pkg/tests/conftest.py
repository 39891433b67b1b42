"""Shared pytest hooks: full-scale enumerations only run with `--slow`."""
import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--slow",
        action="store_true",
        default=False,
        help="Also run the full-box enumerations (minutes to hours).",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-box enumeration run")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
