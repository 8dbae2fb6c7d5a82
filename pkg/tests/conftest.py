import pytest


def pytest_addoption(parser):
    parser.addoption("--heavy", action="store_true", default=False,
                     help="run the long-running acceptance checks")
    parser.addoption("--longhaul", action="store_true", default=False,
                     help="run the optional hours-scale checks")


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "heavy: long-running check, enabled by --heavy")
    config.addinivalue_line(
        "markers", "longhaul: optional hours-scale check, enabled by --longhaul")


def pytest_collection_modifyitems(config, items):
    if not config.getoption("--heavy"):
        skip_heavy = pytest.mark.skip(reason="long-running; pass --heavy")
        for item in items:
            if "heavy" in item.keywords:
                item.add_marker(skip_heavy)
    if not config.getoption("--longhaul"):
        skip_long = pytest.mark.skip(reason="optional hours-scale run; pass --longhaul")
        for item in items:
            if "longhaul" in item.keywords:
                item.add_marker(skip_long)
