import os

import pytest

RESULTS: list[str] = []


def pytest_collection_modifyitems(config, items):
    if os.environ.get("CYCLOCODES_LONG") == "1":
        return
    skip = pytest.mark.skip(reason="set CYCLOCODES_LONG=1 to run")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
