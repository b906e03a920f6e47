from pathlib import Path

import pytest

from termrank.ingest import ChangeTask, load_tasks
from termrank.preprocess import StopwordSet

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
LISTING1 = FIXTURES / "listing1"
MINI = FIXTURES / "mini"
GOLDEN = Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="session")
def stops() -> StopwordSet:
    return StopwordSet.default()


@pytest.fixture(scope="session")
def listing1_stops() -> StopwordSet:
    return StopwordSet.from_file(LISTING1 / "stopwords.txt")


@pytest.fixture(scope="session")
def listing1_task() -> ChangeTask:
    return load_tasks(LISTING1 / "tasks.json")[0]


_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    number, title = marker
    entry = _criteria.setdefault(number, {"title": title, "ok": True, "seen": False})
    if report.when == "call" or report.outcome == "failed":
        entry["seen"] = True
        entry["ok"] = entry["ok"] and report.outcome == "passed"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "PASS" if entry["ok"] and entry["seen"] else "FAIL"
        terminalreporter.write_line(f"[{status}] {number}. {entry['title']}")
