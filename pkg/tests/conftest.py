import sys
from pathlib import Path

import pytest

from uzsyllable.lexicon import bundled_lexicon

DATA = Path(__file__).parent / "data"
sys.path.insert(0, str(Path(__file__).parent))

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when not in ("setup", "call"):
        return
    key = marker.args
    if report.failed or report.when == "call":
        previous = _acceptance.get(key, "PASS")
        _acceptance[key] = "FAIL" if report.failed or previous == "FAIL" else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), status in sorted(_acceptance.items()):
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def loanwords():
    return bundled_lexicon()


@pytest.fixture(scope="session")
def loanword_rows():
    rows = []
    for line in (DATA / "loanwords_gold.tsv").read_text(encoding="utf-8").splitlines():
        if line and not line.startswith("#"):
            rows.append(tuple(line.split("\t")))
    return rows


@pytest.fixture
def lexicon_file(tmp_path):
    def make(text):
        path = tmp_path / "lexicon.tsv"
        path.write_text(text, encoding="utf-8")
        return path
    return make
