from pathlib import Path

import pytest

import themegraph as tg

DATA = Path(__file__).parent / "data"

_ACCEPTANCE_OUTCOMES: list[tuple[str, str]] = []


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def mouse_keyboard_taxonomy() -> tg.Taxonomy:
    return tg.load_taxonomy_files(
        DATA / "mouse_keyboard_edges.tsv", DATA / "mouse_keyboard_lexicon.tsv"
    )


@pytest.fixture(scope="session")
def mouse_keyboard_doc() -> str:
    return (DATA / "mouse_keyboard_doc.txt").read_text(encoding="utf-8")


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        outcome = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
        _ACCEPTANCE_OUTCOMES.append((name, outcome))
    elif report.when == "setup" and (report.failed or report.skipped):
        _ACCEPTANCE_OUTCOMES.append((name, "FAIL" if report.failed else "SKIP"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE_OUTCOMES:
        terminalreporter.write_line(f"{outcome}  {name}")
