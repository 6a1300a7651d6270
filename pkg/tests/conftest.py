import pytest

from crystalpoly import FinSuppVector, Weight, iota_a, iota_affine


@pytest.fixture
def aff():
    return iota_affine()


@pytest.fixture
def a2():
    return iota_a(2)


def vec(entries, lam):
    return FinSuppVector.from_dict(entries, Weight(tuple(lam)))


_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: one test per acceptance criterion")


def pytest_runtest_logreport(report):
    name = report.nodeid.split("::")[-1]
    if "test_acceptance.py" not in report.nodeid or not name.startswith("test_criterion_"):
        return
    if report.when == "call" or report.outcome != "passed":
        key = name[len("test_criterion_"):].split("[")[0]
        ok = report.outcome == "passed"
        _RESULTS[key] = _RESULTS.get(key, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_RESULTS):
        num, _, label = key.partition("_")
        terminalreporter.write_line(f"criterion {int(num):2d} {'PASS' if _RESULTS[key] else 'FAIL'}  {label.replace('_', ' ')}")
