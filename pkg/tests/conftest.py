import pytest

from crautomata import families, kernels
from crautomata.core import Dfa

CRITERIA = []


def record_criterion(number, ok, detail):
    CRITERIA.append((number, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(CRITERIA):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")


def paper(*states):
    """1-based state labels as a 0-based subset."""
    return frozenset(s - 1 for s in states)


@pytest.fixture
def e3():
    return families.e3()


@pytest.fixture
def e5():
    return families.e5()


@pytest.fixture
def e3_without_merge(e3):
    """E_3 with the letter a_[1,2] removed."""
    return Dfa(3, e3.letters[:3], e3.delta[:3], name="E_3 minus a_[1,2]")


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    previous = kernels.backend_name()
    kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(previous)
