import pytest
from hypothesis import HealthCheck, settings

from sringlab.ideals import generated_ideal, mult_closure
from sringlab.ring import make_zn
from sringlab.spec import build_ring

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def Z(n):
    return make_zn(n)


def ms(R, *gens):
    return mult_closure(R, gens)


def ideal(R, *gens):
    return generated_ideal(R, gens)


def ring(spec):
    return build_ring(spec)


# a spread of small rings with different shapes, used by several modules
SMALL_RINGS = [
    "Z2", "Z4", "Z5", "Z6", "Z8", "Z9", "Z12",
    "Z2xZ2", "Z2xZ4", "Z3xZ3", "Z2xZ2xZ2",
    "Z2(+)self", "Z3(+)Z3", "Z4(+)Z2", "Z8/(2)", "Z4(+)self/(2)",
]  # fmt: skip


@pytest.fixture(params=SMALL_RINGS)
def small_ring(request):
    return build_ring(request.param)


# one PASS/FAIL line per acceptance criterion at the end of the run
_acceptance: dict[str, tuple[bool, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        name = report.nodeid.rsplit("::", 1)[1]
        _acceptance[name] = (report.passed, _acceptance.get(name, (True, ""))[1])


def pytest_collection_modifyitems(items):
    for item in items:
        if "test_acceptance.py::test_criterion" in item.nodeid:
            _acceptance.setdefault(item.name, (False, (item.function.__doc__ or "").strip()))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, doc) in _acceptance.items():
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {doc}")
