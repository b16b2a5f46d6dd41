from functools import lru_cache

import pytest

from normalmono import instances
from normalmono.census import all_monoids
from normalmono.monoid import cyclic_group, enumerate_submonoids


@lru_cache(maxsize=None)
def population(max_order):
    """(monoid, submonoid) pairs for every monoid of order <= max_order up to isomorphism."""
    return tuple((A, M) for A in all_monoids(max_order) for M in enumerate_submonoids(A))


@lru_cache(maxsize=None)
def monoids(max_order):
    return tuple(all_monoids(max_order))


@pytest.fixture
def example_a():
    return instances.example_a()


@pytest.fixture
def zero_square():
    return instances.zero_square()


@pytest.fixture
def trivial():
    return instances.trivial()


@pytest.fixture
def z2():
    return cyclic_group(2)


@pytest.fixture
def z4():
    return cyclic_group(4)


@pytest.fixture
def s3():
    return instances.s3()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, f"rep_{rep.when}", rep)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(test_acceptance.TITLES):
        if number not in test_acceptance.RESULTS:
            terminalreporter.write_line(f"criterion {number:>2}: NOT RUN  {test_acceptance.TITLES[number]}")
            continue
        ok, elapsed, limit = test_acceptance.RESULTS[number]
        terminalreporter.write_line(
            f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {elapsed:7.3f}s (limit {limit:g}s)  "
            f"{test_acceptance.TITLES[number]}")
