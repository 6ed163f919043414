import itertools

import pytest

from subsetsums import GroupSpec


def brute_counts(spec, k):
    """Naive k-subset listing over residue tuples; shares no code with the package."""
    elems = list(itertools.product(*(range(m) for m in spec.moduli)))
    out = {e: 0 for e in elems}
    for sub in itertools.combinations(elems, k):
        s = tuple(sum(e[i] for e in sub) % m for i, m in enumerate(spec.moduli))
        out[s] += 1
    return [out[e] for e in elems]


@pytest.fixture
def brute():
    return brute_counts


SMALL_SPECS = [
    GroupSpec(m)
    for m in [(1,), (2,), (3,), (4,), (5,), (6,), (8,), (2, 2), (2, 3), (2, 4), (3, 3), (2, 2, 2), (1, 4), (4, 1, 2)]
]


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criterion")
    config._acceptance_results = []


def pytest_runtest_makereport(item, call):
    if call.when != "call" or item.get_closest_marker("acceptance") is None:
        return
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    label = doc if "[" not in item.name else f"{doc} {item.name[item.name.index('['):]}"
    item.config._acceptance_results.append(("PASS" if call.excinfo is None else "FAIL", label))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "_acceptance_results", [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for status, label in results:
        terminalreporter.write_line(f"{status}  {label}")
