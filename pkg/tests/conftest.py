from itertools import combinations

import pytest

ACCEPTANCE_LINES = []


def naive_counts(n, ell, cycle=False, exempt=0):
    """Dominating-set counts by size, straight from the definitions with sets."""
    def dist(i, j):
        d = abs(i - j)
        return min(d, n - d) if cycle else d

    must = range(exempt, n)
    counts = [0] * (n + 1)
    for k in range(n + 1):
        for D in combinations(range(n), k):
            if all(any(dist(v, u) <= ell for u in D) for v in must):
                counts[k] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


@pytest.fixture
def naive():
    return naive_counts


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
