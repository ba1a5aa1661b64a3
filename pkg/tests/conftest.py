import itertools
import random

import pytest

from symcycles import Tope, random_cycle

ACCEPTANCE_LINES = []


def leibniz_det(rows):
    """Determinant by the permutation expansion; independent of the elimination code."""
    n = len(rows)
    total = 0
    for p in itertools.permutations(range(n)):
        inversions = sum(p[i] > p[j] for i in range(n) for j in range(i + 1, n))
        prod = 1
        for i in range(n):
            prod *= rows[i][p[i]]
        total += -prod if inversions % 2 else prod
    return total


def subset_search(target, cycle):
    """All index subsets of the cycle whose vertex sum is the target, by plain enumeration."""
    n = 2 * cycle.t
    goal = target.signs
    hits = []
    for r in range(n + 1):
        for combo in itertools.combinations(range(n), r):
            s = tuple(sum(cycle[k].signs[e] for k in combo) for e in range(cycle.t))
            if s == goal:
                hits.append(combo)
    return hits


@pytest.fixture
def rng():
    return random.Random(20261014)


def random_pairs(t, count, rng):
    for _ in range(count):
        yield Tope(t, rng.getrandbits(t)), random_cycle(t, rng)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
