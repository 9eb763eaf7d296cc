import random
from fractions import Fraction as F
from pathlib import Path

import pytest

from eadm import Assessment, MassFunction, Option, OptionSet

EXAMPLE_MODEL = Path(__file__).resolve().parents[1] / "src" / "eadm" / "data" / "three_outcome_example.json"


def opt(*xs):
    return Option(xs)


W1, W2, W3 = opt(1, -3, 1), opt(1, 1, -2), opt(0, 0, 0)
V1, V2, V3 = opt(-1, 2, -2), opt(-2, 2, -1), opt(0, 3, -11)
V4, V5, V6 = opt(0, -7, -1), opt(2, 5, -9), opt(0, -2, -1)
P1 = MassFunction((F(12, 20), F(3, 20), F(5, 20)))
P2 = MassFunction((F(3, 5), F(1, 5), F(1, 5)))


@pytest.fixture
def example():
    """Three-outcome worked example: query set and two-pair assessment."""
    A = OptionSet([W1, W2, W3])
    assessment = Assessment((
        (OptionSet([V1]), OptionSet([V2, V3, V4])),
        (OptionSet([V5, V6]), OptionSet([V1])),
    ))
    return A, assessment


def random_option(rng, n, lo=-5, hi=5):
    return Option(tuple(rng.randint(lo, hi) for _ in range(n)))


def random_option_set(rng, n, max_size):
    return OptionSet(random_option(rng, n) for _ in range(rng.randint(1, max_size)))


def random_pair(rng, n, max_side=2):
    while True:
        keep = random_option_set(rng, n, max_side)
        reject = random_option_set(rng, n, max_side)
        if keep.isdisjoint(reject):
            return keep, reject


def random_assessment(rng, n, max_pairs=3, max_side=2, min_pairs=0):
    k = rng.randint(min_pairs, max_pairs)
    return Assessment(tuple(random_pair(rng, n, max_side) for _ in range(k)), n=n)


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid and rep.when == "call":
                name = nodeid.split("::test_criterion_")[1]
                lines.append((int(name.split("_")[0]), outcome, name))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, outcome, name in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  criterion {name}")
