"""Brute-force checker on a grid of the probability simplex.

Evaluates choice under each grid mass function directly, with no
linear programming, so it can cross-check the engine. Grid points
``c / N`` are scored as integer dot products ``c . u`` on options scaled
to integers, which keeps every comparison exact.
"""

from __future__ import annotations

import functools
import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .core import Assessment, MassFunction, Option, OptionSet, credal_member, choice_by_mass

DEFAULT_RESOLUTION = 200


@dataclass(frozen=True)
class SimplexGrid:
    n: int
    resolution: int = DEFAULT_RESOLUTION

    def __post_init__(self):
        if self.n < 1 or self.resolution < 1:
            raise ValueError("grid needs n >= 1 and resolution >= 1")

    def __len__(self) -> int:
        return math.comb(self.resolution + self.n - 1, self.n - 1)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ``parts``-tuples of non-negative integers summing to ``total``."""
    # stars and bars: choose bar positions among total + parts - 1 slots
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        counts = []
        for b in bars:
            counts.append(b - prev - 1)
            prev = b
        counts.append(total + parts - 2 - prev)
        yield tuple(counts)


def grid_points(grid: SimplexGrid) -> Iterator[MassFunction]:
    N = grid.resolution
    for counts in compositions(N, grid.n):
        yield MassFunction(tuple(Fraction(c, N) for c in counts))


@functools.lru_cache(maxsize=16)
def _grid_counts(n: int, N: int) -> np.ndarray:
    arr = np.array(list(compositions(N, n)), dtype=np.int64).reshape(-1, n)
    arr.setflags(write=False)
    return arr


def _integer_matrix(options: Sequence[Option]) -> np.ndarray:
    # one positive common scale preserves every (strict) comparison
    lcm = 1
    for o in options:
        for v in o:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    rows = [[int(v * lcm) for v in o] for o in options]
    return rows


def _scores(counts: np.ndarray, options: Sequence[Option], N: int) -> np.ndarray:
    rows = _integer_matrix(options)
    bound = max((abs(x) for r in rows for x in r), default=0) * N * counts.shape[1]
    if bound < 2**62:
        return counts @ np.array(rows, dtype=np.int64).T
    return counts.astype(object) @ np.array(rows, dtype=object).T


def sampled_extension(options: OptionSet, assessment: Assessment,
                      grid: SimplexGrid) -> frozenset[Option]:
    """Union of ``choice_by_mass(p, options)`` over compatible grid points."""
    counts = _grid_counts(grid.n, grid.resolution)
    universe = list(dict.fromkeys(
        list(options) + [o for pair in assessment for s in pair for o in s]))
    if any(len(o) != grid.n for o in universe):
        raise ValueError("grid and options disagree on the outcome count")
    col = {o: i for i, o in enumerate(universe)}
    S = _scores(counts, universe, grid.resolution)

    ok = np.ones(len(counts), dtype=bool)
    for keep, reject in assessment:
        best_kept = S[:, [col[v] for v in keep]].max(axis=1)
        for w in reject:
            ok &= best_kept > S[:, col[w]]
    if not ok.any():
        return frozenset()
    A = S[ok][:, [col[u] for u in options]]
    chosen = (A == A.max(axis=1, keepdims=True)).any(axis=0)
    return frozenset(u for u, flag in zip(options, chosen) if flag)


def sampled_extension_slow(options: OptionSet, assessment: Assessment,
                           points) -> frozenset[Option]:
    """Reference version over an explicit stream of mass functions."""
    chosen: set[Option] = set()
    for p in points:
        if credal_member(p, assessment):
            chosen.update(choice_by_mass(p, options))
    return frozenset(chosen)


def random_points(n: int, count: int, seed=None) -> Iterator[MassFunction]:
    """Uniform draws from the simplex via normalised exponentials.

    Each draw is converted to an exact mass function, so downstream
    comparisons stay exact even though the sampling itself is not.
    """
    rng = random.Random(seed)
    for _ in range(count):
        ws = [Fraction(rng.expovariate(1.0)) for _ in range(n)]
        yield MassFunction.normalise(ws)
