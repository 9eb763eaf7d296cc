"""E-admissible extension of a finite assessment.

An option ``u`` is chosen from ``A`` when some mass function compatible
with the assessment gives it maximal expected utility. Compatibility is
a disjunction over picks of one difference ``v - w`` per rejected
``w`` (each must be strictly expectation-positive), so the check runs
one linear feasibility problem per pick until one succeeds.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .core import Assessment, MassFunction, Option, OptionSet
from .feasibility import build_primal, solve

DEFAULT_MAX_TUPLES = 10**6


class QueryError(ValueError):
    """The queried option is not a member of the queried set."""


class LargeProductWarning(UserWarning):
    pass


@dataclass(frozen=True)
class DifferenceProblem:
    d_sets: tuple[OptionSet, ...]
    u_diffs: tuple[Option, ...]

    @property
    def m(self) -> int:
        return len(self.d_sets)

    @property
    def ell(self) -> int:
        return len(self.u_diffs)

    def product_size(self) -> int:
        return math.prod(len(d) for d in self.d_sets)


@dataclass(frozen=True)
class AdmissibilityVerdict:
    admissible: bool
    witness: MassFunction | None = None
    witness_tuple: tuple[Option, ...] | None = None
    tuples_visited: int = 0

    def __bool__(self) -> bool:
        return self.admissible


def difference_sets(assessment: Assessment) -> list[OptionSet]:
    """``{v - w : v in V}`` for every pair ``(V, W)`` and every ``w in W``.

    Ordered by pair, then by ``w``; repeated sets appear once.
    """
    out: dict[OptionSet, None] = {}
    for keep, reject in assessment:
        for w in reject:
            out.setdefault(OptionSet(v - w for v in keep), None)
    return list(out)


def candidate_differences(u: Option, options: OptionSet) -> list[Option]:
    if u not in options:
        raise QueryError(f"{u!r} is not a member of the queried option set")
    return list(dict.fromkeys(u - a for a in options if a != u))


def _witness(solution) -> MassFunction:
    return MassFunction.normalise([Fraction(x) for x in solution])


def _search(problem: DifferenceProblem, n: int, exact: bool,
            max_tuples: int) -> AdmissibilityVerdict:
    size = problem.product_size()
    if size > max_tuples:
        warnings.warn(
            f"{size} difference tuples to enumerate (cap {max_tuples}); "
            "continuing lazily", LargeProductWarning, stacklevel=3)
    visited = 0
    for picks in itertools.product(*problem.d_sets):
        visited += 1
        result = solve(build_primal(problem.u_diffs, picks, n), exact=exact)
        if result.feasible:
            return AdmissibilityVerdict(True, _witness(result.solution), picks, visited)
    return AdmissibilityVerdict(False, tuples_visited=visited)


def _dimension(options: OptionSet, assessment: Assessment) -> int:
    if assessment.n is not None and assessment.n != options.n:
        raise ValueError(
            f"assessment over {assessment.n} outcomes, options over {options.n}")
    return options.n


def is_admissible(u: Option, options: OptionSet, assessment: Assessment, *,
                  exact: bool = True,
                  max_tuples: int = DEFAULT_MAX_TUPLES) -> AdmissibilityVerdict:
    """Decide whether ``u`` survives in the E-admissible extension on ``options``.

    Picks are tried lexicographically and the search stops at the first
    feasible one. A positive verdict carries the witnessing mass function
    and the pick that produced it.
    """
    n = _dimension(options, assessment)
    problem = DifferenceProblem(tuple(difference_sets(assessment)),
                                tuple(candidate_differences(u, options)))
    return _search(problem, n, exact, max_tuples)


def extension_verdicts(options: OptionSet, assessment: Assessment, *,
                       exact: bool = True,
                       max_tuples: int = DEFAULT_MAX_TUPLES
                       ) -> dict[Option, AdmissibilityVerdict]:
    """Per-option verdicts for every member of ``options``."""
    n = _dimension(options, assessment)
    d_sets = tuple(difference_sets(assessment))
    return {
        u: _search(DifferenceProblem(d_sets, tuple(candidate_differences(u, options))),
                   n, exact, max_tuples)
        for u in options
    }


def extension(options: OptionSet, assessment: Assessment, *,
              exact: bool = True,
              max_tuples: int = DEFAULT_MAX_TUPLES) -> frozenset[Option]:
    """Options of ``options`` not rejected under the assessment.

    Empty exactly when the assessment is inconsistent.
    """
    verdicts = extension_verdicts(options, assessment, exact=exact,
                                  max_tuples=max_tuples)
    return frozenset(u for u, v in verdicts.items() if v.admissible)


def _zero_query(assessment: Assessment, n: int | None):
    n = assessment.n if n is None else n
    if n is None:
        raise ValueError("outcome count unknown for an empty assessment; pass n")
    zero = Option.zero(n)
    return zero, OptionSet([zero])


def find_witness(assessment: Assessment, n: int | None = None, *,
                 exact: bool = True,
                 max_tuples: int = DEFAULT_MAX_TUPLES) -> MassFunction | None:
    """Some mass function compatible with the assessment, or ``None``."""
    zero, single = _zero_query(assessment, n)
    return is_admissible(zero, single, assessment, exact=exact,
                         max_tuples=max_tuples).witness


def is_consistent(assessment: Assessment, n: int | None = None, *,
                  exact: bool = True,
                  max_tuples: int = DEFAULT_MAX_TUPLES) -> bool:
    if not assessment.pairs:
        return True
    zero, single = _zero_query(assessment, n)
    return is_admissible(zero, single, assessment, exact=exact,
                         max_tuples=max_tuples).admissible
