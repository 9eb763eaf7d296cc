"""Linear feasibility systems ``{x >= 0 : C x >= b}`` and a phase-1 simplex.

The primal system looks for a scaled mass function making every
``u_i`` weakly and every ``d_j`` strictly expectation-positive; the dual
system is its Farkas alternative. Exactly one of the two is feasible.

The solver works over :class:`~fractions.Fraction` by default, so the
answer is exact. A float mode with an absolute tolerance is available
for large instances; its answers are approximate near the boundary.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import DimensionError, Option

FLOAT_TOL = 1e-9


class SolverError(RuntimeError):
    """Internal invariant of the simplex violated (a bug, not bad input)."""


class Status(enum.Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class Constraint:
    """``coeffs . x >= rhs``."""

    coeffs: tuple[Fraction, ...]
    rhs: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    @classmethod
    def at_most(cls, coeffs, rhs) -> "Constraint":
        """``coeffs . x <= rhs``, stored negated."""
        return cls(tuple(-Fraction(c) for c in coeffs), -Fraction(rhs))

    def lhs(self, x: Sequence) -> Fraction:
        return sum((c * xi for c, xi in zip(self.coeffs, x)), Fraction(0))

    def satisfied_by(self, x: Sequence, tol: float = 0) -> bool:
        return self.lhs(x) >= self.rhs - tol


@dataclass(frozen=True)
class FeasibilityProblem:
    """All variables are non-negative; every constraint reads ``>=``."""

    num_vars: int
    constraints: tuple[Constraint, ...]

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("a feasibility problem needs at least one variable")
        object.__setattr__(self, "constraints", tuple(self.constraints))
        for c in self.constraints:
            if len(c.coeffs) != self.num_vars:
                raise DimensionError(
                    f"constraint with {len(c.coeffs)} coefficients in a "
                    f"{self.num_vars}-variable problem")

    def is_solution(self, x: Sequence, tol: float = 0) -> bool:
        if len(x) != self.num_vars or any(xi < -tol for xi in x):
            return False
        return all(c.satisfied_by(x, tol) for c in self.constraints)


@dataclass(frozen=True)
class FeasibilityResult:
    status: Status
    solution: tuple | None = None

    @property
    def feasible(self) -> bool:
        return self.status is Status.FEASIBLE


def _dimension(u_list, d_list, n):
    lengths = {len(o) for o in list(u_list) + list(d_list)}
    if n is not None:
        lengths.add(n)
    if len(lengths) > 1:
        raise DimensionError(f"options of mixed lengths {sorted(lengths)}")
    if not lengths:
        raise ValueError("outcome count unknown: pass n when both lists are empty")
    return lengths.pop()


def _with_dummy(d_list: list[Option], n: int) -> list[Option]:
    # The constant-one option is expectation-positive under every mass
    # function, so it pins the scale without cutting anything away.
    return d_list if d_list else [Option.constant(1, n)]


def build_primal(u_list: Sequence[Option], d_list: Sequence[Option],
                 n: int | None = None) -> FeasibilityProblem:
    """System over ``lambda in R^n``: ``lambda.u_i >= 0`` and ``lambda.d_j >= 1``.

    With no ``d`` options, ``sum(lambda) >= 1`` stands in for them.
    """
    n = _dimension(u_list, d_list, n)
    rows = [Constraint(u.values, 0) for u in u_list]
    rows += [Constraint(d.values, 1) for d in _with_dummy(list(d_list), n)]
    return FeasibilityProblem(n, tuple(rows))


def build_dual(u_list: Sequence[Option], d_list: Sequence[Option],
               n: int | None = None) -> FeasibilityProblem:
    """Farkas alternative of :func:`build_primal` over ``R^(l+m)``.

    One ``<= 0`` row per outcome plus ``sum of the d-multipliers >= 1``.
    The same constant-one dummy is used when ``d_list`` is empty.
    """
    n = _dimension(u_list, d_list, n)
    cols = list(u_list) + _with_dummy(list(d_list), n)
    ell = len(u_list)
    rows = [Constraint.at_most(tuple(c[k] for c in cols), 0) for k in range(n)]
    rows.append(Constraint((0,) * ell + (1,) * (len(cols) - ell), 1))
    return FeasibilityProblem(len(cols), tuple(rows))


def _phase_one(problem: FeasibilityProblem, exact: bool, tol: float):
    num = Fraction if exact else float
    eps = 0 if exact else tol
    n = problem.num_vars
    m = len(problem.constraints)

    # columns: x (n), surplus (m), artificial (one per row that needs it), rhs
    needs_art = [c.rhs > 0 for c in problem.constraints]
    art_index = {}
    for i, flag in enumerate(needs_art):
        if flag:
            art_index[i] = n + m + len(art_index)
    width = n + m + len(art_index)

    tableau = []
    basis = []
    for i, con in enumerate(problem.constraints):
        row = [num(0)] * (width + 1)
        sign = 1 if needs_art[i] else -1
        for k, c in enumerate(con.coeffs):
            row[k] = num(sign * c)
        row[n + i] = num(-sign)
        row[width] = num(sign * con.rhs)
        if needs_art[i]:
            row[art_index[i]] = num(1)
            basis.append(art_index[i])
        else:
            basis.append(n + i)
        tableau.append(row)

    # reduced costs of the artificial-sum objective; last entry is -objective
    cost = [num(0)] * (width + 1)
    for i in art_index:
        for j in range(width + 1):
            cost[j] -= tableau[i][j]
    for j in art_index.values():
        cost[j] = num(0)

    pivots = 0
    while True:
        # Bland: lowest-index improving column, lowest-index basic on ratio ties
        entering = next((j for j in range(width) if cost[j] < -eps), None)
        if entering is None:
            break
        leaving = None
        best = None
        for i in range(m):
            a = tableau[i][entering]
            if a > eps:
                ratio = tableau[i][width] / a
                if (best is None or ratio < best
                        or (ratio == best and basis[i] < basis[leaving])):
                    best, leaving = ratio, i
        if leaving is None:
            raise SolverError("phase-1 objective unbounded below")
        prow = tableau[leaving]
        piv = prow[entering]
        prow = [v / piv for v in prow]
        tableau[leaving] = prow
        for i in range(m):
            if i != leaving:
                f = tableau[i][entering]
                if f:
                    r = tableau[i]
                    tableau[i] = [a - f * b for a, b in zip(r, prow)]
        f = cost[entering]
        cost = [a - f * b for a, b in zip(cost, prow)]
        basis[leaving] = entering
        pivots += 1

    objective = -cost[width]
    x = [num(0)] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = tableau[i][width]
    return objective, x, pivots


def solve(problem: FeasibilityProblem, exact: bool = True,
          tol: float = FLOAT_TOL) -> FeasibilityResult:
    """Decide feasibility of ``problem`` and return one solution when feasible.

    Phase 1 of the simplex method with Bland's rule, so it terminates on
    degenerate systems too. With ``exact=False`` the tableau uses floats
    and ``tol`` guards sign tests and the final residual check.
    """
    if not problem.constraints:
        zero = Fraction(0) if exact else 0.0
        return FeasibilityResult(Status.FEASIBLE, (zero,) * problem.num_vars)
    objective, x, _ = _phase_one(problem, exact, tol)
    if exact:
        if objective != 0:
            return FeasibilityResult(Status.INFEASIBLE)
        if not problem.is_solution(x):
            raise SolverError("phase-1 basis does not satisfy the constraints")
        return FeasibilityResult(Status.FEASIBLE, tuple(x))
    if objective > tol:
        return FeasibilityResult(Status.INFEASIBLE)
    x = [max(v, 0.0) for v in x]
    fx = [Fraction(v) for v in x]
    if not problem.is_solution(fx, Fraction(tol)):
        raise SolverError("float phase-1 solution violates the constraints")
    return FeasibilityResult(Status.FEASIBLE, tuple(x))


def primal_feasible(u_list, d_list, n: int | None = None, exact: bool = True) -> bool:
    return solve(build_primal(u_list, d_list, n), exact=exact).feasible


def dual_feasible(u_list, d_list, n: int | None = None, exact: bool = True) -> bool:
    return solve(build_dual(u_list, d_list, n), exact=exact).feasible
