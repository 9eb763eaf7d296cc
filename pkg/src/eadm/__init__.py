"""E-admissible decision-making from a finite assessment of rejected options."""

from .core import (Assessment, DimensionError, MassFunction, Option, OptionSet,
                   OutcomeSpace, choice_by_mass, credal_member, expectation)
from .engine import (AdmissibilityVerdict, DifferenceProblem, QueryError,
                     candidate_differences, difference_sets, extension,
                     extension_verdicts, find_witness, is_admissible, is_consistent)
from .feasibility import (FeasibilityProblem, FeasibilityResult, Status, build_dual,
                          build_primal, dual_feasible, primal_feasible, solve)
from .model import Model, ModelError, dump_model, load_model, parse_model

__all__ = [
    "Assessment", "DimensionError", "MassFunction", "Option", "OptionSet",
    "OutcomeSpace", "choice_by_mass", "credal_member", "expectation",
    "AdmissibilityVerdict", "DifferenceProblem", "QueryError",
    "candidate_differences", "difference_sets", "extension", "extension_verdicts",
    "find_witness", "is_admissible", "is_consistent",
    "FeasibilityProblem", "FeasibilityResult", "Status", "build_dual",
    "build_primal", "dual_feasible", "primal_feasible", "solve",
    "Model", "ModelError", "dump_model", "load_model", "parse_model",
]
