"""Fair division of indivisible chores with exact rational arithmetic.

Core model (instances, allocations, JSON codec), fairness predicates
(EQ, EF, EQX, EQ1, EF1), bounded-social-cost constructive algorithms,
an exhaustive optimal-fair oracle, two-agent approximation schemes,
and instance generators.
"""

from .core import (Allocation, Instance, Rational, ValidationReport,
                   agent_cost, check_partition, decode_allocation,
                   decode_instance, encode_allocation, encode_instance,
                   format_rational, normalize, parse_rational, rational,
                   social_cost, validate)
from .errors import (BudgetExceeded, ChoreFairError, InvalidPermutation,
                     NoFairAllocation, NormalizationError, NotNormalized,
                     ParameterError, ParseError, StructureError,
                     WrongAgentCount)
from .fairness import (Criterion, ImplicationReport, ViolationGraph,
                       build_violation_graph, implication_check, satisfies)
from .algorithms import (RoundRecord, RoundTrace, cyclic_shifts, eq1_bounded,
                         ef1_bounded, optimal_allocation,
                         position_bundle_bound, round_robin)
from .oracle import (DEFAULT_BUDGET, GapReport, cof_gap,
                     enumerate_allocations, opt_fair)
from .approx2 import (District, DistrictLPSolution, classify_items,
                      dual_transform, ef1_scheme, enumerate_districts,
                      eq1_scheme, goods_ef1, mirror, round_district,
                      social_welfare, solve_district, sw_ef1_goods)
from .generators import (GeneratedInstance, PartitionInput, gen_ef1_cof,
                         gen_ef1_hard, gen_ef1_mult_hard,
                         gen_ef1_two_agent_hard, gen_eq1_cof, gen_eq1_hard,
                         gen_eqx_cof, gen_eqx_hard, gen_random, pad_partition)

__all__ = [
    "Allocation", "Instance", "Rational", "ValidationReport",
    "agent_cost", "check_partition", "decode_allocation", "decode_instance",
    "encode_allocation", "encode_instance", "format_rational", "normalize",
    "parse_rational", "rational", "social_cost", "validate",
    "BudgetExceeded", "ChoreFairError", "InvalidPermutation",
    "NoFairAllocation", "NormalizationError", "NotNormalized",
    "ParameterError", "ParseError", "StructureError", "WrongAgentCount",
    "Criterion", "ImplicationReport", "ViolationGraph",
    "build_violation_graph", "implication_check", "satisfies",
    "RoundRecord", "RoundTrace", "cyclic_shifts", "eq1_bounded",
    "ef1_bounded", "optimal_allocation", "position_bundle_bound",
    "round_robin",
    "DEFAULT_BUDGET", "GapReport", "cof_gap", "enumerate_allocations",
    "opt_fair",
    "District", "DistrictLPSolution", "classify_items", "dual_transform",
    "ef1_scheme", "enumerate_districts", "eq1_scheme", "goods_ef1", "mirror",
    "round_district", "social_welfare", "solve_district", "sw_ef1_goods",
    "GeneratedInstance", "PartitionInput", "gen_ef1_cof", "gen_ef1_hard",
    "gen_ef1_mult_hard", "gen_ef1_two_agent_hard", "gen_eq1_cof",
    "gen_eq1_hard", "gen_eqx_cof", "gen_eqx_hard", "gen_random",
    "pad_partition",
]

__version__ = "0.1.0"
