"""Four-valued semantics, answer sets and strong equivalence for LPODs."""
from .equivalence import (
    EquivalenceVerdict,
    build_witness_context,
    logically_equivalent,
    normal_strong_eq,
    strong_eq,
)
from .logic import F, FSTAR, T, TSTAR, Interpretation, Program, Rule, TruthValue, eval_rule, is_model
from .parser import CnfFormula, parse_dimacs, parse_program, serialize_program
from .reductions import brute_force_sat, reduce_3sat, verify_reduction
from .semantics import (
    AnswerSet,
    EnumerationCapError,
    answer_sets,
    enumerate_models,
    gl_stable_models,
    most_preferred,
    three_valued_models,
)

__all__ = [
    "AnswerSet", "CnfFormula", "EnumerationCapError", "EquivalenceVerdict", "F", "FSTAR",
    "Interpretation", "Program", "Rule", "T", "TSTAR", "TruthValue", "answer_sets",
    "brute_force_sat", "build_witness_context", "enumerate_models", "eval_rule",
    "gl_stable_models", "is_model", "logically_equivalent", "most_preferred",
    "normal_strong_eq", "parse_dimacs", "parse_program", "reduce_3sat",
    "serialize_program", "strong_eq", "three_valued_models", "verify_reduction",
]
