import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lpodlab.logic import F, FSTAR, T, TSTAR, Interpretation, Rule, is_model
from lpodlab.parser import CnfFormula
from lpodlab.reductions import (
    ATOM_A, ATOM_B, assignment_to_witness, brute_force_sat, check_reduction, random_3cnf,
    reduce_3sat, verify_reduction, witness_to_assignment,
)

UNSAT_1 = CnfFormula(1, ((1, 1, 1), (-1, -1, -1)))


@st.composite
def formulas(draw, max_vars=5, max_clauses=6):
    n = draw(st.integers(1, max_vars))
    lit = st.integers(1, n).flatmap(lambda v: st.sampled_from((v, -v)))
    clauses = draw(st.lists(st.tuples(lit, lit, lit), max_size=max_clauses))
    return CnfFormula(n, tuple(clauses))


def test_reduction_shape():
    red = reduce_3sat(CnfFormula(3, ((1, -2, 3), (-1, -1, 2))))
    assert red.p1.rules[0] == Rule(ATOM_A, ("v1", "v3"), ("v2",))
    assert red.p1.rules[1] == Rule(ATOM_A, ("v2",), ("v1", "v1"))
    assert Rule((ATOM_A, ATOM_B)) in red.p1
    assert red.p2.rules[-1] == Rule(ATOM_A)
    assert red.var_map == {1: "v1", 2: "v2", 3: "v3"}


def test_unsatisfiable_gives_equivalent_programs():
    assert brute_force_sat(UNSAT_1) is None
    check = check_reduction(UNSAT_1)
    assert check.equivalent and not check.satisfiable and check.ok


def test_single_clause_round_trip():
    phi = CnfFormula(3, ((1, -2, 3),))
    check = check_reduction(phi)
    assert check.satisfiable and not check.equivalent
    assert check.forward_ok and check.backward_ok
    assert verify_reduction(phi)


def test_pigeonhole_style_unsat():
    # every sign pattern over three variables, one clause each
    clauses = tuple(
        tuple(v if (mask >> (v - 1)) & 1 else -v for v in (1, 2, 3)) for mask in range(8)
    )
    phi = CnfFormula(3, clauses)
    assert brute_force_sat(phi) is None
    assert check_reduction(phi).equivalent


def test_brute_force_order_and_cap():
    phi = CnfFormula(2, ((1, 2, 2),))
    assert brute_force_sat(phi) == {1: False, 2: True}
    with pytest.raises(ValueError):
        brute_force_sat(CnfFormula(30, ()))


def test_random_six_variable_instances():
    rng = np.random.default_rng(7)
    for _ in range(20):
        phi = random_3cnf(rng, 6, 8)
        assignment = brute_force_sat(phi)
        if assignment is not None:
            assert all(any(assignment[abs(l)] == (l > 0) for l in c) for c in phi.clauses)
        assert verify_reduction(phi)


def test_backward_map_is_total():
    phi = CnfFormula(4, ((1, 2, 3),))
    red = reduce_3sat(phi)
    interp = Interpretation({"v1": F, "v2": FSTAR, "v3": TSTAR, "v4": T})
    assert witness_to_assignment(phi, red, interp) == {1: True, 2: True, 3: False, 4: False}


@settings(max_examples=60, deadline=None)
@given(formulas())
def test_reduction_properties(phi):
    red = reduce_3sat(phi)
    assert set(red.p1.rules) < set(red.p2.rules)
    assert len(red.p2) == len(red.p1) + 1
    assert len(red.p2) <= len(phi.clauses) + 2
    assignment = brute_force_sat(phi)
    if assignment is not None:
        w = assignment_to_witness(phi, red, assignment)
        assert is_model(red.p1, w) and not is_model(red.p2, w)
        assert phi.evaluate(witness_to_assignment(phi, red, w))
    assert check_reduction(phi).ok
