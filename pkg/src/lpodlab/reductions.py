"""3SAT reduced to non-equivalence of two LPODs, with a brute-force SAT oracle.

For a 3-CNF formula with clauses ``c_i``, let ``Q`` contain one rule
``sat_a <- L1~, L2~, L3~`` per clause (a positive literal stays an atom, a
negative one becomes ``not atom``). Then ``P1 = Q ∪ {sat_a x sat_b.}`` and
``P2 = P1 ∪ {sat_a.}`` are strongly equivalent iff the formula is
unsatisfiable.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .equivalence import FIRST_ONLY, strong_eq
from .logic import FSTAR, T, F, Interpretation, Program, Rule, is_model
from .parser import CnfFormula

ATOM_A = "sat_a"
ATOM_B = "sat_b"
SAT_CAP = 20


def var_atom(i: int) -> str:
    return f"v{i}"


@dataclass(frozen=True)
class ReductionOutput:
    p1: Program
    p2: Program
    a: str
    b: str
    var_map: dict  # CNF variable index -> atom name


def reduce_3sat(phi: CnfFormula) -> ReductionOutput:
    var_map = {i: var_atom(i) for i in range(1, phi.num_vars + 1)}
    q = []
    for clause in phi.clauses:
        if len(clause) != 3:
            raise ValueError(f"clause {clause} does not have exactly 3 literals")
        pos = tuple(var_map[l] for l in clause if l > 0)
        neg = tuple(var_map[-l] for l in clause if l < 0)
        q.append(Rule(ATOM_A, pos, neg))
    p1 = Program(q + [Rule((ATOM_A, ATOM_B))])
    p2 = Program(p1.rules + (Rule(ATOM_A),))
    return ReductionOutput(p1, p2, ATOM_A, ATOM_B, var_map)


def brute_force_sat(phi: CnfFormula, cap: int = SAT_CAP) -> Optional[dict[int, bool]]:
    """First satisfying assignment in binary counting order (False before True)."""
    if phi.num_vars > cap:
        raise ValueError(f"{phi.num_vars} variables exceeds brute-force cap {cap}")
    for bits in itertools.product((False, True), repeat=phi.num_vars):
        assignment = dict(enumerate(bits, 1))
        if phi.evaluate(assignment):
            return assignment
    return None


def occurring_vars(phi: CnfFormula) -> list[int]:
    return sorted({abs(l) for c in phi.clauses for l in c})


def assignment_to_witness(phi: CnfFormula, red: ReductionOutput, assignment: dict[int, bool]) -> Interpretation:
    """Satisfying assignment -> model of P1 that is not a model of P2."""
    values = [(red.a, FSTAR), (red.b, T)]
    values += [(red.var_map[i], F if assignment[i] else T) for i in occurring_vars(phi)]
    return Interpretation(values)


def witness_to_assignment(phi: CnfFormula, red: ReductionOutput, interp: Interpretation) -> dict[int, bool]:
    """Any interpretation -> two-valued assignment: true iff the atom is at most F*."""
    return {i: interp.value(red.var_map[i]) <= FSTAR for i in range(1, phi.num_vars + 1)}


@dataclass(frozen=True)
class ReductionCheck:
    satisfiable: bool
    assignment: Optional[dict]
    equivalent: bool
    witness: Optional[Interpretation]
    forward_ok: Optional[bool]
    backward_ok: Optional[bool]

    @property
    def agree(self) -> bool:
        return self.satisfiable != self.equivalent

    @property
    def ok(self) -> bool:
        return self.agree and self.forward_ok is not False and self.backward_ok is not False


def check_reduction(phi: CnfFormula, cap: int | None = None) -> ReductionCheck:
    """Run both sides of the reduction and the witness maps in each direction."""
    red = reduce_3sat(phi)
    assignment = brute_force_sat(phi)
    verdict = strong_eq(red.p1, red.p2, cap=cap, with_context=False)

    forward_ok = None
    if assignment is not None:
        forward = assignment_to_witness(phi, red, assignment)
        back = witness_to_assignment(phi, red, forward)
        forward_ok = (
            is_model(red.p1, forward)
            and not is_model(red.p2, forward)
            and phi.evaluate(back)
        )

    backward_ok = None
    if not verdict.equivalent:
        # P1 ⊂ P2, so any disagreement is a model of P1 alone with sat_a = F*
        w = verdict.witness
        backward_ok = (
            verdict.separated == FIRST_ONLY
            and w.value(red.a) == FSTAR
            and phi.evaluate(witness_to_assignment(phi, red, w))
        )
    return ReductionCheck(
        assignment is not None, assignment, verdict.equivalent, verdict.witness, forward_ok, backward_ok
    )


def verify_reduction(phi: CnfFormula, cap: int | None = None) -> bool:
    return check_reduction(phi, cap).ok


def random_3cnf(rng, num_vars: int, num_clauses: int) -> CnfFormula:
    """Uniform random 3-CNF; ``rng`` is a ``numpy.random.Generator``."""
    clauses = []
    for _ in range(num_clauses):
        vs = rng.integers(1, num_vars + 1, size=3)
        signs = rng.choice((-1, 1), size=3)
        clauses.append(tuple(int(v * s) for v, s in zip(vs, signs)))
    return CnfFormula(num_vars, tuple(clauses))
