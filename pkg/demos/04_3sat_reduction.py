"""Satisfiability of a 3-CNF as non-equivalence of two ordered programs."""
# %%
from pathlib import Path

import numpy as np

from lpodlab import parse_dimacs, serialize_program
from lpodlab.reductions import brute_force_sat, check_reduction, random_3cnf, reduce_3sat

programs = Path(__file__).parent / "programs"

# %%
phi = parse_dimacs((programs / "sat.cnf").read_text())
red = reduce_3sat(phi)
print(serialize_program(red.p2))

# %%
check = check_reduction(phi)
print("satisfiable:", check.satisfiable, "assignment:", check.assignment)
print("equivalent:", check.equivalent, "witness:", check.witness.format(sorted(red.p2.atoms)))

# %%
# An unsatisfiable formula gives strongly equivalent programs.
unsat = parse_dimacs((programs / "unsat.cnf").read_text())
print("unsat ->", check_reduction(unsat).equivalent)

# %%
rng = np.random.default_rng(0)
results = [check_reduction(random_3cnf(rng, 4, 12)) for _ in range(20)]
print(sum(r.ok for r in results), "of 20 random formulas agree;",
      sum(not r.satisfiable for r in results), "unsatisfiable")
