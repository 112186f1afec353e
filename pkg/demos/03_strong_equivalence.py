"""Deciding strong equivalence and building a context that tells programs apart."""
# %%
from pathlib import Path

from lpodlab import parse_program, serialize_program, strong_eq
from lpodlab.equivalence import normal_strong_eq, three_valued_equivalent
from lpodlab.semantics import most_preferred

programs = Path(__file__).parent / "programs"
load = lambda name: parse_program((programs / name).read_text())

# %%
# Adding a fact that an ordered rule already prefers changes nothing.
print(strong_eq(load("triple_a.lpod"), load("triple_b.lpod")).equivalent)

# %%
# Swapping the order of two alternatives does change behaviour.
p1, p2 = load("swapped_a.lpod"), load("swapped_b.lpod")
verdict = strong_eq(p1, p2)
atoms = sorted(set((p1 | p2).atoms))
print("witness:", verdict.witness.format(atoms), verdict.separated)
print(f"context ({verdict.context_case}):")
print(serialize_program(verdict.context))

# %%
# The context is checked by recomputing preferred answer sets of both unions.
for name, p in (("first", p1), ("second", p2)):
    union = p | verdict.context
    print(name, [s.format(sorted(union.atoms)) for s in most_preferred(union)])

# %%
# Normal programs have their own three-valued test and stable-model context.
v = normal_strong_eq(load("normal_a.lpod"), load("normal_b.lpod"))
print("normal:", v.equivalent, v.witness.format(["a", "b"]), serialize_program(v.context).strip())

# %%
# The four-valued test is stricter: F* in a body is not the same as F.
empty, guarded = parse_program(""), parse_program("c <- a, not a.")
print("three-valued:", three_valued_equivalent(empty, guarded).equivalent)
print("four-valued: ", strong_eq(empty, guarded).equivalent)
