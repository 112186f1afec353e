"""Models, answer sets and most-preferred answer sets of the car-buying program."""
# %%
from pathlib import Path

from lpodlab import parse_program
from lpodlab.semantics import answer_sets, enumerate_models, gl_stable_models, most_preferred

here = Path(__file__).parent
program = parse_program((here / "programs" / "mercedes.lpod").read_text())
print(program)

# %%
models = enumerate_models(program)
print(f"{len(models)} four-valued models over {len(program.atoms)} atoms")

# %%
# Answer sets are the models that are minimal in the information order and
# assign T* to nothing.
for s in answer_sets(program):
    print("answer set:", s.format(program.atoms))

# %%
# Among those, the preferred ones leave the fewest preferences unmet (F*).
for s in most_preferred(program):
    print("preferred: ", s.format(program.atoms), "unmet:", sorted(s.fstar_set))

# %%
# On a normal program the answer sets are the classical stable models.
normal = parse_program("a <- not b. b <- not a.")
print([s.format(["a", "b"]) for s in answer_sets(normal)])
print([sorted(s) for s in gl_stable_models(normal)])
