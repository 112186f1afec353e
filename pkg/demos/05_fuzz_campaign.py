"""A small differential campaign, then the same campaign against a broken engine."""
# %%
import numpy as np

from lpodlab.fuzz import GeneratorConfig, run_campaign
from lpodlab.report import emit_report
from lpodlab.semantics import AnswerSet, _interp_at, domain_of, minimal_mask, model_mask

report = run_campaign(GeneratorConfig(iterations=200, seed=42))
print(emit_report(report))

# %%
# Forgetting the no-T* condition on answer sets must be caught.
def broken_answer_sets(program, atoms=None, cap=None):
    domain = domain_of(program, atoms)
    mask = minimal_mask(model_mask(program, domain), len(domain))
    return [_interp_at(int(i), domain, cls=AnswerSet) for i in np.flatnonzero(mask)]


mutant = run_campaign(GeneratorConfig(iterations=50, seed=42), answer_sets=broken_answer_sets)
print(len(mutant.violations), "violations; first shrunk reproducer:")
for p in mutant.violations[0].shrunk:
    print("  ---")
    print("  " + (str(p) or "(empty)").replace("\n", "\n  "))
