"""Walk through the four truth values and the connectives over them."""
# %%
import itertools

from lpodlab import TruthValue
from lpodlab.logic import eval_and, eval_not, eval_or, eval_ordered

values = list(TruthValue)
print("truth order:", " < ".join(str(v) for v in values))

# %%
# The information order is partial: F is below everything, T* is below T,
# and F* stands apart from both true values.
for v1, v2 in itertools.product(values, repeat=2):
    if v1.precedes(v2):
        print(f"{v1} precedes {v2}")

# %%
# Negation collapses the four values back to two.
for v in values:
    print(f"not {v} = {eval_not(v)}")

# %%
# Ordered disjunction skips a left operand of F*, and otherwise keeps it.
print("   x " + " ".join(f"{v!s:>3}" for v in values))
for v1 in values:
    print(f"{v1!s:>3} " + " ".join(f"{eval_ordered(v1, v2)!s:>3}" for v2 in values))

# %%
# Conjunction and disjunction are min and max; all three are associative.
assert all(eval_and(a, b) == min(a, b) and eval_or(a, b) == max(a, b) for a, b in itertools.product(values, repeat=2))
for op in (eval_and, eval_or, eval_ordered):
    assert all(op(op(a, b), c) == op(a, op(b, c)) for a, b, c in itertools.product(values, repeat=3))
print("min/max laws and associativity hold on all 64 triples")
