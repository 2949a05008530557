# %% [markdown]
# # The gate library
#
# Seven reversible gates. Four of them keep the parity of their inputs,
# and that is what makes a single flipped bit visible at the outputs.

# %%
from ftrev import GateKind, check_gate, cost, truth_table
from ftrev.gates import spec

for kind in GateKind:
    res = check_gate(kind)
    print(f"{kind.name:6} arity {kind.arity}  reversible={res.reversible}  "
          f"parity={res.parity_preserving}  cost {cost(kind)}")

# %% [markdown]
# The IG gate in full: P=A, Q=A^B, R=AB^C, S=A(not B)^D.

# %%
for row in truth_table(GateKind.IG):
    print("".join(map(str, row.input)), "->", "".join(map(str, row.output)))

# %% [markdown]
# The transfer functions also take numpy bit arrays, so a whole truth table is one call.

# %%
import numpy as np

x = (np.arange(16)[None, :] >> np.arange(3, -1, -1)[:, None]) & 1
out = spec(GateKind.IG)(*x.astype(np.uint8))
print(np.array(out))

# %%
print("FG counterexample:", check_gate(GateKind.FG).counterexample)
