# %% [markdown]
# # A full adder from two IG gates

# %%
from ftrev import build_ftfa
from ftrev.metrics import compute, full_adder_table, min_garbage_lower_bound
from ftrev.netlist import serialize
from ftrev.sim import check_parity, format_table

fa = build_ftfa()
print(serialize(fa))
print(format_table(fa))

# %%
print(compute(fa).to_text())
print("parity preserving:", check_parity(fa).preserving)

# %% [markdown]
# Three garbage outputs is the floor once parity must be kept;
# without that constraint two would do.

# %%
f = full_adder_table()
print(min_garbage_lower_bound(f, parity_constrained=True),
      min_garbage_lower_bound(f, parity_constrained=False))
