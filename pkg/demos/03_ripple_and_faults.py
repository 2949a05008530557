# %% [markdown]
# # Ripple adders and single bit-flip faults

# %%
import numpy as np

from ftrev import build_ripple
from ftrev.circuit import single_gate
from ftrev.faults import coverage
from ftrev.gates import GateKind
from ftrev.metrics import compute
from ftrev.sim import simulate

for n in (1, 2, 4, 8):
    m = compute(build_ripple(n))
    print(f"N={n}: gates {m.gate_count}, garbage {m.garbage}, "
          f"constants {m.constants}, depth {m.depth}, T={m.total}")

# %%
c = build_ripple(4)
a, b = 11, 6
named = {f"a{i}": (a >> i) & 1 for i in range(4)}
named |= {f"b{i}": (b >> i) & 1 for i in range(4)}
named["cin"] = 1
out = simulate(c, named).named_outputs
print(sum(out[f"s{i}"] << i for i in range(4)) + (out["cout"] << 4))

# %% [markdown]
# Every (site, input) pair is tried. Parity-preserving circuits catch
# them all; a lone Peres gate does not.

# %%
print(coverage(c).coverage)
pg = coverage(single_gate(GateKind.PG))
print(pg.coverage, pg.undetected[:3])
