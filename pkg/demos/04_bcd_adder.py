# %% [markdown]
# # Decimal addition with carry skip

# %%
import numpy as np

from ftrev import build_bcd_chain, build_bcd_digit
from ftrev.faults import coverage
from ftrev.metrics import compute, reversible_units
from ftrev.sim import check_parity, simulate_batch
from ftrev.synth import bcd_decode, bcd_inputs

digit = build_bcd_digit()
m = compute(digit)
print(m.to_text())
print("units", reversible_units(digit), "width", digit.width)
print("parity:", check_parity(digit, constants_fixed=True).preserving)
print("coverage:", coverage(digit).coverage)

# %%
chain = build_bcd_chain(4)
rng = np.random.default_rng(0)
a, b = rng.integers(0, 10_000, 5), rng.integers(0, 10_000, 5)
cin = np.zeros(5, dtype=int)
value, carry = bcd_decode(simulate_batch(chain, bcd_inputs(a, b, cin, 4))[0], 4)
for row in zip(a, b, value, carry):
    print("%4d + %4d = %4d carry %d" % row)
