# %% [markdown]
# # Error budget for a cold-atom implementation
#
# Order-of-magnitude estimates for 87Rb in a Mott insulator: superexchange
# corrections (t/U)^4, storage error 1/(eta N) and spin decoherence during
# the exchange time.  Every scaling carries coefficient 1.

# %%
import math
from dataclasses import replace

from fermigate import ExperimentParams, error_budget

TWO_PI = 2 * math.pi
params = ExperimentParams(
    eta=0.01, N=1000, Gamma=TWO_PI * 5.75e6, gamma0=1.0, T_p=100e-9,
    U=TWO_PI * 4e3, tU_ratio_sq=0.01,
)
b = error_budget(params)
print(f"p1 = {b.p1:.1e}, p2 = {b.p2:.1e}, p3 = {b.p3:.2f}")
print(f"exchange time T = {b.T * 1e3:.0f} ms, control Rabi frequency = 2 pi x {b.Omega / TWO_PI / 1e6:.1f} MHz")

# %% Longer chains store better but decohere longer.
for N in (300, 1000, 3000):
    bN = error_budget(replace(params, N=N))
    print(f"N = {N:5d}  p2 = {bN.p2:.3f}  p3 = {bN.p3:.2f}  total ~ {bN.p1 + bN.p2 + bN.p3:.2f}")
