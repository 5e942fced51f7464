# %% [markdown]
# # The exchange phase gate
#
# Two counter-propagating packets pass through each other.  Compared with
# evolving each one on its own, the joint state picks up a phase of pi:
# the flips are fermions and they swap places.

# %%
from fermigate import ChainSpec, GateRunSpec, SpinCouplings, run_gate

chain = ChainSpec(100)
spec = GateRunSpec.standard(chain, SpinCouplings(J=1.0, V=0.0))
rep = run_gate(spec)
print(f"phi_nl = {rep.phi_nl:.6f}  (pi = 3.141593)")
print(f"F_mag = {rep.f_mag:.6f}, F_swap = {rep.f_swap:.6f}, D = {rep.distortion:.2e}")
print(f"propagated with {rep.method}, {rep.matvecs} matrix-vector products")
for w in rep.warnings:
    print("note:", w)

# %% The phase does not depend on the packet width or chain length.
for N in (60, 100, 140):
    for frac in (1 / 20, 1 / 10):
        r = run_gate(GateRunSpec.standard(ChainSpec(N), SpinCouplings(1.0), sigma=frac * N))
        print(f"N = {N:3d}  sigma = {frac * N:5.1f}  phi_nl = {r.phi_nl:.6f}")

# %% Half-way there the packets overlap; stopping early gives no clean gate.
r = run_gate(GateRunSpec.standard(chain, SpinCouplings(1.0), tau=spec.tau / 2))
print(f"tau = T/2: F_mag = {r.f_mag:.4f}, F_swap = {r.f_swap:.4f}")
