# %% [markdown]
# # Spin waves on the XX chain
#
# A single spin flip hops with amplitude J and has the cosine band
# eps(k) = -2 J cos k.  At k = +-pi/2 the band is straight, so a packet
# stored there moves at v = 2J with almost no spreading.

# %%
import numpy as np

from fermigate import ChainSpec, SpinCouplings, centroid, evolve_single, linear_transport_reference
from fermigate.wavepacket import PacketSpec, gate_packets, make_packet

chain = ChainSpec(100)
c = SpinCouplings(J=1.0)
R_spec, _ = gate_packets(chain)
R = make_packet(R_spec)
T = c.exchange_time(chain.N)
print(f"velocity {c.velocity} sites per unit time, exchange time T = {T}")

# %% Follow the centroid: it should advance by v * tau.
for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
    tau = frac * T
    x = centroid(evolve_single(R, c, tau))
    print(f"tau = {tau:6.2f}  centroid {x:7.3f}  expected {R_spec.center + c.velocity * tau:7.3f}")

# %% Compare with ideal linear transport.
# The leftover infidelity is the price of the band curvature away from pi/2.
R_T = evolve_single(R, c, T)
ideal = linear_transport_reference(R, c, T, carrier=np.pi / 2)
print("distortion infidelity D =", 1 - abs(ideal.overlap(R_T)) ** 2)

# %% Narrow packets carry more momentum spread and feel the curvature;
# wide ones get clipped by the chain ends.  sigma = N/10 sits near the optimum.
for sigma in (4, 6, 10, 14):
    spec = PacketSpec(R_spec.center, sigma, np.pi / 2, chain)
    psi = make_packet(spec)
    out = evolve_single(psi, c, T)
    ref = linear_transport_reference(psi, c, T, carrier=np.pi / 2)
    print(f"sigma = {sigma:2d}  D = {1 - abs(ref.overlap(out)) ** 2:.2e}")
