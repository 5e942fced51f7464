# %% [markdown]
# # Choosing the control-beam angle
#
# The stored spin wave carries the momentum difference between the absorbed
# probe and the emitted control photon.  With both wavelengths equal to
# twice the lattice spacing, a control beam at 60 degrees puts the carrier
# at pi/2, the straight part of the band.

# %%
import math

from fermigate import StorageGeometry, solve_storage_angle, storage_momentum

a = 5e-7
k = math.pi / a
for deg in (0, 30, 60, 90, 120):
    kc = storage_momentum(StorageGeometry(k, k, math.radians(deg)), a)
    print(f"theta_c = {deg:3d} deg  carrier = {kc / math.pi:+.4f} pi")

# %% The left-moving packet uses the mirrored geometry.
theta_R = solve_storage_angle(math.pi / 2, k, k, a)
theta_L = solve_storage_angle(-math.pi / 2, k, k, a, direction=-1)
print(f"right mover: {math.degrees(theta_R):.2f} deg, left mover: {math.degrees(theta_L):.2f} deg")
