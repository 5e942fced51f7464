"""Stored spin-wave envelopes and the storage kinematics that fix their carrier.

Packets are Gaussians ``exp(-(j - j0)^2 / (2 sigma^2)) exp(i k0 j)``: ``sigma``
is the width of the amplitude envelope, so ``|amps|^2`` has rms width
``sigma / sqrt(2)`` and its Fourier transform is again Gaussian with
amplitude width ``1 / sigma``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .freefermion import SingleExcitationState
from .model import ChainSpec

__all__ = [
    "PacketSpec",
    "StorageGeometry",
    "NoStorageSolution",
    "TAIL_MASS_LIMIT",
    "make_packet",
    "gate_packets",
    "tail_mass",
    "fold_momentum",
    "storage_momentum",
    "solve_storage_angle",
]

#: Packet weight allowed near the chain edges and the chain middle.
TAIL_MASS_LIMIT = 1e-6


class NoStorageSolution(ValueError):
    """No control-beam angle produces the requested carrier momentum."""


@dataclass(frozen=True)
class PacketSpec:
    """Gaussian packet centred at ``center`` (sites) with amplitude width
    ``sigma`` (sites) and carrier momentum ``carrier`` (rad/site)."""

    center: float
    sigma: float
    carrier: float
    chain: ChainSpec

    def __post_init__(self):
        if not 1 <= self.center <= self.chain.N:
            raise ValueError(f"packet center {self.center!r} outside 1..{self.chain.N}")
        if not self.sigma >= 1:
            raise ValueError(f"packet width must be >= 1 site, got {self.sigma!r}")
        if not abs(self.carrier) <= np.pi:
            raise ValueError(f"carrier must lie in [-pi, pi], got {self.carrier!r}")

    @cached_property
    def tail_mass(self) -> float:
        return tail_mass(make_packet(self))

    @property
    def valid(self) -> bool:
        """False when the packet leaks onto the edges or the chain middle."""
        return self.tail_mass <= TAIL_MASS_LIMIT


def make_packet(spec: PacketSpec) -> SingleExcitationState:
    j = spec.chain.sites
    amps = np.exp(-((j - spec.center) ** 2) / (2.0 * spec.sigma**2)) * np.exp(1j * spec.carrier * j)
    return SingleExcitationState(amps / np.linalg.norm(amps), spec.chain)


def tail_mass(state: SingleExcitationState) -> float:
    """Weight on sites within 2 of either edge or of the chain middle ``N/2``."""
    N = state.chain.N
    j = state.chain.sites
    near = (j - 1 <= 2) | (N - j <= 2) | (np.abs(j - N / 2) <= 2)
    return float(np.sum(np.abs(state.amps[near]) ** 2))


def gate_packets(chain: ChainSpec, sigma: float | None = None) -> tuple[PacketSpec, PacketSpec]:
    """The gate layout: right-mover at N/4 with carrier pi/2 and left-mover
    at 3N/4 with carrier -pi/2; ``sigma`` defaults to N/10."""
    sigma = chain.N / 10 if sigma is None else sigma
    R = PacketSpec(chain.N / 4, sigma, np.pi / 2, chain)
    L = PacketSpec(3 * chain.N / 4, sigma, -np.pi / 2, chain)
    return R, L


@dataclass(frozen=True)
class StorageGeometry:
    """Beam geometry during storage.

    ``theta_c`` is the angle between the control beam and the ``+`` chain
    axis; ``direction`` is +1 for a photon travelling along ``+axis`` and -1
    along ``-axis``.  The left-moving packet is the mirror image of the right
    one: direction -1 with ``theta_c -> pi - theta_c``.
    """

    k_i: float
    k_c: float
    theta_c: float
    direction: int = 1

    def __post_init__(self):
        if not (self.k_i > 0 and self.k_c > 0):
            raise ValueError("wavenumbers must be positive")
        if not 0 <= self.theta_c <= np.pi:
            raise ValueError(f"theta_c must lie in [0, pi], got {self.theta_c!r}")
        if self.direction not in (1, -1):
            raise ValueError(f"direction must be +1 or -1, got {self.direction!r}")


def fold_momentum(k):
    """Map ``k`` (rad/site) into the zone ``(-pi, pi]``."""
    return np.pi - np.mod(np.pi - np.asarray(k, dtype=float), 2 * np.pi)


def storage_momentum(geom: StorageGeometry, a: float) -> float:
    """Carrier (rad/site) imprinted by absorbing ``k_i`` and emitting ``k_c``.

    ``k_spin = direction * |k_i| - |k_c| cos(theta_c)`` projected on the chain
    axis, times ``a`` and folded into the first zone.
    """
    k_spin = geom.direction * geom.k_i - geom.k_c * np.cos(geom.theta_c)
    return float(fold_momentum(k_spin * a))


def solve_storage_angle(target: float, k_i: float, k_c: float, a: float, direction: int = 1) -> float:
    """Control angle ``theta_c`` giving carrier ``target`` (rad/site).

    Zone-equivalent targets ``target + 2 pi n`` are tried in the order
    n = 0, -1, 1.

    Raises
    ------
    NoStorageSolution
        If no angle in ``[0, pi]`` produces the carrier.
    """
    for n in (0, -1, 1):
        cos_theta = (direction * k_i - (target + 2 * np.pi * n) / a) / k_c
        if abs(cos_theta) <= 1 + 1e-12:
            return float(np.arccos(np.clip(cos_theta, -1.0, 1.0)))
    raise NoStorageSolution(
        f"carrier {target!r} rad/site unreachable with |k_i|={k_i!r}, |k_c|={k_c!r}, a={a!r}"
    )
