"""Single spin-flip dynamics on the XX chain.

A single excitation on the ferromagnetic vacuum is a free particle with
nearest-neighbour hopping ``-J``; its dynamics is diagonal in the plane-wave
basis (periodic ring) or the standing-wave basis (open chain).  Transforms
are applied as dense matrices, which is exact and cheap at desk-scale N.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .model import Boundary, ChainSpec, SpinCouplings, dispersion

__all__ = [
    "SingleExcitationState",
    "ModeBasis",
    "periodic_momenta",
    "open_momenta",
    "mode_basis",
    "fourier",
    "inverse_fourier",
    "evolve_single",
    "evolve_modes",
    "linear_energies",
    "linear_transport_reference",
    "group_velocity",
    "centroid",
    "energy_expectation",
]


@dataclass(frozen=True, eq=False)
class SingleExcitationState:
    """Amplitudes ``amps[j - 1]`` of one spin flip on site ``j`` of ``chain``."""

    amps: np.ndarray
    chain: ChainSpec

    def __post_init__(self):
        amps = np.array(self.amps, dtype=complex)
        if amps.shape != (self.chain.N,):
            raise ValueError(f"expected {self.chain.N} amplitudes, got shape {amps.shape}")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def normalized(self) -> "SingleExcitationState":
        return SingleExcitationState(self.amps / self.norm, self.chain)

    def overlap(self, other: "SingleExcitationState") -> complex:
        """``<self|other>``."""
        return complex(np.vdot(self.amps, other.amps))

    @classmethod
    def delta(cls, chain: ChainSpec, site: int) -> "SingleExcitationState":
        amps = np.zeros(chain.N, dtype=complex)
        amps[site - 1] = 1.0
        return cls(amps, chain)


@dataclass(frozen=True, eq=False)
class ModeBasis:
    """Single-particle eigenmodes of the XX chain.

    ``vectors[:, m]`` is mode ``m`` sampled on sites ``1..N``; ``energies``
    is filled in when a coupling ``J`` is supplied.
    """

    boundary: Boundary
    momenta: np.ndarray
    vectors: np.ndarray
    energies: np.ndarray | None = None


def periodic_momenta(N: int) -> np.ndarray:
    """The ``N`` ring momenta from ``-pi`` (inclusive) to ``pi`` in steps of ``2 pi / N``."""
    return 2.0 * np.pi * np.arange(-(N // 2), N - N // 2) / N


def open_momenta(N: int) -> np.ndarray:
    return np.pi * np.arange(1, N + 1) / (N + 1)


@lru_cache(maxsize=32)
def _mode_vectors(N: int, boundary: Boundary) -> np.ndarray:
    j = np.arange(1, N + 1)[:, None]
    if boundary is Boundary.PERIODIC:
        vecs = np.exp(1j * periodic_momenta(N)[None, :] * j) / np.sqrt(N)
    else:
        vecs = np.sqrt(2.0 / (N + 1)) * np.sin(open_momenta(N)[None, :] * j)
    vecs.setflags(write=False)
    return vecs


def mode_basis(chain: ChainSpec, J: float | None = None, boundary=None) -> ModeBasis:
    """Eigenmodes for ``chain`` (or ``boundary`` when given explicitly)."""
    boundary = Boundary(boundary if boundary is not None else chain.boundary)
    N = chain.N
    momenta = periodic_momenta(N) if boundary is Boundary.PERIODIC else open_momenta(N)
    energies = None if J is None else dispersion(momenta, J)
    return ModeBasis(boundary, momenta, _mode_vectors(N, boundary), energies)


def fourier(state: SingleExcitationState) -> np.ndarray:
    """Ring Fourier transform ``q(k) = N^-1/2 sum_j q(j) exp(-i k j)``.

    The output is ordered like :func:`periodic_momenta`.
    """
    return _mode_vectors(state.chain.N, Boundary.PERIODIC).conj().T @ state.amps


def inverse_fourier(qk, chain: ChainSpec) -> SingleExcitationState:
    """Inverse of :func:`fourier`: ``q(j) = N^-1/2 sum_k q(k) exp(i k j)``."""
    return SingleExcitationState(_mode_vectors(chain.N, Boundary.PERIODIC) @ np.asarray(qk), chain)


def evolve_modes(state: SingleExcitationState, basis: ModeBasis, energies, tau: float):
    """Propagate by ``tau`` with mode energies ``energies`` in ``basis``."""
    if tau < 0:
        raise ValueError(f"evolution time must be nonnegative, got {tau!r}")
    coeffs = basis.vectors.conj().T @ state.amps
    coeffs = coeffs * np.exp(-1j * tau * np.asarray(energies))
    return SingleExcitationState(basis.vectors @ coeffs, state.chain)


def evolve_single(
    state: SingleExcitationState,
    couplings: SpinCouplings,
    tau: float,
    boundary=None,
    shift: float = 0.0,
) -> SingleExcitationState:
    """Exact evolution ``exp(-i H tau)`` of one excitation.

    Parameters
    ----------
    state : SingleExcitationState
        Initial state; its chain fixes the boundary unless ``boundary`` is given.
    couplings : SpinCouplings
        Only ``J`` enters; a lone excitation never feels ``V``.
    tau : float
        Evolution time in seconds.
    shift : float
        Uniform energy offset per excitation (a pure linear phase).
    """
    basis = mode_basis(state.chain, couplings.J, boundary)
    return evolve_modes(state, basis, basis.energies + shift, tau)


def _carrier_sign(carrier) -> int:
    if carrier is None:
        raise ValueError("linear transport needs a declared carrier momentum of +pi/2 or -pi/2")
    for sign in (1, -1):
        if abs(carrier - sign * np.pi / 2) < 1e-12:
            return sign
    raise ValueError(f"carrier must be +pi/2 or -pi/2, got {carrier!r}")


def linear_energies(momenta, couplings: SpinCouplings, carrier) -> np.ndarray:
    """Dispersion linearised about ``carrier = +-pi/2``.

    Momenta are taken on the branch ``[carrier - pi, carrier + pi)`` so the
    linear law is continuous across the packet's support.
    """
    sign = _carrier_sign(carrier)
    k0 = sign * np.pi / 2
    k = (np.asarray(momenta) - (k0 - np.pi)) % (2 * np.pi) + (k0 - np.pi)
    return sign * couplings.velocity * (k - k0)


def linear_transport_reference(
    state: SingleExcitationState,
    couplings: SpinCouplings,
    tau: float,
    carrier=None,
    shift: float = 0.0,
) -> SingleExcitationState:
    """Distortion-free transport on the ring.

    A packet with carrier ``+pi/2`` (``-pi/2``) is translated right (left)
    by ``2 J tau`` sites and multiplied by ``exp(i tau J pi)``.  The linear
    law is evaluated at exactly ``+-pi/2`` even when the ring grid misses it.
    """
    basis = mode_basis(state.chain, None, Boundary.PERIODIC)
    energies = linear_energies(basis.momenta, couplings, carrier)
    return evolve_modes(state, basis, energies + shift, tau)


def group_velocity(couplings: SpinCouplings, k):
    """``d eps / dk = 2 J sin(k)`` in sites per second."""
    return 2.0 * couplings.J * np.sin(k)


def centroid(state: SingleExcitationState) -> float:
    """Packet position ``sum_j j |amps(j)|^2`` (assumes a normalized state)."""
    return float(np.sum(state.chain.sites * np.abs(state.amps) ** 2))


def energy_expectation(state: SingleExcitationState, couplings: SpinCouplings, boundary=None) -> float:
    basis = mode_basis(state.chain, couplings.J, boundary)
    coeffs = basis.vectors.conj().T @ state.amps
    return float(np.sum(basis.energies * np.abs(coeffs) ** 2))
