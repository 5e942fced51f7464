"""Microscopic Hubbard parameters, chain geometry and superexchange couplings.

All energies are angular frequencies (rad/s) with hbar = 1; times are seconds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

__all__ = [
    "Boundary",
    "ChainSpec",
    "HubbardParams",
    "SpinCouplings",
    "WEAK_TUNNELING_THRESHOLD",
    "derive_couplings",
    "dispersion",
]

#: max(t)/min(U) above which the superexchange picture is flagged (diagnostic only).
WEAK_TUNNELING_THRESHOLD = 0.2


class Boundary(str, Enum):
    OPEN = "open"
    PERIODIC = "periodic"


@dataclass(frozen=True)
class ChainSpec:
    """A one-dimensional chain of ``N`` sites labelled ``1..N``.

    Parameters
    ----------
    N : int
        Number of sites, at least 4.
    a : float
        Lattice spacing in meters.
    boundary : Boundary
        ``open`` for a physical chain with edges, ``periodic`` for ring
        diagnostics that ignore edges.
    """

    N: int
    a: float = 5e-7
    boundary: Boundary = Boundary.OPEN

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 4:
            raise ValueError(f"chain needs an integer N >= 4, got {self.N!r}")
        if not self.a > 0:
            raise ValueError(f"lattice spacing must be positive, got {self.a!r}")
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "boundary", Boundary(self.boundary))

    @property
    def sites(self) -> np.ndarray:
        return np.arange(1, self.N + 1)

    def with_boundary(self, boundary) -> "ChainSpec":
        return ChainSpec(self.N, self.a, Boundary(boundary))


@dataclass(frozen=True)
class HubbardParams:
    """Two-species Bose-Hubbard parameters (rad/s)."""

    t_g: float
    t_s: float
    U_gg: float
    U_ss: float
    U_sg: float
    tunneling_ratio: float = field(init=False)
    weak_tunneling_warning: bool = field(init=False)

    def __post_init__(self):
        for name in ("U_gg", "U_ss", "U_sg"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)!r}")
        for name in ("t_g", "t_s"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative, got {getattr(self, name)!r}")
        ratio = max(self.t_g, self.t_s) / min(self.U_gg, self.U_ss, self.U_sg)
        object.__setattr__(self, "tunneling_ratio", ratio)
        object.__setattr__(self, "weak_tunneling_warning", ratio > WEAK_TUNNELING_THRESHOLD)


@dataclass(frozen=True)
class SpinCouplings:
    """Exchange ``J`` and Ising ``V`` couplings of the XXZ chain (rad/s).

    May be built directly for phenomenological runs or from
    :func:`derive_couplings`.
    """

    J: float
    V: float = 0.0

    @property
    def velocity(self) -> float:
        """Peak group velocity 2J in sites per second."""
        return 2.0 * self.J

    def exchange_time(self, N: int) -> float:
        """Time N/(2v) for two counter-propagating packets to swap places."""
        if self.J <= 0:
            raise ValueError("exchange time needs J > 0")
        return N / (2.0 * self.velocity)


def derive_couplings(p: HubbardParams) -> SpinCouplings:
    """Superexchange couplings from the Hubbard parameters.

    ``J = 2 t_g t_s / U_sg`` and
    ``V = 2 (t_g^2 + t_s^2) / U_sg - 4 t_g^2 / U_gg - 4 t_s^2 / U_ss``.
    """
    J = 2.0 * p.t_g * p.t_s / p.U_sg
    V = 2.0 * (p.t_g**2 + p.t_s**2) / p.U_sg - 4.0 * p.t_g**2 / p.U_gg - 4.0 * p.t_s**2 / p.U_ss
    return SpinCouplings(J=J, V=V)


def dispersion(k, J):
    """Free-fermion band energy ``-2 J cos(k)``; ``k`` in rad/site."""
    return -2.0 * J * np.cos(k)
