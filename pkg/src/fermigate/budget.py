"""Order-of-magnitude error budget and control-field estimate for the gate.

Every ``~`` scaling is evaluated with coefficient 1; the numbers are
estimates, not predictions with meaningful prefactors.  Rates are in rad/s,
times in seconds.  Velocity and exchange time assume the symmetric point
``t_g = t_s = t``, ``U_gg = U_ss = 2 U_sg = U`` where ``J = 4 t^2 / U``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .model import ChainSpec

__all__ = [
    "RB87_D1_LINEWIDTH",
    "ExperimentParams",
    "BudgetReport",
    "error_budget",
    "control_rabi",
]

#: 87Rb D1 natural linewidth, 2 pi x 5.746 MHz (D. A. Steck, "Rubidium 87 D Line Data").
RB87_D1_LINEWIDTH = 2 * math.pi * 5.746e6


@dataclass(frozen=True)
class ExperimentParams:
    eta: float
    N: int
    Gamma: float
    gamma0: float
    T_p: float
    U: float
    tU_ratio_sq: float

    def __post_init__(self):
        for name in ("eta", "N", "Gamma", "gamma0", "T_p", "U", "tU_ratio_sq"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)!r}")

    @property
    def eta_flag(self) -> bool:
        """True when the coupling ``eta`` exceeds 1 (unphysical for a single atom)."""
        return self.eta > 1

    @property
    def optical_depth(self) -> float:
        return self.eta * self.N


@dataclass(frozen=True)
class BudgetReport:
    p1: float
    p2: float
    p3: float
    v: float
    T: float
    bandwidth: float
    Omega: float
    order_of_magnitude: bool = True
    eta_flag: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def control_rabi(params: ExperimentParams) -> float:
    """Peak control Rabi frequency ``sqrt(eta N Gamma / T_p)`` (rad/s)."""
    return math.sqrt(params.optical_depth * params.Gamma / params.T_p)


def error_budget(params: ExperimentParams, chain: ChainSpec | None = None) -> BudgetReport:
    """Scaling estimates of the gate errors.

    ``p1 = (t/U)^4`` from higher-order superexchange, ``p2 = 1/(eta N)`` from
    storage and retrieval, ``p3 = gamma0 T`` from spin decoherence during the
    exchange time ``T = N / (2 v)`` with ``v = 2 J = 8 (t/U)^2 U``.  The usable
    pulse bandwidth is ``eta N Gamma``.
    """
    if chain is not None and chain.N != params.N:
        raise ValueError(f"chain has {chain.N} sites but the experiment has N={params.N}")
    v = 8.0 * params.tU_ratio_sq * params.U
    T = params.N / (2.0 * v)
    return BudgetReport(
        p1=params.tU_ratio_sq**2,
        p2=1.0 / params.optical_depth,
        p3=params.gamma0 * T,
        v=v,
        T=T,
        bandwidth=params.optical_depth * params.Gamma,
        Omega=control_rabi(params),
        eta_flag=params.eta_flag,
    )
