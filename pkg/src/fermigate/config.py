"""JSON run configuration for the command-line front end.

Frequencies are given in Hz (fields ending in ``_hz``) and multiplied by
``2 pi`` to give the rad/s used everywhere else; the converted values are
recorded under ``derived`` in the echoed config and ignored on input.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .budget import RB87_D1_LINEWIDTH, ExperimentParams
from .gate import GateRunSpec
from .model import ChainSpec, HubbardParams, SpinCouplings, derive_couplings
from .twobody import DEFAULT_TOL
from .wavepacket import PacketSpec, StorageGeometry, storage_momentum

__all__ = ["ConfigError", "RunConfig", "load_config", "parse_config", "canonical_config"]

TWO_PI = 2 * math.pi


class ConfigError(ValueError):
    """Invalid configuration; the message names the offending field path."""


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid", validate_default=True)


class ChainConfig(_Strict):
    N: int = Field(100, ge=4)
    a: float = Field(5e-7, gt=0)
    boundary: Literal["open", "periodic"] = "open"


class HubbardConfig(_Strict):
    t_g_hz: float = Field(ge=0)
    t_s_hz: float = Field(ge=0)
    U_gg_hz: float = Field(gt=0)
    U_ss_hz: float = Field(gt=0)
    U_sg_hz: float = Field(gt=0)

    def params(self) -> HubbardParams:
        return HubbardParams(
            TWO_PI * self.t_g_hz, TWO_PI * self.t_s_hz,
            TWO_PI * self.U_gg_hz, TWO_PI * self.U_ss_hz, TWO_PI * self.U_sg_hz,
        )


class CouplingsConfig(_Strict):
    """Either direct ``J_hz``/``V_hz`` or a ``hubbard`` block (which wins)."""

    J_hz: float = Field(1.0, gt=0)
    V_hz: float = 0.0
    hubbard: Optional[HubbardConfig] = None

    def couplings(self) -> SpinCouplings:
        if self.hubbard is not None:
            c = derive_couplings(self.hubbard.params())
            if not c.J > 0:
                raise ConfigError("couplings.hubbard: derived J must be positive (both t_g and t_s nonzero)")
            return c
        return SpinCouplings(TWO_PI * self.J_hz, TWO_PI * self.V_hz)


class StorageConfig(_Strict):
    """Storage geometry; wavenumbers in units of ``pi / a``, angle in degrees."""

    k_i: float = Field(gt=0)
    k_c: float = Field(gt=0)
    theta_c_deg: float = Field(ge=0, le=180)
    direction: Literal[1, -1] = 1

    def carrier(self, a: float) -> float:
        geom = StorageGeometry(self.k_i * math.pi / a, self.k_c * math.pi / a, math.radians(self.theta_c_deg), self.direction)
        return storage_momentum(geom, a)


class PacketConfig(_Strict):
    """Packet centre as a fraction of N, width as a fraction of N, carrier in rad/site.

    A ``storage`` block, when present, overrides ``carrier``.
    """

    center_frac: float = Field(gt=0, le=1)
    sigma_over_N: float = Field(0.1, gt=0)
    carrier: float = Field(ge=-math.pi, le=math.pi)
    storage: Optional[StorageConfig] = None

    def spec(self, chain: ChainSpec) -> PacketSpec:
        k0 = self.storage.carrier(chain.a) if self.storage is not None else self.carrier
        return PacketSpec(self.center_frac * chain.N, self.sigma_over_N * chain.N, k0, chain)


def _default_R():
    return PacketConfig(center_frac=0.25, carrier=math.pi / 2)


def _default_L():
    return PacketConfig(center_frac=0.75, carrier=-math.pi / 2)


class GateConfig(_Strict):
    """Gate run; ``tau_s`` (seconds) or ``tau_J`` (dimensionless tau*J), else the exchange time."""

    chain: ChainConfig = Field(default_factory=ChainConfig)
    couplings: CouplingsConfig = Field(default_factory=CouplingsConfig)
    R: PacketConfig = Field(default_factory=_default_R)
    L: PacketConfig = Field(default_factory=_default_L)
    tau_s: Optional[float] = Field(None, ge=0)
    tau_J: Optional[float] = Field(None, ge=0)
    tol: float = Field(DEFAULT_TOL, ge=1e-14, le=1e-6)
    method: Literal["auto", "dense", "chebyshev"] = "auto"

    @model_validator(mode="after")
    def _one_time(self):
        if self.tau_s is not None and self.tau_J is not None:
            raise ValueError("give at most one of tau_s and tau_J")
        return self

    def chain_spec(self, N: int | None = None) -> ChainSpec:
        return ChainSpec(self.chain.N if N is None else N, self.chain.a, self.chain.boundary)

    def run_spec(self, N=None, sigma_over_N=None, V_over_2J=None) -> GateRunSpec:
        """Build a run, optionally overriding the sweep axes."""
        chain = self.chain_spec(N)
        c = self.couplings.couplings()
        if V_over_2J is not None:
            c = SpinCouplings(c.J, 2.0 * c.J * V_over_2J)
        R, L = self.R, self.L
        if sigma_over_N is not None:
            R = R.model_copy(update={"sigma_over_N": sigma_over_N})
            L = L.model_copy(update={"sigma_over_N": sigma_over_N})
        tau = self.tau_s if self.tau_s is not None else (None if self.tau_J is None else self.tau_J / c.J)
        return GateRunSpec(chain, c, R.spec(chain), L.spec(chain), tau=tau, tol=self.tol, method=self.method)


class SweepConfig(_Strict):
    """Sweep axes; ``null`` keeps the gate value, ``[]`` gives an empty sweep."""

    V_over_2J: Optional[list[float]] = None
    N: Optional[list[int]] = None
    sigma_over_N: Optional[list[float]] = None

    @model_validator(mode="after")
    def _positive(self):
        if self.N is not None and any(n < 4 for n in self.N):
            raise ValueError("sweep N values must be >= 4")
        if self.sigma_over_N is not None and any(s <= 0 for s in self.sigma_over_N):
            raise ValueError("sweep sigma_over_N values must be positive")
        return self


class ExperimentConfig(_Strict):
    """Budget inputs; the defaults are the proof-of-principle parameter set."""

    eta: float = Field(0.01, gt=0)
    N: int = Field(1000, gt=0)
    Gamma_hz: float = Field(RB87_D1_LINEWIDTH / TWO_PI, gt=0)
    gamma0_hz: float = Field(1 / TWO_PI, gt=0)
    T_p: float = Field(1e-7, gt=0)
    U_hz: float = Field(4000.0, gt=0)
    tU_ratio_sq: float = Field(0.01, gt=0)

    def params(self) -> ExperimentParams:
        return ExperimentParams(
            eta=self.eta, N=self.N, Gamma=TWO_PI * self.Gamma_hz, gamma0=TWO_PI * self.gamma0_hz,
            T_p=self.T_p, U=TWO_PI * self.U_hz, tU_ratio_sq=self.tU_ratio_sq,
        )


class OutputConfig(_Strict):
    dir: str = "out"
    prefix: str = "fermigate"
    timing: bool = False


class RunConfig(_Strict):
    gate: GateConfig = Field(default_factory=GateConfig)
    sweep: SweepConfig = Field(default_factory=SweepConfig)
    experiment: ExperimentConfig = Field(default_factory=ExperimentConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    threads: int = Field(1, ge=1)
    derived: Optional[dict] = None


def _format_errors(exc: ValidationError) -> str:
    lines = []
    for err in exc.errors():
        path = ".".join(str(p) for p in err["loc"]) or "<root>"
        lines.append(f"{path}: {err['msg']}")
    return "; ".join(lines)


def parse_config(data: dict) -> RunConfig:
    try:
        cfg = RunConfig.model_validate(data)
        # physics-level checks that pydantic cannot see
        cfg.gate.run_spec()
        cfg.experiment.params()
    except ValidationError as exc:
        raise ConfigError(_format_errors(exc)) from None
    except ValueError as exc:
        raise ConfigError(f"gate: {exc}") from None
    return cfg


def load_config(path) -> RunConfig:
    if path is None:
        return parse_config({})
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"{path}: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("<root>: config must be a JSON object")
    return parse_config(data)


def canonical_config(cfg: RunConfig) -> dict:
    """Every field with its value, plus the unit conversions under ``derived``."""
    data = cfg.model_dump(exclude={"derived"})
    spec = cfg.gate.run_spec()
    p = cfg.experiment.params()
    data["derived"] = {
        "J_rad_s": spec.couplings.J,
        "V_rad_s": spec.couplings.V,
        "tau_s": spec.tau,
        "R_carrier": spec.R.carrier,
        "L_carrier": spec.L.carrier,
        "Gamma_rad_s": p.Gamma,
        "gamma0_rad_s": p.gamma0,
        "U_rad_s": p.U,
        "hz_to_rad_s": TWO_PI,
    }
    return data
