"""Desk-scale simulator of a photonic phase gate built on exchanging
fermionic spin waves in a one-dimensional XX/XXZ spin chain.

Modules
-------
model        Hubbard parameters, chain geometry, superexchange couplings.
freefermion  Exact single spin-flip propagation and Fourier tools.
wavepacket   Gaussian spin-wave packets and storage kinematics.
twobody      Two spin-flip sector: basis, Hamiltonian, propagation.
gate         Full gate run, nonlinear phase extraction, phase sweeps.
budget       Order-of-magnitude error budget and control Rabi frequency.
cli          ``fermigate`` command-line front end.
"""

from .budget import BudgetReport, ExperimentParams, control_rabi, error_budget
from .freefermion import (
    SingleExcitationState,
    centroid,
    evolve_single,
    fourier,
    group_velocity,
    inverse_fourier,
    linear_transport_reference,
)
from .gate import GateReport, GateRunSpec, phase_sweep, run_gate, tunable_phase_prediction
from .model import Boundary, ChainSpec, HubbardParams, SpinCouplings, derive_couplings, dispersion
from .propagate import PropagationError
from .twobody import (
    PairBasis,
    SectorHamiltonian,
    TwoExcitationState,
    antisymmetric_plane_wave,
    build_hamiltonian,
    evolve_two,
    product_state,
)
from .wavepacket import PacketSpec, StorageGeometry, make_packet, solve_storage_angle, storage_momentum

__version__ = "0.1.0"
