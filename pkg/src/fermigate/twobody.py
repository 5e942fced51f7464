"""Two spin-flip sector of the XXZ chain.

States live on ordered site pairs ``(j, j')`` with ``1 <= j < j' <= N``.  On an
open chain the matrix elements coincide with the fermionic model (hopping
``-J``, nearest-neighbour interaction ``V``), so no Jordan-Wigner string is
ever built explicitly.  The ring is available only for eigenstate
diagnostics; there the wrap-around hop carries the fermionic sign so that
the ring is the fermion ring with momenta ``2 pi m / N``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
import scipy.sparse as sp

from .freefermion import SingleExcitationState, periodic_momenta
from .model import Boundary, ChainSpec, SpinCouplings
from .propagate import PropagationInfo, chebyshev_propagate

__all__ = [
    "PairBasis",
    "TwoExcitationState",
    "SectorHamiltonian",
    "DENSE_MAX_DIM",
    "DEFAULT_TOL",
    "build_hamiltonian",
    "evolve_two",
    "product_state",
    "antisymmetric_product",
    "antisymmetric_plane_wave",
]

#: Largest sector dimension propagated by full diagonalization under method="auto".
DENSE_MAX_DIM = 2500
DEFAULT_TOL = 1e-10


class PairBasis:
    """Bijection between ordered pairs ``j < j'`` (1-based) and ``0..M-1``.

    Pairs are ordered lexicographically: ``(1,2), (1,3), ..., (1,N), (2,3), ...``.
    """

    def __init__(self, N: int):
        if N < 2:
            raise ValueError("pair basis needs N >= 2")
        self.N = int(N)
        self.M = self.N * (self.N - 1) // 2
        j, jp = np.triu_indices(self.N, k=1)
        self.first = j + 1
        self.second = jp + 1

    def __len__(self):
        return self.M

    def __eq__(self, other):
        return isinstance(other, PairBasis) and other.N == self.N

    def __hash__(self):
        return hash(("PairBasis", self.N))

    def index(self, j, jp):
        """Linear index of the pair(s) ``(j, jp)``, ``j < jp``."""
        j = np.asarray(j)
        jp = np.asarray(jp)
        if np.any(j >= jp) or np.any(j < 1) or np.any(jp > self.N):
            raise ValueError("pairs must satisfy 1 <= j < j' <= N")
        idx = (j - 1) * (2 * self.N - j) // 2 + (jp - j - 1)
        return int(idx) if idx.ndim == 0 else idx

    def pair(self, idx: int) -> tuple[int, int]:
        return int(self.first[idx]), int(self.second[idx])


@dataclass(frozen=True, eq=False)
class TwoExcitationState:
    """Amplitudes of ``S+_j S+_j' |vac>`` over :class:`PairBasis` ordering."""

    amps: np.ndarray
    chain: ChainSpec

    def __post_init__(self):
        amps = np.array(self.amps, dtype=complex)
        M = self.chain.N * (self.chain.N - 1) // 2
        if amps.shape != (M,):
            raise ValueError(f"expected {M} pair amplitudes, got shape {amps.shape}")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    @property
    def basis(self) -> PairBasis:
        return PairBasis(self.chain.N)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def normalized(self) -> "TwoExcitationState":
        return TwoExcitationState(self.amps / self.norm, self.chain)

    def overlap(self, other: "TwoExcitationState") -> complex:
        """``<self|other>``."""
        return complex(np.vdot(self.amps, other.amps))

    def to_grid(self) -> np.ndarray:
        """``N x N`` array with ``grid[j-1, j'-1] = amps(j, j')`` above the diagonal."""
        N = self.chain.N
        grid = np.zeros((N, N), dtype=complex)
        grid[np.triu_indices(N, k=1)] = self.amps
        return grid


class SectorHamiltonian:
    """Sparse real-symmetric Hamiltonian of the two-flip sector."""

    def __init__(self, matrix, couplings: SpinCouplings, chain: ChainSpec):
        self.matrix = sp.csr_matrix(matrix)
        self.couplings = couplings
        self.chain = chain
        self.basis = PairBasis(chain.N)

    @property
    def dim(self) -> int:
        return self.basis.M

    @property
    def boundary(self) -> Boundary:
        return self.chain.boundary

    def __matmul__(self, x):
        return self.matrix @ x

    def shifted(self, c: float) -> "SectorHamiltonian":
        """``H + c * Identity``."""
        return SectorHamiltonian(self.matrix + c * sp.identity(self.dim, format="csr"), self.couplings, self.chain)

    def dense(self) -> np.ndarray:
        return self.matrix.toarray()

    @cached_property
    def eigh(self) -> tuple[np.ndarray, np.ndarray]:
        """Full eigendecomposition, computed once per Hamiltonian."""
        return np.linalg.eigh(self.dense())


def build_hamiltonian(chain: ChainSpec, couplings: SpinCouplings, sign_fault: bool = False) -> SectorHamiltonian:
    """Assemble the two-flip sector Hamiltonian.

    Off-diagonal elements ``-J`` connect pairs that differ by one flip
    hopping to an empty neighbouring site; the diagonal is ``V`` for adjacent
    flips.  On the ring the hop ``N -> 1`` passes the other flip and picks up
    the fermionic sign, giving ``+J``.  ``sign_fault`` flips the sign of the
    hopping of the left flip and exists only as a negative control for
    self-checks.
    """
    N = chain.N
    if N < 4:
        raise ValueError(f"two-flip sector needs N >= 4, got {N}")
    basis = PairBasis(N)
    j, jp = basis.first, basis.second
    J, V = couplings.J, couplings.V
    rows, cols, vals = [], [], []

    # first flip hops right, staying left of the second
    m = j + 1 < jp
    rows.append(basis.index(j[m], jp[m]))
    cols.append(basis.index(j[m] + 1, jp[m]))
    vals.append(np.full(m.sum(), J if sign_fault else -J))
    # second flip hops right
    m = jp + 1 <= N
    rows.append(basis.index(j[m], jp[m]))
    cols.append(basis.index(j[m], jp[m] + 1))
    vals.append(np.full(m.sum(), -J))
    if chain.boundary is Boundary.PERIODIC:
        # (j, N) -> (1, j): the flip at N wraps to site 1 past the flip at j
        m = (jp == N) & (j > 1)
        rows.append(basis.index(j[m], jp[m]))
        cols.append(basis.index(np.ones(m.sum(), dtype=int), j[m]))
        vals.append(np.full(m.sum(), +J))

    rows = np.concatenate(rows)
    cols = np.concatenate(cols)
    vals = np.concatenate(vals).astype(float)
    adjacent = (jp - j == 1)
    if chain.boundary is Boundary.PERIODIC:
        adjacent |= (j == 1) & (jp == N)
    diag = np.where(adjacent, V, 0.0)

    off = sp.coo_matrix((vals, (rows, cols)), shape=(basis.M, basis.M))
    matrix = off + off.T + sp.diags(diag)
    return SectorHamiltonian(matrix.tocsr(), couplings, chain)


def evolve_two(
    state: TwoExcitationState,
    H: SectorHamiltonian,
    tau: float,
    tol: float = DEFAULT_TOL,
    method: str = "auto",
    return_info: bool = False,
    **cheb_kwargs,
):
    """Propagate ``state`` by ``exp(-i H tau)`` with 2-norm error at most ``tol``.

    ``method`` is ``"dense"`` (full eigendecomposition, cached on ``H``),
    ``"chebyshev"`` (error-controlled polynomial propagator) or ``"auto"``,
    which picks dense for sector dimension up to :data:`DENSE_MAX_DIM`.
    Non-convergence of the iterative propagator raises
    :class:`~fermigate.propagate.PropagationError`.
    """
    if not 1e-14 <= tol <= 1e-6:
        raise ValueError(f"tolerance must lie in [1e-14, 1e-6], got {tol!r}")
    if tau < 0:
        raise ValueError(f"evolution time must be nonnegative, got {tau!r}")
    if state.chain.N != H.chain.N:
        raise ValueError("state and Hamiltonian live on different chains")
    if method == "auto":
        method = "dense" if H.dim <= DENSE_MAX_DIM else "chebyshev"
    if method == "dense":
        w, U = H.eigh
        amps = U @ (np.exp(-1j * w * tau) * (U.T @ state.amps))
        info = PropagationInfo("dense")
    elif method == "chebyshev":
        amps, info = chebyshev_propagate(H.matrix, state.amps, tau, tol=tol, **cheb_kwargs)
    else:
        raise ValueError(f"unknown propagation method {method!r}")
    out = TwoExcitationState(amps, state.chain)
    return (out, info) if return_info else out


def _check_pair(R: SingleExcitationState, L: SingleExcitationState):
    if R.chain.N != L.chain.N:
        raise ValueError(f"packets live on chains of different length ({R.chain.N} vs {L.chain.N})")


def product_state(R: SingleExcitationState, L: SingleExcitationState) -> tuple[TwoExcitationState, float]:
    """Both flips stored at once: ``amps(j, j') ∝ R(j) L(j') + R(j') L(j)``.

    Returns the normalized state and the norm of the unnormalized pair
    amplitudes.  That norm is ``sqrt(1 + |<R|L>|^2 - 2 sum_j |R_j L_j|^2)``:
    close to 1 for well-separated packets and close to ``sqrt(2)`` for
    ``R == L`` because each unordered pair is then counted once with
    amplitude ``2 R(j) R(j')``.
    """
    _check_pair(R, L)
    basis = PairBasis(R.chain.N)
    i, k = basis.first - 1, basis.second - 1
    amps = R.amps[i] * L.amps[k] + R.amps[k] * L.amps[i]
    norm = float(np.linalg.norm(amps))
    return TwoExcitationState(amps / norm, R.chain), norm


def antisymmetric_product(R: SingleExcitationState, L: SingleExcitationState) -> tuple[TwoExcitationState, float]:
    """Slater-determinant state ``amps(j, j') ∝ R(j) L(j') - R(j') L(j)``.

    This is ``c+_R c+_L |vac>`` written in the spin pair basis of an open chain.
    """
    _check_pair(R, L)
    basis = PairBasis(R.chain.N)
    i, k = basis.first - 1, basis.second - 1
    amps = R.amps[i] * L.amps[k] - R.amps[k] * L.amps[i]
    norm = float(np.linalg.norm(amps))
    if norm == 0:
        raise ValueError("antisymmetric product of parallel states vanishes")
    return TwoExcitationState(amps / norm, R.chain), norm


def antisymmetric_plane_wave(chain: ChainSpec, k: float, p: float) -> TwoExcitationState:
    """Normalized ``sum_{j<j'} (e^{ikj} e^{ipj'} - e^{ipj} e^{ikj'}) |j, j'>``.

    ``k`` and ``p`` must be ring momenta (:func:`periodic_momenta`).
    """
    grid = periodic_momenta(chain.N)
    for q in (k, p):
        if np.min(np.abs(np.exp(1j * grid) - np.exp(1j * q))) > 1e-9:
            raise ValueError(f"momentum {q!r} is not on the {chain.N}-site ring grid")
    if abs(np.exp(1j * k) - np.exp(1j * p)) < 1e-9:
        raise ValueError("equal momenta give a vanishing antisymmetric state")
    basis = PairBasis(chain.N)
    j, jp = basis.first, basis.second
    amps = np.exp(1j * (k * j + p * jp)) - np.exp(1j * (p * j + k * jp))
    return TwoExcitationState(amps / np.linalg.norm(amps), chain)
