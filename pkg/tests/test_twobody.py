import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fermigate.freefermion import SingleExcitationState, periodic_momenta
from fermigate.model import Boundary, ChainSpec, SpinCouplings, dispersion
from fermigate.propagate import PropagationError
from fermigate.twobody import (
    PairBasis,
    TwoExcitationState,
    antisymmetric_plane_wave,
    build_hamiltonian,
    evolve_two,
    product_state,
)
from fermigate.wavepacket import PacketSpec, gate_packets, make_packet


def _random_two(chain, rng):
    M = chain.N * (chain.N - 1) // 2
    return TwoExcitationState(rng.normal(size=M) + 1j * rng.normal(size=M), chain).normalized()


@given(N=st.integers(2, 60))
def test_pair_basis_is_a_bijection(N):
    basis = PairBasis(N)
    pairs = list(itertools.combinations(range(1, N + 1), 2))
    assert basis.M == len(pairs) == N * (N - 1) // 2
    assert [basis.pair(i) for i in range(basis.M)] == pairs
    assert np.array_equal(basis.index(basis.first, basis.second), np.arange(basis.M))


@pytest.mark.parametrize("pair", [(2, 2), (3, 1), (0, 2), (1, 6)])
def test_pair_basis_rejects_invalid_pairs(pair):
    with pytest.raises(ValueError):
        PairBasis(5).index(*pair)


def test_open_four_site_matrix_by_hand():
    J, V = 0.7, 1.9
    H = build_hamiltonian(ChainSpec(4), SpinCouplings(J, V)).dense()
    # order (1,2) (1,3) (1,4) (2,3) (2,4) (3,4)
    expected = np.zeros((6, 6))
    for a, b in [(0, 1), (1, 3), (1, 2), (2, 4), (3, 4), (4, 5)]:
        expected[a, b] = expected[b, a] = -J
    expected[0, 0] = expected[3, 3] = expected[5, 5] = V
    assert np.array_equal(H, expected)


def test_ring_four_site_matrix_by_hand():
    J, V = 0.7, 1.9
    H = build_hamiltonian(ChainSpec(4, boundary=Boundary.PERIODIC), SpinCouplings(J, V)).dense()
    expected = np.zeros((6, 6))
    for a, b in [(0, 1), (1, 3), (1, 2), (2, 4), (3, 4), (4, 5)]:
        expected[a, b] = expected[b, a] = -J
    # wrap hops (2,4)->(1,2) and (3,4)->(1,3) pass the other flip
    for a, b in [(4, 0), (5, 1)]:
        expected[a, b] = expected[b, a] = +J
    expected[0, 0] = expected[3, 3] = expected[5, 5] = expected[2, 2] = V
    assert np.array_equal(H, expected)


def test_no_hopping_leaves_interaction_levels():
    H = build_hamiltonian(ChainSpec(9), SpinCouplings(0.0, 2.5))
    w = np.linalg.eigvalsh(H.dense())
    assert set(np.round(w, 12)) == {0.0, 2.5}
    assert np.sum(np.isclose(w, 2.5)) == 8


@pytest.mark.parametrize("boundary", list(Boundary))
def test_hamiltonian_is_real_symmetric(boundary):
    H = build_hamiltonian(ChainSpec(15, boundary=boundary), SpinCouplings(1.1, -0.4))
    assert abs(H.matrix - H.matrix.T).max() == 0.0
    assert H.matrix.dtype == np.float64


def test_ring_spectrum_at_small_N():
    N = 10
    H = build_hamiltonian(ChainSpec(N, boundary=Boundary.PERIODIC), SpinCouplings(1.0))
    e = dispersion(periodic_momenta(N), 1.0)
    iu = np.triu_indices(N, k=1)
    expected = np.sort((e[:, None] + e[None, :])[iu])
    assert np.allclose(np.linalg.eigvalsh(H.dense()), expected, atol=1e-12)


def test_zero_time_is_identity(rng):
    chain = ChainSpec(10)
    H = build_hamiltonian(chain, SpinCouplings(1.0, 0.5))
    psi = _random_two(chain, rng)
    for method in ("dense", "chebyshev"):
        assert np.allclose(evolve_two(psi, H, 0.0, method=method).amps, psi.amps, atol=1e-14)


def test_eigenvector_only_acquires_a_phase():
    chain = ChainSpec(12)
    H = build_hamiltonian(chain, SpinCouplings(1.0, 0.8))
    w, U = H.eigh
    psi = TwoExcitationState(U[:, 17], chain)
    out = evolve_two(psi, H, 2.3, method="chebyshev")
    assert np.allclose(out.amps, np.exp(-2.3j * w[17]) * psi.amps, atol=1e-10)


@pytest.mark.parametrize("V", [0.0, 1.3, -4.0])
def test_chebyshev_matches_dense(V, rng):
    chain = ChainSpec(12)
    H = build_hamiltonian(chain, SpinCouplings(1.0, V))
    psi = _random_two(chain, rng)
    a = evolve_two(psi, H, 3.0, method="dense")
    b, info = evolve_two(psi, H, 3.0, method="chebyshev", return_info=True)
    assert np.linalg.norm(a.amps - b.amps) <= 1e-9
    assert info.method == "chebyshev" and info.matvecs > 0


def test_long_time_uses_several_steps(rng):
    chain = ChainSpec(12)
    H = build_hamiltonian(chain, SpinCouplings(1.0, 0.3))
    psi = _random_two(chain, rng)
    b, info = evolve_two(psi, H, 200.0, method="chebyshev", return_info=True)
    assert info.steps > 1
    assert np.linalg.norm(evolve_two(psi, H, 200.0, method="dense").amps - b.amps) <= 1e-9


@pytest.mark.parametrize("tol", [1e-15, 1e-5])
def test_tolerance_range_is_enforced(tol, rng):
    chain = ChainSpec(6)
    H = build_hamiltonian(chain, SpinCouplings(1.0))
    with pytest.raises(ValueError, match="tolerance"):
        evolve_two(_random_two(chain, rng), H, 1.0, tol=tol)


def test_matvec_budget_raises(rng):
    chain = ChainSpec(10)
    H = build_hamiltonian(chain, SpinCouplings(1.0))
    with pytest.raises(PropagationError):
        evolve_two(_random_two(chain, rng), H, 50.0, method="chebyshev", max_matvecs=10)


def test_negative_time_and_chain_mismatch_rejected(rng):
    chain = ChainSpec(8)
    H = build_hamiltonian(chain, SpinCouplings(1.0))
    psi = _random_two(chain, rng)
    with pytest.raises(ValueError):
        evolve_two(psi, H, -1.0)
    with pytest.raises(ValueError, match="different chains"):
        evolve_two(_random_two(ChainSpec(9), rng), H, 1.0)
    with pytest.raises(ValueError):
        evolve_two(psi, H, 1.0, method="krylov")


def test_product_of_deltas_is_one_basis_state():
    chain = ChainSpec(8)
    psi, norm = product_state(SingleExcitationState.delta(chain, 2), SingleExcitationState.delta(chain, 6))
    assert norm == 1.0
    expected = np.zeros(28)
    expected[PairBasis(8).index(2, 6)] = 1.0
    assert np.array_equal(psi.amps, expected)


def test_identical_envelopes_are_counted_once(rng):
    chain = ChainSpec(20)
    R = SingleExcitationState(rng.normal(size=20) + 1j * rng.normal(size=20), chain).normalized()
    _, norm = product_state(R, R)
    assert norm**2 == pytest.approx(2 * (1 - np.sum(np.abs(R.amps) ** 4)), rel=1e-12)


def test_gate_pair_norm_deviation_matches_direct_summation():
    chain = ChainSpec(100)
    R, L = (make_packet(p) for p in gate_packets(chain))
    _, norm = product_state(R, L)
    r, l = R.amps, L.amps
    oracle = np.sqrt(1 + abs(np.vdot(r, l)) ** 2 - 2 * np.sum(np.abs(r * l) ** 2))
    assert norm == pytest.approx(oracle, abs=1e-15)
    assert abs(norm - 1) == pytest.approx(1.487e-7, rel=1e-3)


def test_product_state_needs_matching_chains():
    with pytest.raises(ValueError, match="different length"):
        product_state(SingleExcitationState.delta(ChainSpec(8), 1), SingleExcitationState.delta(ChainSpec(9), 1))


def test_plane_wave_is_an_eigenstate_and_antisymmetric():
    N = 16
    chain = ChainSpec(N, boundary=Boundary.PERIODIC)
    H = build_hamiltonian(chain, SpinCouplings(1.0))
    ks = periodic_momenta(N)
    k, p = ks[3], ks[11]
    psi = antisymmetric_plane_wave(chain, k, p)
    E = dispersion(k, 1.0) + dispersion(p, 1.0)
    assert np.linalg.norm(H @ psi.amps - E * psi.amps) <= 1e-12
    swapped = antisymmetric_plane_wave(chain, p, k)
    assert np.allclose(swapped.amps, -psi.amps, atol=1e-15)


def test_plane_wave_rejects_bad_momenta():
    chain = ChainSpec(16, boundary=Boundary.PERIODIC)
    k = periodic_momenta(16)[5]
    with pytest.raises(ValueError, match="equal"):
        antisymmetric_plane_wave(chain, k, k)
    with pytest.raises(ValueError, match="grid"):
        antisymmetric_plane_wave(chain, 0.1, k)


def test_two_state_grid_layout():
    chain = ChainSpec(5)
    psi, _ = product_state(SingleExcitationState.delta(chain, 4), SingleExcitationState.delta(chain, 2))
    grid = psi.to_grid()
    assert grid[1, 3] == 1.0
    assert np.count_nonzero(grid) == 1
