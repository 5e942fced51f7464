"""Error-controlled Chebyshev propagation ``exp(-i H t) v`` for sparse Hermitian H."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import jv

__all__ = ["PropagationError", "PropagationInfo", "chebyshev_propagate", "gershgorin_bounds"]


class PropagationError(RuntimeError):
    """The iterative propagator could not meet its tolerance within budget."""


@dataclass(frozen=True)
class PropagationInfo:
    method: str
    steps: int = 0
    matvecs: int = 0
    error_bound: float = 0.0


def gershgorin_bounds(H) -> tuple[float, float]:
    """Interval containing the spectrum of the Hermitian sparse matrix ``H``."""
    H = H.tocsr()
    diag = H.diagonal().real
    radius = np.asarray(abs(H).sum(axis=1)).ravel() - np.abs(diag)
    return float(np.min(diag - radius)), float(np.max(diag + radius))


def _chebyshev_order(alpha: float, tol: float) -> tuple[np.ndarray, float]:
    """Bessel coefficients ``J_n(alpha)`` up to the smallest order whose
    truncation bound ``2 sum_{n>K} |J_n|`` is below ``tol``."""
    n_cap = int(alpha + 12 * max(alpha, 1.0) ** (1 / 3) + 60)
    bessel = jv(np.arange(n_cap + 1), alpha)
    tail = 2.0 * np.cumsum(np.abs(bessel[::-1]))[::-1]  # tail[K] = 2 sum_{n>=K}
    tail = np.append(tail[1:], 0.0)  # tail[K] = 2 sum_{n>K}
    ok = tail <= tol
    if not ok.any():
        raise PropagationError(f"no Chebyshev order reaches tolerance {tol!r} at alpha={alpha!r}")
    K = int(np.argmax(ok))
    return bessel[: K + 1], float(tail[K])


def chebyshev_propagate(
    H,
    vec: np.ndarray,
    t: float,
    tol: float = 1e-10,
    max_alpha: float = 100.0,
    max_matvecs: int = 1_000_000,
    bounds: tuple[float, float] | None = None,
) -> tuple[np.ndarray, PropagationInfo]:
    """Propagate ``vec`` by ``exp(-i H t)`` with a Chebyshev expansion.

    The interval ``t`` is split into equal steps whose rescaled length
    ``alpha = t_step * (E_max - E_min) / 2`` stays below ``max_alpha``; each
    step is truncated so that the summed truncation bound is at most ``tol``
    in the 2-norm (for a normalized ``vec``).

    Raises
    ------
    PropagationError
        When the number of matrix-vector products would exceed ``max_matvecs``.
    """
    emin, emax = gershgorin_bounds(H) if bounds is None else bounds
    half_width = max(0.5 * (emax - emin), 1e-300) * (1 + 1e-8)
    center = 0.5 * (emax + emin)
    alpha_total = half_width * abs(t)
    n_steps = max(1, math.ceil(alpha_total / max_alpha))
    dt = t / n_steps
    bessel, bound = _chebyshev_order(half_width * abs(dt), tol / n_steps)
    order = len(bessel) - 1
    if order * n_steps > max_matvecs:
        raise PropagationError(
            f"Chebyshev propagation needs {order * n_steps} matvecs, budget is {max_matvecs}"
        )
    sgn = 1.0 if dt >= 0 else -1.0
    coeffs = 2.0 * bessel * (-1j * sgn) ** np.arange(order + 1)
    coeffs[0] = bessel[0]
    phase = np.exp(-1j * center * dt)

    def apply(x):
        return (H @ x - center * x) / half_width

    psi = np.asarray(vec, dtype=complex)
    for _ in range(n_steps):
        t_prev, t_curr = psi, apply(psi)
        acc = coeffs[0] * t_prev + coeffs[1] * t_curr if order >= 1 else coeffs[0] * t_prev
        for n in range(2, order + 1):
            t_prev, t_curr = t_curr, 2.0 * apply(t_curr) - t_prev
            acc += coeffs[n] * t_curr
        psi = phase * acc
    if not np.all(np.isfinite(psi)):
        raise PropagationError("Chebyshev propagation produced non-finite amplitudes")
    return psi, PropagationInfo("chebyshev", n_steps, order * n_steps, bound * n_steps)
