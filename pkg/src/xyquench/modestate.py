"""Explicit 4x4 density matrices for a (+k, -k) mode pair.

This is the first brute-force oracle: every closed-form per-mode entropy or
expectation in the package can be rebuilt here from a dense matrix, an
eigendecomposition, and nothing else.

The basis is the post-quench pair occupation basis ordered
{|00>, |01>, |10>, |11>}; the pair Hamiltonian is diagonal with energies
(-2 eps, 0, 0, +2 eps) in that basis, so the only coherence the quench can
create sits in the (|00>, |11>) corner.

Matrix entries are assembled from overflow-free building blocks
(q = e^{-2 beta eps0}):

    m = q / (1 + q)^2            # 1 / (4 cosh^2)
    A = 1/2 - m                  # cosh(2x) / (4 cosh^2 x)
    B = tanh(beta eps0) / 2      # sinh(2x) / (4 cosh^2 x)

so states are constructible at any finite beta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from .model import QuenchSpec, dispersion, mode_data

__all__ = [
    "ModePairState",
    "build_mode_state",
    "thermal_pair_state",
    "thermal_pair_log_diag",
    "vn_entropy",
    "dephase",
    "relative_entropy",
    "pair_hamiltonian_diag",
]

_EIG_CLIP = 1e-14


@dataclass(frozen=True)
class ModePairState:
    """A validated 4x4 mode-pair density matrix.

    Construction checks symmetry, unit trace, positive semidefiniteness
    (eigenvalues >= -1e-14), and the structural constraint that only the
    (|00>, |11>) off-diagonal entry may be nonzero.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float, copy=True)
        if m.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
        if np.max(np.abs(m - m.T)) > 1e-14:
            raise ValueError("matrix is not symmetric")
        if abs(np.trace(m) - 1.0) > 1e-14:
            raise ValueError(f"trace must be 1, got {np.trace(m)!r}")
        off = np.abs(m - np.diag(np.diag(m)))
        off[0, 3] = off[3, 0] = 0.0
        if np.max(off) > 1e-14:
            raise ValueError("only the (|00>, |11>) off-diagonal entry may be nonzero")
        if np.linalg.eigvalsh(m).min() < -_EIG_CLIP:
            raise ValueError("matrix has a negative eigenvalue beyond tolerance")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


def build_mode_state(spec: QuenchSpec, k: float) -> ModePairState:
    """Post-quench state of the (+k, -k) pair, in the post-quench basis.

    Diagonal: (A + B cos Delta, m, m, A - B cos Delta); corner entries
    -B sin Delta. Requires finite beta.
    """
    if spec.zero_temperature:
        raise ValueError("mode-pair states are defined for finite beta only")
    md = mode_data(spec, float(k))
    x = spec.beta * md.eps0
    q = math.exp(-2.0 * x)
    m = q / (1.0 + q) ** 2
    a = 0.5 - m
    b = 0.5 * math.tanh(x)
    mat = np.zeros((4, 4))
    mat[0, 0] = a + b * md.cos_delta
    mat[1, 1] = m
    mat[2, 2] = m
    mat[3, 3] = a - b * md.cos_delta
    mat[0, 3] = mat[3, 0] = -b * md.sin_delta
    return ModePairState(mat)


def thermal_pair_state(eps: float, beta: float) -> ModePairState:
    """Equilibrium pair state for pair energies (-2 eps, 0, 0, +2 eps)."""
    return ModePairState(np.diag(np.exp(thermal_pair_log_diag(eps, beta))))


def thermal_pair_log_diag(eps: float, beta: float) -> np.ndarray:
    """Log of the thermal pair state's diagonal, exact at any finite beta.

    ln Z^2 = 2 (beta eps + log1p(e^{-2 beta eps})); the entries are all
    <= 0 so exponentiation never overflows. This is the reference to pass
    to ``relative_entropy`` when the smallest thermal population underflows.
    """
    if not (beta > 0.0) or math.isinf(beta):
        raise ValueError("finite positive beta required")
    x = beta * float(eps)
    lnz2 = 2.0 * (x + math.log1p(math.exp(-2.0 * x)))
    return np.array([2.0 * x - lnz2, -lnz2, -lnz2, -2.0 * x - lnz2])


def vn_entropy(state: ModePairState) -> float:
    """Von Neumann entropy -sum(lambda ln lambda), 0 ln 0 = 0.

    Eigenvalues in [-1e-14, 0) are clipped to 0 before the logarithm.
    """
    w = np.linalg.eigvalsh(state.matrix)
    w = np.where(w < 0.0, 0.0, w)
    return float(-np.sum(xlogy(w, w)))


def dephase(state: ModePairState) -> ModePairState:
    """Entry-wise diagonal truncation in the pair occupation basis.

    Exact dephasing here despite the |01>/|10> degeneracy of the pair
    Hamiltonian, because constructed states carry no coherence in that
    block; idempotent by construction.
    """
    return ModePairState(np.diag(np.diag(state.matrix)))


def relative_entropy(
    rho: ModePairState,
    sigma: ModePairState | None = None,
    *,
    sigma_log_diag: np.ndarray | None = None,
) -> float:
    """Quantum relative entropy tr(rho ln rho - rho ln sigma).

    Exactly one reference must be supplied: either ``sigma`` as a state
    (generic eigendecomposition path, valid while sigma's smallest
    eigenvalue is representable) or ``sigma_log_diag`` as the exact log of
    a diagonal sigma (the thermal reference at large beta).
    """
    wr = np.linalg.eigvalsh(rho.matrix)
    wr = np.where(wr < 0.0, 0.0, wr)
    tr_rho_ln_rho = float(np.sum(xlogy(wr, wr)))
    if (sigma is None) == (sigma_log_diag is None):
        raise ValueError("supply exactly one of sigma or sigma_log_diag")
    if sigma_log_diag is not None:
        ld = np.asarray(sigma_log_diag, dtype=float)
        if ld.shape != (4,):
            raise ValueError("sigma_log_diag must have shape (4,)")
        cross = float(np.diag(rho.matrix) @ ld)
    else:
        ws, vs = np.linalg.eigh(sigma.matrix)
        ws = np.maximum(ws, 1e-300)
        ln_sigma = (vs * np.log(ws)) @ vs.T
        cross = float(np.sum(rho.matrix * ln_sigma))
    return tr_rho_ln_rho - cross


def pair_hamiltonian_diag(params, k: float) -> np.ndarray:
    """Pair energies (-2 eps, 0, 0, +2 eps) in the occupation basis."""
    eps = dispersion(params, float(k))
    return np.array([-2.0 * eps, 0.0, 0.0, 2.0 * eps])
