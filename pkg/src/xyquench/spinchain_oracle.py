"""Dense 2^N spin-basis oracle, fully independent of the free-fermion code.

The Hamiltonian is assembled from Kronecker products of Pauli matrices with
periodic boundaries, the thermal state from its eigendecomposition, and the
dephased state by pinching onto post-quench eigenSPACES (eigenvalues grouped
within a tolerance), not by naive diagonal truncation. Nothing here imports
the model/observables formulas; agreement with them is the whole point.

Real arithmetic throughout: sigma^y_j sigma^y_l = -(sigma^x sigma^z)_j
(sigma^x sigma^z)_l, so every bond term is a real matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp, xlogy

from .errors import DegeneracyAmbiguity, SizeExceeded
from .model import ModelParams, QuenchSpec
from .observables import EntropyBreakdown

__all__ = ["DenseSystem", "MAX_SITES", "build_hamiltonian", "dense_breakdown"]

MAX_SITES = 12

_SX = np.array([[0.0, 1.0], [1.0, 0.0]])
_SZ = np.array([[1.0, 0.0], [0.0, -1.0]])
_SXZ = _SX @ _SZ  # = -i sigma^y, real
_ID2 = np.eye(2)


@dataclass(frozen=True)
class DenseSystem:
    """A diagonalized dense chain Hamiltonian."""

    n_sites: int
    hamiltonian: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _op_at(n_sites: int, factors: dict) -> np.ndarray:
    out = np.array([[1.0]])
    for j in range(n_sites):
        out = np.kron(out, factors.get(j, _ID2))
    return out


def _shift_permutation(n_sites: int) -> np.ndarray:
    """Index map of the one-site cyclic shift on the computational basis."""
    dim = 1 << n_sites
    idx = np.arange(dim)
    top = 1 << (n_sites - 1)
    return ((idx & (top - 1)) << 1) | (idx >= top)


def build_hamiltonian(n_sites: int, params: ModelParams) -> DenseSystem:
    """H = -sum_j [(1+gamma)/2 X_j X_{j+1} + (1-gamma)/2 Y_j Y_{j+1} + g Z_j].

    Periodic boundary: site n_sites + 1 is site 1 (the literal sum, so at
    n_sites = 2 the single bond is counted twice). Hermiticity and
    translation invariance are verified before diagonalization.
    """
    if n_sites > MAX_SITES:
        raise SizeExceeded(f"n_sites = {n_sites} exceeds the dense limit {MAX_SITES}")
    if n_sites < 2:
        raise ValueError("need at least 2 sites")
    dim = 1 << n_sites
    h = np.zeros((dim, dim))
    jx = 0.5 * (1.0 + params.gamma)
    jy = 0.5 * (1.0 - params.gamma)
    for j in range(n_sites):
        nxt = (j + 1) % n_sites
        h -= jx * _op_at(n_sites, {j: _SX, nxt: _SX})
        # Y_j Y_nxt = -(XZ)_j (XZ)_nxt in real arithmetic
        h += jy * _op_at(n_sites, {j: _SXZ, nxt: _SXZ})
        h -= params.g * _op_at(n_sites, {j: _SZ})
    if np.max(np.abs(h - h.T)) > 1e-12:
        raise AssertionError("dense Hamiltonian lost hermiticity")
    perm = _shift_permutation(n_sites)
    if np.max(np.abs(h[np.ix_(perm, perm)] - h)) > 1e-10:
        raise AssertionError("dense Hamiltonian is not translation invariant")
    w, v = np.linalg.eigh(h)
    return DenseSystem(n_sites=n_sites, hamiltonian=h, eigenvalues=w, eigenvectors=v)


def _group_eigenvalues(w: np.ndarray, tol_abs: float) -> list:
    """Slices of degenerate groups; gaps near the tolerance are ambiguous."""
    gaps = np.diff(w)
    straddling = (gaps > 0.5 * tol_abs) & (gaps < 2.0 * tol_abs)
    if np.any(straddling):
        g = float(gaps[straddling][0])
        raise DegeneracyAmbiguity(
            f"eigenvalue gap {g!r} sits at the grouping tolerance {tol_abs!r}; "
            "adjust degeneracy_tol"
        )
    groups = []
    start = 0
    for i, gap in enumerate(gaps):
        if gap > tol_abs:
            groups.append(slice(start, i + 1))
            start = i + 1
    groups.append(slice(start, len(w)))
    return groups


def dense_breakdown(
    n_sites: int, spec: QuenchSpec, *, degeneracy_tol: float = 1e-9
) -> EntropyBreakdown:
    """Per-site C, D, lag, work, and free-energy change by brute force.

    The post-quench state in the post-quench eigenbasis is
    R = V_tau^T rho_0 V_tau; dephasing keeps the blocks of R over eigenvalue
    groups within ``degeneracy_tol`` times the spectral range and zeroes the
    rest. Entropic quantities follow from eigendecompositions alone.
    """
    if spec.zero_temperature:
        raise ValueError("dense oracle requires finite beta")
    beta = spec.beta
    sys0 = build_hamiltonian(n_sites, spec.pre)
    syst = build_hamiltonian(n_sites, spec.post)

    lw0 = -beta * sys0.eigenvalues
    lnz0 = float(logsumexp(lw0))
    p0 = np.exp(lw0 - lnz0)
    s0 = float(-np.sum(xlogy(p0, p0)))
    e0 = float(p0 @ sys0.eigenvalues)

    # rho' in the post-quench eigenbasis
    basis_change = syst.eigenvectors.T @ sys0.eigenvectors
    r = (basis_change * p0) @ basis_change.T

    wt = syst.eigenvalues
    lnzt = float(logsumexp(-beta * wt))
    spread = float(wt[-1] - wt[0])
    tol_abs = degeneracy_tol * (spread if spread > 0.0 else 1.0)
    groups = _group_eigenvalues(wt, tol_abs)

    pinched_eigs = []
    for grp in groups:
        block = r[grp, grp]
        if block.shape[0] == 1:
            pinched_eigs.append(np.array([block[0, 0]]))
        else:
            pinched_eigs.append(np.linalg.eigvalsh(block))
    lam = np.clip(np.concatenate(pinched_eigs), 0.0, None)
    s_pinch = float(-np.sum(xlogy(lam, lam)))

    e_post = float(np.diag(r) @ wt)
    n = float(n_sites)
    coherence = (s_pinch - s0) / n
    lag = (-s0 + beta * e_post + lnzt) / n
    population = (-s_pinch + beta * e_post + lnzt) / n
    work = (e_post - e0) / n
    dfree = -(lnzt - lnz0) / (beta * n)

    scale = max(abs(coherence), abs(population), abs(lag))
    floor = 1e-14 + 1e-11 * scale
    coherence, population, lag = (
        0.0 if -floor < v < 0.0 else v for v in (coherence, population, lag)
    )
    return EntropyBreakdown(
        coherence=coherence, population=population, lag=lag, work=work, dfree=dfree
    )
