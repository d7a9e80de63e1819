"""Dense spin-basis oracle: spectra, symmetries, and an independent rebuild."""

import math

import numpy as np
import pytest
from scipy.special import logsumexp, softmax, xlogy

from xyquench.errors import DegeneracyAmbiguity, SizeExceeded
from xyquench.model import ModelParams, QuenchSpec
from xyquench.spinchain_oracle import MAX_SITES, build_hamiltonian, dense_breakdown


def test_two_site_spectra_known_in_closed_form():
    # the literal periodic sum at N = 2 counts the single bond twice
    w = build_hamiltonian(2, ModelParams(0.0, 1.0)).eigenvalues
    assert np.allclose(np.sort(w), [-2.0, -2.0, 2.0, 2.0], atol=1e-12)
    w = build_hamiltonian(2, ModelParams(0.0, 0.0)).eigenvalues
    assert np.allclose(np.sort(w), [-2.0, 0.0, 0.0, 2.0], atol=1e-12)
    # g = 0.5, gamma = 1: blocks [[-1,-2],[-2,1]] and [[0,-2],[-2,0]]
    w = build_hamiltonian(2, ModelParams(0.5, 1.0)).eigenvalues
    root5 = math.sqrt(5.0)
    assert np.allclose(np.sort(w), [-root5, -2.0, 2.0, root5], atol=1e-12)


def test_strong_field_polarizes_the_ground_state():
    sys = build_hamiltonian(4, ModelParams(50.0, 0.7))
    assert sys.eigenvalues[0] == pytest.approx(-200.0, abs=0.5)
    # basis index 0 is all spins up, the +1 eigenstate of every Z
    assert abs(sys.eigenvectors[0, 0]) > 0.999


def test_field_sign_symmetry_of_the_spectrum():
    wp = np.sort(build_hamiltonian(4, ModelParams(0.8, 0.6)).eigenvalues)
    wm = np.sort(build_hamiltonian(4, ModelParams(-0.8, 0.6)).eigenvalues)
    assert np.allclose(wp, wm, atol=1e-12)


def test_size_limit_and_argument_validation():
    with pytest.raises(SizeExceeded):
        build_hamiltonian(MAX_SITES + 1, ModelParams(1.0, 1.0))
    with pytest.raises(ValueError):
        build_hamiltonian(1, ModelParams(1.0, 1.0))
    spec = QuenchSpec(ModelParams(1.0, 1.0), ModelParams(1.1, 1.0), math.inf)
    with pytest.raises(ValueError):
        dense_breakdown(4, spec)


def test_grouping_tolerance_ambiguity_is_reported():
    spec = QuenchSpec(ModelParams(0.9, 0.55), ModelParams(1.02, 0.55), 1.7)
    wt = build_hamiltonian(2, spec.post).eigenvalues
    gaps = np.diff(wt)
    gap = float(gaps[gaps > 1e-6][0])
    spread = float(wt[-1] - wt[0])
    with pytest.raises(DegeneracyAmbiguity):
        dense_breakdown(2, spec, degeneracy_tol=gap / spread)


def test_null_quench_is_silent():
    spec = QuenchSpec(ModelParams(1.2, 0.8), ModelParams(1.2, 0.8), 2.0)
    b = dense_breakdown(4, spec)
    assert abs(b.coherence) < 1e-12
    assert abs(b.lag) < 1e-12
    assert abs(b.work) < 1e-12
    assert abs(b.dfree) < 1e-12


def test_identities_hold_per_site():
    spec = QuenchSpec(ModelParams(0.9, 0.55), ModelParams(1.02, 0.55), 1.7)
    for n in (2, 4, 6):
        b = dense_breakdown(n, spec)
        assert b.coherence + b.population == pytest.approx(b.lag, abs=1e-14)
        # dfree comes from the partition functions here, not from the
        # work identity, so this closes a real loop
        assert spec.beta * (b.work - b.dfree) == pytest.approx(
            b.lag, rel=1e-10, abs=1e-12
        )
        assert b.coherence >= 0.0 and b.population >= 0.0


def _two_site_reference(spec):
    """Same physics, rebuilt with complex Pauli matrices from scratch."""
    sx = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
    sy = np.array([[0.0, -1.0j], [1.0j, 0.0]])
    sz = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
    eye = np.eye(2, dtype=complex)

    def ham(p):
        jx, jy = 0.5 * (1.0 + p.gamma), 0.5 * (1.0 - p.gamma)
        return (
            -2.0 * jx * np.kron(sx, sx)
            - 2.0 * jy * np.kron(sy, sy)
            - p.g * (np.kron(sz, eye) + np.kron(eye, sz))
        )

    beta = spec.beta
    w0, v0 = np.linalg.eigh(ham(spec.pre))
    wt, vt = np.linalg.eigh(ham(spec.post))
    p0 = softmax(-beta * w0)
    s0 = float(-np.sum(xlogy(p0, p0)))
    rho0 = (v0 * p0) @ v0.conj().T
    r = vt.conj().T @ rho0 @ vt

    spread = float(wt[-1] - wt[0])
    lam = []
    start = 0
    for i, gap in enumerate(np.diff(wt)):
        if gap > 1e-9 * spread:
            lam.extend(np.linalg.eigvalsh(r[start : i + 1, start : i + 1]))
            start = i + 1
    lam.extend(np.linalg.eigvalsh(r[start:, start:]))
    lam = np.clip(np.array(lam), 0.0, None)
    s_pinch = float(-np.sum(xlogy(lam, lam)))

    lnz0 = float(logsumexp(-beta * w0))
    lnzt = float(logsumexp(-beta * wt))
    e_post = float(np.real(np.diag(r) @ wt))
    e_pre = float(p0 @ w0)
    return {
        "coherence": (s_pinch - s0) / 2.0,
        "lag": (-s0 + beta * e_post + lnzt) / 2.0,
        "population": (-s_pinch + beta * e_post + lnzt) / 2.0,
        "work": (e_post - e_pre) / 2.0,
        "dfree": -(lnzt - lnz0) / (2.0 * beta),
    }


def test_real_arithmetic_matches_a_complex_rebuild():
    spec = QuenchSpec(ModelParams(0.9, 0.55), ModelParams(1.02, 0.55), 1.7)
    ref = _two_site_reference(spec)
    b = dense_breakdown(2, spec)
    assert b.coherence == pytest.approx(ref["coherence"], abs=1e-12)
    assert b.lag == pytest.approx(ref["lag"], abs=1e-12)
    assert b.population == pytest.approx(ref["population"], abs=1e-12)
    assert b.work == pytest.approx(ref["work"], abs=1e-12)
    assert b.dfree == pytest.approx(ref["dfree"], abs=1e-12)


def test_xx_quench_keeps_zero_coherence_at_finite_size():
    spec = QuenchSpec(ModelParams(0.51, 0.0), ModelParams(0.61, 0.0), 2.0)
    b = dense_breakdown(6, spec)
    assert abs(b.coherence) < 1e-10
    assert b.population == pytest.approx(b.lag, abs=1e-10)
