"""High-T coefficients, zero-T formulas, susceptibility, and cusp scans."""

import math

import numpy as np
import pytest
from scipy.special import ellipe

from xyquench.limits import (
    CuspScan,
    HighTCoefficients,
    ZeroTBreakdown,
    high_t_coefficients,
    infinitesimal_high_t,
    kink_cusp_scan,
    susceptibility,
    zero_t_breakdown,
)
from xyquench.model import ModelParams, QuenchSpec
from xyquench.observables import breakdown


def test_infinitesimal_field_quench_closed_forms():
    # for a field quench the c coefficient is gamma0 / (2 (1 + gamma0))
    # per dg^2 inside the gapless-free region |g0| < 1, and the lag
    # coefficient is dg^2 / 2 for every (g0, gamma0): the c + d integrand
    # is constant in k
    dg = 0.01
    for g0, gamma0 in ((0.5, 1.0), (0.0, 1.0), (0.3, 0.5), (0.9, 0.25)):
        h = infinitesimal_high_t(g0, gamma0, dg=dg)
        expected_c = gamma0 / (2.0 * (1.0 + gamma0))
        assert h.c_coeff / dg**2 == pytest.approx(expected_c, rel=1e-10)
        assert h.lag_coeff / dg**2 == pytest.approx(0.5, rel=1e-12)
    outside = infinitesimal_high_t(2.0, 1.0, dg=dg)
    assert outside.c_coeff / dg**2 == pytest.approx(1.0 / 16.0, rel=1e-10)
    assert outside.lag_coeff / dg**2 == pytest.approx(0.5, rel=1e-12)


def test_infinitesimal_anisotropy_quench_closed_form():
    # c + d = dgamma^2 sin^2 k pointwise, so the lag coefficient is
    # dgamma^2 / 4 at any starting point
    for g0, gamma0 in ((0.0, 0.0), (0.7, 0.4), (2.0, 0.9)):
        h = infinitesimal_high_t(g0, gamma0, dgamma=0.02)
        assert h.lag_coeff / 4e-4 == pytest.approx(0.25, rel=1e-12)


def test_infinitesimal_argument_validation():
    with pytest.raises(ValueError):
        infinitesimal_high_t(0.5, 1.0)
    with pytest.raises(ValueError):
        infinitesimal_high_t(0.5, 1.0, dg=0.01, dgamma=0.01)


def test_full_coefficients_are_the_small_beta_limit():
    """Richardson-extrapolate breakdown itself to beta -> 0 and compare."""
    pre, post = ModelParams(2.0, 1.0), ModelParams(2.01, 1.0)
    h = high_t_coefficients(pre, post)

    def at(beta):
        return breakdown(QuenchSpec(pre, post, beta))

    b1, b2 = at(2e-3), at(1e-3)
    for field, coeff in (("coherence", h.c_coeff), ("lag", h.lag_coeff)):
        extrap = (4.0 * getattr(b2, field) / 1e-6 - getattr(b1, field) / 4e-6) / 3.0
        assert coeff == pytest.approx(extrap, rel=1e-5)
    assert h.c_coeff + h.d_coeff == pytest.approx(h.lag_coeff, rel=1e-12)


def test_full_matches_infinitesimal_for_small_amplitude():
    h_full = high_t_coefficients(ModelParams(0.5, 1.0), ModelParams(0.5 + 1e-4, 1.0))
    h_lin = infinitesimal_high_t(0.5, 1.0, dg=1e-4)
    assert h_full.c_coeff == pytest.approx(h_lin.c_coeff, rel=1e-3)
    assert h_full.lag_coeff == pytest.approx(h_lin.lag_coeff, rel=1e-3)


def test_zero_t_null_quench_is_zero():
    z = zero_t_breakdown(ModelParams(0.8, 0.6), ModelParams(0.8, 0.6))
    assert z.coherence == 0.0
    assert z.lag_over_beta == 0.0
    assert z.population_over_beta == 0.0


def test_zero_t_against_momentum_space_riemann_sum():
    """Independent oracle: excitation probability from atan2 angles.

    p_k = sin^2((phi_tau - phi_0)/2) with phi = atan2(gamma sin k, g - cos k)
    fed through the binary entropy and excitation-energy sums on a dense
    midpoint grid; exponentially convergent for this gapped quench.
    """
    pre, post = ModelParams(1.6, 0.7), ModelParams(1.75, 0.7)
    z = zero_t_breakdown(pre, post)
    n = 1 << 15
    ks = (np.arange(n) + 0.5) * (math.pi / n)
    phi0 = np.arctan2(pre.gamma * np.sin(ks), pre.g - np.cos(ks))
    phi1 = np.arctan2(post.gamma * np.sin(ks), post.g - np.cos(ks))
    p = np.sin(0.5 * (phi1 - phi0)) ** 2
    eps1 = np.hypot(post.g - np.cos(ks), post.gamma * np.sin(ks))
    with np.errstate(divide="ignore", invalid="ignore"):
        hbin = np.where(
            (p > 0.0) & (p < 1.0), -p * np.log(p) - (1 - p) * np.log1p(-p), 0.0
        )
    measure = 1.0 / (2.0 * n)
    assert z.coherence == pytest.approx(float(np.sum(hbin)) * measure, rel=1e-10)
    assert z.lag_over_beta == pytest.approx(
        float(np.sum(4.0 * eps1 * p)) * measure, rel=1e-10
    )


def test_zero_t_coherence_bound():
    # even a violent quench cannot push C past (1/2) ln 2
    z = zero_t_breakdown(ModelParams(0.5, 1.0), ModelParams(3.0, 1.0))
    assert 0.0 < z.coherence <= 0.5 * math.log(2.0)


def test_zero_t_validation():
    with pytest.raises(ValueError):
        ZeroTBreakdown(coherence=0.4, lag_over_beta=1.0, population_over_beta=1.0)
    with pytest.raises(ValueError):
        ZeroTBreakdown(coherence=0.1, lag_over_beta=1.0, population_over_beta=0.9)


def test_high_t_coefficients_validation():
    with pytest.raises(ValueError):
        HighTCoefficients(c_coeff=1.0, d_coeff=1.0, lag_coeff=1.0)
    with pytest.raises(ValueError):
        HighTCoefficients(c_coeff=-0.5, d_coeff=1.5, lag_coeff=1.0)


def test_susceptibility_against_elliptic_integral_oracle():
    """gamma = 1 ground energy is -(2/pi)(1+g) E(4g/(1+g)^2) exactly."""

    def e0(g):
        m = 4.0 * g / (1.0 + g) ** 2
        return -(2.0 / math.pi) * (1.0 + g) * ellipe(m)

    h = 1e-3
    d_h = (e0(3.0 + h) - 2.0 * e0(3.0) + e0(3.0 - h)) / (h * h)
    d_h2 = (e0(3.0 + h / 2) - 2.0 * e0(3.0) + e0(3.0 - h / 2)) / (h * h / 4.0)
    ref = -(4.0 * d_h2 - d_h) / 3.0
    assert susceptibility(3.0, 1.0) == pytest.approx(ref, rel=1e-4)


def test_susceptibility_decays_away_from_the_transition():
    values = [susceptibility(g, 1.0) for g in (1.5, 2.0, 3.0)]
    assert values[0] > values[1] > values[2] > 0.0
    with pytest.raises(ValueError):
        susceptibility(2.0, 1.0, step=0.0)


def test_scan_flags_the_zero_t_cusp():
    scan = kink_cusp_scan(1.0, 0.01, math.inf)
    assert scan.curve == "zero_t"
    assert scan.flagged
    assert scan.peak_location == pytest.approx(0.99, abs=1e-12)
    assert scan.peak_value == pytest.approx(0.002471634448446486, rel=1e-9)
    assert scan.peak_excess > 0.0
    assert scan.s_plus < -0.1


def test_scan_does_not_flag_the_smooth_high_t_curve():
    scan = kink_cusp_scan(1.0, 0.01, 0.1)
    assert scan.curve == "full"
    assert not scan.flagged


def test_scan_flags_the_infinitesimal_kink():
    scan = kink_cusp_scan(1.0, 0.01, 0.05, curve="infinitesimal")
    assert scan.flagged
    # left of the transition the coefficient is flat, right of it the
    # slope per dg^2 approaches -1/2
    assert abs(scan.s_minus / 1e-4) < 0.02
    assert scan.s_plus / 1e-4 == pytest.approx(-0.5, rel=0.05)


def test_scan_is_deterministic():
    a = kink_cusp_scan(1.0, 0.01, math.inf)
    b = kink_cusp_scan(1.0, 0.01, math.inf)
    assert np.array_equal(a.values, b.values)
    assert a.s_plus == b.s_plus and a.jump == b.jump


def test_scan_validation():
    with pytest.raises(ValueError):
        kink_cusp_scan(1.0, 0.01, 1.0, window=0.01, resolution=0.01)
    with pytest.raises(ValueError):
        kink_cusp_scan(1.0, 0.01, math.inf, curve="full")
    with pytest.raises(ValueError):
        kink_cusp_scan(1.0, 0.01, 1.0, curve="nope")
    assert isinstance(kink_cusp_scan(1.0, 0.01, 2.0), CuspScan)
