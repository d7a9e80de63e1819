"""High-temperature and zero-temperature limit formulas, susceptibility,
and non-analyticity scans across the critical field.

Zero temperature is its own code path here; it is never approximated by
pushing beta large through the finite-beta formulas (those stay exact but
the pure-state logarithms make their limits implicit rather than explicit).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from . import observables
from .model import ModelParams, QuenchSpec, mode_data
from .quadrature import QuadratureConfig, _param_splits, integrate

__all__ = [
    "HighTCoefficients",
    "ZeroTBreakdown",
    "CuspScan",
    "high_t_coefficients",
    "infinitesimal_high_t",
    "zero_t_breakdown",
    "susceptibility",
    "kink_cusp_scan",
]

_TWO_PI = 2.0 * math.pi
_GAP_THRESHOLD = 0.05


@dataclass(frozen=True)
class HighTCoefficients:
    """Leading beta^2 coefficients: C ~ c beta^2, D ~ d beta^2, lag ~ s beta^2."""

    c_coeff: float
    d_coeff: float
    lag_coeff: float

    def __post_init__(self):
        tol = max(1e-14, 1e-10 * abs(self.lag_coeff))
        if abs(self.c_coeff + self.d_coeff - self.lag_coeff) > tol:
            raise ValueError("coefficient splitting identity violated")
        for name in ("c_coeff", "d_coeff", "lag_coeff"):
            if getattr(self, name) < -tol:
                raise ValueError(f"{name} is negative beyond tolerance")


@dataclass(frozen=True)
class ZeroTBreakdown:
    """T = 0 densities: C is beta-independent, lag and D grow as beta.

    ``population_over_beta`` equals ``lag_over_beta`` because the finite C
    contributes nothing to the beta-divided split in the limit.
    """

    coherence: float
    lag_over_beta: float
    population_over_beta: float

    def __post_init__(self):
        if not -1e-14 <= self.coherence <= 0.5 * math.log(2.0) + 1e-12:
            raise ValueError(f"coherence out of [0, ln(2)/2]: {self.coherence!r}")
        if self.lag_over_beta < -1e-14:
            raise ValueError("lag_over_beta is negative beyond tolerance")
        if self.population_over_beta != self.lag_over_beta:
            raise ValueError("population_over_beta must equal lag_over_beta")


def _merged_config(config: QuadratureConfig | None, *params: ModelParams) -> QuadratureConfig:
    cfg = config if config is not None else QuadratureConfig()
    pts: list = []
    for p in params:
        pts.extend(_param_splits(p, _GAP_THRESHOLD))
    return cfg.with_splits(pts)


def high_t_coefficients(
    pre: ModelParams, post: ModelParams, config: QuadratureConfig | None = None
) -> HighTCoefficients:
    """beta^2 coefficients of C, D, and the lag for an arbitrary quench.

    Integrates (eps0 sin Delta)^2, (epsT - eps0 cos Delta)^2, and
    epsT^2 - 2 epsT eps0 cos Delta + eps0^2 over dk/(2 pi). The third
    integrand equals the sum of the first two pointwise, so the shared
    panels keep the coefficient splitting exact.
    """
    spec = QuenchSpec(pre, post, beta=math.inf)
    cfg = _merged_config(config, pre, post)

    def f(ks: np.ndarray) -> np.ndarray:
        md = mode_data(spec, ks)
        c = (md.eps0 * md.sin_delta) ** 2
        d = (md.epsT - md.eps0 * md.cos_delta) ** 2
        s = md.epsT**2 - 2.0 * md.epsT * md.eps0 * md.cos_delta + md.eps0**2
        return np.column_stack([c, d, s])

    value, _ = integrate(f, cfg)
    c, d, s = (value / _TWO_PI).tolist()
    return HighTCoefficients(c_coeff=max(c, 0.0), d_coeff=max(d, 0.0), lag_coeff=max(s, 0.0))


def infinitesimal_high_t(
    g0: float,
    gamma0: float,
    *,
    dg: float = 0.0,
    dgamma: float = 0.0,
    config: QuadratureConfig | None = None,
) -> HighTCoefficients:
    """The delta -> 0 limit coefficients for a pure field or anisotropy quench.

    Uses the linearized angle difference, sin Delta ~ -dg gamma0 sin k / eps0^2
    for field quenches and dgamma (g0 - cos k) sin k / eps0^2 for anisotropy
    quenches. The lag coefficient integrand reduces to a total square, so it
    comes out as dg^2 / 2 respectively dgamma^2 / 4 to quadrature accuracy.
    """
    if (dg == 0.0) == (dgamma == 0.0):
        raise ValueError("supply exactly one of dg, dgamma (nonzero)")
    params = ModelParams(g0, gamma0)
    cfg = _merged_config(config, params)

    def f(ks: np.ndarray) -> np.ndarray:
        c_ang = np.cos(ks)
        s_ang = np.sin(ks)
        a0 = params.g - c_ang
        eps2 = a0 * a0 + (params.gamma * s_ang) ** 2
        if dg != 0.0:
            c = dg * dg * (params.gamma * s_ang) ** 2 / eps2
            d = dg * dg * a0 * a0 / eps2
        else:
            c = dgamma * dgamma * (a0 * s_ang) ** 2 / eps2
            d = dgamma * dgamma * (params.gamma * s_ang * s_ang) ** 2 / eps2
        return np.column_stack([c, d, c + d])

    value, _ = integrate(f, cfg)
    c, d, s = (value / _TWO_PI).tolist()
    return HighTCoefficients(c_coeff=max(c, 0.0), d_coeff=max(d, 0.0), lag_coeff=max(s, 0.0))


def zero_t_breakdown(
    pre: ModelParams, post: ModelParams, config: QuadratureConfig | None = None
) -> ZeroTBreakdown:
    """Exact T = 0 densities from the excitation probability p_k.

    coherence = int dk/(2 pi) [-p ln p - (1-p) ln(1-p)];
    lag_over_beta = 4 int dk/(2 pi) epsT p.
    """
    spec = QuenchSpec(pre, post, beta=math.inf)
    cfg = _merged_config(config, pre, post)

    def f(ks: np.ndarray) -> np.ndarray:
        md = mode_data(spec, ks)
        # md.p is the half-angle form, guaranteed in [0, 1] even where
        # cos_delta rounds a hair outside [-1, 1]; build the complement the
        # same way so xlogy never sees a negative argument
        tight = md.sin_delta * md.sin_delta / (1.0 + np.abs(md.cos_delta))
        pbar = np.where(md.cos_delta >= 0.0, 0.5 * (1.0 + md.cos_delta), 0.5 * tight)
        hbin = -xlogy(md.p, md.p) - xlogy(pbar, pbar)
        return np.column_stack([hbin, 4.0 * md.epsT * md.p])

    value, _ = integrate(f, cfg)
    coh, lob = (value / _TWO_PI).tolist()
    coh = min(max(coh, 0.0), 0.5 * math.log(2.0))
    lob = max(lob, 0.0)
    return ZeroTBreakdown(coherence=coh, lag_over_beta=lob, population_over_beta=lob)


def _ground_energy_density(params: ModelParams, cfg: QuadratureConfig) -> float:
    """e0 = -(1/pi) int_0^pi eps_k dk."""
    merged = _merged_config(cfg, params)

    def f(ks: np.ndarray) -> np.ndarray:
        return np.hypot(params.g - np.cos(ks), params.gamma * np.sin(ks))

    value, _ = integrate(f, merged)
    return -value / math.pi


def susceptibility(
    g0: float, gamma0: float, step: float = 1e-4, config: QuadratureConfig | None = None
) -> float:
    """chi = -d^2 e0 / d g0^2 by Richardson-extrapolated central differences.

    Central second differences at steps h and h/2 are combined as
    (4 D(h/2) - D(h)) / 3, cancelling the leading O(h^2) error. The ground
    state energy integrals run at tight tolerance because the division by
    h^2 amplifies any quadrature noise.
    """
    if not step > 0.0:
        raise ValueError("step must be positive")
    cfg = config if config is not None else QuadratureConfig(rel_tol=1e-13, abs_tol=1e-15)
    e_center = _ground_energy_density(ModelParams(g0, gamma0), cfg)

    def second_diff(h: float) -> float:
        ep = _ground_energy_density(ModelParams(g0 + h, gamma0), cfg)
        em = _ground_energy_density(ModelParams(g0 - h, gamma0), cfg)
        return (ep - 2.0 * e_center + em) / (h * h)

    d_h = second_diff(step)
    d_h2 = second_diff(0.5 * step)
    return -(4.0 * d_h2 - d_h) / 3.0


@dataclass(frozen=True)
class CuspScan:
    """Report of a symmetric scan of the coherence curve around g0 = 1.

    ``s_minus``/``s_plus`` are the one-sided slopes at the finest step;
    ``jump`` is their absolute difference. ``noise`` is the refinement
    shrinkage of the jump, floored at 0.1% of the slope scale: for an
    analytic curve the jump halves when the step halves, so a jump that
    persists (``jump > 10 * noise``) flags a kink or cusp. ``peak_excess``
    is the peak value minus the straight line through the window edges.
    """

    curve: str
    grid: np.ndarray
    values: np.ndarray
    center_value: float
    s_minus: float
    s_plus: float
    jump: float
    noise: float
    flagged: bool
    peak_value: float
    peak_location: float
    peak_excess: float


def kink_cusp_scan(
    gamma0: float,
    delta: float,
    beta: float,
    *,
    window: float = 0.1,
    resolution: float = 0.005,
    curve: str = "auto",
    config: QuadratureConfig | None = None,
) -> CuspScan:
    """Scan the coherence across the critical field and test for non-analyticity.

    ``curve`` selects what is scanned as a function of g0:

    * "full": C from the finite-beta formulas (field quench of amplitude
      ``delta`` at the given beta),
    * "zero_t": the T = 0 coherence (requires beta = inf in "auto" mode),
    * "infinitesimal": the delta -> 0 high-temperature coefficient
      c(g0) * delta^2 (beta-independent),
    * "auto": "zero_t" if beta is inf, else "full".
    """
    if not (window > 0.0 and resolution > 0.0 and window >= 2.0 * resolution):
        raise ValueError("need window >= 2 * resolution > 0")
    if curve == "auto":
        curve = "zero_t" if math.isinf(beta) else "full"
    if curve not in ("full", "zero_t", "infinitesimal"):
        raise ValueError(f"unknown curve {curve!r}")
    if curve == "full" and math.isinf(beta):
        raise ValueError("curve='full' needs finite beta")

    if curve == "full":

        def value(g: float) -> float:
            spec = QuenchSpec(ModelParams(g, gamma0), ModelParams(g + delta, gamma0), beta)
            return observables.breakdown(spec, config).coherence

    elif curve == "zero_t":

        def value(g: float) -> float:
            return zero_t_breakdown(
                ModelParams(g, gamma0), ModelParams(g + delta, gamma0), config
            ).coherence

    else:

        def value(g: float) -> float:
            return infinitesimal_high_t(g, gamma0, dg=delta, config=config).c_coeff

    center = 1.0
    n = int(round(window / resolution))
    grid = center + resolution * np.arange(-n, n + 1)
    vals = np.array([value(g) for g in grid])
    center_value = float(vals[n])

    h = resolution
    v_p_half = value(center + 0.5 * h)
    v_m_half = value(center - 0.5 * h)
    s_plus_h = (vals[n + 1] - center_value) / h
    s_minus_h = (center_value - vals[n - 1]) / h
    s_plus = (v_p_half - center_value) / (0.5 * h)
    s_minus = (center_value - v_m_half) / (0.5 * h)

    jump_h = abs(s_plus_h - s_minus_h)
    jump = abs(s_plus - s_minus)
    scale = max(abs(s_plus), abs(s_minus), 1e-300)
    noise = max(jump_h - jump, 1e-3 * scale)
    flagged = bool(jump > 10.0 * noise)

    i_peak = int(np.argmax(vals))
    peak_value = float(vals[i_peak])
    peak_location = float(grid[i_peak])
    frac = (peak_location - grid[0]) / (grid[-1] - grid[0])
    background = float(vals[0] + (vals[-1] - vals[0]) * frac)
    return CuspScan(
        curve=curve,
        grid=grid,
        values=vals,
        center_value=center_value,
        s_minus=float(s_minus),
        s_plus=float(s_plus),
        jump=float(jump),
        noise=float(noise),
        flagged=flagged,
        peak_value=peak_value,
        peak_location=peak_location,
        peak_excess=peak_value - background,
    )
