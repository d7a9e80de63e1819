"""XY chain dispersion, Bogoliubov angles, and quench angle differences.

Conventions used throughout the package:

* momenta ``k`` live in the open interval (0, pi); the endpoints belong to
  neither the finite-N momentum set nor any quadrature panel,
* energies are in units of the exchange coupling,
* trig pairs (sin, cos) of the Bogoliubov angle and of the quench angle
  difference are computed directly from the Cartesian components
  ``(g - cos k, gamma sin k)`` so signs survive; no arccos round trips.

All functions accept a scalar momentum or a 1-D array and return matching
shapes. Everything here is pure and safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

from .errors import DegenerateAngle

__all__ = [
    "ModelParams",
    "QuenchSpec",
    "ModeData",
    "BogoliubovTrig",
    "dispersion",
    "bogoliubov_trig",
    "delta_trig",
    "mode_data",
]

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class ModelParams:
    """A point (g, gamma) in the XY phase diagram.

    Parameters
    ----------
    g : float
        Transverse field. Any finite real value.
    gamma : float
        Anisotropy, restricted to [0, 1]. gamma = 0 is the XX chain,
        gamma = 1 the transverse-field Ising chain.
    """

    g: float
    gamma: float

    def __post_init__(self):
        g = float(self.g)
        gamma = float(self.gamma)
        if not math.isfinite(g):
            raise ValueError(f"g must be finite, got {g!r}")
        if not (0.0 <= gamma <= 1.0):
            raise ValueError(f"gamma must lie in [0, 1], got {gamma!r}")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "gamma", gamma)


@dataclass(frozen=True)
class QuenchSpec:
    """A sudden quench (g0, gamma0) -> (g_tau, gamma_tau) at inverse temperature beta.

    beta = math.inf is a legal distinguished value: it routes to the
    zero-temperature code paths (the ``limits`` module); the finite-beta
    integrands reject it.
    """

    pre: ModelParams
    post: ModelParams
    beta: float

    def __post_init__(self):
        beta = float(self.beta)
        if math.isnan(beta) or beta <= 0.0:
            raise ValueError(f"beta must be positive (inf allowed), got {beta!r}")
        object.__setattr__(self, "beta", beta)

    @property
    def zero_temperature(self) -> bool:
        return math.isinf(self.beta)

    @property
    def dg(self) -> float:
        """Signed field quench amplitude g_tau - g0."""
        return self.post.g - self.pre.g

    @property
    def dgamma(self) -> float:
        """Signed anisotropy quench amplitude gamma_tau - gamma0."""
        return self.post.gamma - self.pre.gamma


@dataclass(frozen=True)
class ModeData:
    """Per-momentum derived quantities for one quench.

    Fields are scalars or arrays matching the momentum argument:
    pre/post energies, the trig pair of the quench angle difference, and
    the excitation probability ``p = (1 - cos_delta)/2 = sin^2(Delta/2)``.
    """

    k: ArrayLike
    eps0: ArrayLike
    epsT: ArrayLike
    sin_delta: ArrayLike
    cos_delta: ArrayLike
    p: ArrayLike


class BogoliubovTrig(NamedTuple):
    sin_theta: ArrayLike
    cos_theta: ArrayLike
    degenerate: Union[bool, np.ndarray]


def _prep(k) -> tuple[np.ndarray, bool]:
    arr = np.asarray(k, dtype=float)
    return np.atleast_1d(arr), arr.ndim == 0


def _out(x: np.ndarray, scalar: bool) -> ArrayLike:
    return float(x[0]) if scalar else x


def dispersion(params: ModelParams, k: ArrayLike) -> ArrayLike:
    """Single-mode energy sqrt[(g - cos k)^2 + gamma^2 sin^2 k].

    Evaluated with hypot, so it is exactly |g - cos k| when gamma = 0 and
    never produces NaN on k in [0, pi].
    """
    ka, scalar = _prep(k)
    eps = np.hypot(params.g - np.cos(ka), params.gamma * np.sin(ka))
    return _out(eps, scalar)


def bogoliubov_trig(params: ModelParams, k: ArrayLike) -> BogoliubovTrig:
    """Trig pair (sin theta, cos theta) of the Bogoliubov angle.

    Returns ``(gamma sin k / eps, (g - cos k)/eps)``. Where eps = 0 the
    angle is undefined; the convention (0, 1) is returned and the
    ``degenerate`` flag set so callers can turn the momentum into a
    quadrature split point instead of sampling it.
    """
    ka, scalar = _prep(k)
    a = params.g - np.cos(ka)
    b = params.gamma * np.sin(ka)
    eps = np.hypot(a, b)
    deg = eps == 0.0
    safe = np.where(deg, 1.0, eps)
    sin_t = np.where(deg, 0.0, b / safe)
    cos_t = np.where(deg, 1.0, a / safe)
    if scalar:
        return BogoliubovTrig(float(sin_t[0]), float(cos_t[0]), bool(deg[0]))
    return BogoliubovTrig(sin_t, cos_t, deg)


def delta_trig(spec: QuenchSpec, k: ArrayLike) -> tuple[ArrayLike, ArrayLike]:
    """Trig pair (sin Delta_k, cos Delta_k) of the quench angle difference.

    sin Delta_k = sin k [gamma_tau (g0 - cos k) - gamma0 (g_tau - cos k)] / (epsT eps0)
    cos Delta_k = [(g_tau - cos k)(g0 - cos k) + gamma_tau gamma0 sin^2 k] / (epsT eps0)

    The cosine comes from the product formula, never from sqrt(1 - sin^2),
    so its sign is preserved (the XX chain flips it at k* = arccos g0).

    Raises
    ------
    DegenerateAngle
        If either mode energy vanishes at any requested momentum.
    """
    ka, scalar = _prep(k)
    c = np.cos(ka)
    s = np.sin(ka)
    a0 = spec.pre.g - c
    aT = spec.post.g - c
    eps0 = np.hypot(a0, spec.pre.gamma * s)
    epsT = np.hypot(aT, spec.post.gamma * s)
    bad = (eps0 == 0.0) | (epsT == 0.0)
    if np.any(bad):
        kbad = ka[bad][0]
        raise DegenerateAngle(
            f"mode energy vanishes at k = {kbad!r}; treat it as a split point"
        )
    denom = epsT * eps0
    sin_d = s * (spec.post.gamma * a0 - spec.pre.gamma * aT) / denom
    cos_d = (aT * a0 + spec.post.gamma * spec.pre.gamma * s * s) / denom
    return _out(sin_d, scalar), _out(cos_d, scalar)


def mode_data(spec: QuenchSpec, k: ArrayLike) -> ModeData:
    """Bundle energies, angle-difference trig, and p_k for the given momenta.

    p is evaluated as sin^2(Delta)/(2 (1 + cos Delta)) on the cos >= 0 side,
    which keeps it nonnegative and fully accurate however close cos Delta
    rounds to 1; the direct complement is safe on the other side.
    """
    ka, scalar = _prep(k)
    sin_d, cos_d = delta_trig(spec, ka)
    eps0 = dispersion(spec.pre, ka)
    epsT = dispersion(spec.post, ka)
    p = np.where(
        cos_d >= 0.0,
        0.5 * sin_d * sin_d / (1.0 + np.abs(cos_d)),
        0.5 * (1.0 - cos_d),
    )
    if scalar:
        return ModeData(
            k=float(ka[0]),
            eps0=float(eps0[0]),
            epsT=float(epsT[0]),
            sin_delta=float(sin_d[0]),
            cos_delta=float(cos_d[0]),
            p=float(p[0]),
        )
    return ModeData(k=ka, eps0=eps0, epsT=epsT, sin_delta=sin_d, cos_delta=cos_d, p=p)
