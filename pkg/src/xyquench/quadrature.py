"""Adaptive Gauss-Kronrod integration over the Brillouin zone (0, pi).

The integrator is panel based with a 7-point Gauss / 15-point Kronrod pair
per panel. It supports vector-valued integrands evaluated on shared panels,
which is what keeps linear identities between components intact at the
floating-point level. The error estimate per component is the plain
|K15 - G7| difference, which is conservative.

Endpoints and split points are panel boundaries and are never sampled, so
integrands may be singular or undefined there (open-interval evaluation).

Determinism: the final result is the pairwise numpy sum over panels sorted
by left edge, so it is bit-reproducible for a fixed panel set regardless of
the refinement history or any caller-side parallelism.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import QuadratureFailure
from .model import ModelParams, QuenchSpec, dispersion

__all__ = ["QuadratureConfig", "integrate", "critical_splits"]

# Kronrod 15-point abscissae on [-1, 1], ascending, with the embedded
# 7-point Gauss rule on the odd indices. Standard published constants.
_XGK_POS = np.array(
    [
        0.9914553711208126,
        0.9491079123427585,
        0.8648644233597691,
        0.7415311855993944,
        0.5860872354676911,
        0.4058451513773972,
        0.2077849550078985,
        0.0,
    ]
)
_WGK_POS = np.array(
    [
        0.0229353220105292,
        0.0630920926299786,
        0.1047900103222502,
        0.1406532597155259,
        0.1690047266392679,
        0.1903505780647854,
        0.2044329400752989,
        0.2094821410847278,
    ]
)
_WG_POS = np.array(
    [
        0.1294849661688697,
        0.2797053914892767,
        0.3818300505051189,
        0.4179591836734694,
    ]
)

_XGK = np.concatenate([-_XGK_POS[:-1], _XGK_POS[::-1]])
_WGK = np.concatenate([_WGK_POS[:-1], _WGK_POS[::-1]])
_WG = np.concatenate([_WG_POS[:-1], _WG_POS[::-1]])
_GAUSS_IDX = np.arange(1, 15, 2)


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances, budget, and forced panel boundaries for integrate().

    Termination requires, for every component, total error estimate
    <= max(abs_tol, rel_tol * |value|).
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_subdivisions: int = 2000
    extra_splits: tuple = ()

    def __post_init__(self):
        if not (self.rel_tol > 0.0 and self.abs_tol > 0.0):
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be at least 1")
        object.__setattr__(self, "extra_splits", tuple(float(s) for s in self.extra_splits))

    def with_splits(self, points) -> "QuadratureConfig":
        """Return a copy with additional forced split points merged in."""
        merged = sorted(set(self.extra_splits) | {float(p) for p in points})
        return replace(self, extra_splits=tuple(merged))


def _panel(f, a: float, b: float):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    y = np.asarray(f(mid + half * _XGK), dtype=float)
    was_1d = y.ndim == 1
    if was_1d:
        y = y[:, np.newaxis]
    if y.ndim != 2 or y.shape[0] != 15:
        raise ValueError("integrand must return shape (n,) or (n, m) for n momenta")
    val = half * (_WGK @ y)
    err = np.abs(val - half * (_WG @ y[_GAUSS_IDX]))
    return val, err, was_1d


def _edges(extra_splits) -> list:
    pts = []
    for s in extra_splits:
        s = float(s)
        if not math.isfinite(s) or not (0.0 < s < math.pi):
            raise ValueError(f"split points must lie strictly inside (0, pi), got {s!r}")
        pts.append(s)
    pts.sort()
    edges = [0.0]
    for s in pts:
        if s - edges[-1] > 1e-12:
            edges.append(s)
    if math.pi - edges[-1] <= 1e-12:
        edges.pop()
    edges.append(math.pi)
    return edges


def integrate(f, config: QuadratureConfig | None = None):
    """Integrate f over (0, pi); returns (value, error_estimate).

    f maps a 1-D momentum array of length n to shape (n,) for a scalar
    integrand or (n, m) for m components sharing the panel set. The return
    value/error are floats in the scalar case, arrays of length m otherwise.
    No 1/(2 pi) measure is applied here; that normalization belongs to the
    caller.

    Raises
    ------
    QuadratureFailure
        If the subdivision budget is exhausted; the exception carries the
        best value and error estimates.
    """
    cfg = config if config is not None else QuadratureConfig()
    edges = _edges(cfg.extra_splits)

    lefts: list = []
    vals: list = []
    errs: list = []
    scalar = True
    for a, b in zip(edges[:-1], edges[1:]):
        v, e, was_1d = _panel(f, a, b)
        scalar = scalar and was_1d
        lefts.append(a)
        vals.append(v)
        errs.append(e)
    rights = list(edges[1:])
    # Panels too narrow to bisect without a node rounding onto an edge
    # (relevant next to integrable singularities) get frozen instead of
    # split; their error estimate still counts toward the total.
    frozen: list = [False] * len(lefts)
    min_width = 1024.0 * np.finfo(float).eps

    nsub = 0
    while True:
        vmat = np.stack(vals)
        emat = np.stack(errs)
        total = vmat.sum(axis=0)
        toterr = emat.sum(axis=0)
        target = np.maximum(cfg.abs_tol, cfg.rel_tol * np.abs(total))
        if np.all(toterr <= target):
            break
        scores = (emat / target).max(axis=1)
        scores[np.asarray(frozen)] = -np.inf
        worst = int(np.argmax(scores))
        if nsub >= cfg.max_subdivisions or scores[worst] == -np.inf:
            order = np.argsort(lefts, kind="stable")
            value = vmat[order].sum(axis=0)
            error = emat[order].sum(axis=0)
            if scalar:
                value, error = float(value[0]), float(error[0])
            raise QuadratureFailure(
                f"tolerance not reached after {nsub} subdivisions",
                value=value,
                error=error,
            )
        a, b = lefts[worst], rights[worst]
        if b - a < min_width * max(1.0, abs(a), abs(b)):
            frozen[worst] = True
            continue
        mid = 0.5 * (a + b)
        v1, e1, _ = _panel(f, a, mid)
        v2, e2, _ = _panel(f, mid, b)
        lefts[worst], rights[worst], vals[worst], errs[worst] = a, mid, v1, e1
        lefts.append(mid)
        rights.append(b)
        vals.append(v2)
        errs.append(e2)
        frozen.append(False)
        nsub += 1

    order = np.argsort(lefts, kind="stable")
    value = np.stack(vals)[order].sum(axis=0)
    error = np.stack(errs)[order].sum(axis=0)
    if scalar:
        return float(value[0]), float(error[0])
    return value, error


def _param_splits(params: ModelParams, gap_threshold: float) -> list:
    """Forced split points contributed by one parameter point.

    Interior zeros of the XX dispersion are exact split points; a small but
    nonzero gap minimum contributes a nearby interior point (clamped away
    from the endpoints, which are already panel boundaries).
    """
    out = []
    g, gamma = params.g, params.gamma
    if gamma == 0.0 and abs(g) <= 1.0:
        kstar = math.acos(g)
        if 1e-9 < kstar < math.pi - 1e-9:
            out.append(kstar)
        else:
            out.append(0.01 if kstar <= 1e-9 else math.pi - 0.01)
        return out
    candidates = []
    if gamma < 1.0:
        c = g / (1.0 - gamma * gamma)
        if abs(c) < 1.0:
            candidates.append(math.acos(c))
    candidates.extend([0.0, math.pi])
    for k in candidates:
        if dispersion(params, k) < gap_threshold:
            out.append(min(max(k, 0.01), math.pi - 0.01))
    return out


def critical_splits(spec: QuenchSpec, *, gap_threshold: float = 0.05) -> tuple:
    """Momenta that must be panel boundaries for this quench.

    Collects, for both the pre- and post-quench parameters, the exact XX
    gap-closing momenta arccos(g) (gamma = 0, |g| <= 1) and near-critical
    gap minima below ``gap_threshold``. Sorted, deduplicated, strictly
    inside (0, pi).
    """
    pts = _param_splits(spec.pre, gap_threshold) + _param_splits(spec.post, gap_threshold)
    pts.sort()
    out: list = []
    for p in pts:
        if not out or p - out[-1] > 1e-9:
            out.append(p)
    return tuple(out)
