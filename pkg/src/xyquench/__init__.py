"""Entropy production for sudden quenches of the XY spin chain.

The irreversible entropy production per particle of a sudden quench
splits exactly into a quantum-coherence part and a classical population
part. This package computes both, in the thermodynamic limit and for
finite rings, with analytic high- and low-temperature limits and two
independent brute-force oracles.
"""

from .errors import (
    DegenerateAngle,
    DegeneracyAmbiguity,
    QuadratureFailure,
    SizeExceeded,
)
from .lattice import LatticeSpec, breakdown_finite, initial_entropy_per_site, momenta
from .limits import (
    CuspScan,
    HighTCoefficients,
    ZeroTBreakdown,
    high_t_coefficients,
    infinitesimal_high_t,
    kink_cusp_scan,
    susceptibility,
    zero_t_breakdown,
)
from .model import (
    BogoliubovTrig,
    ModeData,
    ModelParams,
    QuenchSpec,
    bogoliubov_trig,
    delta_trig,
    dispersion,
    mode_data,
)
from .modestate import (
    ModePairState,
    build_mode_state,
    dephase,
    pair_hamiltonian_diag,
    relative_entropy,
    thermal_pair_log_diag,
    thermal_pair_state,
    vn_entropy,
)
from .observables import (
    EntropyBreakdown,
    breakdown,
    coherence_integrand,
    dfree_integrand,
    lag_integrand,
    population_integrand,
    work_integrand,
)
from .quadrature import QuadratureConfig, critical_splits, integrate
from .spinchain_oracle import dense_breakdown

__version__ = "0.1.0"

__all__ = [
    "BogoliubovTrig",
    "CuspScan",
    "DegeneracyAmbiguity",
    "DegenerateAngle",
    "EntropyBreakdown",
    "HighTCoefficients",
    "LatticeSpec",
    "ModeData",
    "ModePairState",
    "ModelParams",
    "QuadratureConfig",
    "QuadratureFailure",
    "QuenchSpec",
    "SizeExceeded",
    "ZeroTBreakdown",
    "bogoliubov_trig",
    "breakdown",
    "breakdown_finite",
    "build_mode_state",
    "coherence_integrand",
    "critical_splits",
    "delta_trig",
    "dense_breakdown",
    "dephase",
    "dfree_integrand",
    "dispersion",
    "high_t_coefficients",
    "infinitesimal_high_t",
    "initial_entropy_per_site",
    "integrate",
    "kink_cusp_scan",
    "lag_integrand",
    "mode_data",
    "momenta",
    "pair_hamiltonian_diag",
    "population_integrand",
    "relative_entropy",
    "susceptibility",
    "thermal_pair_log_diag",
    "thermal_pair_state",
    "vn_entropy",
    "work_integrand",
    "zero_t_breakdown",
]
