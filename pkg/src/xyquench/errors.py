"""Exception types shared across the package."""


class DegenerateAngle(ValueError):
    """A mode energy vanished where a Bogoliubov angle was required.

    Raised (or signalled via a flag, see ``model.bogoliubov_trig``) at
    momenta where the dispersion is exactly zero. Integrators must treat
    such momenta as interval split points instead of sampling them.
    """


class QuadratureFailure(RuntimeError):
    """Adaptive integration ran out of budget before reaching tolerance.

    Carries the best available ``value`` and ``error`` estimates.
    """

    def __init__(self, message, value=None, error=None):
        super().__init__(message)
        self.value = value
        self.error = error


class SizeExceeded(ValueError):
    """Dense simulation requested for a chain too large to diagonalize."""


class DegeneracyAmbiguity(RuntimeError):
    """An eigenvalue gap sits at the degeneracy grouping tolerance.

    Dephasing projects onto eigenspaces; when a spectral gap is of the
    same order as the grouping tolerance the projection is ill defined.
    The tolerance is adjustable on the calling operation.
    """
