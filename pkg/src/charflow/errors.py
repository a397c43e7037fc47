"""Exception types shared across the solver."""


class CharflowError(Exception):
    pass


class ConfigError(CharflowError):
    """Bad or missing configuration (file syntax, unknown keys, invalid values)."""


class StepBlowUp(CharflowError):
    """A time step produced a non-finite value.

    Carries the name of the first offending field and the time.
    """

    def __init__(self, field, t):
        self.field = field
        self.t = t
        super().__init__(f"non-finite values in field '{field}' at T={t:.6g}")


class EnergyDriftExceeded(CharflowError):
    """Relative energy drift crossed the configured tolerance.

    The run is aborted: drifting energy signals an under-resolved grid,
    not a property of the equations.
    """

    def __init__(self, drift, step, t):
        self.drift = drift
        self.step = step
        self.t = t
        super().__init__(
            f"relative energy drift {drift:.3e} exceeded tolerance at "
            f"step {step} (T={t:.6g})"
        )


class BreakingApproached(CharflowError):
    """The classical solver detected incipient wave breaking (sup|u_x| too large).

    The classical formulation is invalid past breaking; only the
    characteristic pipeline may continue.
    """

    def __init__(self, t, sup_ux):
        self.t = t
        self.sup_ux = sup_ux
        super().__init__(f"sup|u_x|={sup_ux:.3g} at t={t:.6g}: stopping pre-breaking solver")


class NonMonotoneX(CharflowError):
    """Characteristic positions x(Z) lost monotonicity (upstream integration error)."""
