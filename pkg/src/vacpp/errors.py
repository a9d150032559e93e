"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Malformed or inconsistent run configuration."""


class PulseOverlapError(ValueError):
    """Waiting time too short for the pump and probe pulses to be disjoint."""


class UnsupportedRegimeError(ValueError):
    """Parameters fall outside the regime a formula is derived for."""


class ConvergenceError(RuntimeError):
    """Quadrature result changed too much when the grid was refined.

    Carries both resolutions so the caller can judge the drift.
    """

    def __init__(self, message: str, coarse: float, fine: float):
        super().__init__(message)
        self.coarse = coarse
        self.fine = fine
