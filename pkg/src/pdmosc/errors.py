"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A model parameter set violates its admissibility conditions."""


class DomainError(ValueError):
    """An evaluation point lies outside the domain of the requested map."""


class NoSuchStateError(DomainError):
    """The requested quantum number falls outside the admitted window."""


class ConvergenceError(RuntimeError):
    """An iterative numerical routine failed to reach its tolerance."""
