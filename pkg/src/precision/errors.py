class DomainError(ValueError):
    """Argument lies outside the mathematical domain of the operation."""


class UnsupportedRuleError(ValueError):
    """Correction rule has no closed-form denominator a_p."""


class InsufficientDataError(ValueError):
    """Not enough sample points for a fit."""


class UnknownIntegrandError(ValueError):
    """Integrand id is outside the enumerated quadrature set."""


class ConfigError(ValueError):
    """Invalid run configuration (flag or environment value)."""
