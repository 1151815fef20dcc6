"""Surface-assisted spectrum sensing: channels, detection, optimization, budgets."""

from .errors import ConfigError, InfeasibleError, NumericalError, RisenseError

__all__ = ["ConfigError", "InfeasibleError", "NumericalError", "RisenseError"]
__version__ = "0.1.0"
