"""Exception types shared across the library."""


class ConfigurationError(ValueError):
    """A parameter value is outside its legal range."""


class StateError(RuntimeError):
    """An operation was invoked on an object in an unusable state."""


class OperatorInapplicableError(RuntimeError):
    """The population cannot supply what a search operator needs.

    Callers normally fall back to the brooding perturbation.
    """
