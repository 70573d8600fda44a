"""Package exceptions."""


class DegenerateParametersError(ValueError):
    """A coefficient denominator vanished (or the interface system is
    numerically singular) for the supplied parameter combination."""
