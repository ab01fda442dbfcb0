class InvariantViolation(RuntimeError):
    """An internal consistency check failed; never caused by valid input."""
