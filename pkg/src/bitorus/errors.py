"""Exception types shared across the package."""


class InconsistencyError(RuntimeError):
    """Two routes that must agree produced different answers.

    Raised when a cross-check between independent computations fails
    (e.g. a closed-form construction does not validate against a direct
    trace).  This is never a user-input problem; it signals a broken
    internal convention and should surface loudly.
    """


class CapExceededError(RuntimeError):
    """An enumeration would exceed its configured size cap."""
