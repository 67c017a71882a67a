"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class GuardExceeded(RuntimeError):
    """A brute-force enumeration would exceed the configured tuple limit."""

    def __init__(self, tuples: int, guard: int):
        self.tuples = tuples
        self.guard = guard
        if tuples.bit_length() > 64:
            size = f"about 10^{int(tuples.bit_length() * 0.30103)}"
        else:
            size = str(tuples)
        super().__init__(
            f"brute force needs {size} tuple evaluations, above the guard of {guard} "
            "(raise it with guard= or GCDMOMENT_GUARD)"
        )
