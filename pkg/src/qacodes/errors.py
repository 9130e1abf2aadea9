"""Exception types shared across the package."""


class CapExceededError(RuntimeError):
    """An exhaustive enumeration would exceed the configured cap.

    Carries the cap and the count that would have been needed, so callers
    (and the CLI) can report why the computation was refused.
    """

    def __init__(self, what: str, needed: int, cap: int):
        self.what = what
        self.needed = needed
        self.cap = cap
        super().__init__(f"{what}: would need {needed} > cap {cap}")


class InvariantError(AssertionError):
    """An internal consistency check failed; this signals a bug, not bad input."""
