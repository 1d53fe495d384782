"""Exception types shared across the package."""


class ParseError(ValueError):
    """Input text could not be parsed into a graph."""


class CapExceededError(RuntimeError):
    """An exact solver refused a graph larger than its configured cap.

    Distinct from any "empty result" value so callers can tell refusal
    from absence.
    """

    def __init__(self, cap_name: str, cap: int, n: int):
        super().__init__(f"{cap_name} exceeded ({n} > {cap})")
        self.cap_name = cap_name
        self.cap = cap
        self.n = n


class InternalCheckError(RuntimeError):
    """Two independent computation routes disagreed, or a proven inequality
    failed.  Always indicates a bug in this package, never a property of the
    input graph."""
