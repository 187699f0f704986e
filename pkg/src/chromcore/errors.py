"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-range input."""


class CapabilityError(RuntimeError):
    """Input exceeds a configured exact-search limit.

    ``partial`` carries whatever was learned before giving up, e.g. the best
    structor index found so far and a lower bound.
    """

    def __init__(self, message: str, **partial):
        super().__init__(message)
        self.partial = partial
