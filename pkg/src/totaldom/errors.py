"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-domain input (bad edge, empty graph, ...)."""


class ResourceError(RuntimeError):
    """Requested work exceeds a configured limit (enumeration cap, float range)."""
