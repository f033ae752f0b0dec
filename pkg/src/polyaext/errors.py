"""Exception hierarchy shared by every module."""


class PolyaError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(PolyaError, ValueError):
    """Operands disagree on variable count, degree or length."""


class ValidationError(PolyaError, ValueError):
    """Malformed input: not a bijection, unknown group spec, bad colour index."""


class ResourceError(PolyaError, RuntimeError):
    """A brute-force computation would exceed its configured cap."""
