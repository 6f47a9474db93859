"""Exception types shared across the package."""


class NtlError(Exception):
    """Base class for all package-specific errors."""


class InfeasibleSizeError(NtlError):
    """A requested computation is too large to carry out exactly."""


class NotFairlyDivisibleError(NtlError):
    """An exact integer division left a remainder (internal consistency)."""


class VerificationError(NtlError):
    """A constructed object failed its post-construction check."""
