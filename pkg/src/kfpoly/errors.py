"""Exception types shared across the package."""


class KostkaError(Exception):
    pass


class CapExceeded(KostkaError):
    """An enumeration would exceed its configured size cap."""


class UnsupportedError(KostkaError):
    """Input outside the supported domain (e.g. half-integer tableau shape)."""


class TransportError(KostkaError):
    """A recorded crystal path could not be replayed on the target."""


class PropertyViolation(KostkaError):
    """A property guaranteed by the theory failed at runtime."""
