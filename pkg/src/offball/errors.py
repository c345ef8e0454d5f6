"""Exception hierarchy shared by all offball modules."""


class OffballError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(OffballError):
    """A setting is outside its permitted range or otherwise unusable."""


class DataFormatError(OffballError):
    """Input data cannot be read at all (for example an unreadable header)."""


class MalformedFrameError(DataFormatError):
    """A tracking frame violates court bounds beyond the jitter tolerance."""


class InsufficientDataError(OffballError):
    """Too few records to fit or evaluate the requested quantity."""


class DomainError(OffballError):
    """A query point lies outside the supported spatial domain."""


class NumericalError(OffballError):
    """A numerical routine failed to produce a usable result."""
