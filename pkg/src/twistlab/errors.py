"""Exception hierarchy shared across the package.

CLI exit-code mapping: :class:`UsageError` subclasses exit with 2,
:class:`DataError` subclasses exit with 3.
"""


class TwistlabError(Exception):
    """Base class for all package errors."""


class UsageError(TwistlabError):
    """Caller-side problems: bad arguments, missing coverage, budget overruns."""


class DomainError(UsageError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class PreconditionError(UsageError):
    """A stated precondition (e.g. table coverage) is not met."""


class CoverageError(PreconditionError):
    """A lookup table does not extend far enough for the request."""


class ResourceError(UsageError):
    """The request exceeds a configured memory or size cap."""


class AccuracyError(UsageError):
    """A quadrature or interpolation accuracy target could not be certified."""


class DataError(TwistlabError):
    """Integrity-side problems: corrupted files, failed exact identities."""


class IntegrityError(DataError):
    """An exact arithmetic identity or invariant failed."""


class FormatError(DataError):
    """A cache file has an unknown magic or malformed framing."""


class CorruptionError(DataError):
    """A cache file fails its integrity hash or is truncated."""
