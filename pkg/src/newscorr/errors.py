"""Domain errors raised across the pipeline.

I/O failures are left to the builtin OSError hierarchy; everything the
pipeline itself can reject gets a named class here so callers (CLI, HTTP
service) can map failures to exit codes / status codes without string
matching.
"""


class NewscorrError(Exception):
    """Base class for all domain errors."""


class MalformedDate(NewscorrError):
    """A date string could not be parsed as an ISO-8601 date or datetime."""


class EmptyBody(NewscorrError):
    """An article body is empty after cleaning."""


class FormatError(NewscorrError):
    """An input file is not parseable at all (as opposed to per-record failures)."""


class EmptyInput(NewscorrError):
    pass


class EmptyRange(NewscorrError):
    pass


class OutOfRange(NewscorrError):
    """A requested date or window falls outside the stored range."""


class UnknownPerson(NewscorrError):
    pass


class LengthMismatch(NewscorrError):
    pass


class TooShort(NewscorrError):
    """A vector or date range is too short for the requested computation."""
