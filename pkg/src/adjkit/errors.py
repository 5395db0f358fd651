"""Exception types shared across the toolkit."""


class AdjkitError(Exception):
    """Base class for all library errors."""


class DomainError(AdjkitError):
    """Input is well-formed but mathematically inadmissible (exit code 2 in the CLI)."""


class CapacityError(DomainError):
    """Request exceeds the hard enumeration caps."""


class ParseError(DomainError):
    """Malformed textual input (tree grammar, term syntax, fact-base documents)."""


class TypingError(DomainError):
    """A cell term fails boundary checks in its context."""
