"""
Exceptions raised by the orthologic toolkit.

Every error carries the exit code the command line terminates with and a
human-readable ``detail``.
"""
from typing import Optional

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_DISCREPANCY = 3


class OrthologicError(Exception):
    """Base class for all toolkit errors."""

    exit_code: int = EXIT_USAGE

    def __init__(self, detail: str, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code


class UsageError(OrthologicError):
    """Bad command line: unknown subcommand, bad flag, format mismatch."""


class InputError(OrthologicError):
    """An input or output file could not be read or written."""

    exit_code = EXIT_IO


class ConfigurationError(OrthologicError):
    """An environment variable holds an unusable value."""


class PosetParseError(OrthologicError):
    """Malformed poset or orthogonality space text."""


class PosetError(OrthologicError):
    """A relation that does not satisfy the partial order axioms."""


class SpaceError(OrthologicError):
    """An adjacency relation that is not symmetric and irreflexive."""


class NotOrthoclosedError(OrthologicError):
    """An operation that needs an orthoclosed set received another set."""


class NotLowerSetError(OrthologicError):
    """Chain-type checks are only defined for lower sets of Q(P)."""


class NotChainTypeError(OrthologicError):
    """An orthoclosed set whose maximal quotients do not form an even chain."""


class UnboundedPosetError(OrthologicError):
    """The construction needs both a least and a greatest element."""


class CapExceededError(OrthologicError):
    """Requested catalogue size lies outside the configured range."""


class DiscrepancyError(OrthologicError):
    """The harness found counterexamples and strict mode is on."""

    exit_code = EXIT_DISCREPANCY
