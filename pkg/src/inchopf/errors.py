"""Exception hierarchy for the package.

Every error raised by this library derives from :class:`InchopfError`, so
callers can catch one type at an API boundary.  Each subclass marks a distinct
failure mode; none of them are ever used for control flow inside the library.
"""

from __future__ import annotations


class InchopfError(Exception):
    """Base class for all errors raised by this package."""


class ComposeError(InchopfError):
    """Composition of morphisms whose endpoints do not match."""


class UndefinedKeyError(InchopfError):
    """A lookup (object, morphism, group element, name) that does not exist."""


class EnumerationBoundError(InchopfError):
    """A requested enumeration exceeds the configured size bound."""


class LengthDivergenceError(InchopfError):
    """A morphism length scan hit its bound without a certificate."""


class InvariantError(InchopfError):
    """Input data violates a structural invariant it promised to satisfy."""


class UnsupportedOperationError(InchopfError):
    """An operation the instance does not support (no product, no inverses)."""


class ConfigError(InchopfError):
    """A config file is malformed or names an unknown kind or option."""


class MorphismParseError(InchopfError):
    """A morphism literal does not parse for the instance's grammar."""
