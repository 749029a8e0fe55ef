"""Exception types shared across the package.

The CLI maps these onto exit codes, so the hierarchy mirrors the kinds of
failure a caller can act on: bad input text, an invalid structure, a failed
precondition, a blown search limit, or a failed internal self-check.
"""


class HypergraphError(Exception):
    """Base class for every error raised by this package."""


class ParseError(HypergraphError):
    """Input text does not follow the hypergraph file format."""


class ValidationError(HypergraphError):
    """A structure violates a hypergraph invariant."""


class InvalidSectionError(ValidationError):
    """A labelled 2-section violates its shape or closure invariants."""


class DisconnectedError(HypergraphError):
    """An operation that requires a connected input received a disconnected one."""


class NotConformalError(HypergraphError):
    """An operation that requires a conformal input received a non-conformal one."""

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(
            "input is not conformal; witness: " + " ".join(self.witness)
        )


class LimitExceededError(HypergraphError):
    """A configured size or enumeration limit was exceeded."""


class InternalInconsistencyError(HypergraphError):
    """A mandatory self-verification failed; the result would be unproven."""
