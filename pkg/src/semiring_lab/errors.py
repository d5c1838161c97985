"""Exception types raised by semiring_lab.

Mathematical refutations found by the auditor are *data* (verdicts and
certificates), never exceptions. The classes below signal malformed input
or violated preconditions.
"""

from __future__ import annotations


class SemiringError(Exception):
    """Base class for every error raised by this package."""


class AxiomViolation(SemiringError):
    def __init__(self, axiom: str, witness: tuple[int, ...]):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(f"axiom {axiom!r} violated at {self.witness}")


class ZeroEqualsOne(SemiringError):
    pass


class BadTables(SemiringError):
    """Tables are not square, differ in size, or hold out-of-range entries."""


class BadParams(SemiringError):
    pass


class NotAHom(SemiringError):
    def __init__(self, reason: str, witness: tuple[int, ...]):
        self.reason = reason
        self.witness = tuple(witness)
        super().__init__(f"not a homomorphism ({reason}) at {self.witness}")


class OwnerMismatch(SemiringError):
    pass


class NotAnIdeal(SemiringError):
    pass


class NotProper(SemiringError):
    pass


class EmptySubset(SemiringError):
    pass


class NotSurjective(SemiringError):
    pass


class NotClosed(SemiringError):
    pass


class NotMember(SemiringError):
    pass


class NotSemisubtractive(SemiringError):
    pass


class QuotientInvalid(SemiringError):
    def __init__(self, reason: str, cause: Exception | None = None):
        self.reason = reason
        self.cause = cause
        super().__init__(reason)


class NoRep(SemiringError):
    pass


class OrderTooLarge(SemiringError):
    pass


class CorpusEmpty(SemiringError):
    pass


class MalformedCertificate(SemiringError):
    pass


class ProvenFailure(SemiringError):
    """A PROVEN-class proposition failed during an audit run."""

    def __init__(self, message: str, report: dict, certificate: dict):
        self.report = report
        self.certificate = certificate
        super().__init__(message)


class LocalizationInvalid(QuotientInvalid):
    """The fraction construction failed (not an equivalence or not well defined)."""
