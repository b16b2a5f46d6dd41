"""Exception hierarchy.

Domain errors (bad input, not a submonoid, ...) derive from ``DomainError``;
violations of mathematical invariants the engine relies on derive from
``InvariantViolation``.  The CLI maps the two families to different exit codes.
"""


class NormalMonoError(Exception):
    pass


class DomainError(NormalMonoError):
    pass


class InvalidMonoid(DomainError):
    """Raised with the full list of violations found in a multiplication table."""

    def __init__(self, violations):
        self.violations = list(violations)
        shown = ", ".join(str(v) for v in self.violations[:5])
        more = "" if len(self.violations) <= 5 else f" (+{len(self.violations) - 5} more)"
        super().__init__(f"invalid monoid: {shown}{more}")


class NotASubmonoid(DomainError):
    pass


class NotACongruence(DomainError):
    pass


class NotAMorphism(DomainError):
    pass


class BaseMismatch(DomainError):
    pass


class KindMismatch(DomainError):
    pass


class SizeCapExceeded(DomainError):
    pass


class InvariantViolation(NormalMonoError):
    pass


class InternalInvariantBroken(InvariantViolation):
    pass


class RoutesDisagree(InvariantViolation):
    """Two routes that must agree gave different answers; ``evidence`` holds both."""

    def __init__(self, message, evidence=None):
        self.evidence = evidence or {}
        super().__init__(message)


class CorpusMismatch(InvariantViolation):
    def __init__(self, failing):
        self.failing = list(failing)
        super().__init__("example corpus mismatch: " + ", ".join(self.failing))
