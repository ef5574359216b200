"""Validation reports returned by the law checkers."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    """One broken law: a law name plus the offending items."""

    law: str
    subject: tuple

    def __str__(self):
        return f"{self.law}: {' '.join(str(x) for x in self.subject)}"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a law check. ``ok`` holds exactly when nothing was violated.

    ``info`` carries check-specific extras (e.g. a bijection witness or a
    worst-case numeric deviation) without affecting ``ok``.
    """

    violations: tuple = ()
    info: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not self.violations

    def by_law(self, law):
        return [v for v in self.violations if v.law == law]

    def laws(self):
        return {v.law for v in self.violations}


def report(violations, info=None):
    return ValidationReport(tuple(violations), dict(info) if info else {})
