"""Exception hierarchy.

Every error raised by the library derives from :class:`SIDError`. Errors
caused by malformed input additionally derive from :class:`InputError` so the
CLI can map them to exit code 2; everything else is a solver error (exit 1).
"""


class SIDError(Exception):
    pass


class InputError(SIDError, ValueError):
    pass


# --- probability tables -----------------------------------------------------

class NegativeProbability(InputError):
    pass


class SumNotOne(InputError):
    pass


class ArityMismatch(InputError):
    pass


class EmptySample(InputError):
    pass


class UnknownVariable(InputError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class EmptyKeepSet(InputError):
    pass


class ZeroProbabilityEvidence(InputError):
    pass


class NotAPartition(InputError):
    pass


class OverlappingSets(InputError):
    pass


class ParseError(InputError):
    pass


class InvalidCaseNumber(InputError):
    pass


class UnknownFixture(InputError):
    pass


class NotThreeVariables(InputError):
    pass


class TargetInSources(InputError):
    pass


# --- solver errors ----------------------------------------------------------

class RedundancyOutOfRange(SIDError):
    pass


class SynergyInconsistent(SIDError):
    pass


class InconsistentZeros(SIDError):
    pass


class ZeroDenominator(SIDError):
    pass


class SymmetryViolation(SIDError):
    """Per-target redundancies disagree; ``values`` maps target -> bits."""

    def __init__(self, message, values=None):
        super().__init__(message)
        self.values = dict(values or {})


class NotApplicable(SIDError):
    """A solver's preconditions for a closed form are not met."""
