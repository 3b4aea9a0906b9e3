"""Exception hierarchy.

Every error carries the process exit code the CLI maps it to:
2 parse, 3 resource cap, 4 domain precondition, 5 semantic validation.
"""


class LeafvolError(Exception):
    exit_code = 1


class ParseError(LeafvolError, ValueError):
    exit_code = 2


class GroupTooLarge(LeafvolError):
    exit_code = 3


class NotInvertible(LeafvolError, ValueError):
    exit_code = 4


class PoleAtOrigin(LeafvolError, ValueError):
    exit_code = 4


class NoPoleAtOne(LeafvolError, ValueError):
    exit_code = 4


class NonCyclotomicPole(LeafvolError, ValueError):
    exit_code = 4


class TruncationTooSmall(LeafvolError, ValueError):
    exit_code = 4


class UnknownEntry(LeafvolError, KeyError):
    exit_code = 4

    def __str__(self):
        return Exception.__str__(self)


class NotAHilbertSeries(LeafvolError, ValueError):
    exit_code = 5


class NegativeMultiplicity(LeafvolError, ValueError):
    exit_code = 5


class TailNotNegligible(LeafvolError):
    exit_code = 5


class InternalIrrationality(LeafvolError, ArithmeticError):
    """A Molien sum failed to land in Q. Always a bug, never user error."""

    exit_code = 5
