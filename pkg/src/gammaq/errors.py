"""Exception types raised by gammaq.

Every error carries a short machine-readable ``code`` so that callers (the
CLI in particular) can report failures without string matching.
"""


class GammaQError(ValueError):
    code = "ERROR"


class BadRank(GammaQError):
    code = "BAD_RANK"


class LengthMismatch(GammaQError):
    code = "LENGTH_MISMATCH"


class BadChar(GammaQError):
    code = "BAD_CHAR"


class OutOfRange(GammaQError):
    code = "OUT_OF_RANGE"


class BadRoot(GammaQError):
    code = "BAD_ROOT"


class NotAVertex(GammaQError, KeyError):
    code = "NOT_A_VERTEX"

    def __str__(self):
        return ValueError.__str__(self)


class InconsistentHooks(GammaQError):
    code = "INCONSISTENT_HOOKS"


class NotReducedW0(GammaQError):
    code = "NOT_REDUCED_W0"


class KindMismatch(GammaQError):
    code = "KIND_MISMATCH"


class NotAPair(GammaQError):
    code = "NOT_A_PAIR"


class NoPair(GammaQError):
    code = "NO_PAIR"
