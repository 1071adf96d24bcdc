"""Exception types shared across the package."""


class HadalabError(Exception):
    """Base class for all domain errors raised by this package."""


class NotAUnit(HadalabError):
    """A multiplier must be coprime to the sequence length."""


class LengthMismatch(HadalabError):
    """Two sequences (or a sequence and a family) have different lengths."""


class ShiftOutOfRange(HadalabError):
    """Aperiodic shift k must satisfy 1 <= k <= n-1."""


class BadModulus(HadalabError):
    """Modulus does not satisfy the operation's divisibility requirement."""


class NotPrime(HadalabError):
    """Argument was expected to be prime."""


class UnsupportedDegree(HadalabError):
    """No table entry for the requested LFSR degree."""


class RankTooLarge(HadalabError):
    """Enumerating this family would exceed the configured rank bound."""


class TooLarge(HadalabError):
    """Search length exceeds the configured bound."""


class NotInvariant(HadalabError):
    """Sequence is not a member of the required invariant family."""


class BadOrder(HadalabError):
    """Multiplier order must be 1, 2 or an odd prime."""


class NotTwoLevel(HadalabError):
    """Constructed sequence failed the two-level autocorrelation check."""
