"""Exception hierarchy. Witness-bearing errors keep the offending data on the
exception so callers (and reports) can replay the violation."""


class TriposLabError(Exception):
    """Base class for all triposlab errors."""


class PreorderInvalid(TriposLabError):
    """Reflexivity or transitivity failed; witness is the offending pair/triple."""

    def __init__(self, message, witness):
        super().__init__(f"{message}: witness {witness}")
        self.witness = witness


class NotALattice(TriposLabError):
    """A pair of elements lacks a meet or a join (or top/bottom is missing)."""

    def __init__(self, message, witness=None):
        super().__init__(message if witness is None else f"{message}: witness {witness}")
        self.witness = witness


class NotHeyting(TriposLabError):
    """Residuation fails; witness is the offending (x, a, b) triple."""

    def __init__(self, message, witness=None):
        super().__init__(message if witness is None else f"{message}: witness {witness}")
        self.witness = witness


class NotMonotone(TriposLabError):
    """A map violates monotonicity; witness is the offending pair."""

    def __init__(self, witness):
        super().__init__(f"map not monotone: witness {witness}")
        self.witness = witness


class CtxMismatch(TriposLabError):
    """Context sizes of the operands disagree."""


class NotPreorder(TriposLabError):
    """Code entailment is not reflexive or not transitive; witness replays it."""

    def __init__(self, message, witness):
        super().__init__(f"{message}: witness {witness}")
        self.witness = witness


class CodeOpMismatch(TriposLabError):
    """A connective code disagrees with the quotient Heyting operation."""

    def __init__(self, message, witness):
        super().__init__(f"{message}: witness {witness}")
        self.witness = witness


class NotSurjective(TriposLabError):
    """Recoding map misses part of the proposition set."""


class SigmaTooLarge(TriposLabError):
    """Proposition set too large for the requested exhaustive enumeration."""


class CarrierTooLarge(TriposLabError):
    """Carrier too large for the exhaustive subset sweep."""


class NotUpwardClosed(TriposLabError):
    """An atom set is not closed upward; witness is the (member, missing) pair."""

    def __init__(self, witness):
        super().__init__(f"atom set not upward closed: witness {witness}")
        self.witness = witness


class NotValidAlgebra(TriposLabError):
    """Implicative structure/separator validation failed."""


class MalformedFixture(TriposLabError):
    """Fixture file does not parse into a structurally valid object."""
