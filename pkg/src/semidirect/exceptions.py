"""Exception types raised across the package."""


class MatroidError(ValueError):
    """Base class for every error raised by this package."""


class AxiomViolation(MatroidError):
    """A rank table breaks one of the rank axioms.

    ``axiom`` is one of ``"normalization"``, ``"bounds"``, ``"monotonicity"``,
    ``"submodularity"``; ``witness`` holds the offending masks.
    """

    def __init__(self, axiom, witness, detail=""):
        self.axiom = axiom
        self.witness = tuple(int(w) for w in witness)
        msg = f"{axiom} axiom fails at masks {self.witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class GroundTooLarge(MatroidError):
    pass


class GroundSetMismatch(MatroidError):
    pass


class LabelCollision(MatroidError):
    pass


class UnknownLabel(MatroidError):
    pass


class InvalidMask(MatroidError):
    pass


class OverlappingSets(MatroidError):
    pass


class NotABasis(MatroidError):
    pass


class ElementInBasis(MatroidError):
    pass


class RankOutOfRange(MatroidError):
    pass


class NotAQuotient(MatroidError):
    pass


class NonPrimeModulus(MatroidError):
    pass


class ModulusTooSmall(MatroidError):
    pass


class DimensionMismatch(MatroidError):
    pass


class CyclicFlatCapExceeded(MatroidError):
    pass


class SearchBudgetExceeded(MatroidError):
    pass
