"""Exception types raised by the workbench."""


class OrthorepError(Exception):
    """Base class for all domain errors."""


class NonAdmissible(OrthorepError):
    """A relation has a component of path length 0 or 1."""


class InfiniteDimensional(OrthorepError):
    """The relations do not make the arrow ideal nilpotent."""


class AlgebraMismatch(OrthorepError):
    """Operands live over different algebras."""


class InvalidModule(OrthorepError):
    """Matrix shapes disagree with the dimension vector or a relation fails."""


class DecompositionFailed(OrthorepError):
    """The randomized splitting search ran out of retries."""


class Inconclusive(OrthorepError):
    """An isomorphism test could not be settled within its budget."""


class PreconditionFailed(OrthorepError):
    """A hypothesis of the requested operation does not hold."""


class NotGenerator(PreconditionFailed):
    """Relative syzygies need add(M) to contain every projective."""


class NotCogenerator(PreconditionFailed):
    """Relative cosyzygies need add(M) to contain every injective."""


class NotExact(OrthorepError):
    """A sequence that should be short exact is not."""


class CatalogueRequired(OrthorepError):
    """The operation enumerates indecomposables and needs a catalogue."""


class InternalInconsistency(OrthorepError):
    """Equivalent criteria disagreed; this signals a bug."""


class ApproximationDegenerate(OrthorepError):
    """The mutation pivot already lies in add of the complement."""


class PeriodicityFailed(OrthorepError):
    """The periodicity hypothesis of an orbit construction fails."""


class NotSelfInjective(OrthorepError):
    """The algebra is not self-injective."""


class SearchBudgetExceeded(OrthorepError):
    """An exhaustive search stopped early."""

    def __init__(self, message: str, explored_fraction: float = 0.0):
        super().__init__(message)
        self.explored_fraction = explored_fraction


class OutOfRange(OrthorepError):
    """An index lies outside the range a closed formula covers."""


class ParamsMismatch(OrthorepError):
    """Nakayama modules over different parameters were combined."""
