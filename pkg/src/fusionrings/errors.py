"""Exception hierarchy for the workbench."""


class WorkbenchError(Exception):
    """Base class for all library errors."""


class ClosureTooLarge(WorkbenchError):
    """Group closure exceeded the configured element cap."""


class LiftFailure(WorkbenchError):
    """Character-table modular lift could not be certified."""


class LengthMismatch(WorkbenchError):
    """Class-function value lists do not match the table's classes."""


class NonIntegralMultiplicity(WorkbenchError):
    """A fusion multiplicity failed the non-negative-integer check."""


class SingularCharacterSystem(WorkbenchError):
    """Simple characters turned out linearly dependent (bug signal)."""


class AxiomViolation(WorkbenchError):
    """A based-ring axiom failed; carries the axiom name and a witness."""

    def __init__(self, axiom, witness=None):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"{axiom} violated" + (f" at {witness}" if witness else ""))


class NoPositiveEigenvector(WorkbenchError):
    """Dimension solve found no positive eigenvector (bug signal)."""


class GradingInconsistent(WorkbenchError):
    """Universal grading blocks do not form a group (bug signal)."""


class SearchBudgetExceeded(WorkbenchError):
    """Backtracking search hit the node cap; distinct from a NONE answer."""


class NotExactFactorization(WorkbenchError):
    """The subgroups do not factor the ambient group exactly."""


class GroupLawFailure(WorkbenchError):
    """The bicrossed multiplication law failed verification (bug signal)."""


class NotAutomorphism(WorkbenchError):
    """The supplied basis permutation does not preserve the fusion rules."""


class InvariantFailure(WorkbenchError):
    """A modular-data invariant failed; carries the invariant name."""

    def __init__(self, name, detail=""):
        self.name = name
        super().__init__(f"{name} failed" + (f": {detail}" if detail else ""))


class SingularS(WorkbenchError):
    """The S-matrix is degenerate."""
