"""Exception types raised across the package."""


class ComplatError(Exception):
    """Base class for all package errors."""


class CycleDetected(ComplatError):
    """The declared cover relation contains a directed cycle."""


class NotBounded(ComplatError):
    """The poset has no unique minimum or no unique maximum."""


class NotALattice(ComplatError):
    """Some pair of elements lacks a least upper bound or greatest lower bound."""


class UnknownKey(ComplatError):
    """Catalog lookup with a key that names no fixture."""


class NoComplementation(ComplatError):
    """Some element of the lattice has an empty complement set."""


class TermSyntaxError(ComplatError):
    """Term or identity text does not conform to the grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnboundVariable(ComplatError):
    """Term evaluation hit a variable outside the assignment."""


class UnknownIdentity(ComplatError):
    """Identity registry lookup with an unregistered name."""


class TrivialAlgebra(ComplatError):
    """Operation is undefined on a one-element algebra."""


class InvalidLength(ComplatError):
    """Horizontal sum chain length below two, or no chains at all."""


class CapTooSmall(ComplatError):
    """Free-algebra element budget cannot even hold the generators and bounds."""


class IncompleteClosure(ComplatError):
    """Operation requires a finished free-algebra closure."""


class SizeLimitExceeded(ComplatError):
    """Lattice enumeration requested beyond the supported size limit."""


class UnknownTheorem(ComplatError):
    """Verification campaign id not in the registry."""


class LatFileError(ComplatError):
    """Malformed .lat input file."""
