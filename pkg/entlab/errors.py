"""
.. module:: errors
   :platform: Linux, MacOS, Windows
   :synopsis: Exceptions raised by entlab

"""


class EntlabError(Exception):
    """Base class of every exception raised by entlab."""


class NotHermitian(EntlabError, ValueError):
    """A matrix that must be Hermitian is not, within tolerance."""


class InvalidState(EntlabError, ValueError):
    """A matrix or vector violates the invariants of a quantum state."""


class DimensionOverflow(EntlabError, ValueError):
    """A constructed matrix would exceed the dimension cap."""


class BadShape(EntlabError, ValueError):
    """An array does not have the required shape."""


class BadSubsystemSet(EntlabError, ValueError):
    """A set of subsystem indices is empty, out of range or covers all subsystems."""


class BadArity(EntlabError, ValueError):
    """A state does not have the required number of subsystems."""


class BadRank(EntlabError, ValueError):
    """A requested or observed rank is out of range."""


class WeightMismatch(EntlabError, ValueError):
    """Mixture weights are not positive or do not sum to one."""


class DimMismatch(EntlabError, ValueError):
    """Components of a mixture do not share subsystem dimensions."""


class BadPermutation(EntlabError, ValueError):
    """A sequence is not a permutation of the subsystem indices."""


class BadDecomposition(EntlabError, ValueError):
    """A decomposition does not reconstruct its target state."""


class InvalidSpec(EntlabError, ValueError):
    """A construction specification violates its preconditions."""


class DegenerateWitness(EntlabError, ValueError):
    """A sharpness witness would have a vanishing bound (ratio 0/0)."""


class NumericalFailure(EntlabError, RuntimeError):
    """A numerical routine did not converge."""


class SandwichViolation(EntlabError, RuntimeError):
    """Computed bounds are not ordered as the theory requires."""
