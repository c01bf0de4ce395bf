"""
.. class:: Decomposition
   :platform: Linux, MacOS, Windows
   :synopsis: A pure-state ensemble of a bipartite density matrix

"""

import typing as t

import numpy as np
from numpy import typing as npt

from . import states
from .density_matrix import DensityMatrix
from .errors import BadArity, DimMismatch
from .pure_state import PureState
from .serialization import Serializable


class Decomposition(Serializable):
    r"""
    A decomposition :math:`\rho_{12} = \sum_k \lambda_k |\omega^k\rangle\langle
    \omega^k|` of a bipartite state into pure states.

    The Frobenius norm of the difference between the mixture and the target state
    is stored as the reconstruction residual.

    Parameters
    ----------
    weights
        The positive weights :math:`\lambda_k`, summing to one.
    members
        The pure bipartite states :math:`\omega^k`, all with the same dims.
    target
        The state being decomposed. If `None`, the residual is zero.

    Raises
    ------
    WeightMismatch
        If the weights are invalid or do not match the number of members.
    DimMismatch
        If the members do not share their dims.
    BadArity
        If the members are not bipartite.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import Decomposition, DensityMatrix, PureState
    >>> members = [PureState(np.kron(v, v), [2, 2]) for v in np.eye(2)]
    >>> target = DensityMatrix(np.diag([0.5, 0.0, 0.0, 0.5]), [2, 2])
    >>> decomposition = Decomposition([0.5, 0.5], members, target)
    >>> decomposition.getNumMembers(), decomposition.residual < 1e-12
    (2, True)
    """

    def __init__(
        self,
        weights: npt.ArrayLike,
        members: t.Sequence[PureState],
        target: t.Optional[DensityMatrix] = None,
    ) -> None:
        self._weights = states.validate_weights(weights, len(members))
        self._weights.setflags(write=False)
        self._members = tuple(members)
        dims = self._members[0].getDims()
        if len(dims) != 2:
            raise BadArity(f"Expected bipartite members, got dims {list(dims)}")
        if any(member.getDims() != dims for member in self._members):
            raise DimMismatch("All members of a decomposition must share their dims")
        if target is not None and target.getDims() != dims:
            raise DimMismatch(
                f"Members have dims {list(dims)}, target has {list(target.getDims())}"
            )
        self._target = target
        self.residual = 0.0 if target is None else target.distance(self.reconstruct())

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}(members={len(self._members)}, "
            f"dims={list(self.getDims())}, residual={self.residual:.3e})"
        )

    def __getstate__(self) -> t.Dict[str, t.Any]:
        return {
            "weights": self._weights.tolist(),
            "states": [member.toDict() for member in self._members],
            "residual": self.residual,
        }

    def __setstate__(self, state: t.Dict[str, t.Any]) -> None:
        members = [PureState.fromDict(member) for member in state["states"]]
        self.__init__(state["weights"], members)
        self.residual = float(state["residual"])

    def getWeights(self) -> np.ndarray:
        """
        Get the (read-only) weights.
        """
        return self._weights

    def getMembers(self) -> t.Tuple[PureState, ...]:
        """
        Get the pure states of the ensemble.
        """
        return self._members

    def getNumMembers(self) -> int:
        """
        Get the number of members of the ensemble.
        """
        return len(self._members)

    def getDims(self) -> t.Tuple[int, ...]:
        """
        Get the dimensions of the two subsystems.
        """
        return self._members[0].getDims()

    def getTarget(self) -> t.Optional[DensityMatrix]:
        """
        Get the decomposed state, if known.
        """
        return self._target

    def reconstruct(self) -> np.ndarray:
        """
        Get the matrix of the mixture of the members.
        """
        vectors = np.stack([member.getVector() for member in self._members], axis=1)
        return (vectors * self._weights) @ vectors.conj().T


Decomposition.registerTag("!entlab.Decomposition")
