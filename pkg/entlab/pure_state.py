"""
.. class:: PureState
   :platform: Linux, MacOS, Windows
   :synopsis: A unit vector with positionally labeled subsystems

"""

import typing as t

import numpy as np
from numpy import typing as npt

from . import config, matcore
from .density_matrix import DensityMatrix, validate_dims
from .errors import BadShape, InvalidState
from .serialization import Serializable


class PureState(Serializable):
    r"""
    A pure state :math:`|\psi\rangle \in \mathcal{H}_1 \otimes \cdots \otimes
    \mathcal{H}_n`, stored as a unit vector whose index ``(a_1, ..., a_n)`` is laid
    out in row-major order.

    Parameters
    ----------
    vector
        The state vector.
    dims
        The dimensions of the subsystems. If `None`, the state is treated as a single
        system.

    Raises
    ------
    InvalidState
        If the vector does not have unit norm within ``config.NORM_TOL``.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import PureState
    >>> bell = PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), [2, 2])
    >>> bell.getDims()
    (2, 2)
    >>> bell.toDensityMatrix().rank()
    1
    """

    def __init__(
        self, vector: npt.ArrayLike, dims: t.Optional[t.Iterable[int]] = None
    ) -> None:
        vector = np.array(vector, dtype=complex)
        if vector.ndim != 1 or vector.size < 1:
            raise BadShape(
                f"A state vector must be one-dimensional, got {vector.shape}"
            )
        if not np.all(np.isfinite(vector)):
            raise BadShape("State vector entries must be finite")
        self._dims = validate_dims([vector.size] if dims is None else dims, vector.size)
        norm = np.linalg.norm(vector)
        if abs(norm - 1.0) > config.NORM_TOL:
            raise InvalidState(f"A pure state must have unit norm, got {norm!r}")
        self._vector = vector
        self._vector.setflags(write=False)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(dims={list(self._dims)})"

    def __getstate__(self) -> t.Dict[str, t.Any]:
        return {"dims": list(self._dims), "vec": matcore.vector_to_list(self._vector)}

    def __setstate__(self, state: t.Dict[str, t.Any]) -> None:
        self.__init__(matcore.vector_from_list(state["vec"]), state["dims"])

    @classmethod
    def normalized(
        cls, vector: npt.ArrayLike, dims: t.Optional[t.Iterable[int]] = None
    ) -> "PureState":
        """
        Create a pure state from a nonzero vector, rescaling it to unit norm.

        Parameters
        ----------
        vector
            A nonzero vector.
        dims
            The dimensions of the subsystems.
        """
        vector = np.asarray(vector, dtype=complex)
        norm = np.linalg.norm(vector)
        if norm == 0:
            raise InvalidState("Cannot normalize the zero vector")
        return cls(vector / norm, dims)

    def getVector(self) -> np.ndarray:
        """
        Get the (read-only) vector of this state.
        """
        return self._vector

    def getDims(self) -> t.Tuple[int, ...]:
        """
        Get the dimensions of the subsystems.
        """
        return self._dims

    def getDimension(self) -> int:
        """
        Get the dimension of the whole space.
        """
        return self._vector.size

    def getNumSubsystems(self) -> int:
        """
        Get the number of subsystems.
        """
        return len(self._dims)

    def toDensityMatrix(self) -> DensityMatrix:
        r"""
        Get the projector :math:`|\psi\rangle\langle\psi|` as a density matrix.
        """
        return DensityMatrix(np.outer(self._vector, self._vector.conj()), self._dims)

    def overlap(self, other: "PureState") -> complex:
        r"""
        Get the inner product :math:`\langle \psi | \phi \rangle` with another state.
        """
        return complex(np.vdot(self._vector, other.getVector()))


PureState.registerTag("!entlab.PureState")
