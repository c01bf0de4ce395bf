"""
.. class:: DensityMatrix
   :platform: Linux, MacOS, Windows
   :synopsis: A multipartite density matrix with positionally labeled subsystems

"""

import typing as t

import numpy as np
from numpy import typing as npt

from . import config, matcore
from .errors import BadShape, InvalidState
from .hermitian_spectrum import HermitianSpectrum
from .serialization import Serializable


def validate_dims(dims: t.Iterable[int], dimension: int) -> t.Tuple[int, ...]:
    """
    Check a list of subsystem dimensions against the dimension of a state.

    Parameters
    ----------
    dims
        The subsystem dimensions.
    dimension
        The dimension of the whole space.

    Returns
    -------
    Tuple[int, ...]
        The dimensions as a tuple of integers.
    """
    dims = tuple(int(d) for d in dims)
    if not dims or any(d < 1 for d in dims):
        raise BadShape(f"Subsystem dimensions must be positive integers, got {dims}")
    product = int(np.prod(dims))
    matcore.check_dimension(product, "state")
    if product != dimension:
        raise BadShape(
            f"Subsystem dimensions {dims} multiply to {product}, not {dimension}"
        )
    return dims


class DensityMatrix(Serializable):
    r"""
    A density matrix :math:`\rho` on :math:`\mathcal{H}_1 \otimes \cdots \otimes
    \mathcal{H}_n`: a Hermitian, positive semidefinite matrix with unit trace.

    Subsystems are identified by their position in ``dims``. Instances are
    immutable.

    Parameters
    ----------
    matrix
        The square matrix of the state.
    dims
        The dimensions of the subsystems, whose product must equal the size of the
        matrix. If `None`, the state is treated as a single system.

    Raises
    ------
    NotHermitian
        If the matrix is not Hermitian within ``config.HERMITIAN_TOL``.
    InvalidState
        If the trace differs from one or an eigenvalue is negative beyond tolerance.
    BadShape
        If the dimensions do not match the matrix.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import DensityMatrix
    >>> rho = DensityMatrix(np.eye(4) / 4, [2, 2])
    >>> rho.getDims(), rho.getDimension(), rho.getNumSubsystems()
    ((2, 2), 4, 2)
    >>> rho.rank()
    4
    """

    def __init__(
        self, matrix: npt.ArrayLike, dims: t.Optional[t.Iterable[int]] = None
    ) -> None:
        matrix = matcore.as_complex_matrix(matrix)
        dimension = matrix.shape[0]
        self._dims = validate_dims([dimension] if dims is None else dims, dimension)
        self._spectrum = matcore.eig_hermitian(matrix)
        trace = np.trace(matrix).real
        if abs(trace - 1.0) > config.TRACE_TOL:
            raise InvalidState(f"Trace of a density matrix must be 1, got {trace!r}")
        smallest = self._spectrum.eigenvalues[0]
        if smallest < -config.PSD_TOL:
            raise InvalidState(
                f"Density matrix has a negative eigenvalue {smallest:.3e}"
            )
        self._matrix = 0.5 * (matrix + matrix.conj().T)
        self._matrix.setflags(write=False)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(dims={list(self._dims)})"

    def __getstate__(self) -> t.Dict[str, t.Any]:
        return {"dims": list(self._dims), "mat": matcore.matrix_to_dict(self._matrix)}

    def __setstate__(self, state: t.Dict[str, t.Any]) -> None:
        self.__init__(matcore.matrix_from_dict(state["mat"]), state["dims"])

    def getMatrix(self) -> np.ndarray:
        """
        Get the (read-only) matrix of this state.
        """
        return self._matrix

    def getDims(self) -> t.Tuple[int, ...]:
        """
        Get the dimensions of the subsystems.
        """
        return self._dims

    def getDimension(self) -> int:
        """
        Get the dimension of the whole space.
        """
        return self._matrix.shape[0]

    def getNumSubsystems(self) -> int:
        """
        Get the number of subsystems.
        """
        return len(self._dims)

    def getSpectrum(self) -> HermitianSpectrum:
        """
        Get the spectral decomposition of this state.
        """
        return self._spectrum

    def getEigenvalues(self) -> np.ndarray:
        """
        Get the eigenvalues of this state in ascending order, with the roundoff
        below zero clipped.
        """
        return np.clip(self._spectrum.eigenvalues, 0.0, None)

    def rank(self, cutoff: float = config.RANK_CUTOFF) -> int:
        """
        Get the numerical rank of this state.

        Parameters
        ----------
        cutoff
            Eigenvalues above this value count toward the rank.
        """
        return int(np.count_nonzero(self._spectrum.eigenvalues > cutoff))

    def isPure(self, tol: float = config.ORTHONORMAL_TOL) -> bool:
        r"""
        Check whether :math:`\|\rho^2 - \rho\|_F \le` ``tol``.
        """
        return matcore.frobenius(self._matrix @ self._matrix - self._matrix) <= tol

    def distance(self, other: t.Union["DensityMatrix", npt.ArrayLike]) -> float:
        """
        Frobenius distance between this state and another state or matrix.
        """
        matrix = other.getMatrix() if isinstance(other, DensityMatrix) else other
        return matcore.frobenius(self._matrix - np.asarray(matrix))


DensityMatrix.registerTag("!entlab.DensityMatrix")
