"""
.. class:: HermitianSpectrum
   :platform: Linux, MacOS, Windows
   :synopsis: Eigenvalues and eigenvectors of a Hermitian matrix

"""

import typing as t

import numpy as np

from .serialization import Serializable


class HermitianSpectrum(Serializable):
    r"""
    The spectral decomposition :math:`M = V \, {\rm diag}(\lambda) \, V^\dagger` of a
    Hermitian matrix, with real eigenvalues in ascending order and orthonormal
    eigenvectors stored as the columns of a unitary matrix.

    Instances are created by :func:`entlab.matcore.eig_hermitian`.

    Parameters
    ----------
    eigenvalues
        The real eigenvalues, in ascending order.
    eigenvectors
        The unitary matrix whose columns are the eigenvectors.
    """

    def __init__(self, eigenvalues: np.ndarray, eigenvectors: np.ndarray) -> None:
        self._eigenvalues = np.array(eigenvalues, dtype=float)
        self._eigenvectors = np.array(eigenvectors, dtype=complex)
        self._eigenvalues.setflags(write=False)
        self._eigenvectors.setflags(write=False)

    def __len__(self) -> int:
        return self._eigenvalues.size

    def __getstate__(self) -> t.Dict[str, t.Any]:
        from .matcore import matrix_to_dict  # pylint: disable=import-outside-toplevel

        return {
            "eigenvalues": self._eigenvalues.tolist(),
            "eigenvectors": matrix_to_dict(self._eigenvectors),
        }

    def __setstate__(self, state: t.Dict[str, t.Any]) -> None:
        from .matcore import matrix_from_dict  # pylint: disable=import-outside-toplevel

        self.__init__(state["eigenvalues"], matrix_from_dict(state["eigenvectors"]))

    @property
    def eigenvalues(self) -> np.ndarray:
        """The eigenvalues, in ascending order."""
        return self._eigenvalues

    @property
    def eigenvectors(self) -> np.ndarray:
        """The unitary matrix whose columns are the eigenvectors."""
        return self._eigenvectors

    def reconstruct(self) -> np.ndarray:
        """
        Rebuild the matrix from its spectral decomposition.
        """
        vectors = self._eigenvectors
        return (vectors * self._eigenvalues) @ vectors.conj().T

    def descending(
        self, cutoff: t.Optional[float] = None
    ) -> t.Tuple[np.ndarray, np.ndarray]:
        """
        Get the eigenpairs sorted by descending eigenvalue.

        Parameters
        ----------
        cutoff
            If given, only eigenpairs whose eigenvalue exceeds this value are kept.

        Returns
        -------
        np.ndarray
            The eigenvalues in descending order
        np.ndarray
            The matching eigenvectors, as columns
        """
        order = np.argsort(-self._eigenvalues, kind="stable")
        values = self._eigenvalues[order]
        vectors = self._eigenvectors[:, order]
        if cutoff is not None:
            keep = values > cutoff
            values, vectors = values[keep], vectors[:, keep]
        return values.copy(), vectors.copy()


HermitianSpectrum.registerTag("!entlab.HermitianSpectrum")
