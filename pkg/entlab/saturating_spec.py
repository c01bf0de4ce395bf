"""
.. class:: SaturatingSpec
   :platform: Linux, MacOS, Windows
   :synopsis: Parameters of a state saturating the triangle inequality

"""

import typing as t

import numpy as np
from numpy import typing as npt

from . import config
from .density_matrix import DensityMatrix
from .serialization import Serializable
from .states import validate_weights


class SaturatingSpec(Serializable):
    r"""
    The parameters of a bipartite state with :math:`S_{12} = S_1 - S_2`: a
    probability vector :math:`\kappa_1, \ldots, \kappa_n` and a state
    :math:`\rho_2`.

    The state is the mixture :math:`\sum_j \kappa_j |\Phi_j\rangle\langle\Phi_j|`
    of purifications of :math:`\rho_2` with mutually orthogonal supports on
    :math:`\mathcal{H}_1` (see :func:`entlab.extremal.build_saturating_state`).

    Parameters
    ----------
    kappas
        Strictly positive weights summing to one. Zero weights are rejected: drop
        them before building the specification.
    rho2
        The marginal state on :math:`\mathcal{H}_2`, treated as a single system.

    Raises
    ------
    WeightMismatch
        If the weights are not positive or do not sum to one.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import DensityMatrix, SaturatingSpec
    >>> spec = SaturatingSpec([0.5, 0.5], DensityMatrix(np.diag([0.7, 0.3])))
    >>> spec.getNumTerms(), spec.getRank(), spec.getDimension()
    (2, 2, 2)
    """

    def __init__(self, kappas: npt.ArrayLike, rho2: DensityMatrix) -> None:
        self._kappas = validate_weights(kappas)
        self._kappas.setflags(write=False)
        if rho2.getNumSubsystems() != 1:
            rho2 = DensityMatrix(rho2.getMatrix())
        self._rho2 = rho2
        self._rank = rho2.rank(config.RANK_CUTOFF)

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}(kappas={self._kappas.tolist()}, "
            f"rank={self._rank}, dim={self.getDimension()})"
        )

    def __getstate__(self) -> t.Dict[str, t.Any]:
        return {"kappas": self._kappas.tolist(), "rho2": self._rho2.toDict()}

    def __setstate__(self, state: t.Dict[str, t.Any]) -> None:
        self.__init__(state["kappas"], DensityMatrix.fromDict(state["rho2"]))

    def getKappas(self) -> np.ndarray:
        """
        Get the weights of the orthogonal purifications.
        """
        return self._kappas

    def getRho2(self) -> DensityMatrix:
        """
        Get the marginal state on the second subsystem.
        """
        return self._rho2

    def getNumTerms(self) -> int:
        """
        Get the number of purifications mixed.
        """
        return self._kappas.size

    def getRank(self) -> int:
        """
        Get the numerical rank of the second marginal.
        """
        return self._rank

    def getDimension(self) -> int:
        """
        Get the dimension of the second subsystem.
        """
        return self._rho2.getDimension()


SaturatingSpec.registerTag("!entlab.SaturatingSpec")
