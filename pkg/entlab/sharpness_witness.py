"""
.. class:: SharpnessWitness
   :platform: Linux, MacOS, Windows
   :synopsis: A tripartite state attaining equality in extended strong subadditivity

"""

import typing as t

from .density_matrix import DensityMatrix
from .serialization import Serializable


class SharpnessWitness(Serializable):
    r"""
    A tripartite state :math:`\rho_{123}` for which

    .. math::

        I(1,2|3) = 2 \max\{S_1 - S_{12}, S_2 - S_{12}, 0\} > 0,

    so that no constant larger than 2 can multiply the right-hand side.

    Instances are created by :func:`entlab.extremal.build_sharpness_witness`.

    Parameters
    ----------
    state
        The tripartite state.
    cmi
        Its conditional mutual information :math:`I(1,2|3)`.
    bound
        The value of :math:`\max\{S_1 - S_{12}, S_2 - S_{12}, 0\}`.
    """

    entropyFields: t.Tuple[str, ...] = ("cmi", "bound")

    def __init__(self, state: DensityMatrix, cmi: float, bound: float) -> None:
        self.state = state
        self.cmi = float(cmi)
        self.bound = float(bound)

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}(dims={list(self.state.getDims())}, "
            f"cmi={self.cmi:.10g}, bound={self.bound:.10g}, ratio={self.ratio:.10g})"
        )

    def __getstate__(self) -> t.Dict[str, t.Any]:
        return {
            "cmi": self.cmi,
            "bound": self.bound,
            "ratio": self.ratio,
            "state": self.state.toDict(),
        }

    def __setstate__(self, state: t.Dict[str, t.Any]) -> None:
        self.__init__(
            DensityMatrix.fromDict(state["state"]), state["cmi"], state["bound"]
        )

    @property
    def ratio(self) -> float:
        """The ratio of the conditional mutual information to the bound."""
        return self.cmi / self.bound

    def getReport(self) -> t.Dict[str, float]:
        """
        Get the values of the witness without the state.
        """
        return {"cmi": self.cmi, "bound": self.bound, "ratio": self.ratio}


SharpnessWitness.registerTag("!entlab.SharpnessWitness")
