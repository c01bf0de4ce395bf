"""
.. class:: EqualityCertificate
   :platform: Linux, MacOS, Windows
   :synopsis: Numerical check of the equality conditions of the triangle inequality

"""

import typing as t

from . import config
from .serialization import Serializable


class EqualityCertificate(Serializable):
    r"""
    The outcome of checking whether a bipartite state satisfies
    :math:`S_{12} = S_1 - S_2` through its structural characterization:

    * the rank identity :math:`{\rm rank}(\rho_1) = {\rm rank}(\rho_2)\,
      {\rm rank}(\rho_{12})`;
    * the partial-trace conditions :math:`{\rm Tr}_1 |\phi_i\rangle\langle\phi_j| =
      \delta_{ij} \rho_2` for the eigenvectors of :math:`\rho_{12}`;
    * the entropy identity itself.

    Instances are created by :func:`entlab.extremal.verify_equality_conditions`.

    Parameters
    ----------
    ranks
        The numerical ranks ``(d1, d2, d12)`` of the two marginals and of the state.
    offdiagResidual
        The largest Frobenius residual of the partial-trace conditions.
    entropyGap
        :math:`|S_{12} - (S_1 - S_2)|`.
    productResidual
        :math:`\|\rho_{23} - \rho_2 \otimes \rho_3\|_F` for a purification
        :math:`\rho_{123}` of the state.
    degenerate
        Whether the state has repeated nonzero eigenvalues, in which case its
        spectral decomposition is not unique and the residual refers to the
        deterministic eigenbasis returned by :func:`entlab.matcore.eig_hermitian`.
    tol
        The tolerance applied to the residual and to the entropy gap.
    """

    entropyFields: t.Tuple[str, ...] = ("entropy_gap",)

    def __init__(  # pylint: disable=too-many-arguments
        self,
        ranks: t.Sequence[int],
        offdiagResidual: float,
        entropyGap: float,
        productResidual: float,
        degenerate: bool,
        tol: float = config.CERTIFICATE_TOL,
    ) -> None:
        self.ranks = tuple(int(r) for r in ranks)
        self.offdiagResidual = float(offdiagResidual)
        self.entropyGap = float(entropyGap)
        self.productResidual = float(productResidual)
        self.degenerate = bool(degenerate)
        self.tol = float(tol)

    def __repr__(self) -> str:
        verdict = "passed" if self.passed else "failed"
        return (
            f"{self.__class__.__name__}(ranks={self.ranks}, "
            f"offdiagResidual={self.offdiagResidual:.3e}, "
            f"entropyGap={self.entropyGap:.3e}, {verdict})"
        )

    def __getstate__(self) -> t.Dict[str, t.Any]:
        return {
            "rank_condition": self.rankCondition,
            "ranks": list(self.ranks),
            "offdiag_residual": self.offdiagResidual,
            "entropy_gap": self.entropyGap,
            "product_residual": self.productResidual,
            "degenerate_spectrum": self.degenerate,
            "tol": self.tol,
            "passed": self.passed,
        }

    def __setstate__(self, state: t.Dict[str, t.Any]) -> None:
        self.__init__(
            state["ranks"],
            state["offdiag_residual"],
            state["entropy_gap"],
            state["product_residual"],
            state["degenerate_spectrum"],
            state["tol"],
        )

    @property
    def rankCondition(self) -> bool:
        """Whether rank(rho_1) = rank(rho_2) rank(rho_12)."""
        d1, d2, d12 = self.ranks
        return d1 == d2 * d12

    @property
    def passed(self) -> bool:
        """Whether all equality conditions hold within tolerance."""
        return (
            self.rankCondition
            and self.offdiagResidual <= self.tol
            and self.entropyGap <= self.tol
        )


EqualityCertificate.registerTag("!entlab.EqualityCertificate")
