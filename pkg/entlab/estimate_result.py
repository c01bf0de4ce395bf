"""
.. class:: EstimateResult
   :platform: Linux, MacOS, Windows
   :synopsis: A one-sided numerical estimate of an entanglement measure

"""

import math
import typing as t

from . import matcore
from .decomposition import Decomposition
from .density_matrix import DensityMatrix
from .serialization import Serializable

KINDS: t.Tuple[str, ...] = ("ef_upper", "esq_upper", "lower")


class EstimateResult(Serializable):
    """
    The outcome of a numerical estimate of an entanglement measure.

    Upper estimates carry the object that achieves them: a :class:`Decomposition`
    for entanglement of formation or an extension :class:`DensityMatrix` for
    squashed entanglement. The value is a valid bound for the searched domain
    regardless of convergence.

    Parameters
    ----------
    value
        The estimate, in nats.
    kind
        One of ``"ef_upper"``, ``"esq_upper"`` or ``"lower"``.
    restartsUsed
        The number of restarts whose results were reduced.
    iterations
        The number of cost evaluations spent by the winning restart.
    seed
        The seed of the first restart.
    converged
        Whether the last refinement sweep of the winning restart improved the cost
        by less than the convergence threshold.
    budgetExhausted
        Whether any restart stopped on its evaluation budget.
    certificate
        The decomposition or extension attaining ``value``. Must be `None` for
        lower estimates.
    searchSize
        The ensemble size (``ef_upper``) or ancilla dimension (``esq_upper``) of
        the searched domain.

    Raises
    ------
    ValueError
        If the kind is unknown, the value is not finite, or a lower estimate has a
        certificate.
    """

    entropyFields: t.Tuple[str, ...] = ("value",)

    def __init__(  # pylint: disable=too-many-arguments
        self,
        value: float,
        kind: str,
        restartsUsed: int = 0,
        iterations: int = 0,
        seed: int = 0,
        converged: bool = True,
        budgetExhausted: bool = False,
        certificate: t.Optional[t.Union[Decomposition, DensityMatrix]] = None,
        searchSize: t.Optional[int] = None,
    ) -> None:
        if kind not in KINDS:
            raise ValueError(f"Unknown estimate kind {kind!r}, expected one of {KINDS}")
        if not math.isfinite(value):
            raise ValueError(f"Estimate must be finite, got {value!r}")
        if kind == "lower" and certificate is not None:
            raise ValueError("A lower estimate cannot carry a certificate")
        self.value = float(value)
        self.kind = kind
        self.restartsUsed = int(restartsUsed)
        self.iterations = int(iterations)
        self.seed = int(seed)
        self.converged = bool(converged)
        self.budgetExhausted = bool(budgetExhausted)
        self.certificate = certificate
        self.searchSize = None if searchSize is None else int(searchSize)

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}({self.kind}={self.value:.10g}, "
            f"restarts={self.restartsUsed}, converged={self.converged})"
        )

    def __getstate__(self) -> t.Dict[str, t.Any]:
        if isinstance(self.certificate, Decomposition):
            certificate = {"decomposition": self.certificate.toDict()}
        elif isinstance(self.certificate, DensityMatrix):
            certificate = {"extension": self.certificate.toDict()}
        else:
            certificate = None
        return {
            "value": self.value,
            "kind": self.kind,
            "restarts_used": self.restartsUsed,
            "iterations": self.iterations,
            "seed": self.seed,
            "converged": self.converged,
            "budget_exhausted": self.budgetExhausted,
            "search_size": self.searchSize,
            "rng": matcore.RNG_NAME,
            "certificate": certificate,
        }

    def __setstate__(self, state: t.Dict[str, t.Any]) -> None:
        certificate = state.get("certificate")
        if certificate and "decomposition" in certificate:
            certificate = Decomposition.fromDict(certificate["decomposition"])
        elif certificate and "extension" in certificate:
            certificate = DensityMatrix.fromDict(certificate["extension"])
        self.__init__(
            state["value"],
            state["kind"],
            state["restarts_used"],
            state["iterations"],
            state["seed"],
            state["converged"],
            state["budget_exhausted"],
            certificate,
            state.get("search_size"),
        )


EstimateResult.registerTag("!entlab.EstimateResult")
