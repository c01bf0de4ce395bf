"""
.. module:: bounds_report
   :platform: Linux, MacOS, Windows
   :synopsis: Reports of the bound sandwich and of the entropy identity of
              saturating states

"""

import typing as t

from . import config
from .estimate_result import EstimateResult
from .serialization import Serializable


class BoundsReport(Serializable):
    r"""
    Lower and upper bounds on the entanglement of a bipartite state:

    .. math::

        \max\{S_1 - S_{12}, S_2 - S_{12}, 0\} \le E_{sq} \le E_f \le
        \min\{S_1, S_2\}

    together with the averaged quantity :math:`(S_1 + S_2)/2 - S_{12}`, which is
    also a lower bound but a weaker one.

    Instances are created by :func:`entlab.measures.entanglement_bounds`.

    Parameters
    ----------
    lower
        The lower bound shared by both measures.
    weaker
        The averaged bound.
    upperLocal
        The local-entropy upper bound.
    formation
        The upper estimate of the entanglement of formation.
    squashed
        The upper estimate of the squashed entanglement.
    tolerance
        The optimizer slack allowed in the ordering checks.
    """

    entropyFields: t.Tuple[str, ...] = (
        "lower",
        "weaker",
        "upper_local",
        "ef_upper",
        "esq_upper",
        "value",
        "tolerance",
    )

    def __init__(  # pylint: disable=too-many-arguments
        self,
        lower: float,
        weaker: float,
        upperLocal: float,
        formation: EstimateResult,
        squashed: EstimateResult,
        tolerance: float = config.SANDWICH_TOL,
    ) -> None:
        self.lower = float(lower)
        self.weaker = float(weaker)
        self.upperLocal = float(upperLocal)
        self.formation = formation
        self.squashed = squashed
        self.tolerance = float(tolerance)

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}(lower={self.lower:.8g}, "
            f"esq_upper={self.squashed.value:.8g}, "
            f"ef_upper={self.formation.value:.8g}, "
            f"upper_local={self.upperLocal:.8g})"
        )

    def __getstate__(self) -> t.Dict[str, t.Any]:
        return {
            "lower": self.lower,
            "weaker": self.weaker,
            "upper_local": self.upperLocal,
            "ef_upper": self.formation.value,
            "esq_upper": self.squashed.value,
            "tolerance": self.tolerance,
            "ef": self.formation.toDict(),
            "esq": self.squashed.toDict(),
        }

    def __setstate__(self, state: t.Dict[str, t.Any]) -> None:
        self.__init__(
            state["lower"],
            state["weaker"],
            state["upper_local"],
            EstimateResult.fromDict(state["ef"]),
            EstimateResult.fromDict(state["esq"]),
            state["tolerance"],
        )

    def violations(self) -> t.List[str]:
        """
        Get the descriptions of the orderings that fail beyond tolerance.

        Example
        -------
        >>> from entlab import BoundsReport, EstimateResult
        >>> report = BoundsReport(
        ...     0.5, 0.5, 0.6, EstimateResult(0.55, "ef_upper"),
        ...     EstimateResult(0.3, "esq_upper"),
        ... )
        >>> report.violations()
        ['lower <= esq_upper']
        """
        checks = [
            ("lower <= esq_upper", self.lower, self.squashed.value),
            ("esq_upper <= ef_upper", self.squashed.value, self.formation.value),
            ("ef_upper <= upper_local", self.formation.value, self.upperLocal),
        ]
        return [name for name, small, large in checks if small > large + self.tolerance]


BoundsReport.registerTag("!entlab.BoundsReport")


class IdentityReport(Serializable):
    r"""
    Cross-check of :math:`E_{sq} = E_f = S_1 - S_{12}` on a state that saturates
    the triangle inequality.

    The identity is certified when both upper estimates lie within tolerance of
    the lower bound, which pinches them.

    Parameters
    ----------
    analytic
        The closed-form entropies ``(S12, S1, S2)`` of the state.
    bounds
        The bound sandwich computed for the state.
    tolerance
        The largest accepted gap between an upper estimate and the lower bound.
    """

    entropyFields: t.Tuple[str, ...] = BoundsReport.entropyFields + (
        "s12",
        "s1",
        "s2",
    )

    def __init__(
        self,
        analytic: t.Sequence[float],
        bounds: BoundsReport,
        tolerance: float = config.SANDWICH_TOL,
    ) -> None:
        self.analytic = tuple(float(value) for value in analytic)
        self.bounds = bounds
        self.tolerance = float(tolerance)

    def __repr__(self) -> str:
        verdict = "certified" if self.certified else "not certified"
        return f"{self.__class__.__name__}(value={self.bounds.lower:.10g}, {verdict})"

    def __getstate__(self) -> t.Dict[str, t.Any]:
        s12, s1, s2 = self.analytic
        return {
            "analytic": {"s12": s12, "s1": s1, "s2": s2},
            "certified": self.certified,
            "tolerance": self.tolerance,
            "bounds": self.bounds.toDict(),
        }

    def __setstate__(self, state: t.Dict[str, t.Any]) -> None:
        analytic = state["analytic"]
        self.__init__(
            (analytic["s12"], analytic["s1"], analytic["s2"]),
            BoundsReport.fromDict(state["bounds"]),
            state["tolerance"],
        )

    @property
    def certified(self) -> bool:
        """Whether both upper estimates are pinched by the lower bound."""
        lower = self.bounds.lower
        return (
            abs(self.bounds.formation.value - lower) <= self.tolerance
            and abs(self.bounds.squashed.value - lower) <= self.tolerance
        )


IdentityReport.registerTag("!entlab.IdentityReport")
