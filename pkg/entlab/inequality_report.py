"""
.. class:: InequalityReport
   :platform: Linux, MacOS, Windows
   :synopsis: An evaluated instance of an entropy inequality

"""

import typing as t

from . import config
from .serialization import Serializable


class InequalityReport(Serializable):
    r"""
    The evaluation of an inequality :math:`{\rm lhs} \ge {\rm rhs}` on a given state.

    The slack is :math:`{\rm lhs} - {\rm rhs}` and the inequality is reported as
    satisfied if and only if the slack is at least :math:`-{\rm tol}`. All values
    are in nats.

    Parameters
    ----------
    name
        The identifier of the inequality.
    lhs
        The value of the left-hand side.
    rhs
        The value of the right-hand side.
    tol
        The tolerance used to decide whether the inequality holds.

    Example
    -------
    >>> from entlab import InequalityReport
    >>> report = InequalityReport("ssa", 0.25, 0.0)
    >>> report.slack, report.satisfied
    (0.25, True)
    >>> InequalityReport("ssa", -1e-6, 0.0).satisfied
    False
    """

    entropyFields: t.Tuple[str, ...] = ("lhs", "rhs", "slack", "tol")

    def __init__(
        self, name: str, lhs: float, rhs: float, tol: float = config.INEQUALITY_TOL
    ) -> None:
        self.name = str(name)
        self.lhs = float(lhs)
        self.rhs = float(rhs)
        self.tol = float(tol)
        self.slack = self.lhs - self.rhs
        self.satisfied = bool(self.slack >= -self.tol)

    def __repr__(self) -> str:
        verdict = "satisfied" if self.satisfied else "violated"
        return (
            f"{self.__class__.__name__}({self.name!r}, lhs={self.lhs:.10g}, "
            f"rhs={self.rhs:.10g}, slack={self.slack:.3e}, {verdict})"
        )

    def __getstate__(self) -> t.Dict[str, t.Any]:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "satisfied": self.satisfied,
            "tol": self.tol,
        }

    def __setstate__(self, state: t.Dict[str, t.Any]) -> None:
        self.__init__(state["name"], state["lhs"], state["rhs"], state["tol"])


InequalityReport.registerTag("!entlab.InequalityReport")
