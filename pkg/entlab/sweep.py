"""
.. module:: sweep
   :platform: Linux, MacOS, Windows
   :synopsis: Families of entropy inequalities and seeded sweeps over random states

"""

import logging
import typing as t
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import config, entropy, states
from .density_matrix import DensityMatrix
from .errors import BadArity, BadShape, DimensionOverflow
from .inequality_report import InequalityReport
from .serialization import Serializable

logger = logging.getLogger(__name__)

MAX_TRIPARTITE_DIM: int = 64

FAMILIES: t.Tuple[str, ...] = (
    "ssa",
    "essa",
    "triangle",
    "subadditivity",
    "weakmono",
    "aux",
    "all",
)

_Check = t.Callable[[DensityMatrix, float], t.List[InequalityReport]]

_TRIPARTITE: t.Dict[str, _Check] = {
    "ssa": lambda rho, tol: [entropy.check_ssa(rho, tol)],
    "essa": lambda rho, tol: [entropy.check_extended_ssa(rho, tol)],
    "weakmono": lambda rho, tol: [entropy.check_weak_monotonicity(rho, tol)],
    "aux": entropy.check_aux_inequalities,
    "triangle": lambda rho, tol: [
        entropy.check_triangle(states.partial_trace(rho, [2]), tol)
    ],
    "all": entropy.check_all,
}

_BIPARTITE: t.Dict[str, _Check] = {
    "triangle": lambda rho, tol: [entropy.check_triangle(rho, tol)],
    "subadditivity": lambda rho, tol: [entropy.check_subadditivity(rho, tol)],
    "all": entropy.check_all,
}


def run_family(
    rho: DensityMatrix, family: str, tol: float = config.INEQUALITY_TOL
) -> t.List[InequalityReport]:
    """
    Evaluate a family of entropy inequalities on a state.

    Tripartite states support every family but ``subadditivity``, the triangle
    inequality being evaluated on the marginal of subsystems 1 and 2. Bipartite
    states support ``triangle``, ``subadditivity`` and ``all``.

    Parameters
    ----------
    rho
        A bipartite or tripartite state.
    family
        One of :data:`FAMILIES`.
    tol
        The tolerance of the reports.

    Raises
    ------
    ValueError
        If the family is unknown.
    BadArity
        If the family does not apply to the number of subsystems of the state.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import PureState, sweep
    >>> ghz = PureState(np.array([1, 0, 0, 0, 0, 0, 0, 1]) / np.sqrt(2), [2, 2, 2])
    >>> reports = sweep.run_family(ghz.toDensityMatrix(), "all")
    >>> len(reports), reports[0].name, reports[-1].name
    (7, 'ssa', 'triangle')
    """
    if family not in FAMILIES:
        raise ValueError(f"Unknown family {family!r}, expected one of {FAMILIES}")
    count = rho.getNumSubsystems()
    checks = {2: _BIPARTITE, 3: _TRIPARTITE}.get(count, {})
    if family not in checks:
        raise BadArity(
            f"Family {family!r} does not apply to a state with dims "
            f"{list(rho.getDims())}"
        )
    return checks[family](rho, tol)


class SweepSummary(Serializable):
    """
    Aggregate results of an inequality sweep over random states.

    For each inequality, the summary holds the number of evaluations, the smallest
    slack and the number of violations. Each violation is recorded together with
    the seed, the rank and the full state, so that it can be replayed.

    Parameters
    ----------
    dims
        The dimensions of the sampled states.
    count
        The number of sampled states.
    seed
        The seed of state 0. State ``i`` is sampled with seed ``seed + i``.
    family
        The family of inequalities.
    records
        For each sampled state, its index, seed, rank and reports.
    """

    entropyFields: t.Tuple[str, ...] = ("min_slack",) + InequalityReport.entropyFields

    def __init__(  # pylint: disable=too-many-arguments
        self,
        dims: t.Sequence[int],
        count: int,
        seed: int,
        family: str,
        records: t.Sequence[t.Tuple[int, int, int, t.List[InequalityReport]]] = (),
        violations: t.Optional[t.List[t.Dict[str, t.Any]]] = None,
        statistics: t.Optional[t.List[t.Dict[str, t.Any]]] = None,
    ) -> None:
        self.dims = tuple(int(d) for d in dims)
        self.count = int(count)
        self.seed = int(seed)
        self.family = family
        self.records = list(records)
        self.violations = [] if violations is None else violations
        self.statistics = (
            self._aggregate(self.records) if statistics is None else statistics
        )

    @staticmethod
    def _aggregate(
        records: t.Sequence[t.Tuple[int, int, int, t.List[InequalityReport]]]
    ) -> t.List[t.Dict[str, t.Any]]:
        statistics: t.Dict[str, t.Dict[str, t.Any]] = {}
        for _, _, _, reports in records:
            for report in reports:
                entry = statistics.setdefault(
                    report.name,
                    {
                        "name": report.name,
                        "evaluated": 0,
                        "min_slack": np.inf,
                        "violations": 0,
                    },
                )
                entry["evaluated"] += 1
                entry["min_slack"] = min(entry["min_slack"], report.slack)
                entry["violations"] += int(not report.satisfied)
        return list(statistics.values())

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}(dims={list(self.dims)}, count={self.count}, "
            f"family={self.family!r}, violations={len(self.violations)})"
        )

    def __getstate__(self) -> t.Dict[str, t.Any]:
        return {
            "dims": list(self.dims),
            "count": self.count,
            "seed": self.seed,
            "family": self.family,
            "num_violations": len(self.violations),
            "inequalities": [
                {**entry, "min_slack": float(entry["min_slack"])}
                for entry in self.statistics
            ],
            "violations": self.violations,
        }

    def __setstate__(self, state: t.Dict[str, t.Any]) -> None:
        self.__init__(
            state["dims"],
            state["count"],
            state["seed"],
            state["family"],
            violations=state["violations"],
            statistics=state["inequalities"],
        )

    def getInequalityNames(self) -> t.List[str]:
        """
        Get the names of the evaluated inequalities, in order of first appearance.
        """
        return [entry["name"] for entry in self.statistics]

    @property
    def passed(self) -> bool:
        """Whether no inequality was violated."""
        return not self.violations


def _sample_rank(index: int, dimension: int, rank: t.Optional[int]) -> int:
    return rank if rank is not None else 1 + index % dimension


def run_sweep(  # pylint: disable=too-many-arguments
    dims: t.Sequence[int],
    count: int,
    seed: int,
    family: str = "all",
    rank: t.Optional[int] = None,
    tol: float = config.INEQUALITY_TOL,
    maxWorkers: t.Optional[int] = None,
) -> SweepSummary:
    """
    Evaluate a family of inequalities on seeded random states.

    State ``i`` is drawn by :func:`entlab.states.random_density` with seed ``seed +
    i`` and, unless ``rank`` is given, rank ``1 + i % d``, where ``d`` is the total
    dimension, so that pure and mixed states alternate.

    Parameters
    ----------
    dims
        The dimensions of two or three subsystems.
    count
        The number of states.
    seed
        The seed of state 0.
    family
        One of :data:`FAMILIES`.
    rank
        The rank of every sampled state. If `None`, ranks cycle through all values.
    tol
        The tolerance of the reports.
    maxWorkers
        The number of threads evaluating states.

    Raises
    ------
    BadShape
        If there are not two or three dimensions, or ``count`` is negative.
    DimensionOverflow
        If a tripartite sweep exceeds a total dimension of 64.

    Example
    -------
    >>> from entlab import sweep
    >>> summary = sweep.run_sweep([2, 2, 2], count=20, seed=1, family="ssa")
    >>> summary.passed, summary.statistics[0]["evaluated"]
    (True, 20)
    """
    dims = tuple(int(d) for d in dims)
    if len(dims) not in (2, 3) or any(d < 1 for d in dims):
        raise BadShape(f"A sweep needs two or three positive dimensions, got {dims}")
    if count < 0:
        raise BadShape(f"The number of states cannot be negative, got {count}")
    dimension = int(np.prod(dims))
    if len(dims) == 3 and dimension > MAX_TRIPARTITE_DIM:
        raise DimensionOverflow(
            f"Tripartite sweeps are limited to dimension {MAX_TRIPARTITE_DIM}, "
            f"got {dimension}"
        )

    def evaluate(index: int) -> t.Tuple[int, int, int, t.List[InequalityReport]]:
        state_rank = _sample_rank(index, dimension, rank)
        rho = states.random_density(dims, state_rank, seed + index)
        return index, seed + index, state_rank, run_family(rho, family, tol)

    with ThreadPoolExecutor(max_workers=maxWorkers) as executor:
        records = list(executor.map(evaluate, range(count)))

    violations = []
    for index, state_seed, state_rank, reports in records:
        for report in reports:
            if not report.satisfied:
                logger.warning("State %d violates %r", index, report)
                rho = states.random_density(dims, state_rank, state_seed)
                violations.append(
                    {
                        "index": index,
                        "seed": state_seed,
                        "rank": state_rank,
                        "report": report.toDict(),
                        "state": rho.toDict(),
                    }
                )
    logger.debug("Sweep of %d states at dims %s done", count, list(dims))
    return SweepSummary(dims, count, seed, family, records, violations)


SweepSummary.registerTag("!entlab.SweepSummary")
