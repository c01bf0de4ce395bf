"""
.. module:: config
   :platform: Linux, MacOS, Windows
   :synopsis: Tolerances, dimension cap and estimator settings

"""

import logging
import os
import typing as t

from .serialization import Serializable

logger = logging.getLogger(__name__)

HERMITIAN_TOL: float = 1e-8
ORTHONORMAL_TOL: float = 1e-10
TRACE_TOL: float = 1e-8
PSD_TOL: float = 1e-8
NORM_TOL: float = 1e-10
WEIGHT_TOL: float = 1e-10
RANK_CUTOFF: float = 1e-12
CERTIFICATE_RANK_CUTOFF: float = 1e-10
CERTIFICATE_TOL: float = 1e-7
INEQUALITY_TOL: float = 1e-8
PRUNE_CUTOFF: float = 1e-14
SANDWICH_TOL: float = 1e-4
DECOMPOSITION_TOL: float = 1e-8
DEFAULT_MAX_DIM: int = 4096
MAX_DIM_VARIABLE: str = "ENTLAB_MAX_DIM"


def get_max_dim() -> int:
    """
    Get the largest dimension allowed for any constructed matrix.

    The default cap can be lowered, but never raised, through the environment
    variable ``ENTLAB_MAX_DIM``.

    Returns
    -------
    int
        The dimension cap

    Example
    -------
    >>> import os
    >>> from entlab import config
    >>> os.environ["ENTLAB_MAX_DIM"] = "64"
    >>> config.get_max_dim()
    64
    >>> os.environ["ENTLAB_MAX_DIM"] = "100000"
    >>> config.get_max_dim()
    4096
    >>> del os.environ["ENTLAB_MAX_DIM"]
    """
    value = os.environ.get(MAX_DIM_VARIABLE)
    if value is None:
        return DEFAULT_MAX_DIM
    try:
        cap = int(value)
    except ValueError:
        logger.warning("Ignoring non-integer %s=%r", MAX_DIM_VARIABLE, value)
        return DEFAULT_MAX_DIM
    if not 1 <= cap <= DEFAULT_MAX_DIM:
        logger.warning(
            "Ignoring %s=%d: it can only lower the cap of %d",
            MAX_DIM_VARIABLE,
            cap,
            DEFAULT_MAX_DIM,
        )
        return DEFAULT_MAX_DIM
    return cap


class EstimatorConfig(Serializable):
    """
    Settings of the numerical estimators of entanglement of formation and squashed
    entanglement.

    Parameters
    ----------
    ensembleSize
        The number of members of the pure-state decompositions searched. If `None`,
        the square of the rank of the target state is used.
    ancillaDim
        The dimension of the extending system searched for squashed entanglement.
        If `None`, the square of the rank of the target state is used.
    environmentDim
        The dimension of the environment of the Stinespring isometries that define
        the extensions. If `None`, the rank of the target state is used.
    numRestarts
        The number of independent random restarts.
    budget
        The maximum number of cost evaluations per restart.
    seed
        The seed of the first restart. Restart ``k`` uses ``seed + k``.
    tolerance
        The optimizer slack allowed when checking the ordering of the bounds.
    maxWorkers
        The number of threads running restarts concurrently. If `None`, it is
        chosen by :class:`concurrent.futures.ThreadPoolExecutor`.

    Example
    -------
    >>> from entlab.config import EstimatorConfig
    >>> config = EstimatorConfig(numRestarts=4, seed=7)
    >>> config.numRestarts, config.seed, config.budget
    (4, 7, 2000)
    >>> EstimatorConfig.fromDict(config.toDict()) == config
    True
    """

    def __init__(  # pylint: disable=too-many-arguments
        self,
        ensembleSize: t.Optional[int] = None,
        ancillaDim: t.Optional[int] = None,
        environmentDim: t.Optional[int] = None,
        numRestarts: int = 32,
        budget: int = 2000,
        seed: int = 0,
        tolerance: float = SANDWICH_TOL,
        maxWorkers: t.Optional[int] = None,
    ) -> None:
        for name, value in [
            ("ensembleSize", ensembleSize),
            ("ancillaDim", ancillaDim),
            ("environmentDim", environmentDim),
            ("maxWorkers", maxWorkers),
        ]:
            if value is not None and value < 1:
                raise ValueError(f"Argument '{name}' must be positive, got {value}")
        if numRestarts < 1:
            raise ValueError(
                f"Argument 'numRestarts' must be positive, got {numRestarts}"
            )
        if budget < 1:
            raise ValueError(f"Argument 'budget' must be positive, got {budget}")
        if tolerance < 0:
            raise ValueError(
                f"Argument 'tolerance' cannot be negative, got {tolerance}"
            )
        self.ensembleSize = ensembleSize
        self.ancillaDim = ancillaDim
        self.environmentDim = environmentDim
        self.numRestarts = int(numRestarts)
        self.budget = int(budget)
        self.seed = int(seed)
        self.tolerance = float(tolerance)
        self.maxWorkers = maxWorkers

    def __repr__(self) -> str:
        items = ", ".join(f"{k}={v!r}" for k, v in self.__getstate__().items())
        return f"{self.__class__.__name__}({items})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EstimatorConfig)
            and self.__getstate__() == other.__getstate__()
        )

    def __getstate__(self) -> t.Dict[str, t.Any]:
        return {
            "ensembleSize": self.ensembleSize,
            "ancillaDim": self.ancillaDim,
            "environmentDim": self.environmentDim,
            "numRestarts": self.numRestarts,
            "budget": self.budget,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "maxWorkers": self.maxWorkers,
        }

    def __setstate__(self, state: t.Dict[str, t.Any]) -> None:
        self.__init__(**state)


EstimatorConfig.registerTag("!entlab.EstimatorConfig")
