"""
.. module:: measures
   :platform: Linux, MacOS, Windows
   :synopsis: Numerical upper estimates of entanglement of formation and squashed
              entanglement, bound sandwiches and identity checks

Every estimate returned here is one-sided: a feasible decomposition (or extension)
certifies an upper bound, never the exact infimum. Restart ``k`` of an estimator
draws its starting point from the seed ``seed + k``, restarts run concurrently
and the best result is kept, ties going to the lowest restart index.
"""

import logging
import typing as t
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numpy import typing as npt

from . import config, entropy, extremal, matcore, states
from .bounds_report import BoundsReport, IdentityReport
from .decomposition import Decomposition
from .density_matrix import DensityMatrix
from .errors import (
    BadArity,
    BadDecomposition,
    BadRank,
    BadShape,
    InvalidSpec,
    SandwichViolation,
)
from .estimate_result import EstimateResult
from .pure_state import PureState
from .rotation_descent import DescentOutcome, RotationDescent
from .saturating_spec import SaturatingSpec

logger = logging.getLogger(__name__)

_ASSERTION_TOL = 1e-8


def _require_bipartite(rho12: DensityMatrix) -> None:
    if rho12.getNumSubsystems() != 2:
        raise BadArity(f"Expected a bipartite state, got dims {list(rho12.getDims())}")


def _eigen_amplitudes(rho12: DensityMatrix) -> np.ndarray:
    values, vectors = rho12.getSpectrum().descending(config.RANK_CUTOFF)
    return vectors * np.sqrt(values)


def _ensemble_terms(
    rows: np.ndarray, amplitudes: np.ndarray, dims: t.Tuple[int, ...]
) -> np.ndarray:
    r"""
    The terms :math:`\lambda_k S({\rm Tr}_2\, \omega^k)` of the members defined by
    some rows of an isometry.
    """
    vectors = (rows.conj() @ amplitudes.T).reshape(-1, *dims)
    squares = np.linalg.svd(vectors, compute_uv=False) ** 2
    weights = squares.sum(axis=1)
    safe = np.where(weights > config.PRUNE_CUTOFF, weights, 1.0)
    probabilities = squares / safe[:, None]
    logs = np.log(np.where(probabilities > config.RANK_CUTOFF, probabilities, 1.0))
    terms = -weights * np.sum(probabilities * logs, axis=1)
    return np.where(weights > config.PRUNE_CUTOFF, terms, 0.0)


def _cut_entropy(tensor: np.ndarray, keep: t.Sequence[int]) -> float:
    rest = [axis for axis in range(tensor.ndim) if axis not in keep]
    size = int(np.prod([tensor.shape[axis] for axis in keep]))
    matrix = tensor.transpose(list(keep) + rest).reshape(size, -1)
    return entropy.spectrum_entropy(np.linalg.svd(matrix, compute_uv=False) ** 2)


def _extension_tensor(
    purification: np.ndarray, isometry: np.ndarray, dims: t.Tuple[int, ...]
) -> np.ndarray:
    return (purification @ isometry.T).reshape(dims)


def _half_cmi(tensor: np.ndarray) -> float:
    # axes: 0 and 1 the state, 2 the extension, 3 the environment
    s123 = _cut_entropy(tensor, [3])
    s3 = _cut_entropy(tensor, [2])
    s13 = _cut_entropy(tensor, [1, 3])
    s23 = _cut_entropy(tensor, [0, 3])
    return 0.5 * (s13 + s23 - s123 - s3)


def _reduce(
    outcomes: t.Sequence[DescentOutcome],
) -> t.Tuple[int, DescentOutcome]:
    index = min(range(len(outcomes)), key=lambda k: (outcomes[k].value, k))
    return index, outcomes[index]


def _run_restarts(
    task: t.Callable[[int], DescentOutcome],
    numRestarts: int,
    maxWorkers: t.Optional[int],
) -> t.List[DescentOutcome]:
    with ThreadPoolExecutor(max_workers=maxWorkers) as executor:
        return list(executor.map(task, range(numRestarts)))


def _assert_above_lower(value: float, lower: float, kind: str) -> None:
    if value < lower - _ASSERTION_TOL:
        raise SandwichViolation(
            f"{kind} estimate {value:.12g} is below the lower bound {lower:.12g}"
        )


def decomposition_cost(
    decomposition: Decomposition, tol: float = config.DECOMPOSITION_TOL
) -> float:
    r"""
    The average local entropy :math:`\sum_k \lambda_k S({\rm Tr}_2\, \omega^k)` of a
    pure-state decomposition, in nats.

    Parameters
    ----------
    decomposition
        The decomposition.
    tol
        The largest reconstruction residual accepted.

    Raises
    ------
    BadDecomposition
        If the decomposition does not reconstruct its target within ``tol``.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import Decomposition, PureState, measures
    >>> bell = PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), [2, 2])
    >>> decomposition = Decomposition([1.0], [bell], bell.toDensityMatrix())
    >>> round(measures.decomposition_cost(decomposition), 7)
    0.6931472
    """
    if decomposition.residual > tol:
        raise BadDecomposition(
            f"Reconstruction residual {decomposition.residual:.3e} exceeds {tol:.0e}"
        )
    return float(
        sum(
            weight * entropy.entanglement_entropy(member)
            for weight, member in zip(
                decomposition.getWeights(), decomposition.getMembers()
            )
        )
    )


def decomposition_from_isometry(
    rho12: DensityMatrix, isometry: npt.ArrayLike
) -> Decomposition:
    r"""
    Build the pure-state decomposition of a bipartite state defined by an isometry.

    With :math:`(p_i, |e_i\rangle)` the nonzero eigenpairs of :math:`\rho_{12}` and
    :math:`W` an :math:`m \times r` isometry, the members are

    .. math::

        \sqrt{\lambda_k}\, |\omega^k\rangle = \sum_i W^*_{ki} \sqrt{p_i}\,
        |e_i\rangle,

    and every :math:`m`-member decomposition arises this way. Members of weight
    not above ``config.PRUNE_CUTOFF`` are dropped.

    Parameters
    ----------
    rho12
        A bipartite state of rank :math:`r`.
    isometry
        An :math:`m \times r` matrix with orthonormal columns, :math:`m \ge r`.

    Raises
    ------
    BadShape
        If the isometry does not have :math:`r` orthonormal columns and at least
        :math:`r` rows.
    BadArity
        If the state is not bipartite.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import matcore, measures, states
    >>> rho = states.random_density([2, 2], rank=2, seed=5)
    >>> decomposition = measures.decomposition_from_isometry(
    ...     rho, matcore.haar_isometry(4, 2, seed=1)
    ... )
    >>> decomposition.getNumMembers(), decomposition.residual < 1e-10
    (4, True)
    """
    _require_bipartite(rho12)
    isometry = np.asarray(isometry, dtype=complex)
    amplitudes = _eigen_amplitudes(rho12)
    rank = amplitudes.shape[1]
    if isometry.ndim != 2 or isometry.shape[1] != rank or isometry.shape[0] < rank:
        raise BadShape(
            f"Expected an m x {rank} isometry with m >= {rank}, got {isometry.shape}"
        )
    defect = matcore.frobenius(isometry.conj().T @ isometry - np.eye(rank))
    if defect > config.ORTHONORMAL_TOL:
        raise BadShape(f"Isometry columns are not orthonormal (defect {defect:.3e})")
    vectors = isometry.conj() @ amplitudes.T
    weights = np.sum(np.abs(vectors) ** 2, axis=1)
    kept = weights > config.PRUNE_CUTOFF
    members = [PureState.normalized(v, rho12.getDims()) for v in vectors[kept]]
    return Decomposition(weights[kept] / weights[kept].sum(), members, rho12)


def estimate_ef_upper(  # pylint: disable=too-many-arguments
    rho12: DensityMatrix,
    ensembleSize: t.Optional[int] = None,
    numRestarts: int = 32,
    seed: int = 0,
    budget: int = 2000,
    maxWorkers: t.Optional[int] = None,
) -> EstimateResult:
    r"""
    Upper estimate of the entanglement of formation

    .. math::

        E_f(\rho_{12}) = \inf \Big\{ \sum_k \lambda_k S({\rm Tr}_2\, \omega^k) :
        \rho_{12} = \sum_k \lambda_k \omega^k \Big\}

    over pure-state decompositions with ``ensembleSize`` members.

    The eigen-decomposition is the initial incumbent. Each restart starts from a
    Haar-random isometry and refines it by :class:`RotationDescent`, re-evaluating
    only the two rotated members. A pure state has a single decomposition, so its
    local entropy is returned with no optimization.

    Parameters
    ----------
    rho12
        A bipartite state.
    ensembleSize
        The number of members. If `None`, the square of the rank is used.
    numRestarts
        The number of random restarts.
    seed
        The seed of restart 0.
    budget
        The maximum number of cost evaluations per restart.
    maxWorkers
        The number of threads running restarts.

    Returns
    -------
    EstimateResult
        The best value, with its decomposition as certificate.

    Raises
    ------
    BadRank
        If ``ensembleSize`` is smaller than the rank.
    BadArity
        If the state is not bipartite.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import DensityMatrix, measures
    >>> rho = DensityMatrix(np.diag([0.5, 0.0, 0.0, 0.5]), [2, 2])
    >>> result = measures.estimate_ef_upper(rho, numRestarts=2, budget=200)
    >>> result.value <= 1e-6
    True
    """
    _require_bipartite(rho12)
    dims = rho12.getDims()
    rank = rho12.rank()
    size = rank**2 if ensembleSize is None else int(ensembleSize)
    if size < rank:
        raise BadRank(f"Ensemble size {size} is smaller than the rank {rank}")
    lower = entropy.lower_bound_ent(rho12)

    if rank == 1:
        decomposition = decomposition_from_isometry(rho12, np.ones((1, 1)))
        return EstimateResult(
            decomposition_cost(decomposition),
            "ef_upper",
            seed=seed,
            certificate=decomposition,
            searchSize=1,
        )

    amplitudes = _eigen_amplitudes(rho12)

    def cost(rows: np.ndarray) -> np.ndarray:
        return _ensemble_terms(rows, amplitudes, dims)

    def restart(index: int) -> DescentOutcome:
        start = matcore.haar_isometry(size, rank, seed + index)
        return RotationDescent(cost, budget, separable=True).run(start)

    eigen = np.eye(size, rank, dtype=complex)
    incumbent = DescentOutcome(eigen, float(cost(eigen).sum()), 1, 0, True, False)
    outcomes = _run_restarts(restart, numRestarts, maxWorkers)
    index, best = _reduce([incumbent] + outcomes)
    logger.debug(
        "E_f restarts: best %.12g from %s (eigen-ensemble %.12g)",
        best.value,
        "eigen-ensemble" if index == 0 else f"restart {index - 1}",
        incumbent.value,
    )
    exhausted = any(outcome.budgetExhausted for outcome in outcomes)
    if exhausted:
        logger.warning(
            "E_f search stopped on its budget of %d evaluations in some restarts",
            budget,
        )
    decomposition = decomposition_from_isometry(rho12, best.matrix)
    value = decomposition_cost(decomposition)
    _assert_above_lower(value, lower, "ef_upper")
    return EstimateResult(
        value,
        "ef_upper",
        restartsUsed=numRestarts,
        iterations=best.evaluations,
        seed=seed,
        converged=best.converged,
        budgetExhausted=exhausted,
        certificate=decomposition,
        searchSize=size,
    )


def estimate_esq_upper(  # pylint: disable=too-many-arguments,too-many-locals
    rho12: DensityMatrix,
    ancillaDim: t.Optional[int] = None,
    numRestarts: int = 32,
    seed: int = 0,
    budget: int = 2000,
    environmentDim: t.Optional[int] = None,
    maxWorkers: t.Optional[int] = None,
    formation: t.Optional[EstimateResult] = None,
) -> EstimateResult:
    r"""
    Upper estimate of the squashed entanglement

    .. math::

        E_{sq}(\rho_{12}) = \frac{1}{2} \inf \{ I(1,2|3) : {\rm Tr}_3\,
        \rho_{123} = \rho_{12} \}

    over extensions with a third system of dimension ``ancillaDim``.

    The extensions searched are :math:`(\mathrm{id}_{12} \otimes \Lambda)
    (|\Psi\rangle\langle\Psi|)`, where :math:`|\Psi\rangle` purifies
    :math:`\rho_{12}` and :math:`\Lambda` is a channel with Stinespring isometry
    :math:`V` into :math:`\mathcal{H}_3 \otimes \mathcal{H}_E`. The conditional
    mutual information is evaluated on the global pure state, whose complementary
    marginals share their entropies. Random pairs of rows of :math:`V` are rotated
    by :class:`RotationDescent`.

    The canonical extension of the best decomposition found for the entanglement
    of formation is also evaluated, and the smaller value is returned. Hence the
    result never exceeds the formation estimate. A pure state only has product
    extensions, so its local entropy is returned with no optimization.

    Parameters
    ----------
    rho12
        A bipartite state.
    ancillaDim
        The dimension of the third system. If `None`, the square of the rank.
    numRestarts
        The number of random restarts.
    seed
        The seed of restart 0.
    budget
        The maximum number of cost evaluations per restart.
    environmentDim
        The dimension of the Stinespring environment. If `None`, the rank.
    maxWorkers
        The number of threads running restarts.
    formation
        A formation estimate of the same state. If `None`, one is computed with the
        same restarts, seed and budget.

    Returns
    -------
    EstimateResult
        The best value, with its extension as certificate.

    Raises
    ------
    BadRank
        If a dimension is not positive.
    BadArity
        If the state is not bipartite.
    """
    _require_bipartite(rho12)
    dim1, dim2 = rho12.getDims()
    rank = rho12.rank()
    ancilla = rank**2 if ancillaDim is None else int(ancillaDim)
    environment = rank if environmentDim is None else int(environmentDim)
    if ancilla < 1 or environment < 1:
        raise BadRank(
            f"Extension dimensions must be positive, got {ancilla} and {environment}"
        )
    lower = entropy.lower_bound_ent(rho12)

    if rank == 1:
        extension = states.append_trivial_subsystem(rho12)
        return EstimateResult(
            0.5 * entropy.cmi(extension),
            "esq_upper",
            seed=seed,
            certificate=extension,
            searchSize=1,
        )

    matcore.check_dimension(dim1 * dim2 * ancilla, "extension")
    purification = states.purify(rho12).getVector().reshape(dim1 * dim2, rank)
    shape = (dim1, dim2, ancilla, environment)
    rows = ancilla * environment

    def cost(isometry: np.ndarray) -> float:
        return _half_cmi(_extension_tensor(purification, isometry, shape))

    def restart(index: int) -> DescentOutcome:
        start = matcore.haar_isometry(rows, rank, seed + index)
        descent = RotationDescent(cost, budget, pairsPerSweep=rows)
        return descent.run(start, matcore.make_rng(seed + index))

    outcomes = _run_restarts(restart, numRestarts, maxWorkers)
    index, best = _reduce(outcomes)
    exhausted = any(outcome.budgetExhausted for outcome in outcomes)
    if exhausted:
        logger.warning(
            "E_sq search stopped on its budget of %d evaluations in some restarts",
            budget,
        )

    amplitudes = _extension_tensor(purification, best.matrix, shape).reshape(
        dim1 * dim2 * ancilla, environment
    )
    extension = DensityMatrix(amplitudes @ amplitudes.conj().T, shape[:3])
    value = 0.5 * entropy.cmi(extension)

    if formation is None:
        formation = estimate_ef_upper(
            rho12,
            numRestarts=numRestarts,
            seed=seed,
            budget=budget,
            maxWorkers=maxWorkers,
        )
    if isinstance(formation.certificate, Decomposition):
        canonical = extremal.canonical_extension(
            formation.certificate.getWeights(), formation.certificate.getMembers()
        )
        canonical_value = 0.5 * entropy.cmi(canonical)
        if canonical_value < value:
            logger.debug(
                "Canonical extension %.12g beats restart %d (%.12g)",
                canonical_value,
                index,
                value,
            )
            value, extension = canonical_value, canonical

    _assert_above_lower(value, lower, "esq_upper")
    return EstimateResult(
        value,
        "esq_upper",
        restartsUsed=numRestarts,
        iterations=best.evaluations,
        seed=seed,
        converged=best.converged,
        budgetExhausted=exhausted,
        certificate=extension,
        searchSize=ancilla,
    )


def entanglement_bounds(
    rho12: DensityMatrix, settings: t.Optional[config.EstimatorConfig] = None
) -> BoundsReport:
    r"""
    Compute the sandwich

    .. math::

        \max\{S_1 - S_{12}, S_2 - S_{12}, 0\} \le E_{sq} \le E_f \le
        \min\{S_1, S_2\}

    with numerical upper estimates of both measures, together with the averaged
    bound :math:`(S_1 + S_2)/2 - S_{12}`.

    Parameters
    ----------
    rho12
        A bipartite state.
    settings
        The estimator settings. If `None`, the defaults are used.

    Raises
    ------
    SandwichViolation
        If the ordering fails beyond ``settings.tolerance``.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import EstimatorConfig, PureState, measures
    >>> bell = PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), [2, 2])
    >>> report = measures.entanglement_bounds(bell.toDensityMatrix())
    >>> values = [report.lower, report.formation.value, report.squashed.value]
    >>> np.round(values, 7)
    array([0.6931472, 0.6931472, 0.6931472])
    """
    _require_bipartite(rho12)
    settings = settings or config.EstimatorConfig()
    formation = estimate_ef_upper(
        rho12,
        ensembleSize=settings.ensembleSize,
        numRestarts=settings.numRestarts,
        seed=settings.seed,
        budget=settings.budget,
        maxWorkers=settings.maxWorkers,
    )
    squashed = estimate_esq_upper(
        rho12,
        ancillaDim=settings.ancillaDim,
        numRestarts=settings.numRestarts,
        seed=settings.seed,
        budget=settings.budget,
        environmentDim=settings.environmentDim,
        maxWorkers=settings.maxWorkers,
        formation=formation,
    )
    report = BoundsReport(
        entropy.lower_bound_ent(rho12),
        entropy.weaker_bound(rho12),
        entropy.upper_bound_local(rho12),
        formation,
        squashed,
        settings.tolerance,
    )
    failures = report.violations()
    if failures:
        raise SandwichViolation(f"Bound ordering fails: {', '.join(failures)}")
    logger.info("Bounds: %r", report)
    return report


def verify_iden(
    spec: SaturatingSpec, settings: t.Optional[config.EstimatorConfig] = None
) -> IdentityReport:
    r"""
    Build the saturating state of a specification and check that both measures
    equal :math:`S_1 - S_{12} = S_2` on it, within the optimizer tolerance.

    Parameters
    ----------
    spec
        A specification with at least two terms.
    settings
        The estimator settings. If `None`, the defaults are used.

    Raises
    ------
    InvalidSpec
        If the specification has a single term.

    Example
    -------
    >>> from entlab import EstimatorConfig, SaturatingSpec, measures, states
    >>> spec = SaturatingSpec([0.5, 0.5], states.maximally_mixed([2]))
    >>> report = measures.verify_iden(spec, EstimatorConfig(numRestarts=2, budget=100))
    >>> report.certified, round(report.bounds.lower, 7)
    (True, 0.6931472)
    """
    if spec.getNumTerms() < 2:
        raise InvalidSpec("The identity check requires at least two terms")
    settings = settings or config.EstimatorConfig()
    rho12 = extremal.build_saturating_state(spec)
    report = IdentityReport(
        extremal.analytic_entropies(spec),
        entanglement_bounds(rho12, settings),
        settings.tolerance,
    )
    if not report.certified:
        logger.warning("Identity not certified: %r", report)
    return report
