"""
.. module:: states
   :platform: Linux, MacOS, Windows
   :synopsis: Partial trace, purification, subsystem permutation and state
              constructors

"""

import logging
import typing as t

import numpy as np
from numpy import typing as npt

from . import config, matcore
from .density_matrix import DensityMatrix
from .errors import (
    BadArity,
    BadPermutation,
    BadRank,
    BadShape,
    BadSubsystemSet,
    DimMismatch,
    WeightMismatch,
)
from .pure_state import PureState

logger = logging.getLogger(__name__)

# np.einsum accepts at most 52 distinct labels, two per subsystem.
_MAX_SUBSYSTEMS = 26


class SpectrumComparison(t.NamedTuple):
    """
    Outcome of comparing the nonzero spectra of the two marginals of a pure state.
    """

    match: bool
    gap: float


def validate_weights(
    weights: npt.ArrayLike,
    count: t.Optional[int] = None,
    tol: float = config.WEIGHT_TOL,
) -> np.ndarray:
    """
    Check that mixture weights are positive and sum to one.

    Parameters
    ----------
    weights
        The weights.
    count
        If given, the required number of weights.
    tol
        The tolerance on the sum.

    Returns
    -------
    np.ndarray
        The weights as a float array.

    Raises
    ------
    WeightMismatch
        If a weight is not positive, the sum differs from one, or the number of
        weights is wrong.
    """
    weights = np.asarray(weights, dtype=float).ravel()
    if weights.size == 0:
        raise WeightMismatch("At least one weight is required")
    if count is not None and weights.size != count:
        raise WeightMismatch(f"Expected {count} weights, got {weights.size}")
    if not np.all(np.isfinite(weights)) or np.any(weights <= 0):
        raise WeightMismatch(f"Weights must be positive, got {weights.tolist()}")
    total = weights.sum()
    if abs(total - 1.0) > tol:
        raise WeightMismatch(f"Weights must sum to 1 within {tol:.0e}, got {total!r}")
    return weights


def _subsystem_indices(indices: t.Iterable[int], count: int) -> t.Tuple[int, ...]:
    indices = tuple(sorted(set(int(i) for i in indices)))
    if any(i < 0 or i >= count for i in indices):
        raise BadSubsystemSet(
            f"Subsystem indices {list(indices)} out of range for {count} subsystems"
        )
    return indices


def reduce_operator(
    matrix: npt.ArrayLike, dims: t.Sequence[int], keep: t.Iterable[int]
) -> np.ndarray:
    """
    Partial trace of an arbitrary operator, keeping a set of subsystems.

    Parameters
    ----------
    matrix
        A square operator on the tensor product of the subsystems.
    dims
        The dimensions of the subsystems.
    keep
        The indices of the subsystems that are kept, which appear in their original
        order in the result. If empty, the full trace is returned as a 1x1 matrix.

    Returns
    -------
    np.ndarray
        The reduced operator.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import states
    >>> operator = np.kron(np.diag([1.0, 2.0]), np.diag([3.0, 4.0]))
    >>> states.reduce_operator(operator, [2, 2], [0]).real
    array([[ 7.,  0.],
           [ 0., 14.]])
    """
    dims = tuple(dims)
    count = len(dims)
    if count > _MAX_SUBSYSTEMS:
        raise BadShape(f"At most {_MAX_SUBSYSTEMS} subsystems are supported")
    keep = _subsystem_indices(keep, count)
    tensor = np.asarray(matrix, dtype=complex).reshape(dims + dims)
    rows = list(range(count))
    cols = [count + i if i in keep else i for i in range(count)]
    output = list(keep) + [count + i for i in keep]
    reduced = np.einsum(tensor, rows + cols, output)
    size = int(np.prod([dims[i] for i in keep]))
    return np.asarray(reduced).reshape(size, size)


def partial_trace(rho: DensityMatrix, traced: t.Iterable[int]) -> DensityMatrix:
    """
    Trace out a set of subsystems of a density matrix.

    Parameters
    ----------
    rho
        The state.
    traced
        The 0-based indices of the subsystems to be traced out. It must be a
        nonempty proper subset of the subsystems.

    Returns
    -------
    DensityMatrix
        The reduced state on the remaining subsystems, in their original order.

    Raises
    ------
    BadSubsystemSet
        If ``traced`` is empty, out of range or covers all subsystems.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import PureState, states
    >>> bell = PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), [2, 2])
    >>> states.partial_trace(bell.toDensityMatrix(), {1}).getMatrix().real
    array([[0.5, 0. ],
           [0. , 0.5]])
    """
    count = rho.getNumSubsystems()
    traced = _subsystem_indices(traced, count)
    if not traced or len(traced) == count:
        raise BadSubsystemSet(
            f"Traced subsystems {list(traced)} must be a nonempty proper subset "
            f"of the {count} subsystems"
        )
    keep = [i for i in range(count) if i not in traced]
    dims = rho.getDims()
    reduced = reduce_operator(rho.getMatrix(), dims, keep)
    return DensityMatrix(reduced, [dims[i] for i in keep])


def marginal(rho: DensityMatrix, keep: t.Iterable[int]) -> DensityMatrix:
    """
    Reduced state on a nonempty set of subsystems (the whole state if all are kept).

    Parameters
    ----------
    rho
        The state.
    keep
        The 0-based indices of the kept subsystems.
    """
    count = rho.getNumSubsystems()
    keep = _subsystem_indices(keep, count)
    if not keep:
        raise BadSubsystemSet("At least one subsystem must be kept")
    if len(keep) == count:
        return rho
    return partial_trace(rho, [i for i in range(count) if i not in keep])


def purify(rho: DensityMatrix, keepDims: bool = False) -> PureState:
    r"""
    Purify a density matrix with an ancilla whose dimension is its numerical rank.

    The purification is :math:`|\Psi\rangle = \sum_i \sqrt{p_i}\, |e_i\rangle
    \otimes |i\rangle`, where :math:`(p_i, e_i)` are the eigenpairs of
    :math:`\rho` with :math:`p_i >` ``config.RANK_CUTOFF``, sorted by descending
    eigenvalue.

    Parameters
    ----------
    rho
        The state to purify.
    keepDims
        If `False`, the state is treated as a single system and the result has
        dims ``[d, r]``. If `True`, the result has dims ``[*rho.getDims(), r]``.

    Returns
    -------
    PureState
        The purification, whose partial trace over the last subsystem is ``rho``.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import DensityMatrix, states
    >>> psi = states.purify(DensityMatrix(np.eye(2) / 2))
    >>> psi.getDims()
    (2, 2)
    >>> np.round(psi.getVector().real, 6)
    array([0.707107, 0.      , 0.      , 0.707107])
    """
    values, vectors = rho.getSpectrum().descending(cutoff=config.RANK_CUTOFF)
    amplitudes = vectors * np.sqrt(values)
    vector = amplitudes.ravel()
    dims = rho.getDims() if keepDims else (rho.getDimension(),)
    matcore.check_dimension(vector.size, "purification")
    return PureState.normalized(vector, dims + (values.size,))


def reduced_spectra_match(
    psi: PureState, tol: float = 1e-9
) -> SpectrumComparison:
    """
    Compare the nonzero spectra of the two marginals of a bipartite pure state.

    Parameters
    ----------
    psi
        A bipartite pure state.
    tol
        The largest absolute mismatch accepted.

    Returns
    -------
    SpectrumComparison
        Whether the spectra match and the largest absolute mismatch.

    Raises
    ------
    BadArity
        If ``psi`` is not bipartite.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import PureState, states
    >>> bell = PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), [2, 2])
    >>> states.reduced_spectra_match(bell).match
    True
    """
    if psi.getNumSubsystems() != 2:
        raise BadArity(f"Expected a bipartite state, got dims {list(psi.getDims())}")
    amplitudes = psi.getVector().reshape(psi.getDims())
    first = amplitudes @ amplitudes.conj().T
    second = amplitudes.T @ amplitudes.conj()
    spectra = [
        np.sort(matcore.eig_hermitian(m).eigenvalues)[::-1] for m in (first, second)
    ]
    size = max(s.size for s in spectra)
    padded = [np.pad(s, (0, size - s.size)) for s in spectra]
    gap = float(np.max(np.abs(padded[0] - padded[1])))
    return SpectrumComparison(gap <= tol, gap)


def random_density(dims: t.Iterable[int], rank: int, seed: int) -> DensityMatrix:
    r"""
    Sample a density matrix :math:`G G^\dagger / {\rm Tr}(G G^\dagger)`, where
    :math:`G` is a seeded complex Gaussian matrix with ``rank`` columns.

    Parameters
    ----------
    dims
        The dimensions of the subsystems.
    rank
        The rank of the sampled state.
    seed
        The seed. The output is a deterministic function of ``(dims, rank, seed)``.

    Raises
    ------
    BadRank
        If ``rank`` is not between 1 and the product of ``dims``.

    Example
    -------
    >>> from entlab import states
    >>> rho = states.random_density([2, 2], rank=2, seed=11)
    >>> rho.getDims(), rho.rank()
    ((2, 2), 2)
    """
    dims = tuple(int(d) for d in dims)
    dimension = int(np.prod(dims))
    if not 1 <= rank <= dimension:
        raise BadRank(f"Rank must be between 1 and {dimension}, got {rank}")
    matcore.check_dimension(dimension, "state")
    gaussian = matcore.ginibre(dimension, rank, matcore.make_rng(seed))
    matrix = gaussian @ gaussian.conj().T
    return DensityMatrix(matrix / np.trace(matrix).real, dims)


def random_pure_state(dims: t.Iterable[int], seed: int) -> PureState:
    """
    Sample a Haar-random pure state.

    Parameters
    ----------
    dims
        The dimensions of the subsystems.
    seed
        The seed.
    """
    dims = tuple(int(d) for d in dims)
    dimension = int(np.prod(dims))
    matcore.check_dimension(dimension, "state")
    gaussian = matcore.ginibre(dimension, 1, matcore.make_rng(seed)).ravel()
    return PureState.normalized(gaussian, dims)


def maximally_mixed(dims: t.Iterable[int]) -> DensityMatrix:
    """
    The maximally mixed state on subsystems of given dimensions.
    """
    dims = tuple(int(d) for d in dims)
    dimension = int(np.prod(dims))
    matcore.check_dimension(dimension, "state")
    return DensityMatrix(np.eye(dimension) / dimension, dims)


def tensor_product_state(*rhos: DensityMatrix) -> DensityMatrix:
    """
    Tensor product of density matrices, with the subsystem lists concatenated.

    Example
    -------
    >>> from entlab import states
    >>> rho = states.tensor_product_state(
    ...     states.maximally_mixed([2]), states.maximally_mixed([3, 2])
    ... )
    >>> rho.getDims()
    (2, 3, 2)
    """
    if not rhos:
        raise BadArity("At least one state is required")
    matrix = rhos[0].getMatrix()
    dims = rhos[0].getDims()
    for rho in rhos[1:]:
        matrix = matcore.tensor(matrix, rho.getMatrix())
        dims = dims + rho.getDims()
    return DensityMatrix(matrix, dims)


def append_trivial_subsystem(rho: DensityMatrix) -> DensityMatrix:
    """
    Append a one-dimensional subsystem to a state.
    """
    return DensityMatrix(rho.getMatrix(), rho.getDims() + (1,))


def separable_mixture(
    weights: npt.ArrayLike,
    factors: t.Sequence[t.Tuple[DensityMatrix, DensityMatrix]],
) -> DensityMatrix:
    r"""
    Build the separable state :math:`\sum_k \nu_k \rho_1^k \otimes \rho_2^k`.

    Parameters
    ----------
    weights
        The positive weights :math:`\nu_k`, summing to one.
    factors
        The pairs :math:`(\rho_1^k, \rho_2^k)`. Each factor is treated as a single
        system and all first (second) factors must share their dimension.

    Returns
    -------
    DensityMatrix
        A bipartite state with dims ``[d1, d2]``.

    Raises
    ------
    WeightMismatch
        If the weights are invalid or their number differs from that of the factors.
    DimMismatch
        If the factor dimensions differ across terms.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import DensityMatrix, states
    >>> zero = DensityMatrix(np.diag([1.0, 0.0]))
    >>> one = DensityMatrix(np.diag([0.0, 1.0]))
    >>> rho = states.separable_mixture([0.5, 0.5], [(zero, zero), (one, one)])
    >>> np.diag(rho.getMatrix()).real
    array([0.5, 0. , 0. , 0.5])
    """
    weights = validate_weights(weights, len(factors))
    first_dim = factors[0][0].getDimension()
    second_dim = factors[0][1].getDimension()
    matcore.check_dimension(first_dim * second_dim, "separable state")
    matrix = np.zeros((first_dim * second_dim,) * 2, dtype=complex)
    for weight, (first, second) in zip(weights, factors):
        if (first.getDimension(), second.getDimension()) != (first_dim, second_dim):
            raise DimMismatch(
                f"Factor dimensions ({first.getDimension()}, "
                f"{second.getDimension()}) differ from ({first_dim}, {second_dim})"
            )
        matrix += weight * np.kron(first.getMatrix(), second.getMatrix())
    return DensityMatrix(matrix, [first_dim, second_dim])


def permute_subsystems(rho: DensityMatrix, perm: t.Sequence[int]) -> DensityMatrix:
    """
    Reorder the subsystems of a state.

    Subsystem ``k`` of the result is subsystem ``perm[k]`` of the input.

    Parameters
    ----------
    rho
        The state.
    perm
        A permutation of ``range(rho.getNumSubsystems())``.

    Raises
    ------
    BadPermutation
        If ``perm`` is not a permutation of the subsystem indices.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import DensityMatrix, states
    >>> rho = states.tensor_product_state(
    ...     DensityMatrix(np.diag([1.0, 0.0])), states.maximally_mixed([3])
    ... )
    >>> states.permute_subsystems(rho, [1, 0]).getDims()
    (3, 2)
    """
    count = rho.getNumSubsystems()
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(count)):
        raise BadPermutation(f"{perm} is not a permutation of range({count})")
    dims = rho.getDims()
    tensor = rho.getMatrix().reshape(dims + dims)
    axes = perm + [count + p for p in perm]
    matrix = tensor.transpose(axes).reshape(rho.getMatrix().shape)
    return DensityMatrix(matrix, [dims[p] for p in perm])


def reduce_pure_state(psi: PureState, keep: t.Iterable[int]) -> DensityMatrix:
    r"""
    Reduced state of a pure state on a nonempty set of subsystems.

    The reduced matrix is :math:`A A^\dagger`, where :math:`A` is the state vector
    reshaped into a (kept, traced) matrix, so the full projector is never formed.

    Parameters
    ----------
    psi
        The pure state.
    keep
        The 0-based indices of the kept subsystems.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import PureState, states
    >>> ghz = PureState(np.array([1, 0, 0, 0, 0, 0, 0, 1]) / np.sqrt(2), [2, 2, 2])
    >>> np.diag(states.reduce_pure_state(ghz, [0, 2]).getMatrix()).real
    array([0.5, 0. , 0. , 0.5])
    """
    dims = psi.getDims()
    count = len(dims)
    keep = _subsystem_indices(keep, count)
    if not keep:
        raise BadSubsystemSet("At least one subsystem must be kept")
    traced = [i for i in range(count) if i not in keep]
    kept_size = int(np.prod([dims[i] for i in keep]))
    tensor = psi.getVector().reshape(dims).transpose(list(keep) + traced)
    amplitudes = tensor.reshape(kept_size, -1)
    return DensityMatrix(amplitudes @ amplitudes.conj().T, [dims[i] for i in keep])
