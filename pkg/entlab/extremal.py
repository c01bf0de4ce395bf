"""
.. module:: extremal
   :platform: Linux, MacOS, Windows
   :synopsis: States saturating the triangle inequality, their equality
              conditions, canonical extensions and sharpness witnesses

"""

import logging
import typing as t

import numpy as np
from numpy import typing as npt

from . import config, entropy, matcore, states
from .density_matrix import DensityMatrix
from .equality_certificate import EqualityCertificate
from .errors import BadArity, DegenerateWitness, DimMismatch, InvalidSpec
from .pure_state import PureState
from .saturating_spec import SaturatingSpec
from .sharpness_witness import SharpnessWitness

logger = logging.getLogger(__name__)

_DEGENERACY_TOL = 1e-9
_WITNESS_ENTROPY_FLOOR = 1e-9


def orthogonal_purifications(spec: SaturatingSpec) -> t.List[PureState]:
    r"""
    Build :math:`n` purifications of :math:`\rho_2` whose supports on
    :math:`\mathcal{H}_1` are mutually orthogonal.

    With :math:`(\mu_i, |i\rangle)` the nonzero eigenpairs of :math:`\rho_2`, the
    :math:`j`-th state is

    .. math::

        |\Phi_j\rangle = \sum_i \sqrt{\mu_i}\, |f^{(j)}_i\rangle \otimes |i\rangle,

    where :math:`f^{(j)}_i` is the standard basis vector of index :math:`j r_2 + i`
    of :math:`\mathcal{H}_1`, which has dimension :math:`n r_2`.

    Parameters
    ----------
    spec
        The weights and the second marginal.

    Returns
    -------
    List[PureState]
        The purifications, with dims ``[n * r2, d2]``.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import SaturatingSpec, extremal, states
    >>> spec = SaturatingSpec([0.5, 0.5], states.maximally_mixed([2]))
    >>> phis = extremal.orthogonal_purifications(spec)
    >>> [phi.getDims() for phi in phis]
    [(4, 2), (4, 2)]
    >>> round(abs(phis[0].overlap(phis[1])), 12)
    0.0
    """
    values, vectors = spec.getRho2().getSpectrum().descending(config.RANK_CUTOFF)
    rank = values.size
    dim2 = spec.getDimension()
    dim1 = spec.getNumTerms() * rank
    matcore.check_dimension(dim1 * dim2, "saturating state")
    rows = (vectors * np.sqrt(values)).T
    purifications = []
    for j in range(spec.getNumTerms()):
        amplitudes = np.zeros((dim1, dim2), dtype=complex)
        amplitudes[j * rank : (j + 1) * rank, :] = rows
        purifications.append(PureState.normalized(amplitudes.ravel(), [dim1, dim2]))
    return purifications


def build_saturating_state(spec: SaturatingSpec) -> DensityMatrix:
    r"""
    Build the state :math:`\rho_{12} = \sum_j \kappa_j |\Phi_j\rangle\langle\Phi_j|`
    from the orthogonal purifications of :math:`\rho_2`.

    Its entropies are :math:`S_{12} = -\sum_j \kappa_j \ln \kappa_j`,
    :math:`S_2 = S(\rho_2)` and :math:`S_1 = S_{12} + S_2`, so it attains equality
    in the triangle inequality.

    Raises
    ------
    DimensionOverflow
        If :math:`n r_2 d_2` exceeds the dimension cap.

    Example
    -------
    >>> from entlab import SaturatingSpec, entropy, extremal, states
    >>> spec = SaturatingSpec([0.5, 0.5], states.maximally_mixed([2]))
    >>> rho12 = extremal.build_saturating_state(spec)
    >>> rho12.getDims()
    (4, 2)
    >>> round(entropy.von_neumann_entropy(rho12), 7)
    0.6931472
    """
    purifications = orthogonal_purifications(spec)
    matrix = sum(
        kappa * np.outer(phi.getVector(), phi.getVector().conj())
        for kappa, phi in zip(spec.getKappas(), purifications)
    )
    return DensityMatrix(matrix, purifications[0].getDims())


def analytic_entropies(spec: SaturatingSpec) -> t.Tuple[float, float, float]:
    r"""
    The entropies :math:`(S_{12}, S_1, S_2)` of the saturating state of a
    specification, from the closed formulas.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import DensityMatrix, SaturatingSpec, extremal
    >>> spec = SaturatingSpec([0.25] * 4, DensityMatrix(np.diag([0.9, 0.1])))
    >>> np.round(extremal.analytic_entropies(spec), 7)
    array([1.3862944, 1.7113774, 0.325083 ])
    """
    s12 = entropy.spectrum_entropy(spec.getKappas())
    s2 = entropy.von_neumann_entropy(spec.getRho2())
    return s12, s12 + s2, s2


def verify_equality_conditions(
    rho12: DensityMatrix,
    cutoff: float = config.CERTIFICATE_RANK_CUTOFF,
    tol: float = config.CERTIFICATE_TOL,
) -> EqualityCertificate:
    r"""
    Check the characterization of the bipartite states with :math:`S_{12} = S_1 -
    S_2`.

    The state passes if :math:`{\rm rank}(\rho_1) = {\rm rank}(\rho_2)\,
    {\rm rank}(\rho_{12})`, if the eigenvectors :math:`\phi_i` of
    :math:`\rho_{12}` satisfy :math:`{\rm Tr}_1 |\phi_i\rangle\langle\phi_j| =
    \delta_{ij}\rho_2`, and if the entropy identity holds, all within tolerance.

    Parameters
    ----------
    rho12
        A bipartite state.
    cutoff
        Eigenvalues above this value count toward numerical ranks.
    tol
        The tolerance on the residual and on the entropy gap.

    Returns
    -------
    EqualityCertificate
        The observed ranks, residuals and verdict.

    Raises
    ------
    BadArity
        If the state is not bipartite.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import DensityMatrix, SaturatingSpec, extremal
    >>> spec = SaturatingSpec([0.5, 0.5], DensityMatrix(np.diag([0.7, 0.3])))
    >>> certificate = extremal.verify_equality_conditions(
    ...     extremal.build_saturating_state(spec)
    ... )
    >>> certificate.ranks, certificate.passed
    ((4, 2, 2), True)
    """
    if rho12.getNumSubsystems() != 2:
        raise BadArity(f"Expected a bipartite state, got dims {list(rho12.getDims())}")
    dim1, dim2 = rho12.getDims()
    rho1 = states.partial_trace(rho12, [1])
    rho2 = states.partial_trace(rho12, [0])
    ranks = (rho1.rank(cutoff), rho2.rank(cutoff), rho12.rank(cutoff))

    kappas, vectors = rho12.getSpectrum().descending(cutoff)
    degenerate = bool(np.any(np.abs(np.diff(kappas)) <= _DEGENERACY_TOL))
    amplitudes = vectors.T.reshape(-1, dim1, dim2)
    blocks = np.einsum("iab,jac->ijbc", amplitudes, amplitudes.conj())
    targets = np.eye(kappas.size)[:, :, None, None] * rho2.getMatrix()
    offdiag = float(np.max(np.linalg.norm(blocks - targets, axis=(2, 3)), initial=0.0))

    s1 = entropy.von_neumann_entropy(rho1)
    s2 = entropy.von_neumann_entropy(rho2)
    s12 = entropy.von_neumann_entropy(rho12)

    purification = states.purify(rho12, keepDims=True)
    rho23 = states.reduce_pure_state(purification, [1, 2])
    rho3 = states.reduce_pure_state(purification, [2])
    product = np.kron(rho2.getMatrix(), rho3.getMatrix())
    product_residual = rho23.distance(product)

    if degenerate:
        logger.debug("Degenerate spectrum %s: residual refers to eigh basis", kappas)
    return EqualityCertificate(
        ranks, offdiag, abs(s12 - (s1 - s2)), product_residual, degenerate, tol
    )


def _as_density(omega: t.Union[DensityMatrix, PureState]) -> DensityMatrix:
    return omega.toDensityMatrix() if isinstance(omega, PureState) else omega


def canonical_extension(
    weights: npt.ArrayLike,
    omegas: t.Sequence[t.Union[DensityMatrix, PureState]],
) -> DensityMatrix:
    r"""
    Extend a decomposition :math:`\rho_{12} = \sum_k \lambda_k \omega^k` to the
    tripartite state

    .. math::

        \rho_{123} = \sum_k \lambda_k\, \omega^k \otimes |k\rangle\langle k|,

    with :math:`|k\rangle` the standard basis of an :math:`n`-dimensional third
    system. When every :math:`\omega^k` is pure, :math:`I(1,2|3) = 2 \sum_k
    \lambda_k S({\rm Tr}_2\, \omega^k)`.

    Parameters
    ----------
    weights
        The positive weights, summing to one.
    omegas
        Bipartite states (density matrices or pure states) sharing their dims.

    Returns
    -------
    DensityMatrix
        The extension, with dims ``[d1, d2, n]``.

    Raises
    ------
    WeightMismatch
        If the weights are invalid or do not match the number of states.
    DimMismatch
        If the states do not share their dims.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import PureState, entropy, extremal
    >>> bell = PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), [2, 2])
    >>> anti = PureState(np.array([1, 0, 0, -1]) / np.sqrt(2), [2, 2])
    >>> rho123 = extremal.canonical_extension([0.5, 0.5], [bell, anti])
    >>> rho123.getDims()
    (2, 2, 2)
    >>> round(entropy.cmi(rho123) / np.log(2), 8)
    2.0
    """
    weights = states.validate_weights(weights, len(omegas))
    omegas = [_as_density(omega) for omega in omegas]
    dims = omegas[0].getDims()
    if len(dims) != 2:
        raise BadArity(f"Expected bipartite states, got dims {list(dims)}")
    if any(omega.getDims() != dims for omega in omegas):
        raise DimMismatch("All states of a decomposition must share their dims")
    count = len(omegas)
    matcore.check_dimension(omegas[0].getDimension() * count, "extension")
    matrix = sum(
        weight * np.kron(omega.getMatrix(), np.diag(np.eye(count)[k]))
        for k, (weight, omega) in enumerate(zip(weights, omegas))
    )
    return DensityMatrix(matrix, dims + (count,))


def build_sharpness_witness(spec: SaturatingSpec) -> SharpnessWitness:
    r"""
    Build a tripartite state for which extended strong subadditivity holds with
    equality and a strictly positive bound.

    The state is the canonical extension of the decomposition of the saturating
    state of ``spec`` into its orthogonal purifications. Its conditional mutual
    information is :math:`2 S_2` and its bound :math:`S_1 - S_{12} = S_2`, so the
    ratio is 2 and the inequality fails for every constant above 2.

    Raises
    ------
    InvalidSpec
        If the specification has fewer than two terms.
    DegenerateWitness
        If :math:`S(\rho_2)` vanishes, so that the ratio is undefined.

    Example
    -------
    >>> from entlab import SaturatingSpec, extremal, states
    >>> spec = SaturatingSpec([0.5, 0.5], states.maximally_mixed([2]))
    >>> witness = extremal.build_sharpness_witness(spec)
    >>> round(witness.ratio, 6)
    2.0
    """
    if spec.getNumTerms() < 2:
        raise InvalidSpec("A sharpness witness requires at least two terms")
    s2 = entropy.von_neumann_entropy(spec.getRho2())
    if s2 <= _WITNESS_ENTROPY_FLOOR:
        raise DegenerateWitness(
            f"S(rho2) = {s2:.3e} vanishes: the witness ratio would be 0/0"
        )
    rho123 = canonical_extension(spec.getKappas(), orthogonal_purifications(spec))
    value = entropy.cmi(rho123)
    bound = entropy.lower_bound_ent(states.partial_trace(rho123, [2]))
    logger.debug("Sharpness witness: cmi=%.12g, bound=%.12g", value, bound)
    return SharpnessWitness(rho123, value, bound)


def separable_equality_extension(
    weights: npt.ArrayLike,
    factors: t.Sequence[t.Tuple[DensityMatrix, DensityMatrix]],
) -> DensityMatrix:
    r"""
    Extend a separable state :math:`\sum_k \nu_k \rho_1^k \otimes \rho_2^k` to a
    tripartite state with vanishing conditional mutual information.

    Each :math:`\rho_1^k` is purified onto :math:`\mathcal{H}_1 \otimes
    \mathcal{H}_{3}^{k}`, the sectors :math:`\mathcal{H}_3^k` being mutually
    orthogonal blocks of :math:`\mathcal{H}_3`, and the purification is tensored
    with :math:`\rho_2^k`. This certifies that the squashed entanglement of a
    separable state is zero.

    Returns
    -------
    DensityMatrix
        The extension, with dims ``[d1, d2, d3]`` where ``d3`` is the sum of the
        ranks of the :math:`\rho_1^k`.

    Raises
    ------
    WeightMismatch
        If the weights are invalid.
    DimMismatch
        If the factor dimensions differ across terms.
    DimensionOverflow
        If the extension exceeds the dimension cap.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import DensityMatrix, entropy, extremal
    >>> zero = DensityMatrix(np.diag([1.0, 0.0]))
    >>> one = DensityMatrix(np.diag([0.0, 1.0]))
    >>> rho123 = extremal.separable_equality_extension(
    ...     [0.5, 0.5], [(zero, zero), (one, one)]
    ... )
    >>> rho123.getDims()
    (2, 2, 2)
    >>> abs(entropy.cmi(rho123)) < 1e-7
    True
    """
    weights = states.validate_weights(weights, len(factors))
    dim1 = factors[0][0].getDimension()
    dim2 = factors[0][1].getDimension()
    for first, second in factors:
        if (first.getDimension(), second.getDimension()) != (dim1, dim2):
            raise DimMismatch(
                f"Factor dimensions ({first.getDimension()}, "
                f"{second.getDimension()}) differ from ({dim1}, {dim2})"
            )
    purifications = [
        states.purify(DensityMatrix(first.getMatrix())) for first, _ in factors
    ]
    sector_dims = [psi.getDims()[1] for psi in purifications]
    dim3 = sum(sector_dims)
    matcore.check_dimension(dim1 * dim2 * dim3, "extension")
    offsets = np.concatenate([[0], np.cumsum(sector_dims)])
    matrix = np.zeros((dim1 * dim3 * dim2,) * 2, dtype=complex)
    for k, (weight, psi) in enumerate(zip(weights, purifications)):
        amplitudes = np.zeros((dim1, dim3), dtype=complex)
        amplitudes[:, offsets[k] : offsets[k + 1]] = psi.getVector().reshape(
            dim1, sector_dims[k]
        )
        vector = amplitudes.ravel()
        projector = np.outer(vector, vector.conj())
        matrix += weight * np.kron(projector, factors[k][1].getMatrix())
    rho132 = DensityMatrix(matrix, [dim1, dim3, dim2])
    return states.permute_subsystems(rho132, [0, 2, 1])
