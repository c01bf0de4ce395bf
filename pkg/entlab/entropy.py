"""
.. module:: entropy
   :platform: Linux, MacOS, Windows
   :synopsis: Von Neumann entropy, entropy inequalities and entanglement bounds

All entropies are in nats. Marginal entropies are always computed from freshly
reduced states.
"""

import typing as t

import numpy as np
from numpy import typing as npt

from . import config, states
from .density_matrix import DensityMatrix
from .errors import BadArity
from .inequality_report import InequalityReport
from .pure_state import PureState


def spectrum_entropy(
    eigenvalues: npt.ArrayLike, cutoff: float = config.RANK_CUTOFF
) -> float:
    r"""
    Shannon entropy :math:`-\sum_i \lambda_i \ln \lambda_i` of a spectrum.

    Eigenvalues not above ``cutoff`` (including roundoff below zero) contribute
    nothing, since :math:`0 \ln 0 = 0`.

    Example
    -------
    >>> from entlab import entropy
    >>> round(entropy.spectrum_entropy([0.9, 0.1]), 7)
    0.325083
    """
    values = np.asarray(eigenvalues, dtype=float)
    values = values[values > cutoff]
    return float(-np.sum(values * np.log(values)))


def von_neumann_entropy(rho: DensityMatrix) -> float:
    r"""
    Von Neumann entropy :math:`S(\rho) = -{\rm Tr}\, \rho \ln \rho`.

    Parameters
    ----------
    rho
        The state.

    Returns
    -------
    float
        The entropy in nats, between 0 and :math:`\ln d`.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import DensityMatrix, entropy
    >>> round(entropy.von_neumann_entropy(DensityMatrix(np.eye(2) / 2)), 7)
    0.6931472
    """
    return spectrum_entropy(rho.getSpectrum().eigenvalues)


def subsystem_entropy(rho: DensityMatrix, keep: t.Iterable[int]) -> float:
    """
    Entropy of the reduced state on a set of subsystems (zero for the empty set).

    Parameters
    ----------
    rho
        The state.
    keep
        The 0-based indices of the kept subsystems.
    """
    keep = list(keep)
    if not keep:
        return 0.0
    return von_neumann_entropy(states.marginal(rho, keep))


def entanglement_entropy(psi: PureState) -> float:
    r"""
    Entropy of either marginal of a bipartite pure state, computed from its Schmidt
    coefficients.

    Raises
    ------
    BadArity
        If ``psi`` is not bipartite.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import PureState, entropy
    >>> bell = PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), [2, 2])
    >>> round(entropy.entanglement_entropy(bell), 7)
    0.6931472
    """
    if psi.getNumSubsystems() != 2:
        raise BadArity(f"Expected a bipartite state, got dims {list(psi.getDims())}")
    singular = np.linalg.svd(psi.getVector().reshape(psi.getDims()), compute_uv=False)
    return spectrum_entropy(singular**2)


def _require_arity(rho: DensityMatrix, count: int) -> None:
    if rho.getNumSubsystems() != count:
        kind = {2: "bipartite", 3: "tripartite"}.get(count, f"{count}-partite")
        raise BadArity(f"Expected a {kind} state, got dims {list(rho.getDims())}")


def _bipartite_entropies(rho12: DensityMatrix) -> t.Tuple[float, float, float]:
    _require_arity(rho12, 2)
    return (
        subsystem_entropy(rho12, [0]),
        subsystem_entropy(rho12, [1]),
        von_neumann_entropy(rho12),
    )


def _tripartite_entropies(rho123: DensityMatrix) -> t.Dict[str, float]:
    _require_arity(rho123, 3)
    labels = {"1": [0], "2": [1], "3": [2], "12": [0, 1], "13": [0, 2], "23": [1, 2]}
    entropies = {key: subsystem_entropy(rho123, keep) for key, keep in labels.items()}
    entropies["123"] = von_neumann_entropy(rho123)
    return entropies


def conditional_entropies(rho12: DensityMatrix) -> t.Tuple[float, float]:
    r"""
    The conditional entropies :math:`(S_{12} - S_1, S_{12} - S_2)` of a bipartite
    state. Both are non-negative for separable states and may be negative otherwise.

    Raises
    ------
    BadArity
        If the state is not bipartite.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import PureState, entropy
    >>> bell = PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), [2, 2])
    >>> np.round(entropy.conditional_entropies(bell.toDensityMatrix()), 7)
    array([-0.6931472, -0.6931472])
    """
    s1, s2, s12 = _bipartite_entropies(rho12)
    return s12 - s1, s12 - s2


def mutual_information(rho12: DensityMatrix) -> float:
    r"""
    The mutual information :math:`S_1 + S_2 - S_{12}` of a bipartite state.
    """
    s1, s2, s12 = _bipartite_entropies(rho12)
    return s1 + s2 - s12


def cmi(rho123: DensityMatrix) -> float:
    r"""
    The conditional mutual information of subsystems 1 and 2 given 3:

    .. math::

        I(1,2|3) = S_{13} + S_{23} - S_{123} - S_3

    Raises
    ------
    BadArity
        If the state is not tripartite.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import PureState, entropy
    >>> ghz = PureState(np.array([1, 0, 0, 0, 0, 0, 0, 1]) / np.sqrt(2), [2, 2, 2])
    >>> round(entropy.cmi(ghz.toDensityMatrix()), 7)
    0.6931472
    """
    s = _tripartite_entropies(rho123)
    return s["13"] + s["23"] - s["123"] - s["3"]


def check_ssa(
    rho123: DensityMatrix, tol: float = config.INEQUALITY_TOL
) -> InequalityReport:
    r"""
    Strong subadditivity :math:`I(1,2|3) \ge 0`.
    """
    return InequalityReport("ssa", cmi(rho123), 0.0, tol)


def check_extended_ssa(
    rho123: DensityMatrix, tol: float = config.INEQUALITY_TOL
) -> InequalityReport:
    r"""
    Extended strong subadditivity:

    .. math::

        I(1,2|3) \ge 2 \max\{S_1 - S_{12}, S_2 - S_{12}, 0\}

    where the entropies on the right-hand side are those of :math:`\rho_{12} =
    {\rm Tr}_3 \rho_{123}`. The factor 2 cannot be increased.
    """
    s = _tripartite_entropies(rho123)
    lhs = s["13"] + s["23"] - s["123"] - s["3"]
    rhs = 2.0 * max(s["1"] - s["12"], s["2"] - s["12"], 0.0)
    return InequalityReport("extended_ssa", lhs, rhs, tol)


def check_triangle(
    rho12: DensityMatrix, tol: float = config.INEQUALITY_TOL
) -> InequalityReport:
    r"""
    Araki-Lieb triangle inequality :math:`S_{12} \ge |S_1 - S_2|`.
    """
    s1, s2, s12 = _bipartite_entropies(rho12)
    return InequalityReport("triangle", s12, abs(s1 - s2), tol)


def check_subadditivity(
    rho12: DensityMatrix, tol: float = config.INEQUALITY_TOL
) -> InequalityReport:
    r"""
    Subadditivity :math:`S_1 + S_2 \ge S_{12}`.
    """
    s1, s2, s12 = _bipartite_entropies(rho12)
    return InequalityReport("subadditivity", s1 + s2, s12, tol)


def check_weak_monotonicity(
    rho123: DensityMatrix, tol: float = config.INEQUALITY_TOL
) -> InequalityReport:
    r"""
    Weak monotonicity :math:`S_{12} + S_{23} \ge S_1 + S_3`.
    """
    s = _tripartite_entropies(rho123)
    return InequalityReport(
        "weak_monotonicity", s["12"] + s["23"], s["1"] + s["3"], tol
    )


def check_aux_inequalities(
    rho123: DensityMatrix, tol: float = config.INEQUALITY_TOL
) -> t.List[InequalityReport]:
    r"""
    Three consequences of weak monotonicity:

    .. math::

        S_{12} + S_{13} + 2 S_{23} &\ge 2 S_1 + S_2 + S_3 \\
        2 S_{12} + S_{13} + 2 S_{23} &\ge 2 S_1 + S_2 + 2 S_3 \\
        S_{12} + S_{13} + S_{23} &\ge S_1 + S_2 + S_3

    Returns
    -------
    List[InequalityReport]
        The reports ``essa00``, ``essa0B-left`` and ``essa0B-right``, in this order.
    """
    s = _tripartite_entropies(rho123)
    return [
        InequalityReport(
            "essa00",
            s["12"] + s["13"] + 2 * s["23"],
            2 * s["1"] + s["2"] + s["3"],
            tol,
        ),
        InequalityReport(
            "essa0B-left",
            2 * s["12"] + s["13"] + 2 * s["23"],
            2 * s["1"] + s["2"] + 2 * s["3"],
            tol,
        ),
        InequalityReport(
            "essa0B-right",
            s["12"] + s["13"] + s["23"],
            s["1"] + s["2"] + s["3"],
            tol,
        ),
    ]


def check_purified_weak_monotonicity(
    rho123: DensityMatrix, tol: float = config.INEQUALITY_TOL
) -> t.Tuple[InequalityReport, InequalityReport]:
    r"""
    Evaluate weak monotonicity of :math:`\rho_{123}` together with strong
    subadditivity of the purification.

    With :math:`\rho_{1234}` a purification of :math:`\rho_{123}`, the identities
    :math:`S_{23} = S_{14}` and :math:`S_3 = S_{124}` give

    .. math::

        S_{12} + S_{23} - S_1 - S_3 = S_{12} + S_{14} - S_{124} - S_1,

    the conditional mutual information of 2 and 4 given 1. The two reports therefore
    have equal slacks.

    Returns
    -------
    Tuple[InequalityReport, InequalityReport]
        The ``weak_monotonicity`` report and the ``purified_ssa`` report.
    """
    _require_arity(rho123, 3)
    purification = states.purify(rho123, keepDims=True)
    rho124 = states.reduce_pure_state(purification, [0, 1, 3])
    reordered = states.permute_subsystems(rho124, [1, 2, 0])
    purified = check_ssa(reordered, tol)
    purified.name = "purified_ssa"
    return check_weak_monotonicity(rho123, tol), purified


def check_all(
    rho: DensityMatrix, tol: float = config.INEQUALITY_TOL
) -> t.List[InequalityReport]:
    """
    Evaluate every applicable inequality on a bipartite or tripartite state.

    For a tripartite state, the triangle inequality is evaluated on the marginal of
    subsystems 1 and 2.

    Raises
    ------
    BadArity
        If the state is neither bipartite nor tripartite.
    """
    count = rho.getNumSubsystems()
    if count == 2:
        return [check_triangle(rho, tol), check_subadditivity(rho, tol)]
    if count == 3:
        return [
            check_ssa(rho, tol),
            check_extended_ssa(rho, tol),
            check_weak_monotonicity(rho, tol),
            *check_aux_inequalities(rho, tol),
            check_triangle(states.partial_trace(rho, [2]), tol),
        ]
    raise BadArity(
        f"Expected a bipartite or tripartite state, got dims {list(rho.getDims())}"
    )


def lower_bound_ent(rho12: DensityMatrix) -> float:
    r"""
    The lower bound :math:`\max\{S_1 - S_{12}, S_2 - S_{12}, 0\}` shared by
    entanglement of formation and squashed entanglement.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import PureState, entropy, states
    >>> bell = PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), [2, 2])
    >>> round(entropy.lower_bound_ent(bell.toDensityMatrix()), 7)
    0.6931472
    >>> entropy.lower_bound_ent(states.maximally_mixed([2, 2]))
    0.0
    """
    s1, s2, s12 = _bipartite_entropies(rho12)
    return max(s1 - s12, s2 - s12, 0.0)


def weaker_bound(rho12: DensityMatrix) -> float:
    r"""
    The averaged quantity :math:`(S_1 + S_2)/2 - S_{12}`, which may be negative.
    """
    s1, s2, s12 = _bipartite_entropies(rho12)
    return 0.5 * (s1 + s2) - s12


def upper_bound_local(rho12: DensityMatrix) -> float:
    r"""
    The local-entropy upper bound :math:`\min\{S_1, S_2\}` on entanglement of
    formation.
    """
    s1, s2, _ = _bipartite_entropies(rho12)
    return min(s1, s2)
