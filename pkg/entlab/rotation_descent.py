"""
.. class:: RotationDescent
   :platform: Linux, MacOS, Windows
   :synopsis: Derivative-free descent over isometries by two-row rotations

"""

import itertools
import logging
import typing as t

import numpy as np
from scipy import optimize

logger = logging.getLogger(__name__)

_PHASES: t.Tuple[float, ...] = (0.0, 0.5 * np.pi)
_MIN_SEARCH_EVALUATIONS = 4


class DescentOutcome(t.NamedTuple):
    """The refined matrix, its cost and the bookkeeping of a descent."""

    matrix: np.ndarray
    value: float
    evaluations: int
    sweeps: int
    converged: bool
    budgetExhausted: bool


def givens_rotate(
    rows: np.ndarray, theta: float, phase: float
) -> np.ndarray:
    r"""
    Apply the unitary

    .. math::

        G(\theta, \varphi) = \begin{pmatrix}
            \cos\theta & -e^{i\varphi} \sin\theta \\
            e^{-i\varphi} \sin\theta & \cos\theta
        \end{pmatrix}

    to a pair of rows.

    Parameters
    ----------
    rows
        An array of shape ``(2, r)``.
    theta
        The rotation angle.
    phase
        The relative phase :math:`\varphi`.

    Example
    -------
    >>> import numpy as np
    >>> from entlab.rotation_descent import givens_rotate
    >>> np.round(givens_rotate(np.eye(2), np.pi / 2, 0.0).real, 12) + 0.0
    array([[ 0., -1.],
           [ 1.,  0.]])
    """
    cos, sin = np.cos(theta), np.sin(theta)
    twist = np.exp(1j * phase)
    return np.stack(
        [cos * rows[0] - twist * sin * rows[1], sin * rows[0] / twist + cos * rows[1]]
    )


class RotationDescent:
    r"""
    Local search over matrices with orthonormal columns.

    Each sweep visits pairs of rows :math:`(k, l)` and, for the phases
    :math:`\varphi \in \{0, \pi/2\}`, replaces them by :math:`G(\theta,
    \varphi)` applied to them, with :math:`\theta \in [-\pi/2, \pi/2]` chosen by
    a bounded scalar line search (golden section with parabolic steps). A rotation
    is kept only if it lowers the cost, so the cost never increases and the
    columns stay orthonormal.

    The cost is either a function of the whole matrix or, if ``separable`` is
    `True`, a function mapping a block of rows to one term per row, the total
    cost being the sum of the terms. In the separable case only the two rotated
    rows are re-evaluated.

    Parameters
    ----------
    cost
        The cost function.
    budget
        The maximum number of cost evaluations.
    separable
        Whether the cost is a sum of per-row terms.
    threshold
        A sweep improving the cost by less than this value ends the descent as
        converged.
    pairsPerSweep
        If given, each sweep visits this many row pairs drawn at random from the
        generator passed to :meth:`run`. Otherwise, all pairs are visited in
        lexicographic order.

    Example
    -------
    >>> import numpy as np
    >>> from entlab.rotation_descent import RotationDescent
    >>> target = np.array([1.0, 0.0, 0.0])
    >>> descent = RotationDescent(lambda w: 1 - abs(w[:, 0] @ target) ** 2, 500)
    >>> start = np.array([[0.0], [0.6], [0.8]], dtype=complex)
    >>> outcome = descent.run(start)
    >>> bool(outcome.value < 1e-8), bool(outcome.evaluations <= 500)
    (True, True)
    """

    def __init__(
        self,
        cost: t.Callable[[np.ndarray], t.Any],
        budget: int,
        separable: bool = False,
        threshold: float = 1e-9,
        pairsPerSweep: t.Optional[int] = None,
    ) -> None:
        if budget < 1:
            raise ValueError(f"Argument 'budget' must be positive, got {budget}")
        self._cost = cost
        self._budget = int(budget)
        self._separable = separable
        self._threshold = float(threshold)
        self._pairsPerSweep = pairsPerSweep
        self._evaluations = 0

    def _evaluate(self, rows: np.ndarray) -> t.Any:
        self._evaluations += 1
        return self._cost(rows)

    def _remaining(self) -> int:
        return self._budget - self._evaluations

    def _pairs(
        self, size: int, rng: t.Optional[np.random.Generator]
    ) -> t.List[t.Tuple[int, int]]:
        pairs = list(itertools.combinations(range(size), 2))
        if self._pairsPerSweep is None or rng is None:
            return pairs
        count = min(self._pairsPerSweep, len(pairs))
        return [pairs[i] for i in rng.choice(len(pairs), size=count, replace=False)]

    def _pair_objective(
        self, matrix: np.ndarray, pair: t.Tuple[int, int], phase: float
    ) -> t.Callable[[float], float]:
        rows = matrix[list(pair)]
        if self._separable:
            return lambda theta: float(
                np.sum(self._evaluate(givens_rotate(rows, theta, phase)))
            )

        def objective(theta: float) -> float:
            trial = matrix.copy()
            trial[list(pair)] = givens_rotate(rows, theta, phase)
            return float(self._evaluate(trial))

        return objective

    def _line_search(
        self, objective: t.Callable[[float], float]
    ) -> t.Tuple[float, float]:
        # One evaluation stays spare for re-evaluating the rotated rows of a
        # separable cost after an accepted rotation.
        result = optimize.minimize_scalar(
            objective,
            bounds=(-0.5 * np.pi, 0.5 * np.pi),
            method="bounded",
            options={"xatol": 1e-7, "maxiter": max(self._remaining() - 1, 1)},
        )
        return float(result.x), float(result.fun)

    def run(
        self, matrix: np.ndarray, rng: t.Optional[np.random.Generator] = None
    ) -> DescentOutcome:
        """
        Refine a starting matrix until convergence or budget exhaustion.

        Parameters
        ----------
        matrix
            The starting matrix, with orthonormal columns.
        rng
            The generator of random row pairs, used only if ``pairsPerSweep`` was
            given.

        Returns
        -------
        DescentOutcome
            The best matrix found and the bookkeeping of the descent.
        """
        self._evaluations = 0
        matrix = np.array(matrix, dtype=complex)
        if self._separable:
            terms = np.asarray(self._evaluate(matrix), dtype=float)
            value = float(terms.sum())
        else:
            terms = None
            value = float(self._evaluate(matrix))
        sweeps = 0
        converged = matrix.shape[0] < 2
        exhausted = False
        while not converged and not exhausted:
            start = value
            for (k, l), phase in itertools.product(
                self._pairs(matrix.shape[0], rng), _PHASES
            ):
                if self._remaining() < _MIN_SEARCH_EVALUATIONS:
                    exhausted = True
                    break
                rows = matrix[[k, l]]
                current = terms[k] + terms[l] if self._separable else value
                objective = self._pair_objective(matrix, (k, l), phase)
                theta, trial_value = self._line_search(objective)
                if trial_value < current:
                    matrix[[k, l]] = givens_rotate(rows, theta, phase)
                    if self._separable:
                        terms[[k, l]] = self._evaluate(matrix[[k, l]])
                        value = float(terms.sum())
                    else:
                        value = trial_value
            sweeps += 1
            converged = start - value < self._threshold and not exhausted
            logger.debug(
                "Sweep %d: cost %.12g, %d evaluations", sweeps, value, self._evaluations
            )
        if exhausted:
            logger.debug("Budget of %d evaluations exhausted", self._budget)
        return DescentOutcome(
            matrix, value, self._evaluations, sweeps, converged, exhausted
        )
