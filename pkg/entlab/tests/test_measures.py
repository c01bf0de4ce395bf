"""
Unit and regression tests for the entanglement estimators and bound reports.
"""

import io

import numpy as np
import pytest

import entlab
from entlab import (
    Decomposition,
    DensityMatrix,
    EstimateResult,
    EstimatorConfig,
    PureState,
    RotationDescent,
    entropy,
    errors,
    extremal,
    matcore,
    measures,
    rotation_descent,
    states,
)

LN2 = np.log(2)


def _product(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    return np.kron(first, second)


def test_givens_rotation_preserves_isometries():
    """
    Test that Givens rotations of two rows keep columns orthonormal.

    """
    isometry = matcore.haar_isometry(5, 2, 0)
    rotated = isometry.copy()
    rotated[[1, 3]] = rotation_descent.givens_rotate(isometry[[1, 3]], 0.4, np.pi / 2)
    assert np.allclose(rotated.conj().T @ rotated, np.eye(2), atol=1e-12)
    assert np.array_equal(rotated[[0, 2, 4]], isometry[[0, 2, 4]])


def test_rotation_descent_budget():
    """
    Test that the descent never exceeds its budget and reports exhaustion.

    """
    target = matcore.haar_isometry(6, 1, 1)[:, 0]

    def cost(rows: np.ndarray) -> float:
        return float(1 - abs(rows[:, 0] @ target.conj()) ** 2)

    outcome = RotationDescent(cost, budget=30).run(matcore.haar_isometry(6, 1, 2))
    assert outcome.evaluations <= 30
    assert outcome.budgetExhausted
    assert not outcome.converged
    outcome = RotationDescent(cost, budget=5000).run(matcore.haar_isometry(6, 1, 2))
    assert outcome.value < 1e-6
    with pytest.raises(ValueError):
        RotationDescent(cost, budget=0)


def test_separable_descent_budget():
    """
    Test that re-evaluating rotated rows of a separable cost stays within budget.

    """

    def terms(rows: np.ndarray) -> np.ndarray:
        return np.abs(rows[:, 0]) ** 4

    start = matcore.haar_isometry(6, 1, 2)
    for budget in range(4, 60):
        descent = RotationDescent(terms, budget=budget, separable=True)
        outcome = descent.run(start)
        assert outcome.evaluations <= budget
        assert outcome.value <= float(terms(start).sum()) + 1e-12


def test_decomposition():
    """
    Test pure-state decompositions and their cost.

    """
    target = DensityMatrix(np.diag([0.5, 0, 0, 0.5]), [2, 2])
    members = [PureState(np.kron(v, v), [2, 2]) for v in np.eye(2)]
    decomposition = Decomposition([0.5, 0.5], members, target)
    assert decomposition.residual < 1e-15
    assert measures.decomposition_cost(decomposition) == pytest.approx(0, abs=1e-15)
    bell = PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), [2, 2])
    wrong = Decomposition([1.0], [bell], target)
    with pytest.raises(errors.BadDecomposition):
        measures.decomposition_cost(wrong)
    with pytest.raises(errors.BadArity):
        Decomposition([1.0], [PureState(np.ones(8) / np.sqrt(8), [2, 2, 2])])
    with pytest.raises(errors.DimMismatch):
        Decomposition([1.0], [bell], states.maximally_mixed([2, 3]))


def test_decomposition_from_isometry_validation():
    """
    Test that invalid isometries are rejected.

    """
    rho = states.random_density([2, 2], 2, 5)
    with pytest.raises(errors.BadShape):
        measures.decomposition_from_isometry(rho, np.ones((4, 3)))
    with pytest.raises(errors.BadShape):
        measures.decomposition_from_isometry(rho, np.eye(1, 2))
    with pytest.raises(errors.BadShape):
        measures.decomposition_from_isometry(rho, np.ones((3, 2)))
    with pytest.raises(errors.BadArity):
        measures.decomposition_from_isometry(
            states.maximally_mixed([2, 2, 2]), np.eye(8)
        )


def test_pure_states_bypass_the_search(bell):
    """
    Test that both measures reduce to the entanglement entropy on pure states.

    """
    for psi in (bell, states.random_pure_state([2, 3], 3)):
        rho = psi.toDensityMatrix()
        expected = entropy.entanglement_entropy(psi)
        formation = measures.estimate_ef_upper(rho)
        squashed = measures.estimate_esq_upper(rho)
        assert formation.value == pytest.approx(expected, abs=1e-10)
        assert squashed.value == pytest.approx(expected, abs=1e-6)
        assert formation.iterations == 0 and squashed.iterations == 0


def test_eigen_ensemble_zeros():
    """
    Test that mixtures of orthogonal product states give vanishing estimates.

    """
    for rho in (
        DensityMatrix(np.diag([0.5, 0, 0, 0.5]), [2, 2]),
        states.maximally_mixed([2, 2]),
    ):
        formation = measures.estimate_ef_upper(rho, numRestarts=2, budget=200)
        assert formation.value <= 1e-6
        squashed = measures.estimate_esq_upper(
            rho, numRestarts=2, budget=200, formation=formation
        )
        assert squashed.value <= 1e-6


def test_separable_state_with_entangled_eigenvectors():
    """
    Test that the search finds a separable decomposition of a mixture of
    non-orthogonal product states.

    """
    zero = np.array([1.0, 0.0])
    plus = np.array([1.0, 1.0]) / np.sqrt(2)
    matrix = 0.5 * np.outer(_product(zero, zero), _product(zero, zero))
    matrix += 0.5 * np.outer(_product(plus, plus), _product(plus, plus))
    rho = DensityMatrix(matrix, [2, 2])
    result = measures.estimate_ef_upper(rho, ensembleSize=2, numRestarts=16, seed=3)
    assert result.value <= 1e-3
    assert result.certificate.residual <= 1e-8


def test_separable_mixtures_of_product_states():
    """
    Test that default settings find near-separable decompositions of random
    mixtures of three product states.

    """
    for seed in range(3):
        factors = [
            (
                states.random_pure_state([2], 10 * seed + 2 * k).toDensityMatrix(),
                states.random_pure_state([2], 10 * seed + 2 * k + 1).toDensityMatrix(),
            )
            for k in range(3)
        ]
        rho = states.separable_mixture([0.5, 0.3, 0.2], factors)
        assert rho.rank() == 3
        result = measures.estimate_ef_upper(rho, seed=seed)
        assert result.searchSize == 9
        assert result.value <= 1e-3


def test_decomposition_cost_is_above_lower_bound():
    """
    Test that every decomposition costs at least the entropic lower bound.

    """
    for seed in range(20):
        rho = states.random_density([2, 3], 1 + seed % 4, seed)
        rank = rho.rank()
        lower = entropy.lower_bound_ent(rho)
        for size in (rank, rank + 1, rank * rank):
            isometry = matcore.haar_isometry(size, rank, seed=100 * seed + size)
            decomposition = measures.decomposition_from_isometry(rho, isometry)
            assert measures.decomposition_cost(decomposition) >= lower - 1e-9


def test_formation_estimate_with_larger_ensembles():
    """
    Test that enlarging the ensemble does not raise the formation estimate on a
    separable state.

    """
    zero = np.array([1.0, 0.0])
    plus = np.array([1.0, 1.0]) / np.sqrt(2)
    matrix = 0.5 * np.outer(_product(zero, zero), _product(zero, zero))
    matrix += 0.5 * np.outer(_product(plus, plus), _product(plus, plus))
    rho = DensityMatrix(matrix, [2, 2])
    values = [
        measures.estimate_ef_upper(rho, ensembleSize=size, numRestarts=16, seed=3).value
        for size in (2, 3, 4)
    ]
    for smaller, larger in zip(values, values[1:]):
        assert larger <= smaller + 1e-3


def test_formation_estimate_properties():
    """
    Test determinism, monotonicity in the number of restarts, and the sandwich
    between the lower and local bounds.

    """
    rho = states.random_density([2, 2], 2, 21)
    first = measures.estimate_ef_upper(rho, numRestarts=2, seed=5, budget=300)
    second = measures.estimate_ef_upper(rho, numRestarts=2, seed=5, budget=300)
    more = measures.estimate_ef_upper(rho, numRestarts=4, seed=5, budget=300)
    assert first.value == second.value
    assert more.value <= first.value
    assert entropy.lower_bound_ent(rho) - 1e-8 <= first.value
    assert first.value <= entropy.upper_bound_local(rho) + 1e-8
    assert first.searchSize == 4
    decomposition = first.certificate
    assert isinstance(decomposition, Decomposition)
    assert decomposition.residual <= 1e-8
    assert measures.decomposition_cost(decomposition) == pytest.approx(first.value)
    with pytest.raises(errors.BadRank):
        measures.estimate_ef_upper(rho, ensembleSize=1)


def test_squashed_estimate_properties():
    """
    Test that the squashed estimate never exceeds the formation estimate and that
    its extension reproduces the state.

    """
    rho = states.random_density([2, 2], 2, 8)
    formation = measures.estimate_ef_upper(rho, numRestarts=2, seed=1, budget=200)
    squashed = measures.estimate_esq_upper(
        rho, numRestarts=2, seed=1, budget=200, formation=formation
    )
    assert squashed.value <= formation.value + 1e-8
    assert squashed.value >= entropy.lower_bound_ent(rho) - 1e-8
    extension = squashed.certificate
    assert isinstance(extension, DensityMatrix)
    assert states.partial_trace(extension, [2]).distance(rho) < 1e-8
    assert 0.5 * entropy.cmi(extension) == pytest.approx(squashed.value, abs=1e-8)
    with pytest.raises(errors.BadRank):
        measures.estimate_esq_upper(rho, environmentDim=0)


def test_bell_bounds(bell, fast_settings):
    """
    Test that every bound equals ln 2 on the Bell state.

    """
    report = measures.entanglement_bounds(bell.toDensityMatrix(), fast_settings)
    assert report.lower == pytest.approx(LN2)
    assert report.formation.value == pytest.approx(LN2, abs=1e-8)
    assert report.squashed.value == pytest.approx(LN2, abs=1e-6)
    assert report.upperLocal == pytest.approx(LN2)
    assert report.weaker == pytest.approx(LN2)
    assert report.violations() == []


def test_identity_on_saturating_states(half_spec, four_term_spec, fast_settings):
    """
    Test that both measures equal the lower bound on saturating states.

    """
    unequal = entlab.SaturatingSpec([1 / 3, 2 / 3], DensityMatrix(np.diag([0.8, 0.2])))
    for spec in (half_spec, four_term_spec, unequal):
        report = measures.verify_iden(spec, fast_settings)
        assert report.certified
        s12, s1, s2 = extremal.analytic_entropies(spec)
        assert report.bounds.lower == pytest.approx(s1 - s12, abs=1e-8)
        assert report.bounds.formation.value == pytest.approx(s2, abs=1e-4)
        assert report.bounds.squashed.value == pytest.approx(s2, abs=1e-4)
    report = measures.verify_iden(four_term_spec, fast_settings)
    assert report.bounds.lower == pytest.approx(0.3250830, abs=1e-7)
    assert report.bounds.weaker == pytest.approx(-0.3680645, abs=1e-6)
    with pytest.raises(errors.InvalidSpec):
        measures.verify_iden(
            entlab.SaturatingSpec([1.0], four_term_spec.getRho2()), fast_settings
        )


def test_estimate_serialization():
    """
    Test that estimates and their certificates survive a YAML round trip.

    """
    rho = DensityMatrix(np.diag([0.5, 0, 0, 0.5]), [2, 2])
    settings = EstimatorConfig(numRestarts=2, budget=100)
    report = measures.entanglement_bounds(rho, settings)
    for result in (report.formation, report.squashed):
        stream = io.StringIO()
        entlab.serialization.serialize(result, stream)
        stream.seek(0)
        copy = entlab.serialization.deserialize(stream)
        assert isinstance(copy, EstimateResult)
        assert copy.value == result.value
        assert type(copy.certificate) is type(result.certificate)
    restored = entlab.BoundsReport.fromDict(report.toDict())
    assert restored.toDict() == report.toDict()
    with pytest.raises(ValueError):
        EstimateResult(0.0, "lower", certificate=rho)
    with pytest.raises(ValueError):
        EstimateResult(np.nan, "ef_upper")
    with pytest.raises(ValueError):
        EstimateResult(0.0, "exact")
