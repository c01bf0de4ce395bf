"""
Unit and regression tests for matrix primitives and state operations.
"""

import numpy as np
import pytest

from entlab import DensityMatrix, PureState, errors, matcore, states


def test_density_matrix_validation():
    """
    Test that invalid matrices are rejected with the right exception.

    """
    with pytest.raises(errors.NotHermitian):
        DensityMatrix(np.array([[0.5, 0.1], [0.0, 0.5]]))
    with pytest.raises(errors.InvalidState):
        DensityMatrix(np.eye(2))
    with pytest.raises(errors.InvalidState):
        DensityMatrix(np.diag([1.5, -0.5]))
    with pytest.raises(errors.BadShape):
        DensityMatrix(np.eye(4) / 4, [2, 3])
    with pytest.raises(errors.BadShape):
        DensityMatrix(np.ones((2, 3)) / 2)
    with pytest.raises(errors.BadShape):
        DensityMatrix(np.array([[np.nan, 0], [0, 1]]))
    assert issubclass(errors.NotHermitian, ValueError)
    assert issubclass(errors.SandwichViolation, RuntimeError)


def test_pure_state_validation():
    """
    Test the normalization of pure states.

    """
    with pytest.raises(errors.InvalidState):
        PureState(np.array([1.0, 1.0]), [2])
    with pytest.raises(errors.InvalidState):
        PureState.normalized(np.zeros(2), [2])
    psi = PureState.normalized(np.array([3.0, 4.0j]), [2])
    assert np.linalg.norm(psi.getVector()) == pytest.approx(1)
    assert psi.toDensityMatrix().isPure()


def test_dimension_cap(monkeypatch):
    """
    Test that the dimension cap is enforced before large matrices are built.

    """
    monkeypatch.setenv("ENTLAB_MAX_DIM", "16")
    with pytest.raises(errors.DimensionOverflow):
        states.random_density([4, 8], 1, 0)
    with pytest.raises(errors.DimensionOverflow):
        matcore.haar_unitary(32, 0)
    states.random_density([4, 4], 1, 0)


def test_eig_hermitian_is_deterministic():
    """
    Test that degenerate eigenbases are returned in a canonical form.

    """
    spectrum = matcore.eig_hermitian(np.diag([0.5, 0.0, 0.0, 0.5]))
    values, vectors = spectrum.eigenvalues, spectrum.eigenvectors
    assert values == pytest.approx([0, 0, 0.5, 0.5])
    for column in vectors.T:
        assert sorted(np.abs(column)) == pytest.approx([0, 0, 0, 1])
    rho = states.random_density([3, 2], 4, 7)
    first = matcore.eig_hermitian(rho.getMatrix())
    second = matcore.eig_hermitian(rho.getMatrix().copy())
    assert np.array_equal(first.eigenvectors, second.eigenvectors)
    with pytest.raises(errors.NotHermitian):
        matcore.eig_hermitian(np.array([[0, 1], [0, 0]]))


def test_haar_sampling():
    """
    Test that seeded Haar samples are reproducible unitaries and isometries.

    """
    unitary = matcore.haar_unitary(5, 3)
    assert np.allclose(unitary.conj().T @ unitary, np.eye(5), atol=1e-12)
    assert np.array_equal(unitary, matcore.haar_unitary(5, 3))
    assert not np.allclose(unitary, matcore.haar_unitary(5, 4))
    isometry = matcore.haar_isometry(6, 2, 3)
    assert isometry.shape == (6, 2)
    assert np.allclose(isometry.conj().T @ isometry, np.eye(2), atol=1e-12)


def test_random_density():
    """
    Test the rank and the reproducibility of sampled states.

    """
    for rank in range(1, 7):
        rho = states.random_density([2, 3], rank, 5)
        assert rho.rank() == rank
        assert rho.getDims() == (2, 3)
    first = states.random_density([2, 2], 3, 9).getMatrix()
    second = states.random_density([2, 2], 3, 9).getMatrix()
    assert np.array_equal(first, second)
    with pytest.raises(errors.BadRank):
        states.random_density([2, 2], 5, 0)


def test_partial_trace(bell):
    """
    Test partial traces of product and entangled states.

    """
    first = states.random_density([2], 2, 1)
    second = states.random_density([3], 3, 2)
    product = states.tensor_product_state(first, second)
    assert product.getDims() == (2, 3)
    assert states.partial_trace(product, [1]).distance(first) < 1e-12
    assert states.partial_trace(product, [0]).distance(second) < 1e-12
    assert states.marginal(product, [0, 1]).distance(product) < 1e-12
    reduced = states.partial_trace(bell.toDensityMatrix(), [0])
    assert reduced.distance(np.eye(2) / 2) < 1e-12
    with pytest.raises(errors.BadSubsystemSet):
        states.partial_trace(product, [0, 1])
    with pytest.raises(errors.BadSubsystemSet):
        states.partial_trace(product, [2])
    with pytest.raises(errors.BadSubsystemSet):
        states.marginal(product, [])


def test_permute_subsystems():
    """
    Test that permuting subsystems reorders the tensor factors.

    """
    factors = [states.random_density([d], d, d) for d in (2, 3, 4)]
    rho = states.tensor_product_state(*factors)
    permuted = states.permute_subsystems(rho, [2, 0, 1])
    assert permuted.getDims() == (4, 2, 3)
    expected = states.tensor_product_state(factors[2], factors[0], factors[1])
    assert permuted.distance(expected) < 1e-12
    with pytest.raises(errors.BadPermutation):
        states.permute_subsystems(rho, [0, 0, 1])


def test_purification_round_trip():
    """
    Test that purifications reduce back to the original state and that both
    marginals of a pure state share their nonzero spectrum.

    """
    for index in range(100):
        rho = states.random_density([2, 2], 1 + index % 4, index)
        psi = states.purify(rho)
        assert psi.getDims()[0] == 4
        assert states.reduce_pure_state(psi, [0]).distance(rho) < 1e-10
        comparison = states.reduced_spectra_match(psi)
        assert comparison.match and comparison.gap < 1e-9
        kept = states.purify(rho, keepDims=True)
        assert kept.getDims()[:2] == (2, 2)
        assert states.reduce_pure_state(kept, [0, 1]).distance(rho) < 1e-10


def test_separable_mixture():
    """
    Test mixtures of product states and their validation.

    """
    zero = DensityMatrix(np.diag([1.0, 0.0]))
    one = DensityMatrix(np.diag([0.0, 1.0]))
    rho = states.separable_mixture([0.25, 0.75], [(zero, one), (one, zero)])
    assert np.diag(rho.getMatrix()).real == pytest.approx([0, 0.25, 0.75, 0])
    with pytest.raises(errors.WeightMismatch):
        states.separable_mixture([0.5, 0.6], [(zero, one), (one, zero)])
    with pytest.raises(errors.WeightMismatch):
        states.separable_mixture([1.0], [(zero, one), (one, zero)])
    with pytest.raises(errors.DimMismatch):
        states.separable_mixture(
            [0.5, 0.5], [(zero, one), (one, states.maximally_mixed([3]))]
        )


def test_append_trivial_subsystem(bell):
    """
    Test that a trivial subsystem changes the dims but not the matrix.

    """
    rho = states.append_trivial_subsystem(bell.toDensityMatrix())
    assert rho.getDims() == (2, 2, 1)
    assert np.array_equal(rho.getMatrix(), bell.toDensityMatrix().getMatrix())
