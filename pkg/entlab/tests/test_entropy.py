"""
Unit and regression tests for entropies, inequality checks and simple bounds.
"""

import numpy as np
import pytest
from scipy import linalg, stats

from entlab import DensityMatrix, PureState, entropy, errors, extremal, states

LN2 = np.log(2)


def test_von_neumann_entropy_against_scipy():
    """
    Test the von Neumann entropy against matrix logarithms and Shannon entropies.

    """
    for seed in range(10):
        rho = states.random_density([2, 3], 6, seed)
        matrix = rho.getMatrix()
        expected = -np.trace(matrix @ linalg.logm(matrix)).real
        assert entropy.von_neumann_entropy(rho) == pytest.approx(expected, abs=1e-8)
        values = np.clip(np.linalg.eigvalsh(matrix), 0, None)
        assert entropy.von_neumann_entropy(rho) == pytest.approx(
            stats.entropy(values), abs=1e-10
        )


def test_entropy_of_special_states(bell):
    """
    Test entropies of pure, maximally mixed and Bell states.

    """
    assert entropy.von_neumann_entropy(bell.toDensityMatrix()) == pytest.approx(
        0, abs=1e-12
    )
    assert entropy.von_neumann_entropy(states.maximally_mixed([2, 3])) == (
        pytest.approx(np.log(6))
    )
    assert entropy.entanglement_entropy(bell) == pytest.approx(LN2)
    assert entropy.subsystem_entropy(bell.toDensityMatrix(), [0]) == pytest.approx(
        LN2
    )
    assert entropy.spectrum_entropy([0.5, 0.5, 0.0, -1e-15]) == pytest.approx(LN2)
    assert entropy.mutual_information(bell.toDensityMatrix()) == pytest.approx(
        2 * LN2
    )
    assert entropy.conditional_entropies(bell.toDensityMatrix()) == pytest.approx(
        (-LN2, -LN2)
    )
    with pytest.raises(errors.BadArity):
        entropy.entanglement_entropy(PureState(np.array([1.0, 0.0]), [2]))


def test_ghz_strong_subadditivity(ghz):
    """
    Test the slack of strong subadditivity on the GHZ state.

    """
    report = entropy.check_ssa(ghz)
    assert report.satisfied
    assert report.slack == pytest.approx(LN2, abs=1e-8)
    assert entropy.cmi(ghz) == pytest.approx(LN2, abs=1e-8)


def test_bell_extended_ssa(bell_trivial):
    """
    Test that a Bell pair with a trivial third system saturates extended strong
    subadditivity.

    """
    report = entropy.check_extended_ssa(bell_trivial)
    assert report.satisfied
    assert report.lhs == pytest.approx(2 * LN2)
    assert report.slack == pytest.approx(0, abs=1e-8)


def test_triangle_saturation(half_spec, four_term_spec):
    """
    Test that saturating states are equality cases of the triangle inequality.

    """
    for spec in (half_spec, four_term_spec):
        report = entropy.check_triangle(extremal.build_saturating_state(spec))
        assert report.satisfied
        assert abs(report.slack) <= 1e-8


def test_random_states_satisfy_everything():
    """
    Test every inequality family on seeded random tripartite and bipartite states.

    """
    for seed in range(40):
        rho = states.random_density([2, 2, 2], 1 + seed % 8, seed)
        reports = entropy.check_all(rho)
        assert len(reports) == 7
        assert all(report.satisfied for report in reports)
        bipartite = states.random_density([2, 3], 1 + seed % 6, seed)
        assert all(report.satisfied for report in entropy.check_all(bipartite))
    with pytest.raises(errors.BadArity):
        entropy.check_all(DensityMatrix(np.eye(2) / 2))


def test_purified_weak_monotonicity():
    """
    Test that weak monotonicity equals strong subadditivity of the purification.

    """
    for seed in range(20):
        rho = states.random_density([2, 2, 2], 1 + seed % 8, seed)
        weak, purified = entropy.check_purified_weak_monotonicity(rho)
        assert weak.name == "weak_monotonicity"
        assert purified.name == "purified_ssa"
        assert weak.slack == pytest.approx(purified.slack, abs=1e-8)


def test_auxiliary_inequalities():
    """
    Test the three consequences of weak monotonicity.

    """
    rho = states.random_density([2, 3, 2], 5, 3)
    reports = entropy.check_aux_inequalities(rho)
    assert [report.name for report in reports] == [
        "essa00",
        "essa0B-left",
        "essa0B-right",
    ]
    assert all(report.satisfied for report in reports)
    mixed = entropy.check_aux_inequalities(states.maximally_mixed([2, 2, 2]))
    assert mixed[2].slack == pytest.approx(3 * LN2, abs=1e-10)
    for seed in range(5):
        pure = states.random_pure_state([2, 3, 2], seed).toDensityMatrix()
        for report in entropy.check_aux_inequalities(pure):
            assert report.slack == pytest.approx(0.0, abs=1e-10)


def test_bounds_of_four_term_state(four_term_spec):
    """
    Test the bounds of a saturating state with four equal weights.

    """
    rho12 = extremal.build_saturating_state(four_term_spec)
    assert entropy.von_neumann_entropy(rho12) == pytest.approx(1.3862944, abs=1e-7)
    assert entropy.subsystem_entropy(rho12, [0]) == pytest.approx(1.7113774, abs=1e-7)
    assert entropy.subsystem_entropy(rho12, [1]) == pytest.approx(0.3250830, abs=1e-7)
    assert entropy.lower_bound_ent(rho12) == pytest.approx(0.3250830, abs=1e-7)
    assert entropy.weaker_bound(rho12) == pytest.approx(-0.3680645, abs=1e-6)
    assert entropy.upper_bound_local(rho12) == pytest.approx(0.3250830, abs=1e-7)


def test_bounds_of_separable_states():
    """
    Test that the lower bound vanishes on product and maximally mixed states.

    """
    product = states.tensor_product_state(
        states.random_density([2], 2, 0), states.random_density([3], 3, 1)
    )
    assert entropy.lower_bound_ent(product) == 0.0
    assert entropy.lower_bound_ent(states.maximally_mixed([2, 2])) == 0.0
