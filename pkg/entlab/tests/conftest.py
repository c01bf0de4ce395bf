"""
Shared states for the entlab tests.
"""

import numpy as np
import pytest

import entlab
from entlab import DensityMatrix, PureState, SaturatingSpec, states



@pytest.fixture
def bell() -> PureState:
    """The Bell state (|00> + |11>)/sqrt(2)."""
    return PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), [2, 2])


@pytest.fixture
def ghz() -> DensityMatrix:
    """The three-qubit GHZ state."""
    vector = np.zeros(8)
    vector[[0, 7]] = 1 / np.sqrt(2)
    return PureState(vector, [2, 2, 2]).toDensityMatrix()


@pytest.fixture
def bell_trivial(bell: PureState) -> DensityMatrix:
    """The Bell state with a one-dimensional third subsystem."""
    return states.append_trivial_subsystem(bell.toDensityMatrix())


@pytest.fixture
def half_spec() -> SaturatingSpec:
    """Two equal weights and a maximally mixed qubit."""
    return SaturatingSpec([0.5, 0.5], states.maximally_mixed([2]))


@pytest.fixture
def four_term_spec() -> SaturatingSpec:
    """Four equal weights and a biased qubit."""
    return SaturatingSpec([0.25] * 4, DensityMatrix(np.diag([0.9, 0.1])))


@pytest.fixture
def fast_settings() -> entlab.EstimatorConfig:
    """Estimator settings small enough for unit tests."""
    return entlab.EstimatorConfig(numRestarts=4, budget=300, seed=11)
