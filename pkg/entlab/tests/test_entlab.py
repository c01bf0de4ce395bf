"""
Unit and regression test for the entlab package.
"""

import io
import sys

import numpy as np
import pytest

import entlab
from entlab import config, extremal, serialization, states, sweep


def test_entlab_imported():
    """
    Sample test, will always pass so long as import statement worked.

    """
    assert "entlab" in sys.modules


def perform_common_tests(obj: serialization.Serializable) -> None:
    """
    Function to be called for every serializable object.

    """
    # Yaml tag must be defined and start with "!entlab."
    assert hasattr(obj, "yaml_tag")
    assert obj.yaml_tag.startswith("!entlab.")

    # Test serialization/deserialization
    pipe = io.StringIO()
    serialization.serialize(obj, pipe)
    pipe.seek(0)
    new_obj = serialization.deserialize(pipe)
    assert type(new_obj) is type(obj)
    assert new_obj.toDict() == obj.toDict()
    assert type(obj).fromDict(obj.toDict()).toDict() == obj.toDict()


def test_serializable_objects(four_term_spec, ghz):
    """
    Test tags and round trips of every serializable class.

    """
    rho12 = extremal.build_saturating_state(four_term_spec)
    summary = sweep.run_sweep([2, 2, 2], count=3, seed=0, family="ssa")
    objects = [
        rho12,
        states.purify(rho12),
        rho12.getSpectrum(),
        four_term_spec,
        extremal.verify_equality_conditions(rho12),
        extremal.build_sharpness_witness(four_term_spec),
        entlab.entropy.check_ssa(ghz),
        summary,
        config.EstimatorConfig(numRestarts=3, seed=2),
        entlab.units.bits,
    ]
    for obj in objects:
        perform_common_tests(obj)


def test_json_files(tmp_path, ghz):
    """
    Test that JSON files are written atomically and read back.

    """
    path = tmp_path / "ghz.json"
    serialization.dump_json(ghz, path)
    assert [p.name for p in tmp_path.iterdir()] == ["ghz.json"]
    copy = serialization.load_json(path, entlab.DensityMatrix)
    assert copy.distance(ghz) == 0
    assert path.read_text(encoding="utf-8").endswith("}\n")
    with pytest.raises(ValueError):
        serialization.to_json({"value": np.inf})


def test_estimator_config():
    """
    Test the validation of estimator settings.

    """
    settings = config.EstimatorConfig()
    assert settings.numRestarts == 32 and settings.budget == 2000
    assert settings.seed == 0 and settings.ensembleSize is None
    with pytest.raises(ValueError):
        config.EstimatorConfig(numRestarts=0)
    with pytest.raises(ValueError):
        config.EstimatorConfig(budget=0)
    with pytest.raises(ValueError):
        config.EstimatorConfig(ancillaDim=0)
    with pytest.raises(ValueError):
        config.EstimatorConfig(tolerance=-1.0)


def test_max_dim(monkeypatch):
    """
    Test that the dimension cap can be lowered but not raised.

    """
    monkeypatch.delenv("ENTLAB_MAX_DIM", raising=False)
    assert config.get_max_dim() == config.DEFAULT_MAX_DIM
    monkeypatch.setenv("ENTLAB_MAX_DIM", "32")
    assert config.get_max_dim() == 32
    monkeypatch.setenv("ENTLAB_MAX_DIM", "100000")
    assert config.get_max_dim() == config.DEFAULT_MAX_DIM
    monkeypatch.setenv("ENTLAB_MAX_DIM", "many")
    assert config.get_max_dim() == config.DEFAULT_MAX_DIM
