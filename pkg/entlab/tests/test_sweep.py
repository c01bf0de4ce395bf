"""
Unit and regression tests for inequality sweeps, reporters and units.
"""

import io
import math

import pytest

import entlab
from entlab import SweepReporter, errors, serialization, states, sweep, units


def test_sweep_of_qubit_triples():
    """
    Test that every inequality holds on seeded random three-qubit states.

    """
    summary = sweep.run_sweep([2, 2, 2], count=500, seed=0)
    assert summary.passed
    assert summary.count == 500
    names = summary.getInequalityNames()
    assert names[0] == "ssa" and names[-1] == "triangle"
    for entry in summary.statistics:
        assert entry["evaluated"] == 500
        assert entry["violations"] == 0
        assert entry["min_slack"] >= -1e-8


def test_sweep_of_mixed_dimensions():
    """
    Test the extended and ordinary strong subadditivity with unequal dimensions.

    """
    for family in ("essa", "ssa"):
        summary = sweep.run_sweep([2, 3, 2], count=200, seed=1000, family=family)
        assert summary.passed
        assert summary.statistics[0]["evaluated"] == 200


@pytest.mark.parametrize("dims", [[2, 2], [3, 2]])
def test_triangle_sweep(dims):
    """
    Test that the triangle inequality holds on seeded random bipartite states.

    """
    summary = sweep.run_sweep(dims, count=500, seed=0, family="triangle")
    assert summary.passed
    assert summary.getInequalityNames() == ["triangle"]
    (entry,) = summary.statistics
    assert entry["evaluated"] == 500
    assert entry["violations"] == 0
    assert entry["min_slack"] >= -1e-8


def test_bipartite_sweep():
    """
    Test bipartite families and the rejection of tripartite-only families.

    """
    summary = sweep.run_sweep([3, 2], count=30, seed=4, family="all")
    assert summary.getInequalityNames() == ["triangle", "subadditivity"]
    assert summary.passed
    with pytest.raises(errors.BadArity):
        sweep.run_sweep([3, 2], count=1, seed=0, family="ssa")
    with pytest.raises(errors.BadArity):
        sweep.run_family(states.maximally_mixed([2, 2, 2]), "subadditivity")
    with pytest.raises(ValueError):
        sweep.run_family(states.maximally_mixed([2, 2]), "nonsense")


def test_sweep_validation():
    """
    Test the validation of sweep arguments.

    """
    with pytest.raises(errors.BadShape):
        sweep.run_sweep([2], count=1, seed=0)
    with pytest.raises(errors.BadShape):
        sweep.run_sweep([2, 2], count=-1, seed=0)
    with pytest.raises(errors.DimensionOverflow):
        sweep.run_sweep([4, 4, 8], count=1, seed=0)
    empty = sweep.run_sweep([2, 2, 2], count=0, seed=0)
    assert empty.passed and empty.statistics == []


def test_sweep_is_reproducible():
    """
    Test that a sweep is a deterministic function of its arguments, whatever the
    number of threads.

    """
    first = sweep.run_sweep([2, 2, 2], count=20, seed=7, maxWorkers=1)
    second = sweep.run_sweep([2, 2, 2], count=20, seed=7, maxWorkers=4)
    assert serialization.to_json(first) == serialization.to_json(second)
    fixed = sweep.run_sweep([2, 2], count=5, seed=7, rank=2)
    assert {rank for _, _, rank, _ in fixed.records} == {2}


def test_violations_are_recorded():
    """
    Test that a violation carries the state that produced it.

    """
    summary = sweep.run_sweep([2, 2], count=4, seed=0, family="triangle", tol=-2.0)
    assert not summary.passed
    assert len(summary.violations) == 4
    violation = summary.violations[1]
    assert violation["seed"] == 1 and violation["rank"] == 2
    rho = entlab.DensityMatrix.fromDict(violation["state"])
    assert rho.distance(states.random_density([2, 2], 2, 1)) == 0
    copy = sweep.SweepSummary.fromDict(summary.toDict())
    assert copy.toDict() == summary.toDict()


def test_reporter():
    """
    Test the delimited report of a sweep.

    """
    summary = sweep.run_sweep([2, 2, 2], count=3, seed=5, family="aux")
    stream = io.StringIO()
    SweepReporter(stream, units.bits, separator=";").report(summary)
    lines = stream.getvalue().splitlines()
    assert len(lines) == 4
    assert lines[0] == (
        '#"Index";"Seed";"Rank";"essa00 (bits)";'
        '"essa0B-left (bits)";"essa0B-right (bits)"'
    )
    first = lines[1].split(";")
    assert first[:3] == ["0", "5", "1"]
    slack = summary.records[0][3][0].slack
    assert float(first[3]) == pytest.approx(slack / math.log(2))
    appended = io.StringIO()
    SweepReporter(appended, append=True).report(summary)
    assert len(appended.getvalue().splitlines()) == 3


def test_reporter_file(tmp_path):
    """
    Test that reports are written to files and appended to them.

    """
    path = tmp_path / "sweep.csv"
    summary = sweep.run_sweep([2, 2], count=2, seed=0, family="triangle")
    SweepReporter(str(path)).report(summary)
    SweepReporter(str(path), append=True).report(summary)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 5
    assert lines[0] == '#"Index","Seed","Rank","triangle (nats)"'


def test_units():
    """
    Test unit conversion and serialization.

    """
    assert units.bits.convert(math.log(4)) == pytest.approx(2)
    assert units.nats.convert(0.25) == 0.25
    assert units.Unit("bits") == units.bits
    with pytest.raises(ValueError):
        units.Unit("hartleys")
    stream = io.StringIO()
    serialization.serialize(units.bits, stream)
    stream.seek(0)
    assert serialization.deserialize(stream) == units.bits


def test_unit_conversion_changes_only_numbers(ghz):
    """
    Test that converting a report to bits scales the entropic fields only.

    """
    reports = [report.toDict() for report in sweep.run_family(ghz, "all")]
    fields = entlab.InequalityReport.entropyFields
    converted = units.convert_state({"reports": reports}, units.bits, fields)
    for original, report in zip(reports, converted["reports"]):
        assert report.keys() == original.keys()
        assert report["name"] == original["name"]
        assert report["satisfied"] == original["satisfied"]
        for key in fields:
            assert report[key] == pytest.approx(original[key] / math.log(2))
    assert converted["reports"][0]["slack"] == pytest.approx(1.0)


@pytest.mark.parametrize("family", ["ssa", "essa", "triangle", "weakmono", "aux"])
def test_tripartite_families(family: str):
    """
    Test that each tripartite family holds on seeded random states.

    """
    summary = sweep.run_sweep([2, 2, 3], count=24, seed=300, family=family)
    assert summary.passed
    assert all(entry["evaluated"] == 24 for entry in summary.statistics)
