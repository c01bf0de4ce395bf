"""
.. module:: cli
   :platform: Linux, MacOS, Windows
   :synopsis: Command-line driver producing machine-readable reports

Exit codes: 0 on success, 1 on usage or input errors, 2 when a numerical check
fails (an inequality violation, a failed certificate or a bound ordering that
does not hold).
"""

import argparse
import logging
import os
import sys
import typing as t

from . import config, extremal, measures, serialization, sweep, units
from ._version import __version__
from .bounds_report import BoundsReport
from .density_matrix import DensityMatrix
from .equality_certificate import EqualityCertificate
from .errors import DegenerateWitness, InvalidSpec, NumericalFailure, SandwichViolation
from .inequality_report import InequalityReport
from .pure_state import PureState
from .reporter import SweepReporter
from .saturating_spec import SaturatingSpec
from .sharpness_witness import SharpnessWitness

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> t.NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_state(path: t.Union[str, os.PathLike]) -> DensityMatrix:
    """
    Read a state file holding either a density matrix (keys ``dims`` and ``mat``)
    or a pure state (keys ``dims`` and ``vec``).

    Parameters
    ----------
    path
        The JSON file.
    """
    data = serialization.load_json(path)
    if not isinstance(data, dict):
        raise ValueError(f"{path} does not hold a JSON object")
    if "vec" in data:
        return PureState.fromDict(data).toDensityMatrix()
    return DensityMatrix.fromDict(data)


def _config(args: argparse.Namespace) -> t.Dict[str, t.Any]:
    skipped = {"func", "verbose"}
    return {
        key: value for key, value in sorted(vars(args).items()) if key not in skipped
    }


def _envelope(
    args: argparse.Namespace, fields: t.Iterable[str], **body: t.Any
) -> t.Dict[str, t.Any]:
    unit = units.Unit(args.unit)
    report = {
        "command": args.command,
        "version": __version__,
        "unit": unit.name,
        "config": _config(args),
        **body,
    }
    return units.convert_state(report, unit, fields)


def _emit(report: t.Dict[str, t.Any], out: t.Optional[str]) -> None:
    if out is None:
        sys.stdout.write(serialization.to_json(report))
    else:
        serialization.dump_json(report, out)
        logger.info("Report written to %s", out)


def cmd_check(args: argparse.Namespace) -> int:
    """Evaluate a family of inequalities on a state file."""
    rho = load_state(args.state)
    reports = sweep.run_family(rho, args.family, args.tol)
    satisfied = all(report.satisfied for report in reports)
    _emit(
        _envelope(
            args,
            InequalityReport.entropyFields,
            reports=[report.toDict() for report in reports],
            all_satisfied=satisfied,
        ),
        args.out,
    )
    return EXIT_OK if satisfied else EXIT_VIOLATION


def cmd_extremal(args: argparse.Namespace) -> int:
    """Build a saturating state, its certificate and its sharpness witness."""
    spec = SaturatingSpec(args.kappas, load_state(args.rho2))
    os.makedirs(args.out, exist_ok=True)
    rho12 = extremal.build_saturating_state(spec)
    certificate = extremal.verify_equality_conditions(rho12)
    s12, s1, s2 = extremal.analytic_entropies(spec)
    fields = EqualityCertificate.entropyFields + ("s12", "s1", "s2")
    serialization.dump_json(rho12, os.path.join(args.out, "state.json"))
    serialization.dump_json(
        _envelope(
            args,
            fields,
            dims=list(rho12.getDims()),
            analytic={"s12": s12, "s1": s1, "s2": s2},
            certificate=certificate.toDict(),
        ),
        os.path.join(args.out, "certificate.json"),
    )
    try:
        witness = extremal.build_sharpness_witness(spec)
    except (InvalidSpec, DegenerateWitness) as error:
        logger.warning("Sharpness witness skipped: %s", error)
    else:
        serialization.dump_json(
            witness.state, os.path.join(args.out, "witness_state.json")
        )
        serialization.dump_json(
            _envelope(args, SharpnessWitness.entropyFields, **witness.getReport()),
            os.path.join(args.out, "witness.json"),
        )
    if not certificate.passed:
        logger.error("Equality certificate failed: %r", certificate)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    """Compute the bound sandwich of a bipartite state file."""
    rho12 = load_state(args.state)
    settings = config.EstimatorConfig(
        ensembleSize=args.ensemble_size,
        ancillaDim=args.ancilla_dim,
        environmentDim=args.environment_dim,
        numRestarts=args.restarts,
        budget=args.budget,
        seed=args.seed,
        tolerance=args.tolerance,
        maxWorkers=args.workers,
    )
    report = measures.entanglement_bounds(rho12, settings)
    _emit(
        _envelope(
            args,
            BoundsReport.entropyFields,
            estimator=settings.toDict(),
            bounds=report.toDict(),
        ),
        args.out,
    )
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    """Evaluate a family of inequalities on seeded random states."""
    summary = sweep.run_sweep(
        args.dims, args.count, args.seed, args.family, args.rank, args.tol
    )
    _emit(
        _envelope(args, sweep.SweepSummary.entropyFields, summary=summary.toDict()),
        args.out,
    )
    if args.csv is not None:
        SweepReporter(args.csv, units.Unit(args.unit)).report(summary)
    return EXIT_OK if summary.passed else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    """
    Create the parser of the ``entlab`` command.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--unit", choices=["nats", "bits"], default="nats", help="unit of the report"
    )
    common.add_argument(
        "--verbose", action="store_true", help="log debugging messages to stderr"
    )

    parser = _ArgumentParser(
        prog="entlab",
        description="Entropy inequalities and entanglement bounds of finite states",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser(
        "check", parents=[common], help="evaluate entropy inequalities on a state"
    )
    check.add_argument("state", help="JSON state file")
    check.add_argument("--family", choices=sweep.FAMILIES, default="all")
    check.add_argument("--tol", type=float, default=config.INEQUALITY_TOL)
    check.add_argument("--out", help="report file (default: standard output)")
    check.set_defaults(func=cmd_check)

    build = commands.add_parser(
        "extremal", parents=[common], help="build a triangle-saturating state"
    )
    build.add_argument(
        "--kappas", type=float, nargs="+", required=True, help="mixture weights"
    )
    build.add_argument("--rho2", required=True, help="JSON file of the marginal")
    build.add_argument("--out", required=True, help="output directory")
    build.set_defaults(func=cmd_extremal)

    bounds = commands.add_parser(
        "bounds", parents=[common], help="bound the entanglement of a state"
    )
    bounds.add_argument("state", help="JSON state file")
    bounds.add_argument("--seed", type=int, default=0)
    bounds.add_argument("--restarts", type=int, default=32)
    bounds.add_argument("--budget", type=int, default=2000)
    bounds.add_argument("--ensemble-size", type=int)
    bounds.add_argument("--ancilla-dim", type=int)
    bounds.add_argument("--environment-dim", type=int)
    bounds.add_argument("--tolerance", type=float, default=config.SANDWICH_TOL)
    bounds.add_argument("--workers", type=int, help="threads running restarts")
    bounds.add_argument("--out", help="report file (default: standard output)")
    bounds.set_defaults(func=cmd_bounds)

    sweeper = commands.add_parser(
        "sweep", parents=[common], help="check inequalities on random states"
    )
    sweeper.add_argument("--dims", type=int, nargs="+", required=True)
    sweeper.add_argument("--count", type=int, required=True)
    sweeper.add_argument("--seed", type=int, required=True)
    sweeper.add_argument("--family", choices=sweep.FAMILIES, default="all")
    sweeper.add_argument("--rank", type=int, help="rank of every sampled state")
    sweeper.add_argument("--tol", type=float, default=config.INEQUALITY_TOL)
    sweeper.add_argument("--out", help="report file (default: standard output)")
    sweeper.add_argument("--csv", help="file of per-state slacks")
    sweeper.set_defaults(func=cmd_sweep)
    return parser


def main(argv: t.Optional[t.Sequence[str]] = None) -> int:
    """
    Run the ``entlab`` command.

    Parameters
    ----------
    argv
        The command-line arguments. If `None`, ``sys.argv[1:]`` is used.

    Returns
    -------
    int
        The exit code.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (SandwichViolation, NumericalFailure) as error:
        logger.error("%s", error)
        return EXIT_VIOLATION
    except (OSError, ValueError, KeyError, TypeError) as error:
        logger.error("%s: %s", type(error).__name__, error)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
