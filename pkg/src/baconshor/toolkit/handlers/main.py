""" Bacon-Shor Toolkit Command Line Handler """

import argparse
import hashlib
import logging
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from dotenv import load_dotenv
from pydantic import ValidationError

from ..contracts.gv_query import GVQuery
from ..contracts.property_violation_error import PropertyViolationError
from ..contracts.report import Report
from ..contracts.settings import Settings
from ..contracts.subsystem_code import SubsystemCode
from ..contracts.toolkit_error import ToolkitError
from ..controllers.analyze import AnalyzeController
from ..controllers.bounds import BoundsController
from ..controllers.hadamard import HadamardController
from ..controllers.localize import LocalizeController
from ..controllers.regions import RegionsController
from ..controllers.search import SearchController
from ..controllers.verify import VerifyController
from ..services.gf2core import read_matrix, render_matrix
from ..services.regions import parse_region
from ..services.subsystem import read_code, render_code

EXIT_OK: int = 0
EXIT_VIOLATION: int = 1
EXIT_ERROR: int = 2


def digest(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def configure_logging(settings: Settings) -> None:
    """Logs to a per-host file under logs_dir when configured, to stderr otherwise."""

    options: dict = {
        "format": "%(asctime)s - %(levelname)s - %(message)s",
        "datefmt": "%m/%d/%Y %I:%M:%S %p",
        "level": settings.log_level.upper(),
        "force": True,
    }
    if settings.logs_dir:
        Path(settings.logs_dir).mkdir(parents=True, exist_ok=True)
        options["filename"] = f"{settings.logs_dir}/{os.uname()[1]}.baconshor.toolkit.log"
    else:
        options["stream"] = sys.stderr
    logging.basicConfig(**options)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="baconshor", description="Generalized Bacon-Shor code toolkit")
    parser.add_argument("--env-file", help="dotenv file with BACONSHOR_* settings")
    parser.add_argument("--threads", type=int, help="worker threads")
    parser.add_argument("--cap", type=int, help="enumeration cap")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="theoretical and measured parameters of a matrix")
    analyze.add_argument("--matrix", required=True)
    analyze.add_argument("--oracle", choices=["none", "full", "bounded"], default="none")
    analyze.add_argument("--w-max", type=int, help="weight limit of the bounded oracle")

    localize = commands.add_parser("localize", help="nearest-neighbour form of a matrix code")
    localize.add_argument("--matrix", required=True)
    localize.add_argument("--pad", action="store_true", help="pad to two qubits per cell")
    localize.add_argument("--out", help="code file to write")

    verify = commands.add_parser("verify", help="property sweeps")
    verify.add_argument("scope", choices=["parameters", "cleaning", "ancilla", "restriction"])
    verify.add_argument("--size", type=int, default=3, help="largest matrix side (parameters)")
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--max-qubits", type=int, default=6)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--code", help="code file: check every subset (cleaning)")

    search = commands.add_parser("search", help="random fixed-rank search")
    search.add_argument("--m", type=int, required=True)
    search.add_argument("--k", type=int, required=True)
    search.add_argument("--beta", type=float, required=True)
    search.add_argument("--trials", type=int, default=1000)
    search.add_argument("--seed", type=int, default=0)
    search.add_argument("--survey", action="store_true", help="run every trial and report the success rate")
    search.add_argument("--out", help="matrix file to write on success")

    bounds = commands.add_parser("bounds", help="parameter bounds and profile feasibility")
    bounds.add_argument("--matrix", required=True)

    hadamard = commands.add_parser("hadamard", help="write the Hadamard matrix of rank k")
    hadamard.add_argument("--k", type=int, required=True)
    hadamard.add_argument("--out", help="matrix file to write")

    regions = commands.add_parser("regions", help="logical-operator counts of a region")
    regions.add_argument("--code", required=True)
    regions.add_argument("--region", default="", help='"0,3,5" or "r0:r1,c0:c1"')
    regions.add_argument("--range", type=int, dest="interaction", help="interaction range")

    serve = commands.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def run(args: argparse.Namespace, settings: Settings) -> Report:
    """Dispatches one parsed command and returns its report (side files already written)."""

    if args.command == "analyze":
        report: Report = AnalyzeController(settings=settings).execute(
            matrix=read_matrix(args.matrix), oracle=args.oracle, w_max=args.w_max
        )
        return report.copy(update={"inputs": {args.matrix: digest(args.matrix)}})

    if args.command == "localize":
        report, local = LocalizeController(settings=settings).execute(matrix=read_matrix(args.matrix), pad=args.pad)
        if args.out:
            Path(args.out).write_text(render_code(local.code), encoding="utf-8")
        return report.copy(update={"inputs": {args.matrix: digest(args.matrix)}})

    if args.command == "verify":
        code: Optional[SubsystemCode] = read_code(args.code) if args.code else None
        report = VerifyController(settings=settings).execute(
            scope=args.scope,
            size=args.size,
            trials=args.trials,
            max_qubits=args.max_qubits,
            seed=args.seed,
            code=code,
        )
        return report.copy(update={"inputs": {args.code: digest(args.code)} if args.code else {}})

    if args.command == "search":
        query: GVQuery = GVQuery(m=args.m, k=args.k, beta=args.beta, max_trials=args.trials, seed=args.seed)
        report, matrix = SearchController(settings=settings).execute(query=query, survey=args.survey)
        if args.out and matrix is not None:
            Path(args.out).write_text(render_matrix(matrix, comment=report.summary), encoding="utf-8")
        return report

    if args.command == "bounds":
        report = BoundsController(settings=settings).execute(matrix=read_matrix(args.matrix))
        return report.copy(update={"inputs": {args.matrix: digest(args.matrix)}})

    if args.command == "hadamard":
        report, matrix = HadamardController(settings=settings).execute(k=args.k)
        if args.out:
            Path(args.out).write_text(render_matrix(matrix, comment=f"hadamard k={args.k}"), encoding="utf-8")
        return report

    code = read_code(args.code)
    report = RegionsController(settings=settings).execute(
        code=code, region=parse_region(args.region, code), interaction=args.interaction
    )
    return report.copy(update={"inputs": {args.code: digest(args.code)}})


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point of the `baconshor` command.

    Prints the JSON report to stdout and a one-line summary to the log.

    Returns
    -------
    code: int
        0 on success, 1 when a checked property was violated, 2 on any other error.
    """

    args: argparse.Namespace = build_parser().parse_args(argv)
    if args.env_file:
        load_dotenv(dotenv_path=args.env_file)
    overrides: dict = {
        key: value for key, value in (("threads", args.threads), ("enumeration_cap", args.cap)) if value is not None
    }
    try:
        settings: Settings = Settings(**overrides)
    except ValidationError as error:
        logging.error("invalid settings: %s", str(error))
        return EXIT_ERROR
    configure_logging(settings)

    if args.command == "serve":
        import uvicorn  # pylint: disable=import-outside-toplevel

        uvicorn.run("baconshor.toolkit.handlers.service:app", host=args.host, port=args.port)
        return EXIT_OK

    try:
        report: Report = run(args, settings)
    except PropertyViolationError as error:
        logging.error("property violated: %s", str(error))
        return EXIT_VIOLATION
    except (ToolkitError, ValidationError, OSError) as error:
        logging.error("%s: %s", type(error).__name__, str(error))
        return EXIT_ERROR

    print(report.json(indent=2))
    logging.info("%s: %s", report.command, report.summary)
    return EXIT_OK if report.passed else EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
