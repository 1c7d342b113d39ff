"""
Command-line front end: compute polynomials, list tableaux, run verification
sweeps and the identity suite.

Exit codes: 0 success, 1 mathematical mismatch, 2 invalid input.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

from .config import CliConfig, default_log_level
from .core import GrothendieckVerifier
from .exceptions import IndexRangeError, NotApplicableError, PermutationError, ShapeError
from .identities import run_identity_suite
from .permcomb import SkewShape, flag_sequences, skew_shape
from .schemas import SummaryModel
from .tableaux import enumerate_svt, render_latex, render_text, tableau_to_json
from .utils import dataframe_to_json, filter_failures, get_length_distribution, summarize

_logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2

INPUT_ERRORS = (PermutationError, NotApplicableError, IndexRangeError, ShapeError)


def _summary_line(config: CliConfig, checked: int, failed: int) -> str:
    if config.format == "json":
        return SummaryModel(checked=checked, failed=failed).model_dump_json()
    return f"checked={checked} failed={failed}"


def cmd_compute(config: CliConfig) -> int:
    """
    Print G_w computed by the requested pipeline.

    Args:
        config: Validated options

    Returns:
        Exit code
    """
    w = config.permutation()
    verifier = GrothendieckVerifier(workers=config.parallel)
    poly = verifier.compute(w, config.method)
    if config.format == "json":
        print(poly.to_json())
    elif config.format == "latex":
        print(poly.to_latex())
    else:
        print(poly.to_text())
    return EXIT_OK


def cmd_tableaux(config: CliConfig) -> int:
    """
    Stream every tableau of SVT(sigma(w), f(w)) followed by the count.

    Args:
        config: Validated options

    Returns:
        Exit code
    """
    w = config.permutation()
    flag_sequences(w)
    shape = SkewShape.empty() if w.is_identity() else skew_shape(w)
    count = 0
    for tableau in enumerate_svt(shape):
        count += 1
        if config.format == "json":
            print(tableau_to_json(tableau))
        elif config.format == "latex":
            print(render_latex(shape, tableau))
            print()
        else:
            print(render_text(shape, tableau))
            print()
    _logger.info("%s: %d tableaux", w, count)
    print(f'{{"count":{count}}}' if config.format == "json" else f"count={count}")
    return EXIT_OK


def cmd_verify(config: CliConfig) -> int:
    """
    Compare both pipelines for one permutation or for all 321-avoiding w in S_n.

    Args:
        config: Validated options

    Returns:
        0 if every permutation agreed, 1 otherwise
    """
    verifier = GrothendieckVerifier(
        workers=config.parallel,
        include_polynomial=config.include_polynomial,
        progress=config.verbose > 0,
    )
    if config.perm:
        reports = verifier.verify_batch([config.permutation()])
    else:
        reports = verifier.sweep(config.n)

    for report in reports:
        if config.format == "json":
            print(report.to_json(verifier.include_polynomial))
        else:
            print(report.to_text())

    frame = verifier.to_frame(reports)
    checked, failed = summarize(frame)
    for perm in filter_failures(frame)["perm"]:
        _logger.error("mismatch: %s", perm)
    _logger.info("permutations per length: %s", get_length_distribution(frame))
    print(_summary_line(config, checked, failed))
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


def cmd_identities(config: CliConfig) -> int:
    """
    Run the seeded operator-identity suite and the exhaustive lemma sweeps.

    Args:
        config: Validated options

    Returns:
        0 if every identity held, 1 otherwise
    """
    frame = run_identity_suite(seed=config.seed, trials=config.trials, max_n=config.max_n)
    if config.format == "json":
        print(dataframe_to_json(frame))
    else:
        print(frame.to_string(index=False))
    checked = int(frame["checked"].sum())
    failed = int(frame["failed"].sum())
    print(_summary_line(config, checked, failed))
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


COMMANDS: Dict[str, Callable[[CliConfig], int]] = {
    "compute": cmd_compute,
    "tableaux": cmd_tableaux,
    "verify": cmd_verify,
    "identities": cmd_identities,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--perm", help="permutation in one-line notation, e.g. 3,1,2,5,4")
    common.add_argument("--n", type=int, help="size of the symmetric group")
    common.add_argument(
        "--method",
        choices=["divided", "tableau", "grassmannian", "induction"],
        default="divided",
    )
    common.add_argument("--format", choices=["text", "json", "latex"], default="text")
    common.add_argument(
        "--parallel",
        "--workers",
        dest="parallel",
        type=int,
        help="worker processes (default: $POLYGROTH_WORKERS or 1)",
    )
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--max-n", dest="max_n", type=int, default=5)
    common.add_argument("--include-polynomial", action="store_true")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(
        prog="polygroth",
        description="Double Grothendieck polynomials by divided differences and set-valued tableaux.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("compute", parents=[common], help="print G_w")
    sub.add_parser("tableaux", parents=[common], help="list SVT(sigma(w), f(w))")
    sub.add_parser("verify", parents=[common], help="check the tableau formula")
    sub.add_parser("identities", parents=[common], help="run the identity suite")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point of the polygroth console script.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]

    Returns:
        Process exit code
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID

    logging.basicConfig(
        level=default_log_level(args.verbose), format=LOG_FORMAT, stream=sys.stderr
    )
    options = {key: value for key, value in vars(args).items() if value is not None}
    try:
        config = CliConfig(**options)
    except ValidationError as exc:
        _logger.error("invalid options: %s", exc)
        return EXIT_INVALID

    try:
        return COMMANDS[config.command](config)
    except INPUT_ERRORS as exc:
        _logger.error("%s", exc)
        return EXIT_INVALID
