"""
UECSM toolkit - unitary equivalence to complex symmetric matrices
Main entry point for the command-line interface.
"""
import os
import sys
import json
import logging
import argparse
from typing import Any, Dict, List, Optional

# Add the project root to the Python path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

# Import configuration
from config import get_config, load_config_file, reset_config, update_config

# Import utilities
from utils.errors import (
    ConfigError,
    DimensionMismatch,
    NonFiniteEntries,
    ParseError,
    RankOutOfRange,
    UECSMError,
    UsageError,
)
from utils.logger import setup_logger

# Import the decision pipeline and the random lab
from data.fixtures import FIXTURES, get_fixture
from data.matrix_parser import parse_matrix
from lab.campaign_runner import run_campaign
from models.campaign import CampaignConfig, EnsembleType
from models.certificate import Certificate
from models.matrix_document import MatrixDocument
from models.report import Report, residual_frame
from models.tolerances import Tolerances
from models.verdict import Status
from uecsm.pipeline import UECSMTester

EXIT_OK = 0
EXIT_NOT_UECSM = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_NO_INPUT = 66
EXIT_SOFTWARE = 70

STATUS_EXIT_CODES = {
    Status.UECSM: EXIT_OK,
    Status.NOT_UECSM: EXIT_NOT_UECSM,
    Status.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}

TOLERANCE_FLAGS = {
    "tol_real": "real",
    "tol_zero": "zero",
    "tol_eig_gap": "eig_gap",
    "tol_parallel": "parallel",
    "tol_normal": "normal",
}


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser that raises UsageError instead of exiting with status 2."""

    def error(self, message):
        raise UsageError(message)


def build_parser() -> ArgumentParser:
    """Build the command-line parser."""
    common = ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], help="Report format")
    common.add_argument("--output", type=str, help="Write the report to this path instead of stdout")
    common.add_argument("--config", type=str, help="Path to a JSON configuration file")
    common.add_argument("--log-level", type=str, choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Logging level")
    for flag, name in TOLERANCE_FLAGS.items():
        common.add_argument(f"--{flag.replace('_', '-')}", dest=flag, type=float, help=f"Tolerance '{name}'")

    matrix_input = ArgumentParser(add_help=False)
    matrix_input.add_argument("input", nargs="?", help="Matrix file, or '-' for stdin")
    matrix_input.add_argument("--expr", type=str, help="Matrix given inline, e.g. '0 7 0; 0 1 -5; 0 0 6'")

    parser = ArgumentParser(description="Decide whether a complex matrix is unitarily equivalent to a complex symmetric matrix")
    subparsers = parser.add_subparsers(dest="command", parser_class=ArgumentParser)

    subparsers.add_parser("test", parents=[common, matrix_input], help="Decide UECSM and print the verdict")
    subparsers.add_parser("certify", parents=[common, matrix_input], help="Decide UECSM and print the certificate")

    verify = subparsers.add_parser("verify", parents=[common], help="Check a certificate against a matrix")
    verify.add_argument("matrix", help="Matrix file, or '-' for stdin")
    verify.add_argument("certificate", help="Certificate or certify report (JSON), or '-' for stdin")

    search = subparsers.add_parser("search", parents=[common], help="Run a Monte Carlo campaign")
    search.add_argument("--n", type=int, help="Matrix dimension")
    search.add_argument("--rank", type=int, help="Partial-isometry rank")
    search.add_argument("--trials", type=int, help="Number of trials")
    search.add_argument("--seed", type=int, help="Root seed")
    search.add_argument("--ensemble", choices=[e.value for e in EnsembleType], help="Random matrix ensemble")
    search.add_argument("--workers", type=int, help="Worker processes")

    examples = subparsers.add_parser("examples", parents=[common], help="List or print the worked-example matrices")
    examples.add_argument("name", nargs="?", help="Example to print")
    return parser


def config_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    """Collect the explicit flags as a partial configuration."""
    overrides: Dict[str, Any] = {}
    tolerances = {
        name: getattr(args, flag) for flag, name in TOLERANCE_FLAGS.items()
        if getattr(args, flag, None) is not None
    }
    if tolerances:
        overrides["tolerances"] = tolerances
    campaign = {
        key: getattr(args, key) for key in ("n", "rank", "trials", "seed", "ensemble", "workers")
        if getattr(args, key, None) is not None
    }
    if campaign:
        overrides["campaign"] = campaign
    if args.format:
        overrides["output"] = {"format": args.format}
    if args.log_level:
        overrides["logging"] = {"level": args.log_level}
    return overrides


def read_source(path: Optional[str]) -> str:
    """
    Read a document from a path or from stdin ('-').

    Raises:
        UsageError: If no path is given
        OSError: If the file cannot be read
    """
    if path is None:
        raise UsageError("No matrix input; give a path, '-' for stdin, or --expr")
    if path == "-":
        return sys.stdin.read()
    with open(path, "r") as f:
        return f.read()


class CommandLine:
    """Runs one parsed command against the current configuration."""

    def __init__(self, args: argparse.Namespace, config: Dict[str, Any]):
        """
        Initialize the command.

        Args:
            args: Parsed arguments
            config: Effective configuration
        """
        self.args = args
        self.config = config
        self.tolerances = Tolerances.from_config(config["tolerances"])
        self.format = config["output"]["format"]
        setup_logger(
            name="UECSM",
            level=config["logging"]["level"],
            log_file=config["logging"]["file"]
        )
        self.logger = logging.getLogger("UECSM.CLI")

    def emit(self, text: str) -> None:
        """Write the report to --output or stdout."""
        if self.args.output:
            with open(self.args.output, "w") as f:
                f.write(text + "\n")
            self.logger.info(f"Report written to {self.args.output}")
        else:
            sys.stdout.write(text + "\n")

    def read_matrix(self) -> MatrixDocument:
        """Parse the matrix named by --expr or the input argument."""
        if self.args.expr is not None:
            return parse_matrix(self.args.expr)
        return parse_matrix(read_source(self.args.input))

    def run(self) -> int:
        """Dispatch to the command handler and return its exit code."""
        handlers = {
            "test": self.cmd_test,
            "certify": self.cmd_certify,
            "verify": self.cmd_verify,
            "search": self.cmd_search,
            "examples": self.cmd_examples,
        }
        return handlers[self.args.command]()

    def _decide(self, command: str) -> int:
        document = self.read_matrix()
        verdict = UECSMTester(self.tolerances).test(document.entries)
        report = Report(command, verdict, self.tolerances, document.entries)
        self.emit(report.to_json() if self.format == "json" else report.to_text())
        return STATUS_EXIT_CODES[verdict.status]

    def cmd_test(self) -> int:
        """Run the decision pipeline and print the verdict."""
        return self._decide("test")

    def cmd_certify(self) -> int:
        """Run the decision pipeline and print the verdict with its certificate."""
        return self._decide("certify")

    def cmd_verify(self) -> int:
        """Check a certificate; exit 0 iff every applicable residual passes."""
        if self.args.matrix == "-" and self.args.certificate == "-":
            raise UsageError("Only one of the matrix and the certificate can come from stdin")
        document = parse_matrix(read_source(self.args.matrix))
        certificate = load_certificate(read_source(self.args.certificate))

        report = UECSMTester(self.tolerances).verify(document.entries, certificate)
        if self.format == "json":
            self.emit(json.dumps(report.to_dict(), indent=2))
        else:
            table = residual_frame(report.residuals, report.thresholds).to_string()
            verdict = "PASS" if report.passed else f"FAIL ({', '.join(report.failures)})"
            self.emit(f"Verification: {verdict}\n{table}")
        return EXIT_OK if report.passed else EXIT_NOT_UECSM

    def cmd_search(self) -> int:
        """Run a campaign and print its statistics."""
        cfg = CampaignConfig.from_config(self.config)
        stats = run_campaign(cfg, workers=max(1, int(self.config["campaign"]["workers"])))
        if self.format == "json":
            self.emit(json.dumps({"config": cfg.to_dict(), "stats": stats.to_dict()}, indent=2))
            return EXIT_OK

        lines = [
            str(cfg),
            stats.to_frame().to_string(index=False),
            "",
            "|margin| histogram:",
            stats.histogram_frame().to_string(index=False),
            "",
            f"Borderline: {stats.borderline}",
            f"Elapsed:    {stats.elapsed:.2f} s",
        ]
        for reason, count in sorted(stats.inconclusive_reasons.items()):
            lines.append(f"Inconclusive ({count}): {reason}")
        lines.append("")
        lines.append(json.dumps(stats.to_dict()))
        self.emit("\n".join(lines))
        return EXIT_OK

    def cmd_examples(self) -> int:
        """List the worked examples or print one of them."""
        name = self.args.name
        if name is None:
            lines = []
            for key, factory in FIXTURES.items():
                matrix = factory()
                summary = factory.__doc__.strip().splitlines()[0] if factory.__doc__ else ""
                lines.append(f"{key:<16} {matrix.shape[0]} x {matrix.shape[0]}  {summary}")
            self.emit("\n".join(lines))
            return EXIT_OK

        try:
            document = MatrixDocument(get_fixture(name))
        except KeyError as e:
            raise UsageError(str(e.args[0]))
        self.emit(json.dumps(document.to_dict(), indent=2) if self.format == "json" else document.to_text())
        return EXIT_OK


def load_certificate(text: str) -> Certificate:
    """
    Read a certificate document or a certify report.

    Raises:
        ParseError: If the text is not a certificate
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno)
    if isinstance(data, dict) and "K" not in data and "certificate" in data:
        data = data["certificate"]
    if not isinstance(data, dict) or "K" not in data or "S" not in data:
        raise ParseError("Certificate document needs 'K' and 'S' members")
    return Certificate.from_dict(data)


def build_config(args: argparse.Namespace) -> Dict[str, Any]:
    """Defaults and environment, then --config, then explicit flags."""
    reset_config()
    if args.config:
        load_config_file(args.config)
    update_config(config_overrides(args))
    return get_config()


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line.

    Args:
        argv: Arguments without the program name; sys.argv[1:] when omitted

    Returns:
        int: The exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("A command is required: test, certify, verify, search or examples")
        return CommandLine(args, build_config(args)).run()
    except SystemExit as e:
        # --help
        return int(e.code or 0)
    except (UsageError, ConfigError, RankOutOfRange) as e:
        sys.stderr.write(f"Usage error: {e}\n")
        return EXIT_USAGE
    except (ParseError, DimensionMismatch, NonFiniteEntries) as e:
        sys.stderr.write(f"Input error: {e}\n")
        return EXIT_DATA
    except OSError as e:
        sys.stderr.write(f"I/O error: {e}\n")
        return EXIT_NO_INPUT
    except UECSMError as e:
        sys.stderr.write(f"Error: {e.__class__.__name__}: {e}\n")
        return EXIT_SOFTWARE


if __name__ == "__main__":
    sys.exit(main())
