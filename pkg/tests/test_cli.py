"""
Tests for the command-line front end.
"""
import io
import json
import os
import tempfile
import unittest
from unittest.mock import patch

import numpy as np

from data.fixtures import PUBLISHED_CERTIFICATES, get_fixture
from ensembles.samplers import sample_ginibre
from linalg.core import direct_sum
from main import EXIT_DATA, EXIT_INCONCLUSIVE, EXIT_NO_INPUT, EXIT_NOT_UECSM, EXIT_OK, EXIT_USAGE, main
from models.campaign import CampaignStats
from models.matrix_document import MatrixDocument
from models.verdict import Branch, Status, Verdict

T1 = "0 7 0; 0 1 -5; 0 0 6"
T2 = "0 7 0; 0 1 -5; 0 0 3"


class CliTestCase(unittest.TestCase):
    """Runs main() with captured streams inside a scratch directory."""

    def setUp(self):
        """Set up test fixtures."""
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    def write(self, name, text):
        path = self.path(name)
        with open(path, "w") as f:
            f.write(text)
        return path

    def run_main(self, *argv, stdin=""):
        with patch("sys.stdout", new_callable=io.StringIO) as stdout, \
                patch("sys.stderr", new_callable=io.StringIO) as stderr, \
                patch("sys.stdin", io.StringIO(stdin)):
            code = main(list(argv))
        return code, stdout.getvalue(), stderr.getvalue()


class TestDecisionCommands(CliTestCase):
    """Test cases for test and certify."""

    def test_triangular_examples(self):
        """T1 exits 0 and T2 exits 1."""
        code, out, _ = self.run_main("test", "--expr", T1)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("Status:     UECSM", out)

        code, out, _ = self.run_main("test", "--expr", T2)
        self.assertEqual(code, EXIT_NOT_UECSM)
        self.assertIn("Witness:", out)

    def test_inconclusive_exit_code(self):
        """The degenerate 5 x 5 example exits 2."""
        path = self.write("degenerate.json", json.dumps(MatrixDocument(get_fixture("degenerate-5x5")).to_dict()))
        code, out, _ = self.run_main("test", path, "--format", "json")
        self.assertEqual(code, EXIT_INCONCLUSIVE)
        self.assertEqual(json.loads(out)["status"], "Inconclusive")

    def test_stdin_and_json_report(self):
        """'-' reads stdin; --format json emits a parseable report without certificate."""
        code, out, _ = self.run_main("test", "-", "--format", "json", stdin=T1)
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertEqual(report["command"], "test")
        self.assertIsNone(report["certificate"])
        self.assertEqual(report["input"]["n"], 3)

    def test_tolerance_flags_reach_the_report(self):
        """--tol-real overrides the default threshold."""
        code, out, _ = self.run_main("test", "--expr", T1, "--format", "json", "--tol-real", "1e-6")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["tolerances"]["real"], 1e-6)

    def test_certify_then_verify(self):
        """A certify report verifies against its matrix; a tampered kernel does not."""
        matrix = self.write("t1.txt", T1)
        report = self.path("t1.json")
        code, _, _ = self.run_main("certify", matrix, "--format", "json", "--output", report)
        self.assertEqual(code, EXIT_OK)

        code, out, _ = self.run_main("verify", matrix, report)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("Verification: PASS", out)

        with open(report) as f:
            data = json.load(f)
        data["certificate"]["K"]["re"][0][1] += 1e-3
        tampered = self.write("tampered.json", json.dumps(data))
        code, out, _ = self.run_main("verify", matrix, tampered, "--format", "json")
        self.assertEqual(code, EXIT_NOT_UECSM)
        self.assertFalse(json.loads(out)["passed"])

    def test_certify_then_verify_near_shared_eigenvector(self):
        """A certificate printed with exit 0 for a perturbed block matrix also verifies."""
        block = direct_sum(np.array([[5.0]]), np.array([[0, 1], [0, 0]]))
        noise = np.random.default_rng(41)
        for eps in (1e-6, 1e-7):
            matrix = self.write(f"block-{eps}.json", json.dumps(
                MatrixDocument(block + eps * sample_ginibre(3, noise)).to_dict()
            ))
            report = self.path(f"block-{eps}-cert.json")
            code, _, _ = self.run_main("certify", matrix, "--format", "json", "--output", report)
            if code != EXIT_OK:
                continue
            code, out, _ = self.run_main("verify", matrix, report)
            self.assertEqual(code, EXIT_OK, out)

    def test_published_certificates_verify(self):
        """The published kernel-only certificates pass verify."""
        for name, factory in PUBLISHED_CERTIFICATES.items():
            matrix = self.write(f"{name}.json", json.dumps(MatrixDocument(get_fixture(name)).to_dict()))
            certificate = self.write(f"{name}-cert.json", json.dumps(factory().to_dict()))
            code, _, err = self.run_main("verify", matrix, certificate)
            self.assertEqual(code, EXIT_OK, f"{name}: {err}")


class TestErrorExitCodes(CliTestCase):
    """Test cases for the error-to-exit-code mapping."""

    def test_parse_error(self):
        """Bad literals exit 65 with the position on stderr."""
        code, _, err = self.run_main("test", "--expr", "1 2; 3 x")
        self.assertEqual(code, EXIT_DATA)
        self.assertIn("column 8", err)

    def test_non_square(self):
        code, _, _ = self.run_main("test", "--expr", "1 2 3; 4 5 6")
        self.assertEqual(code, EXIT_DATA)

    def test_missing_file(self):
        code, _, _ = self.run_main("test", self.path("absent.txt"))
        self.assertEqual(code, EXIT_NO_INPUT)

    def test_usage_errors(self):
        """Unknown flags, missing commands and missing input exit 64."""
        self.assertEqual(self.run_main("test", "--bogus")[0], EXIT_USAGE)
        self.assertEqual(self.run_main()[0], EXIT_USAGE)
        self.assertEqual(self.run_main("test")[0], EXIT_USAGE)
        self.assertEqual(self.run_main("search", "--rank", "7", "--n", "4")[0], EXIT_USAGE)
        self.assertEqual(self.run_main("verify", "-", "-")[0], EXIT_USAGE)

    def test_bad_config_file(self):
        """Unknown configuration keys exit 64."""
        config = self.write("config.json", json.dumps({"tolerances": {"realness": 1.0}}))
        code, _, err = self.run_main("test", "--expr", T1, "--config", config)
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("tolerances.realness", err)

    def test_help(self):
        code, out, _ = self.run_main("--help")
        self.assertEqual(code, 0)
        self.assertIn("certify", out)


class TestSearchAndExamples(CliTestCase):
    """Test cases for search and examples."""

    def test_search_passes_campaign_parameters(self):
        """Flags become the campaign configuration; stats are printed as a table and JSON."""
        stats = CampaignStats()
        for _ in range(3):
            stats.record(Verdict(Status.UECSM, Branch.REALITY_TEST, margin=-1e-8, statistic=1e-14))
        with patch("main.run_campaign", return_value=stats) as mocked:
            code, out, _ = self.run_main("search", "--n", "3", "--rank", "1", "--trials", "3", "--seed", "7")
        self.assertEqual(code, EXIT_OK)
        cfg = mocked.call_args[0][0]
        self.assertEqual((cfg.n, cfg.rank, cfg.trials, cfg.seed), (3, 1, 3, 7))
        self.assertIn("Borderline: 0", out)
        self.assertEqual(json.loads(out.strip().splitlines()[-1])["status_counts"]["UECSM"], 3)

    def test_search_json(self):
        """--format json emits config and stats together."""
        with patch("main.run_campaign", return_value=CampaignStats()):
            code, out, _ = self.run_main("search", "--ensemble", "ginibre", "--format", "json")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["config"]["ensemble"], "ginibre")

    def test_small_search_runs(self):
        """A real rank-0 campaign finishes with every trial UECSM."""
        code, out, _ = self.run_main("search", "--n", "4", "--rank", "0", "--trials", "10", "--format", "json")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["stats"]["status_counts"]["UECSM"], 10)

    def test_examples(self):
        """Listing names every example; a named example prints in the text format."""
        code, out, _ = self.run_main("examples")
        self.assertEqual(code, EXIT_OK)
        for name in ("T1", "T2", "mixed", "degenerate-5x5"):
            self.assertIn(name, out)

        code, out, _ = self.run_main("examples", "T1")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip(), "0.0 7.0 0.0;\n0.0 1.0 -5.0;\n0.0 0.0 6.0")

        self.assertEqual(self.run_main("examples", "nope")[0], EXIT_USAGE)


if __name__ == "__main__":
    unittest.main()
