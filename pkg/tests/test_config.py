"""
Tests for the configuration layer and the tolerance policy.
"""
import io
import json
import logging
import os
import tempfile
import unittest
from unittest.mock import patch

import config
from check_dependencies import check_dependency
from create_config import create_config_file
from models.tolerances import Tolerances
from utils.errors import ConfigError
from utils.logger import setup_logger


class TestConfig(unittest.TestCase):
    """Test cases for config.py."""

    def setUp(self):
        """Set up test fixtures."""
        config.reset_config()
        self.addCleanup(config.reset_config)

    def test_defaults(self):
        """The defaults describe the rank-2 4 x 4 campaign and text output."""
        cfg = config.get_config()
        self.assertEqual(cfg["campaign"]["rank"], 2)
        self.assertEqual(cfg["output"]["format"], "text")
        self.assertEqual(cfg["tolerances"]["real"], 1e-8)

    def test_update_merges_sections(self):
        """Nested sections are merged key by key."""
        config.update_config({"tolerances": {"real": 1e-6}})
        cfg = config.get_config()
        self.assertEqual(cfg["tolerances"]["real"], 1e-6)
        self.assertEqual(cfg["tolerances"]["zero"], 1e-10)
        self.assertEqual(config.DEFAULT_CONFIG["tolerances"]["real"], 1e-8)

    def test_unknown_keys(self):
        """Unknown keys and scalars in place of sections are rejected."""
        with self.assertRaises(ConfigError):
            config.update_config({"tolerance": {"real": 1e-6}})
        with self.assertRaises(ConfigError):
            config.update_config({"campaign": 5})

    def test_reset(self):
        config.update_config({"campaign": {"trials": 3}})
        config.reset_config()
        self.assertEqual(config.get_config()["campaign"]["trials"], 10000)

    def test_load_config_file(self):
        """JSON files are merged; unreadable or invalid files raise ConfigError."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "config.json")
            with open(path, "w") as f:
                json.dump({"campaign": {"n": 5, "rank": 3}}, f)
            config.load_config_file(path)
            self.assertEqual(config.get_config()["campaign"]["n"], 5)

            with open(path, "w") as f:
                f.write("{not json")
            with self.assertRaises(ConfigError):
                config.load_config_file(path)

            with open(path, "w") as f:
                f.write("[1, 2]")
            with self.assertRaises(ConfigError):
                config.load_config_file(path)

            with self.assertRaises(ConfigError):
                config.load_config_file(os.path.join(tmp, "absent.json"))

    def test_created_file_loads_back(self):
        """create_config writes the defaults in a form load_config_file accepts."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "config.json")
            with patch("sys.stdout", new_callable=io.StringIO):
                create_config_file(path)
            config.update_config({"campaign": {"trials": 3}})
            config.load_config_file(path)
            self.assertEqual(config.get_config(), config.DEFAULT_CONFIG)

    def test_check_dependency(self):
        with patch("sys.stdout", new_callable=io.StringIO) as stdout:
            self.assertTrue(check_dependency("numpy", "NumPy"))
            self.assertFalse(check_dependency("no_such_package_uecsm"))
        self.assertIn("NumPy is installed", stdout.getvalue())


class TestTolerances(unittest.TestCase):
    """Test cases for Tolerances."""

    def test_from_config_and_round_trip(self):
        """The configuration section builds equal tolerances."""
        tol = Tolerances.from_config(config.DEFAULT_CONFIG["tolerances"])
        self.assertEqual(tol, Tolerances())
        self.assertEqual(Tolerances.from_config(tol.to_dict()), tol)

    def test_invalid_values(self):
        """Unknown names and non-positive values are rejected."""
        with self.assertRaises(ConfigError):
            Tolerances.from_config({"realness": 1.0})
        with self.assertRaises(ConfigError):
            Tolerances(real=0.0)
        with self.assertRaises(ConfigError):
            Tolerances().replace(realness=1.0)

    def test_replace(self):
        """replace overrides given fields and ignores None."""
        tol = Tolerances().replace(real=1e-4, zero=None)
        self.assertEqual(tol.real, 1e-4)
        self.assertEqual(tol.zero, 1e-10)

    def test_borderline_band(self):
        """Statistics within a factor of ten of the threshold are borderline."""
        tol = Tolerances()
        self.assertTrue(tol.is_borderline(5e-9, 1e-8))
        self.assertTrue(tol.is_borderline(1e-7, 1e-8))
        self.assertFalse(tol.is_borderline(1e-15, 1e-8))
        self.assertFalse(tol.any_borderline([(1e-15, 1e-8), (0.3, 1e-8)]))


class TestLogger(unittest.TestCase):
    """Test cases for setup_logger."""

    def tearDown(self):
        """Clean up test fixtures."""
        logger = logging.getLogger("UECSM.TestLogger")
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()

    def test_repeated_setup_keeps_one_handler(self):
        setup_logger("UECSM.TestLogger", "DEBUG")
        logger = setup_logger("UECSM.TestLogger", "INFO")
        self.assertEqual(len(logger.handlers), 1)
        self.assertEqual(logger.level, logging.INFO)

    def test_log_file_is_dated(self):
        """The file handler writes next to the requested path with a date suffix."""
        with tempfile.TemporaryDirectory() as tmp:
            logger = setup_logger("UECSM.TestLogger", "INFO", log_file=os.path.join(tmp, "logs", "uecsm.log"))
            logger.info("hello")
            self.tearDown()
            files = os.listdir(os.path.join(tmp, "logs"))
            self.assertEqual(len(files), 1)
            self.assertTrue(files[0].startswith("uecsm_") and files[0].endswith(".log"))


if __name__ == "__main__":
    unittest.main()
