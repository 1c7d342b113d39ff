"""
Tests for configuration and environment lookups.
"""

import logging
import os
import sys
import unittest
from unittest import mock

from pydantic import ValidationError

# Add the parent directory to the path so we can import the package during testing
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from polygroth.config import CliConfig, default_log_level, default_workers
from polygroth.permcomb import Permutation


class TestEnvironment(unittest.TestCase):
    """Test POLYGROTH_WORKERS and POLYGROTH_LOG_LEVEL."""

    def test_default_workers(self):
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(default_workers(), 1)
        with mock.patch.dict(os.environ, {"POLYGROTH_WORKERS": "4"}):
            self.assertEqual(default_workers(), 4)

    def test_bad_workers_fall_back(self):
        for raw in ("many", "0", "-2"):
            with mock.patch.dict(os.environ, {"POLYGROTH_WORKERS": raw}):
                with self.assertLogs("polygroth.config", level="WARNING"):
                    self.assertEqual(default_workers(), 1)

    def test_log_level(self):
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(default_log_level(0), logging.WARNING)
            self.assertEqual(default_log_level(1), logging.INFO)
            self.assertEqual(default_log_level(2), logging.DEBUG)
        with mock.patch.dict(os.environ, {"POLYGROTH_LOG_LEVEL": "debug"}):
            self.assertEqual(default_log_level(0), logging.DEBUG)
            self.assertEqual(default_log_level(1), logging.INFO)
        with mock.patch.dict(os.environ, {"POLYGROTH_LOG_LEVEL": "chatty"}):
            self.assertEqual(default_log_level(0), logging.WARNING)


class TestCliConfig(unittest.TestCase):
    """Test the validated option model."""

    def test_defaults(self):
        with mock.patch.dict(os.environ, {}, clear=True):
            config = CliConfig(command="verify", n=3)
        self.assertEqual(config.method, "divided")
        self.assertEqual(config.format, "text")
        self.assertEqual(config.parallel, 1)
        self.assertEqual(config.seed, 0)
        self.assertEqual(config.trials, 100)
        self.assertEqual(config.max_n, 5)
        self.assertFalse(config.include_polynomial)

    def test_required_inputs(self):
        with self.assertRaises(ValidationError):
            CliConfig(command="compute")
        with self.assertRaises(ValidationError):
            CliConfig(command="tableaux")
        with self.assertRaises(ValidationError):
            CliConfig(command="verify")
        CliConfig(command="identities")

    def test_ranges(self):
        with self.assertRaises(ValidationError):
            CliConfig(command="verify", n=0)
        with self.assertRaises(ValidationError):
            CliConfig(command="identities", parallel=0)
        with self.assertRaises(ValidationError):
            CliConfig(command="identities", trials=0)
        with self.assertRaises(ValidationError):
            CliConfig(command="compute", perm="2,1", method="schubert")

    def test_permutation(self):
        config = CliConfig(command="compute", perm="2,1")
        self.assertEqual(config.permutation(), Permutation((2, 1)))
        config = CliConfig(command="compute", perm="2,1", n=4)
        self.assertEqual(config.permutation(), Permutation((2, 1, 3, 4)))


if __name__ == "__main__":
    unittest.main()
