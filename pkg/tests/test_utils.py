"""
Tests for the utility functions.
"""

import io
import os
import sys
import unittest

import pandas as pd

# Add the parent directory to the path so we can import the package during testing
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from polygroth.utils import (
    dataframe_to_json,
    filter_failures,
    get_length_distribution,
    summarize,
)


class TestUtils(unittest.TestCase):
    """Test utility functions."""

    def setUp(self):
        """Set up test data."""
        self.df = pd.DataFrame(
            {
                "perm": ["1,2,3", "1,3,2", "2,1,3", "2,3,1", "3,1,2"],
                "length": [0, 1, 1, 2, 2],
                "equal": [True, True, False, True, False],
                "tableaux": [1, 3, 1, 3, 1],
                "ms": [0, 1, 0, 2, 1],
            }
        )

    def test_dataframe_to_json(self):
        """Test converting DataFrame to JSON."""
        json_str = dataframe_to_json(self.df)
        self.assertIsInstance(json_str, str)
        df_from_json = pd.read_json(io.StringIO(json_str))
        self.assertEqual(df_from_json.shape, self.df.shape)

    def test_filter_failures(self):
        """Test keeping only mismatched permutations."""
        failures = filter_failures(self.df)
        self.assertEqual(failures["perm"].tolist(), ["2,1,3", "3,1,2"])
        self.assertTrue(filter_failures(self.df.iloc[0:0]).empty)

    def test_summarize(self):
        self.assertEqual(summarize(self.df), (5, 2))
        self.assertEqual(summarize(self.df[self.df["equal"]]), (3, 0))

    def test_get_length_distribution(self):
        """Test counting permutations per length."""
        self.assertEqual(get_length_distribution(self.df), {0: 1, 1: 2, 2: 2})
        self.assertEqual(get_length_distribution(self.df.iloc[0:0]), {})


if __name__ == "__main__":
    unittest.main()
