"""
Utility functions for verification tables.
"""

from typing import Dict, Tuple

import pandas as pd


def dataframe_to_json(df: pd.DataFrame, orient: str = "records") -> str:
    """
    Convert a DataFrame to JSON.

    Args:
        df: Input DataFrame
        orient: Orientation of the JSON output

    Returns:
        JSON string
    """
    return df.to_json(orient=orient)


def filter_failures(df: pd.DataFrame) -> pd.DataFrame:
    """
    Keep only the rows whose pipelines disagreed.

    Args:
        df: Verification table with an ``equal`` column

    Returns:
        Filtered DataFrame
    """
    if df.empty:
        return df
    return df[~df["equal"].astype(bool)]


def summarize(df: pd.DataFrame) -> Tuple[int, int]:
    """
    Count checked and failed permutations.

    Args:
        df: Verification table

    Returns:
        (checked, failed)
    """
    return len(df), len(filter_failures(df))


def get_length_distribution(df: pd.DataFrame) -> Dict[int, int]:
    """
    Number of verified permutations of each length.

    Args:
        df: Verification table with a ``length`` column

    Returns:
        Dictionary mapping length to count, sorted by length
    """
    if df.empty:
        return {}
    counts = df["length"].value_counts().sort_index()
    return {int(k): int(v) for k, v in counts.items()}
