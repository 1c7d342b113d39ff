"""
Core module containing the main GrothendieckVerifier class.
"""

import logging
import math
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import pandas as pd
from tqdm import tqdm

from .config import default_workers
from .grothendieck import (
    VerificationReport,
    groth_by_induction,
    groth_divided,
    grassmannian_formula,
    tableau_formula,
    verify_many,
    verify_theorem,
)
from .permcomb import PermutationLike, as_permutation, avoiding_321, flag_sequences, length
from .polyring import Polynomial

_logger = logging.getLogger(__name__)

METHODS: Dict[str, Callable[[PermutationLike], Polynomial]] = {
    "divided": groth_divided,
    "tableau": tableau_formula,
    "grassmannian": grassmannian_formula,
    "induction": groth_by_induction,
}

FRAME_COLUMNS = ["perm", "length", "equal", "tableaux", "ms"]


def _partition(items: List[Tuple[int, ...]], parts: int) -> List[List[Tuple[int, ...]]]:
    size = max(1, math.ceil(len(items) / parts))
    return [items[start : start + size] for start in range(0, len(items), size)]


class GrothendieckVerifier:
    """
    Main class for computing double Grothendieck polynomials and verifying the
    tableau formula over permutations.
    """

    def __init__(
        self,
        workers: Optional[int] = None,
        include_polynomial: bool = False,
        progress: bool = False,
    ):
        """
        Initialize the verifier.

        Args:
            workers: Number of worker processes; defaults to POLYGROTH_WORKERS or 1
            include_polynomial: Whether JSON reports carry the polynomial
            progress: Whether to draw a progress bar on stderr
        """
        self.workers = default_workers() if workers is None else workers
        if self.workers < 1:
            raise ValueError(f"worker count must be at least 1, got {self.workers}")
        self.include_polynomial = include_polynomial
        self.progress = progress

    def compute(self, perm: PermutationLike, method: str = "divided") -> Polynomial:
        """
        Compute G_w with one of the pipelines.

        Args:
            perm: Permutation
            method: One of "divided", "tableau", "grassmannian", "induction"

        Returns:
            The polynomial
        """
        if method not in METHODS:
            raise ValueError(f"unknown method {method!r}")
        return METHODS[method](as_permutation(perm))

    def verify(self, perm: PermutationLike) -> VerificationReport:
        """
        Verify the tableau formula for a single permutation.

        Args:
            perm: 321-avoiding permutation

        Returns:
            VerificationReport
        """
        return verify_theorem(as_permutation(perm))

    def verify_batch(self, perms: Iterable[PermutationLike]) -> List[VerificationReport]:
        """
        Verify many permutations, split into contiguous index ranges across workers.

        Args:
            perms: 321-avoiding permutations

        Returns:
            Reports in input order, whatever the worker count
        """
        checked = [as_permutation(p) for p in perms]
        for w in checked:
            flag_sequences(w)
        if self.workers == 1 or len(checked) <= 1:
            return [
                verify_theorem(w)
                for w in tqdm(checked, disable=not self.progress, file=sys.stderr)
            ]

        chunks = _partition([w.one_line for w in checked], self.workers)
        _logger.info("verifying %d permutations in %d chunks", len(checked), len(chunks))
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            futures = [pool.submit(verify_many, chunk) for chunk in chunks]
            for _ in tqdm(
                as_completed(futures),
                total=len(futures),
                disable=not self.progress,
                file=sys.stderr,
            ):
                pass
            return [report for future in futures for report in future.result()]

    def sweep(self, n: int) -> List[VerificationReport]:
        """
        Verify every 321-avoiding permutation of S_n.

        Args:
            n: Size of the symmetric group

        Returns:
            Reports in lexicographic order of the permutations
        """
        if n < 1:
            raise ValueError(f"n must be at least 1, got {n}")
        return self.verify_batch(list(avoiding_321(n)))

    @staticmethod
    def to_frame(reports: List[VerificationReport]) -> pd.DataFrame:
        """
        Convert reports to a DataFrame.

        Args:
            reports: Verification reports

        Returns:
            DataFrame with columns perm, length, equal, tableaux, ms
        """
        rows = [
            {
                "perm": str(report.permutation),
                "length": length(report.permutation),
                "equal": report.equal,
                "tableaux": report.tableau_count,
                "ms": report.ms,
            }
            for report in reports
        ]
        return pd.DataFrame(rows, columns=FRAME_COLUMNS)
