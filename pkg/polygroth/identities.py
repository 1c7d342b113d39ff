"""
Seeded operator-identity suite and exhaustive sweeps of the step lemma and
the pi_t compatibility of the tableau sums.
"""

import logging
import random
from typing import Callable, Dict, Iterator, List, Tuple

import pandas as pd

from .exceptions import InvariantViolation
from .grothendieck import check_lemma_key, check_prop_main
from .permcomb import Permutation, admissible_rows, avoiding_321, lemtabkey_step
from .polyring import FlatMonomial, Polynomial, divided_difference, swap_adjacent

_logger = logging.getLogger(__name__)

SUITE_COLUMNS = ["identity", "checked", "failed"]


def random_polynomial(
    rng: random.Random,
    n: int,
    max_degree: int = 4,
    max_terms: int = 6,
    max_coeff: int = 5,
) -> Polynomial:
    """
    Draw a polynomial with at most max_terms terms of total degree <= max_degree
    (beta counted as a variable).

    Args:
        rng: Random source
        n: Ring size
        max_degree: Largest total degree of a term
        max_terms: Largest number of drawn terms
        max_coeff: Largest absolute value of a coefficient

    Returns:
        Random polynomial (possibly zero after cancellation)
    """
    terms: Dict[FlatMonomial, int] = {}
    width = 2 * n + 1
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * width
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(width)] += 1
        coeff = rng.choice([c for c in range(-max_coeff, max_coeff + 1) if c])
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return Polynomial.from_flat_terms(n, terms)


def _x(p: Polynomial, i: int) -> Polynomial:
    return Polynomial.x(p.n, i)


def check_exactness(p: Polynomial, i: int) -> bool:
    """(x_i - x_{i+1}) pi_i(p) == (1 + B x_{i+1}) p - (1 + B x_i) s_i(p)."""
    beta = Polynomial.beta(p.n)
    lhs = (_x(p, i) - _x(p, i + 1)) * divided_difference(p, i)
    rhs = (1 + beta * _x(p, i + 1)) * p - (1 + beta * _x(p, i)) * swap_adjacent(p, i)
    return lhs == rhs


def check_leibniz(f: Polynomial, g: Polynomial, i: int) -> bool:
    """pi_i(fg) == pi_i(f) g + s_i(f) pi_i(g) + B s_i(f) g."""
    sf = swap_adjacent(f, i)
    expected = (
        divided_difference(f, i) * g
        + sf * divided_difference(g, i)
        + Polynomial.beta(f.n) * sf * g
    )
    return divided_difference(f * g, i) == expected


def check_symmetric_rules(f: Polynomial, g: Polynomial, i: int) -> bool:
    """For s_i-symmetric f: pi_i(f) == -B f and pi_i(fg) == f pi_i(g)."""
    if swap_adjacent(f, i) != f:
        raise ValueError("f must be symmetric in x_i and x_{i+1}")
    beta = Polynomial.beta(f.n)
    return divided_difference(f, i) == -beta * f and divided_difference(
        f * g, i
    ) == f * divided_difference(g, i)


def monomial_formula(f: Polynomial, i: int, k: int) -> Polynomial:
    """Closed form of pi_i(x_i^k f) for s_i-symmetric f."""
    n = f.n
    beta = Polynomial.beta(n)
    if k == 0:
        return -beta * f
    xi, xj = Polynomial.x(n, i), Polynomial.x(n, i + 1)
    plain = Polynomial.zero(n)
    for s in range(k):
        plain = plain + xi**s * xj ** (k - 1 - s)
    shifted = Polynomial.zero(n)
    for s in range(1, k):
        shifted = shifted + xi**s * xj ** (k - s)
    return (plain + beta * shifted) * f


def check_monomial_formula(f: Polynomial, i: int, k: int) -> bool:
    return divided_difference(_x(f, i) ** k * f, i) == monomial_formula(f, i, k)


def check_idempotent(p: Polynomial, i: int) -> bool:
    """pi_i pi_i == -B pi_i."""
    once = divided_difference(p, i)
    return divided_difference(once, i) == -Polynomial.beta(p.n) * once


def check_commuting(p: Polynomial, i: int, j: int) -> bool:
    """pi_i pi_j == pi_j pi_i for |i - j| >= 2."""
    return divided_difference(divided_difference(p, j), i) == divided_difference(
        divided_difference(p, i), j
    )


def check_braid(p: Polynomial, i: int) -> bool:
    """pi_i pi_{i+1} pi_i == pi_{i+1} pi_i pi_{i+1}."""

    def apply(word: Tuple[int, ...]) -> Polynomial:
        result = p
        for index in reversed(word):
            result = divided_difference(result, index)
        return result

    return apply((i, i + 1, i)) == apply((i + 1, i, i + 1))


def check_canonical(p: Polynomial) -> bool:
    total = p + (-p)
    return total.is_zero() and total.terms() == []


def _operator_trials(seed: int, trials: int, n: int) -> Iterator[Tuple[str, bool]]:
    rng = random.Random(seed)
    for _ in range(trials):
        i = rng.randint(1, n - 1)
        f = random_polynomial(rng, n)
        g = random_polynomial(rng, n)
        symmetric = f + swap_adjacent(f, i)
        yield "exactness", check_exactness(f, i)
        yield "leibniz", check_leibniz(f, g, i)
        yield "symmetric_rules", check_symmetric_rules(symmetric, g, i)
        for k in range(6):
            yield f"monomial_k{k}", check_monomial_formula(symmetric, i, k)
        yield "idempotent", check_idempotent(f, i)
        yield "canonical", check_canonical(f)
        if n >= 3:
            yield "braid", check_braid(f, rng.randint(1, n - 2))
        if n >= 4:
            a = rng.randint(1, n - 3)
            yield "commuting", check_commuting(f, a, rng.randint(a + 2, n - 1))


def _lemma_key_trials(seed: int, random_sequences: int) -> Iterator[Tuple[str, bool]]:
    rng = random.Random(seed + 1)
    for k in range(1, 6):
        yield "lemma_key_consecutive", check_lemma_key(1, range(1, k + 1))
        for _ in range(random_sequences):
            ell = [rng.randint(1, 6) for _ in range(k)]
            yield "lemma_key_random", check_lemma_key(rng.randint(1, 3), ell)


def _admissible_pairs(max_n: int) -> Iterator[Tuple[Permutation, int]]:
    for n in range(2, max_n + 1):
        for w in avoiding_321(n):
            for i in admissible_rows(w):
                yield w, i


def _step_sweep(max_n: int) -> Iterator[Tuple[str, bool]]:
    for w, i in _admissible_pairs(max_n):
        try:
            lemtabkey_step(w, i)
            ok = True
        except InvariantViolation as exc:
            _logger.warning("step lemma fails: %s", exc)
            ok = False
        yield "step_lemma", ok
        yield "pi_t_compatibility", check_prop_main(w, i)


def _tally(results: Iterator[Tuple[str, bool]]) -> List[List]:
    counts: Dict[str, List[int]] = {}
    for name, ok in results:
        entry = counts.setdefault(name, [0, 0])
        entry[0] += 1
        if not ok:
            entry[1] += 1
    return [[name, checked, failed] for name, (checked, failed) in counts.items()]


def run_identity_suite(
    seed: int = 0,
    trials: int = 100,
    n: int = 4,
    max_n: int = 5,
    random_sequences: int = 5,
) -> pd.DataFrame:
    """
    Run every operator identity on seeded random polynomials plus the
    exhaustive sweeps.

    Args:
        seed: Seed of the random polynomials
        trials: Random inputs per operator identity
        n: Ring size of the random polynomials
        max_n: Largest n for the step lemma and pi_t compatibility sweeps
        random_sequences: Random b-index sequences per length for the product formula

    Returns:
        DataFrame with columns identity, checked, failed
    """
    sections: List[Callable[[], Iterator[Tuple[str, bool]]]] = [
        lambda: _operator_trials(seed, trials, n),
        lambda: _lemma_key_trials(seed, random_sequences),
        lambda: _step_sweep(max_n),
    ]
    rows: List[List] = []
    for section in sections:
        rows.extend(_tally(section()))
    frame = pd.DataFrame(rows, columns=SUITE_COLUMNS)
    for row in frame.itertuples(index=False):
        _logger.info("%s: %d checked, %d failed", row.identity, row.checked, row.failed)
    return frame
