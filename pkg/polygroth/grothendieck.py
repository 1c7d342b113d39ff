"""
Double Grothendieck polynomials computed by divided differences and by
set-valued tableau formulas, together with checkers for the identities that
connect them.
"""

import logging
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

from .exceptions import NotApplicableError
from .permcomb import (
    Permutation,
    PermutationLike,
    admissible_rows,
    as_permutation,
    ascent_path_to_longest,
    flag_sequences,
    grassmannian_data,
    induction_chain,
    right_multiply,
    skew_shape,
)
from .polyring import (
    Polynomial,
    divided_difference,
    oplus_xb,
    product,
    sum_polynomials,
    swap_adjacent,
)
from .tableaux import (
    enumerate_svt,
    grassmannian_b_index,
    tableau_weight,
)

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of comparing the divided-difference and tableau pipelines for one permutation."""

    permutation: Permutation
    lhs: Polynomial
    rhs: Polynomial
    equal: bool
    tableau_count: int
    elapsed: float

    @property
    def ms(self) -> int:
        return int(round(self.elapsed * 1000))

    def to_json_dict(self, include_polynomial: bool = False) -> dict:
        data = {
            "perm": list(self.permutation.one_line),
            "equal": self.equal,
            "tableaux": self.tableau_count,
            "ms": self.ms,
        }
        if include_polynomial:
            data["polynomial"] = self.rhs.to_json_dict()
        return data

    def to_json(self, include_polynomial: bool = False) -> str:
        from .schemas import ReportModel

        model = ReportModel.model_validate(self.to_json_dict(include_polynomial))
        return model.model_dump_json(exclude_none=True)

    def to_text(self) -> str:
        return (
            f"{self.permutation} equal={str(self.equal).lower()} "
            f"tableaux={self.tableau_count}"
        )


@lru_cache(maxsize=None)
def groth_longest(n: int) -> Polynomial:
    """
    G_{w0} = prod_{i+j<=n} (x_i (+) b_j).

    Args:
        n: Size of the symmetric group

    Returns:
        The double Grothendieck polynomial of the longest element of S_n
    """
    return product(
        n, (oplus_xb(n, i, j) for i in range(1, n) for j in range(1, n + 1 - i))
    )


@lru_cache(maxsize=None)
def _groth_smallest_ascent(one_line: Tuple[int, ...]) -> Polynomial:
    w = Permutation(one_line)
    ascent = next((i for i in range(1, w.n) if w(i) < w(i + 1)), None)
    if ascent is None:
        return groth_longest(w.n)
    _logger.debug("G_%s = pi_%d G_%s", w, ascent, right_multiply(w, ascent))
    return divided_difference(
        _groth_smallest_ascent(right_multiply(w, ascent).one_line), ascent
    )


def groth_divided(w: PermutationLike, rule: str = "smallest") -> Polynomial:
    """
    G_w by applying pi operators to G_{w0} along an ascent path.

    Args:
        w: Any permutation
        rule: Ascent tie-break, "smallest" (memoized) or "largest"

    Returns:
        The double Grothendieck polynomial G_w
    """
    w = as_permutation(w)
    if rule == "smallest":
        return _groth_smallest_ascent(w.one_line)
    path = ascent_path_to_longest(w, rule)
    result = groth_longest(w.n)
    for i in reversed(path):
        result = divided_difference(result, i)
    return result


def _weighted_sum(shapes_and_tableaux: Iterator, n: int, **weight_options) -> Tuple[Polynomial, int]:
    count = 0

    def weights():
        nonlocal count
        for shape, tableau in shapes_and_tableaux:
            count += 1
            yield tableau_weight(shape, tableau, n, validate=False, **weight_options)

    total = sum_polynomials(n, weights())
    return total, count


def _flagged_sum(w: Permutation, set_valued: bool = True, **weight_options) -> Tuple[Polynomial, int]:
    if w.is_identity():
        return Polynomial.one(w.n), 1
    shape = skew_shape(w)
    total, count = _weighted_sum(
        ((shape, t) for t in enumerate_svt(shape, set_valued)),
        w.n,
        b_bound=w.n - 1,
        **weight_options,
    )
    _logger.debug("%s: %d tableaux of shape %s/%s", w, count, shape.lam, shape.mu)
    return total, count


def tableau_formula_counted(w: PermutationLike) -> Tuple[Polynomial, int]:
    """
    The tableau sum T_w together with |SVT(sigma(w), f(w))|.

    Args:
        w: 321-avoiding permutation

    Returns:
        (T_w, number of tableaux)
    """
    w = as_permutation(w)
    flag_sequences(w)
    return _flagged_sum(w)


def tableau_formula(w: PermutationLike) -> Polynomial:
    """
    T_w = sum over SVT(sigma(w), f(w)) of beta^{|T|-|sigma(w)|} prod_e
    (x_{val(e)} (+) b_{lam_{r(e)} + f_{r(e)} - c(e) - val(e) + 1}).

    Args:
        w: 321-avoiding permutation

    Returns:
        T_w (1 for the identity)
    """
    return tableau_formula_counted(w)[0]


def grassmannian_formula(w: PermutationLike) -> Polynomial:
    """
    G_w for Grassmannian w as a sum over SVT(bar_lambda(w), (d, ..., d)) with
    weights x_{val(e)} (+) b_{val(e) + c(e) - r(e)}.

    Args:
        w: Grassmannian, nonidentity permutation

    Returns:
        The Grassmannian tableau sum
    """
    w = as_permutation(w)
    data = grassmannian_data(w)
    if data is None:
        raise NotApplicableError(f"{w} is not a nonidentity Grassmannian permutation")
    shape = data.shape
    total, _ = _weighted_sum(
        ((shape, t) for t in enumerate_svt(shape)),
        w.n,
        b_index=grassmannian_b_index,
        b_bound=w.n - 1,
    )
    return total


def groth_by_induction(v: PermutationLike) -> Polynomial:
    """
    G_v obtained from the Grassmannian minimum of C_{h(v)} by the pi_t steps of
    its induction chain.

    Args:
        v: 321-avoiding permutation

    Returns:
        G_v
    """
    v = as_permutation(v)
    flag_sequences(v)
    if v.is_identity():
        return Polynomial.one(v.n)
    chain = induction_chain(v)
    start = chain[0][0] if chain else v
    result = grassmannian_formula(start)
    for _, t in chain:
        result = divided_difference(result, t)
    return result


def schubert_specialization(w: PermutationLike) -> Polynomial:
    """
    Double Schubert polynomial: sum over semistandard tableaux of
    prod_e (x_{val(e)} + b_{lam_{r(e)} + f_{r(e)} - c(e) - val(e) + 1}).

    Args:
        w: 321-avoiding permutation

    Returns:
        The beta = 0 tableau sum
    """
    w = as_permutation(w)
    flag_sequences(w)
    return _flagged_sum(w, set_valued=False, combine="sum")[0]


def single_specialization(w: PermutationLike) -> Polynomial:
    """
    Single Grothendieck polynomial: sum over SVT(sigma(w), f(w)) of
    beta^{|T|-|sigma(w)|} prod_e x_{val(e)}.

    Args:
        w: 321-avoiding permutation

    Returns:
        The b = 0 tableau sum
    """
    w = as_permutation(w)
    flag_sequences(w)
    return _flagged_sum(w, combine="x")[0]


def lemma_key_rhs(i: int, ell: Sequence[int], n: int) -> Polynomial:
    """
    Right hand side of the pi_i formula for prod_v (x_i (+) b_{ell_v}).

    Args:
        i: Operator index
        ell: Nonempty sequence of b-indices
        n: Ring size

    Returns:
        sum_j prod_{v<j} (x_i (+) b) prod_{v>j} (x_{i+1} (+) b)
        + beta sum_{j<k} prod_{v<=j} (x_i (+) b) prod_{v>j} (x_{i+1} (+) b)
    """
    k = len(ell)
    low = [oplus_xb(n, i, l) for l in ell]
    high = [oplus_xb(n, i + 1, l) for l in ell]
    first = sum_polynomials(
        n, (product(n, low[: j - 1] + high[j:]) for j in range(1, k + 1))
    )
    second = sum_polynomials(
        n, (product(n, low[:j] + high[j:]) for j in range(1, k))
    )
    return first + Polynomial.beta(n) * second


def check_lemma_key(i: int, ell: Sequence[int], n: int = 0) -> bool:
    """
    Check pi_i(prod_v (x_i (+) b_{ell_v})) against its closed form and the
    x_i <-> x_{i+1} symmetry of that closed form.

    Args:
        i: Operator index
        ell: Nonempty sequence of positive integers
        n: Ring size; defaults to the smallest ring holding every variable

    Returns:
        True if both checks pass
    """
    ell = tuple(ell)
    if not ell:
        raise NotApplicableError("the b-index sequence must be nonempty")
    ring = n or max(i + 1, max(ell))
    lhs = divided_difference(product(ring, (oplus_xb(ring, i, l) for l in ell)), i)
    rhs = lemma_key_rhs(i, ell, ring)
    return lhs == rhs and swap_adjacent(rhs, i) == rhs


def check_prop_main(w: PermutationLike, i: int) -> bool:
    """
    Check pi_t T_w = T_{w s_t} for t = f_i.

    Args:
        w: 321-avoiding permutation
        i: Row satisfying the step hypotheses

    Returns:
        True if the identity holds
    """
    w = as_permutation(w)
    if i not in admissible_rows(w):
        raise NotApplicableError(f"row {i} does not satisfy the step hypotheses for {w}")
    t = flag_sequences(w).f[i - 1]
    return divided_difference(tableau_formula(w), t) == tableau_formula(right_multiply(w, t))


def verify_theorem(w: PermutationLike) -> VerificationReport:
    """
    Compare groth_divided(w) with tableau_formula(w).

    Args:
        w: 321-avoiding permutation

    Returns:
        VerificationReport for w
    """
    w = as_permutation(w)
    flag_sequences(w)
    start = time.perf_counter()
    lhs = groth_divided(w)
    rhs, count = tableau_formula_counted(w)
    elapsed = time.perf_counter() - start
    equal = lhs == rhs
    if not equal:
        _logger.warning("tableau formula disagrees with divided differences for %s", w)
    _logger.info("%s verified in %.3fs (%d tableaux)", w, elapsed, count)
    return VerificationReport(w, lhs, rhs, equal, count, elapsed)


def verify_many(perms: List[Tuple[int, ...]]) -> List[VerificationReport]:
    """Verify a list of one-line tuples in order (a unit of work for one worker)."""
    return [verify_theorem(Permutation(p)) for p in perms]
