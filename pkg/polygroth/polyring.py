"""
Exact arithmetic in Z[beta][x, b] with the s_i action and the K-theoretic
divided difference operators pi_i.

Polynomials wrap a sparse sympy ``PolyRing`` element over ``ZZ`` whose
generators are ``B, x1..xn, b1..bn``. Exponent tuples are therefore flat:
position 0 holds the exponent of beta, positions 1..n the x exponents and
positions n+1..2n the b exponents.
"""

import logging
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing

from .exceptions import IndexRangeError, RingSizeMismatchError

_logger = logging.getLogger(__name__)

FlatMonomial = Tuple[int, ...]


class Monomial(NamedTuple):
    """Exponent data of one term: beta^beta_exp * x^x_exps * b^b_exps."""

    beta_exp: int
    x_exps: Tuple[int, ...]
    b_exps: Tuple[int, ...]

    @classmethod
    def from_flat(cls, flat: FlatMonomial, n: int) -> "Monomial":
        return cls(flat[0], tuple(flat[1 : n + 1]), tuple(flat[n + 1 :]))

    def flat(self) -> FlatMonomial:
        return (self.beta_exp,) + tuple(self.x_exps) + tuple(self.b_exps)


@lru_cache(maxsize=None)
def get_ring(n: int) -> PolyRing:
    """
    Get the sympy ring Z[B, x1..xn, b1..bn].

    Args:
        n: Ring size (number of x and of b variables)

    Returns:
        Cached sympy PolyRing
    """
    if n < 1:
        raise IndexRangeError(f"ring size must be at least 1, got {n}")
    names = ["B"] + [f"x{i}" for i in range(1, n + 1)] + [f"b{j}" for j in range(1, n + 1)]
    return PolyRing(",".join(names), ZZ, lex)


def _canonical_key(flat: FlatMonomial) -> Tuple[int, ...]:
    # beta ascending, then x1 > x2 > ... > b1 > ... highest first
    return (flat[0],) + tuple(-e for e in flat[1:])


class Polynomial:
    """
    Immutable exact polynomial in beta, x_1..x_n, b_1..b_n with integer coefficients.
    """

    __slots__ = ("_n", "_rep")

    def __init__(self, n: int, rep=None):
        """
        Wrap a sympy ring element.

        Args:
            n: Ring size
            rep: Optional element of ``get_ring(n)``; zero when omitted
        """
        ring = get_ring(n)
        self._n = n
        self._rep = ring.zero if rep is None else rep

    # -- construction -------------------------------------------------------

    @classmethod
    def from_flat_terms(cls, n: int, terms: Dict[FlatMonomial, int]) -> "Polynomial":
        """Build from a dict of flat exponent tuples; zero coefficients are dropped."""
        return cls(n, get_ring(n).from_dict({m: int(c) for m, c in terms.items() if c}))

    @classmethod
    def from_terms(
        cls, n: int, terms: Iterable[Tuple[Monomial, int]]
    ) -> "Polynomial":
        """
        Build a polynomial from (Monomial, coefficient) pairs.

        Args:
            n: Ring size
            terms: Pairs of monomial and integer coefficient; repeated monomials add up

        Returns:
            Polynomial in canonical form
        """
        acc: Dict[FlatMonomial, int] = {}
        width = 2 * n + 1
        for monomial, coeff in terms:
            flat = monomial.flat()
            if len(flat) != width:
                raise RingSizeMismatchError(
                    f"monomial {monomial} does not fit ring size {n}"
                )
            acc[flat] = acc.get(flat, 0) + int(coeff)
        return cls.from_flat_terms(n, acc)

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls.constant(n, 1)

    @classmethod
    def constant(cls, n: int, value: int) -> "Polynomial":
        return cls(n, get_ring(n).ground_new(int(value)))

    @classmethod
    def beta(cls, n: int) -> "Polynomial":
        return cls(n, get_ring(n).gens[0])

    @classmethod
    def x(cls, n: int, i: int) -> "Polynomial":
        """The variable x_i of the ring of size n."""
        if not 1 <= i <= n:
            raise IndexRangeError(f"x_{i} is not a variable of the ring of size {n}")
        return cls(n, get_ring(n).gens[i])

    @classmethod
    def b(cls, n: int, j: int) -> "Polynomial":
        """The variable b_j of the ring of size n."""
        if not 1 <= j <= n:
            raise IndexRangeError(f"b_{j} is not a variable of the ring of size {n}")
        return cls(n, get_ring(n).gens[n + j])

    # -- inspection ---------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def ring_size(self) -> int:
        return self._n

    def flat_items(self) -> Iterator[Tuple[FlatMonomial, int]]:
        """Unordered (flat exponent tuple, int coefficient) pairs."""
        for monom, coeff in self._rep.items():
            yield monom, int(coeff)

    def terms(self) -> List[Tuple[Monomial, int]]:
        """
        Terms in canonical order.

        Returns:
            List of (Monomial, coefficient) pairs
        """
        ordered = sorted(self.flat_items(), key=lambda item: _canonical_key(item[0]))
        return [(Monomial.from_flat(m, self._n), c) for m, c in ordered]

    def coefficient(self, monomial: Monomial) -> int:
        return int(self._rep.get(monomial.flat(), 0))

    def is_zero(self) -> bool:
        return not self._rep

    def as_expr(self):
        """The polynomial as a sympy expression in symbols B, x1.., b1.."""
        return self._rep.as_expr()

    def __len__(self) -> int:
        return len(self._rep)

    def __bool__(self) -> bool:
        return bool(self._rep)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other._n != self._n:
                raise RingSizeMismatchError(
                    f"ring sizes differ: {self._n} and {other._n}"
                )
            return other
        if isinstance(other, int):
            return Polynomial.constant(self._n, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        return Polynomial(self._n, self._rep + self._coerce(other)._rep)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        return Polynomial(self._n, self._rep - self._coerce(other)._rep)

    def __rsub__(self, other) -> "Polynomial":
        return Polynomial(self._n, self._coerce(other)._rep - self._rep)

    def __mul__(self, other) -> "Polynomial":
        return Polynomial(self._n, self._rep * self._coerce(other)._rep)

    __rmul__ = __mul__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self._n, -self._rep)

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        return Polynomial(self._n, self._rep**exponent)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(self._n, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._n == other._n and dict(self.flat_items()) == dict(other.flat_items())

    def __hash__(self) -> int:
        return hash((self._n, frozenset(self.flat_items())))

    def __reduce__(self):
        return (Polynomial.from_flat_terms, (self._n, dict(self.flat_items())))

    def __repr__(self) -> str:
        return f"Polynomial(n={self._n}, {self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # -- rendering ----------------------------------------------------------

    def to_text(self) -> str:
        """Plain-text rendering, e.g. ``x1 + b1 + B*x1*b1``."""
        return _render(self, _text_factors, "*")

    def to_latex(self) -> str:
        """LaTeX rendering with ``\\beta``, ``x_{i}`` and ``b_{j}``."""
        return _render(self, _latex_factors, " ")

    def to_json_dict(self) -> dict:
        """Plain dict following the polynomial JSON schema."""
        return {
            "n": self._n,
            "terms": [
                {
                    "coeff": str(coeff),
                    "beta": monomial.beta_exp,
                    "x": list(monomial.x_exps),
                    "b": list(monomial.b_exps),
                }
                for monomial, coeff in self.terms()
            ],
        }

    def to_json(self) -> str:
        from .schemas import PolynomialModel

        return PolynomialModel.model_validate(self.to_json_dict()).model_dump_json()

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        from .schemas import PolynomialModel

        model = PolynomialModel.model_validate_json(text)
        return model.to_polynomial()


def _text_factors(monomial: Monomial) -> List[str]:
    factors = []
    if monomial.beta_exp:
        factors.append("B" if monomial.beta_exp == 1 else f"B^{monomial.beta_exp}")
    for name, exps in (("x", monomial.x_exps), ("b", monomial.b_exps)):
        for index, e in enumerate(exps, start=1):
            if e:
                factors.append(f"{name}{index}" if e == 1 else f"{name}{index}^{e}")
    return factors


def _latex_factors(monomial: Monomial) -> List[str]:
    factors = []
    if monomial.beta_exp:
        factors.append(
            "\\beta" if monomial.beta_exp == 1 else f"\\beta^{{{monomial.beta_exp}}}"
        )
    for name, exps in (("x", monomial.x_exps), ("b", monomial.b_exps)):
        for index, e in enumerate(exps, start=1):
            if e:
                base = f"{name}_{{{index}}}"
                factors.append(base if e == 1 else f"{base}^{{{e}}}")
    return factors


def _render(p: Polynomial, factorize, joiner: str) -> str:
    pieces: List[str] = []
    for monomial, coeff in p.terms():
        factors = factorize(monomial)
        magnitude = abs(coeff)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = joiner.join(factors)
        else:
            body = joiner.join([str(magnitude)] + factors)
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces) if pieces else "0"


# -- operations --------------------------------------------------------------


def arith(p: Polynomial, q: Polynomial, kind: str) -> Polynomial:
    """
    Exact add, sub or mul of two polynomials over the same ring.

    Args:
        p: Left operand
        q: Right operand
        kind: One of "add", "sub", "mul"

    Returns:
        Result in canonical form
    """
    if p.n != q.n:
        raise RingSizeMismatchError(f"ring sizes differ: {p.n} and {q.n}")
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def oplus(p: Polynomial, q: Polynomial) -> Polynomial:
    """
    Formal group sum p + q + beta*p*q.

    Args:
        p: First summand
        q: Second summand

    Returns:
        p (+) q
    """
    if p.n != q.n:
        raise RingSizeMismatchError(f"ring sizes differ: {p.n} and {q.n}")
    return p + q + Polynomial.beta(p.n) * p * q


@lru_cache(maxsize=4096)
def oplus_xb(n: int, i: int, j: int) -> Polynomial:
    """The factor x_i (+) b_j in the ring of size n."""
    return oplus(Polynomial.x(n, i), Polynomial.b(n, j))


def _check_transposition(n: int, i: int) -> None:
    if not 1 <= i <= n - 1:
        raise IndexRangeError(f"s_{i} is not defined for ring size {n}")


def swap_adjacent(p: Polynomial, i: int) -> Polynomial:
    """
    Apply s_i: exchange x_i and x_{i+1}, leaving beta and b untouched.

    Args:
        p: Input polynomial
        i: Index with 1 <= i < n

    Returns:
        s_i(p)
    """
    _check_transposition(p.n, i)
    swapped: Dict[FlatMonomial, int] = {}
    for monom, coeff in p.flat_items():
        m = list(monom)
        m[i], m[i + 1] = m[i + 1], m[i]
        swapped[tuple(m)] = coeff
    return Polynomial.from_flat_terms(p.n, swapped)


def _accumulate_partial(
    acc: Dict[FlatMonomial, int], monom: FlatMonomial, coeff: int, i: int
) -> None:
    # classical divided difference of x_i^a x_{i+1}^c times the rest
    a, c = monom[i], monom[i + 1]
    if a == c:
        return
    if a > c:
        low, gap, sign = c, a - c, 1
    else:
        low, gap, sign = a, c - a, -1
    m = list(monom)
    for s in range(gap):
        m[i] = low + s
        m[i + 1] = low + gap - 1 - s
        key = tuple(m)
        acc[key] = acc.get(key, 0) + sign * coeff


def divided_difference(p: Polynomial, i: int) -> Polynomial:
    """
    K-theoretic divided difference
    pi_i(f) = ((1 + beta x_{i+1}) f - (1 + beta x_i) s_i f) / (x_i - x_{i+1}).

    Evaluated monomial-wise as the classical divided difference of
    (1 + beta x_{i+1}) f, so every step is exact.

    Args:
        p: Input polynomial
        i: Index with 1 <= i < n

    Returns:
        pi_i(p), symmetric in x_i and x_{i+1}
    """
    _check_transposition(p.n, i)
    acc: Dict[FlatMonomial, int] = {}
    for monom, coeff in p.flat_items():
        _accumulate_partial(acc, monom, coeff, i)
        lifted = list(monom)
        lifted[0] += 1
        lifted[i + 1] += 1
        _accumulate_partial(acc, tuple(lifted), coeff, i)
    return Polynomial.from_flat_terms(p.n, acc)


def specialize(
    p: Polynomial,
    beta_val: Optional[int] = None,
    kill_b: bool = False,
    kill_x: bool = False,
) -> Polynomial:
    """
    Substitute beta by an integer and/or set all b_j or all x_i to zero.

    Args:
        p: Input polynomial
        beta_val: Value for beta, or None to keep beta symbolic
        kill_b: Set every b_j to 0
        kill_x: Set every x_i to 0

    Returns:
        Specialized polynomial in canonical form
    """
    n = p.n
    acc: Dict[FlatMonomial, int] = {}
    for monom, coeff in p.flat_items():
        if kill_x and any(monom[1 : n + 1]):
            continue
        if kill_b and any(monom[n + 1 :]):
            continue
        if beta_val is not None:
            coeff *= beta_val ** monom[0]
            monom = (0,) + monom[1:]
        acc[monom] = acc.get(monom, 0) + coeff
    return Polynomial.from_flat_terms(n, acc)


def sum_polynomials(n: int, polys: Iterable[Polynomial]) -> Polynomial:
    """
    Sum many polynomials with a single accumulator.

    Args:
        n: Ring size shared by all summands
        polys: Summands

    Returns:
        Their sum (zero for an empty iterable)
    """
    acc: Dict[FlatMonomial, int] = {}
    for p in polys:
        if p.n != n:
            raise RingSizeMismatchError(f"ring sizes differ: {n} and {p.n}")
        for monom, coeff in p.flat_items():
            acc[monom] = acc.get(monom, 0) + coeff
    return Polynomial.from_flat_terms(n, acc)


def product(n: int, polys: Iterable[Polynomial]) -> Polynomial:
    """Product of polynomials of ring size n (1 for an empty iterable)."""
    result = Polynomial.one(n)
    for p in polys:
        result = result * p
    return result


