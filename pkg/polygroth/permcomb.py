"""
Permutation combinatorics: lengths, 321-avoidance, the sequences f(w), h(w),
the skew shapes attached to a 321-avoiding permutation, Grassmannian data,
ascent paths to the longest element and the chains C_h used by the
inductive proof of the tableau formula.
"""

import itertools
import logging
import operator
from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from .exceptions import (
    IndexRangeError,
    InvariantViolation,
    NotApplicableError,
    PermutationError,
    ShapeError,
)

_logger = logging.getLogger(__name__)


def _entry(value) -> int:
    # bool and float entries are rejected rather than truncated
    if isinstance(value, bool):
        raise PermutationError(f"{value!r} is not an integer entry")
    try:
        return operator.index(value)
    except TypeError:
        raise PermutationError(f"{value!r} is not an integer entry") from None


@dataclass(frozen=True)
class Permutation:
    """
    Element of S_n in one-line notation w(1)..w(n).
    """

    one_line: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(_entry(v) for v in self.one_line)
        if not values or sorted(values) != list(range(1, len(values) + 1)):
            raise PermutationError(
                f"{','.join(map(str, values)) or '<empty>'} is not a bijection on "
                f"{{1..{len(values)}}}"
            )
        object.__setattr__(self, "one_line", values)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """
        Parse comma-separated one-line notation such as ``3,1,2,5,4``.

        Args:
            text: Permutation text

        Returns:
            Parsed permutation
        """
        try:
            values = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise PermutationError(
                f"cannot parse {text!r}: expected comma-separated integers"
            ) from None
        return cls(values)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.one_line, start=1))

    def extend(self, n: int) -> "Permutation":
        """Embed into S_n by appending fixed points."""
        if n < self.n:
            raise PermutationError(f"cannot embed {self} into S_{n}")
        return Permutation(self.one_line + tuple(range(self.n + 1, n + 1)))

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.one_line)


PermutationLike = Union[Permutation, str, Sequence[int]]


def as_permutation(value: PermutationLike) -> Permutation:
    """Coerce text, an int sequence or a Permutation to a Permutation."""
    if isinstance(value, Permutation):
        return value
    if isinstance(value, str):
        return Permutation.parse(value)
    return Permutation(tuple(value))


@dataclass(frozen=True)
class SkewShape:
    """
    Skew partition lam/mu with a row flagging.

    Boxes are {(i, j) : mu_i < j <= lam_i}; row i entries are bounded by flag_i.
    """

    lam: Tuple[int, ...]
    mu: Tuple[int, ...]
    flag: Tuple[int, ...]

    def __post_init__(self):
        lam, mu, flag = tuple(self.lam), tuple(self.mu), tuple(self.flag)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "flag", flag)
        if not len(lam) == len(mu) == len(flag):
            raise ShapeError(f"lam, mu and flag lengths differ: {lam}, {mu}, {flag}")
        if any(v <= 0 for v in lam) or any(a < b for a, b in zip(lam, lam[1:])):
            raise ShapeError(f"lam must be weakly decreasing and positive: {lam}")
        if any(v < 0 for v in mu) or any(a < b for a, b in zip(mu, mu[1:])):
            raise ShapeError(f"mu must be weakly decreasing and nonnegative: {mu}")
        if any(m > l for l, m in zip(lam, mu)):
            raise ShapeError(f"mu {mu} does not fit inside lam {lam}")
        if any(v <= 0 for v in flag) or any(a > b for a, b in zip(flag, flag[1:])):
            raise ShapeError(f"flag must be weakly increasing and positive: {flag}")

    @property
    def rows(self) -> int:
        return len(self.lam)

    @property
    def size(self) -> int:
        return sum(self.lam) - sum(self.mu)

    def boxes(self) -> List[Tuple[int, int]]:
        """Boxes in row-major reading order."""
        return [
            (i, j)
            for i in range(1, self.rows + 1)
            for j in range(self.mu[i - 1] + 1, self.lam[i - 1] + 1)
        ]

    def contains(self, i: int, j: int) -> bool:
        return 1 <= i <= self.rows and self.mu[i - 1] < j <= self.lam[i - 1]

    def with_flag(self, flag: Sequence[int]) -> "SkewShape":
        return SkewShape(self.lam, self.mu, tuple(flag))

    @classmethod
    def empty(cls) -> "SkewShape":
        return cls((), (), ())


class FlagSequences(NamedTuple):
    f: Tuple[int, ...]
    h: Tuple[int, ...]
    f_c: Tuple[int, ...]
    h_c: Tuple[int, ...]


@dataclass(frozen=True)
class GrassmannianData:
    """Descent d, the partition bar_lambda = lam' - mu' and the flag (d, ..., d)."""

    descent: int
    bar_lambda: Tuple[int, ...]
    bar_flag: Tuple[int, ...]

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.bar_lambda, (0,) * len(self.bar_lambda), self.bar_flag)


def length(w: Permutation) -> int:
    """
    Length of w, i.e. its number of inversions.

    Args:
        w: Permutation

    Returns:
        Inversion count
    """
    values = w.one_line
    return sum(
        1
        for a in range(len(values))
        for b in range(a + 1, len(values))
        if values[a] > values[b]
    )


def is_321_avoiding(w: Permutation) -> bool:
    """
    Check that w has no i < j < k with w(i) > w(j) > w(k).

    Args:
        w: Permutation

    Returns:
        True if w is 321-avoiding
    """
    values = w.one_line
    for j in range(1, len(values) - 1):
        middle = values[j]
        if any(v > middle for v in values[:j]) and any(v < middle for v in values[j + 1 :]):
            return False
    return True


def descents(w: Permutation) -> List[int]:
    return [i for i in range(1, w.n) if w(i) > w(i + 1)]


def flag_sequences(w: Permutation) -> FlagSequences:
    """
    Compute f(w), h(w), f^c(w) and h^c(w).

    Args:
        w: 321-avoiding permutation

    Returns:
        FlagSequences with f the indices where w(i) > i and h = w on f
    """
    if not is_321_avoiding(w):
        raise NotApplicableError(f"{w} is not 321-avoiding")
    f = tuple(i for i in range(1, w.n + 1) if w(i) > i)
    f_c = tuple(i for i in range(1, w.n + 1) if w(i) <= i)
    return FlagSequences(f, tuple(w(i) for i in f), f_c, tuple(w(i) for i in f_c))


def from_flag_sequences(f: Sequence[int], h: Sequence[int], n: int) -> Permutation:
    """
    Rebuild the 321-avoiding permutation with the given f(w) and h(w).

    Args:
        f: Increasing positions with w(i) > i
        h: Increasing values of w on f
        n: Size of the symmetric group

    Returns:
        The unique permutation w with f(w) = f and h(w) = h
    """
    f, h = tuple(f), tuple(h)
    if len(f) != len(h):
        raise NotApplicableError(f"f {f} and h {h} have different lengths")
    if any(not 1 <= v <= n for v in f + h):
        raise NotApplicableError(f"f {f} or h {h} leaves 1..{n}")
    one_line = [0] * n
    for position, value in zip(f, h):
        one_line[position - 1] = value
    free_positions = [p for p in range(1, n + 1) if p not in f]
    free_values = sorted(set(range(1, n + 1)) - set(h))
    for position, value in zip(free_positions, free_values):
        one_line[position - 1] = value
    try:
        w = Permutation(tuple(one_line))
    except PermutationError as exc:
        raise NotApplicableError(f"f={f}, h={h} do not describe a permutation") from exc
    if not is_321_avoiding(w) or flag_sequences(w)[:2] != (f, h):
        raise NotApplicableError(f"no 321-avoiding permutation in S_{n} has f={f}, h={h}")
    return w


def _nonidentity_flags(w: Permutation) -> FlagSequences:
    sequences = flag_sequences(w)
    if not sequences.f:
        raise NotApplicableError("the identity permutation has an empty shape")
    return sequences


def skew_shape(w: Permutation) -> SkewShape:
    """
    The skew shape sigma(w) = lam/mu flagged by f(w).

    lam_i = w(f_r) - r - (f_i - i) and mu_i = w(f_r) - r - (w(f_i) - i).

    Args:
        w: 321-avoiding, nonidentity permutation

    Returns:
        SkewShape with |lam/mu| = length(w)
    """
    f, h, _, _ = _nonidentity_flags(w)
    r = len(f)
    top = h[-1] - r
    lam = tuple(top - (f[k] - (k + 1)) for k in range(r))
    mu = tuple(top - (h[k] - (k + 1)) for k in range(r))
    return SkewShape(lam, mu, f)


def shape_prime(w: Permutation) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    The primed shape lam'/mu', the 180-degree rotation of sigma(w).

    Args:
        w: 321-avoiding, nonidentity permutation

    Returns:
        (lam', mu')
    """
    f, h, _, _ = _nonidentity_flags(w)
    r = len(f)
    lam_prime = tuple(h[r - i] - (r + 1 - i) for i in range(1, r + 1))
    mu_prime = tuple(f[r - i] - (r + 1 - i) for i in range(1, r + 1))
    return lam_prime, mu_prime


def grassmannian_data(w: Permutation) -> Optional[GrassmannianData]:
    """
    Grassmannian data (d, bar_lambda, bar_flag) of w.

    Args:
        w: Permutation

    Returns:
        GrassmannianData when w has exactly one descent, None otherwise
        (including the identity)
    """
    found = descents(w)
    if len(found) != 1:
        return None
    d = found[0]
    lam_prime, mu_prime = shape_prime(w)
    bar_lambda = tuple(a - b for a, b in zip(lam_prime, mu_prime))
    if any(a < b for a, b in zip(bar_lambda, bar_lambda[1:])) or min(bar_lambda) <= 0:
        raise InvariantViolation(f"bar_lambda {bar_lambda} of {w} is not a partition")
    return GrassmannianData(d, bar_lambda, (d,) * len(bar_lambda))


def right_multiply(w: Permutation, i: int) -> Permutation:
    """
    w * s_i, i.e. swap positions i and i+1 of the one-line notation.

    Args:
        w: Permutation
        i: Index with 1 <= i < n

    Returns:
        w s_i
    """
    if not 1 <= i <= w.n - 1:
        raise IndexRangeError(f"s_{i} is not in S_{w.n}")
    values = list(w.one_line)
    values[i - 1], values[i] = values[i], values[i - 1]
    return Permutation(tuple(values))


def ascent_path_to_longest(w: Permutation, rule: str = "smallest") -> List[int]:
    """
    Deterministic ascent path from w to the longest element w0.

    Args:
        w: Permutation
        rule: "smallest" or "largest" ascent position at every step

    Returns:
        Indices (i_1, ..., i_m) with w s_{i_1} ... s_{i_m} = w0
    """
    if rule not in ("smallest", "largest"):
        raise ValueError(f"unknown ascent rule {rule!r}")
    path: List[int] = []
    current = w
    while True:
        ascents = [i for i in range(1, current.n) if current(i) < current(i + 1)]
        if not ascents:
            return path
        i = ascents[0] if rule == "smallest" else ascents[-1]
        path.append(i)
        current = right_multiply(current, i)


def admissible_rows(w: Permutation) -> List[int]:
    """
    Rows i with f_i + 1 < f_{i+1} and w(f_i) > f_i + 1, reading f_{r+1} as n + 1.

    Args:
        w: 321-avoiding permutation

    Returns:
        1-based row indices
    """
    f = flag_sequences(w).f
    rows = []
    for i in range(1, len(f) + 1):
        following = f[i] if i < len(f) else w.n + 1
        if f[i - 1] + 1 < following and w(f[i - 1]) > f[i - 1] + 1:
            rows.append(i)
    return rows


def lemtabkey_step(w: Permutation, i: int) -> Tuple[Permutation, SkewShape]:
    """
    Move the i-th flag of w one step right: w -> w s_{f_i}.

    Args:
        w: 321-avoiding permutation
        i: Row index admissible for w

    Returns:
        (w s_{f_i}, sigma(w s_{f_i})) after checking that f_i grows by one,
        h is unchanged, lam_i drops by one, mu is unchanged and the length drops by one
    """
    sequences = flag_sequences(w)
    if i not in admissible_rows(w):
        raise NotApplicableError(f"row {i} does not satisfy the step hypotheses for {w}")
    t = sequences.f[i - 1]
    v = right_multiply(w, t)
    before = skew_shape(w)
    if not is_321_avoiding(v):
        raise InvariantViolation(f"{v} = {w} s_{t} is not 321-avoiding")
    after_sequences = flag_sequences(v)
    after = skew_shape(v)
    expected_f = sequences.f[: i - 1] + (t + 1,) + sequences.f[i:]
    expected_lam = before.lam[: i - 1] + (before.lam[i - 1] - 1,) + before.lam[i:]
    checks = {
        "f": after_sequences.f == expected_f,
        "h": after_sequences.h == sequences.h,
        "lam": after.lam == expected_lam,
        "mu": after.mu == before.mu,
        "length": length(w) == length(v) + 1,
    }
    broken = [name for name, ok in checks.items() if not ok]
    if broken:
        raise InvariantViolation(f"step {w} -> {v} breaks {', '.join(broken)}")
    return v, after


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values)


def avoiding_321(n: int) -> Iterator[Permutation]:
    """The 321-avoiding permutations of S_n in lexicographic order."""
    return (w for w in all_permutations(n) if is_321_avoiding(w))


def chain_class(h: Sequence[int], n: int) -> List[Permutation]:
    """
    C_h: 321-avoiding permutations of S_n with h(v) = h, ordered by f(v) lexicographically.

    Args:
        h: Increasing sequence with h_1 >= 2 and h_r <= n
        n: Size of the symmetric group

    Returns:
        Members of C_h from smallest to largest
    """
    h = tuple(h)
    members = [v for v in avoiding_321(n) if flag_sequences(v).h == h]
    return sorted(members, key=lambda v: flag_sequences(v).f)


def grassmannian_minimum(h: Sequence[int], n: int) -> Permutation:
    """
    The minimum v0 of C_h: the Grassmannian permutation with f(v0) = (1, ..., r).

    Args:
        h: Increasing sequence with h_1 >= 2 and h_r <= n
        n: Size of the symmetric group

    Returns:
        v0
    """
    h = tuple(h)
    return from_flag_sequences(tuple(range(1, len(h) + 1)), h, n)


def induction_chain(v: Permutation) -> List[Tuple[Permutation, int]]:
    """
    Steps (w, t) leading from the minimum of C_{h(v)} up to v.

    Each w satisfies the step hypotheses at the row whose flag equals t, and
    w s_t is the next permutation of the chain; the last step ends at v.

    Args:
        v: 321-avoiding permutation

    Returns:
        List of (w, t) from the Grassmannian minimum upwards; empty when v is minimal
    """
    sequences = flag_sequences(v)
    f, h = list(sequences.f), sequences.h
    steps: List[Tuple[Permutation, int]] = []
    current = v
    while f != list(range(1, len(f) + 1)):
        i = next(k for k in range(len(f)) if (f[k - 1] if k else 0) < f[k] - 1)
        f[i] -= 1
        w = from_flag_sequences(f, h, v.n)
        t = f[i]
        if right_multiply(w, t) != current:
            raise InvariantViolation(f"{w} s_{t} should be {current}")
        steps.append((w, t))
        current = w
    steps.reverse()
    _logger.debug("induction chain for %s has %d steps", v, len(steps))
    return steps
