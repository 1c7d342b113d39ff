"""
Set-valued tableaux of flagged skew shape: enumeration, validation,
polynomial weights and rendering.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from .exceptions import InvariantViolation, NotApplicableError, ShapeError
from .permcomb import Permutation, SkewShape, flag_sequences, grassmannian_data
from .polyring import Polynomial, oplus_xb, product

_logger = logging.getLogger(__name__)

Box = Tuple[int, int]
Filling = Tuple[int, ...]


@dataclass(frozen=True)
class SetValuedTableau:
    """
    Assignment of a nonempty set of positive integers to every box of a shape.

    Fillings are stored as sorted tuples, boxes in row-major order.
    """

    entries: Tuple[Tuple[Box, Filling], ...]

    @classmethod
    def from_fillings(cls, fillings: Mapping[Box, Iterable[int]]) -> "SetValuedTableau":
        return cls(
            tuple(
                (tuple(box), tuple(sorted(set(values))))
                for box, values in sorted(fillings.items())
            )
        )

    @property
    def fillings(self) -> Dict[Box, Filling]:
        return dict(self.entries)

    @property
    def size(self) -> int:
        """|T|, the total number of entries."""
        return sum(len(values) for _, values in self.entries)

    def values(self) -> Iterator[Tuple[int, int, int]]:
        """Every entry as (row, column, value)."""
        for (row, col), filling in self.entries:
            for value in filling:
                yield row, col, value

    def is_semistandard(self) -> bool:
        return all(len(filling) == 1 for _, filling in self.entries)


def enumerate_svt(shape: SkewShape, set_valued: bool = True) -> Iterator[SetValuedTableau]:
    """
    Lazily enumerate SVT(lam/mu, f).

    Boxes are filled in row-major order. Candidate fillings of a box are the
    nonempty subsets of {L..f_i}, smallest first and lexicographically within
    a size, where L is forced by the left neighbour (weak) and the upper
    neighbour (strict).

    Args:
        shape: Flagged skew shape
        set_valued: When False only singleton fillings (semistandard tableaux) are produced

    Returns:
        Iterator over every tableau exactly once
    """
    boxes = shape.boxes()
    current: Dict[Box, Filling] = {}

    def candidates(row: int, col: int) -> Iterator[Filling]:
        low = 1
        left = current.get((row, col - 1))
        if left:
            low = max(low, left[-1])
        up = current.get((row - 1, col))
        if up:
            low = max(low, up[-1] + 1)
        pool = range(low, shape.flag[row - 1] + 1)
        largest = len(pool) if set_valued else min(1, len(pool))
        for k in range(1, largest + 1):
            yield from combinations(pool, k)

    def backtrack(pos: int) -> Iterator[SetValuedTableau]:
        if pos == len(boxes):
            yield SetValuedTableau(tuple((box, current[box]) for box in boxes))
            return
        box = boxes[pos]
        for filling in candidates(*box):
            current[box] = filling
            yield from backtrack(pos + 1)
        current.pop(box, None)

    yield from backtrack(0)


def count_svt(shape: SkewShape, set_valued: bool = True) -> int:
    return sum(1 for _ in enumerate_svt(shape, set_valued))


def validate_svt(shape: SkewShape, tableau: SetValuedTableau) -> bool:
    """
    Check that a tableau belongs to SVT(lam/mu, f).

    Args:
        shape: Flagged skew shape
        tableau: Candidate tableau

    Returns:
        True iff every box is filled with a nonempty set, rows weakly increase,
        columns strictly increase and row i uses only values in {1..f_i}
    """
    fillings = tableau.fillings
    if set(fillings) != set(shape.boxes()):
        return False
    for (row, col), filling in fillings.items():
        if not filling or filling[0] < 1 or filling[-1] > shape.flag[row - 1]:
            return False
        if list(filling) != sorted(set(filling)):
            return False
        right = fillings.get((row, col + 1))
        if right is not None and filling[-1] > right[0]:
            return False
        below = fillings.get((row + 1, col))
        if below is not None and filling[-1] >= below[0]:
            return False
    return True


def flagged_b_index(shape: SkewShape, row: int, col: int, value: int) -> int:
    """b-index lam_row + f_row - col - value + 1 of the 321-avoiding tableau formula."""
    return shape.lam[row - 1] + shape.flag[row - 1] - col - value + 1


def grassmannian_b_index(shape: SkewShape, row: int, col: int, value: int) -> int:
    """b-index value + col - row of the Grassmannian tableau formula."""
    return value + col - row


def tableau_weight(
    shape: SkewShape,
    tableau: SetValuedTableau,
    n: int,
    b_index: Callable[[SkewShape, int, int, int], int] = flagged_b_index,
    combine: str = "oplus",
    b_bound: Optional[int] = None,
    validate: bool = True,
) -> Polynomial:
    """
    Weight beta^{|T| - |lam/mu|} * prod_e (x_{val(e)} (+) b_{index(e)}).

    Args:
        shape: Flagged skew shape
        tableau: Tableau of that shape
        n: Ring size
        b_index: Rule giving the b-index of an entry
        combine: "oplus" for x (+) b, "sum" for x + b (beta = 0), "x" for x alone (b = 0)
        b_bound: Largest admissible b-index; defaults to n
        validate: Check tableau membership first

    Returns:
        The weight polynomial
    """
    if validate and not validate_svt(shape, tableau):
        raise ShapeError("tableau is not a valid set-valued tableau of the shape")
    bound = n if b_bound is None else b_bound
    factors: List[Polynomial] = []
    for row, col, value in tableau.values():
        if combine == "x":
            factors.append(Polynomial.x(n, value))
            continue
        k = b_index(shape, row, col, value)
        if not 1 <= k <= bound:
            raise InvariantViolation(
                f"b-index {k} of entry {value} at ({row},{col}) outside 1..{bound}"
            )
        if combine == "oplus":
            factors.append(oplus_xb(n, value, k))
        elif combine == "sum":
            factors.append(Polynomial.x(n, value) + Polynomial.b(n, k))
        else:
            raise ValueError(f"unknown combine rule {combine!r}")
    excess = tableau.size - shape.size
    if excess and combine != "sum":
        factors.append(Polynomial.beta(n) ** excess)
    return product(n, factors)


def grassmannian_bijection(w: Permutation, tableau: SetValuedTableau) -> SetValuedTableau:
    """
    Send T in SVT(sigma(w), f(w)) to T' in SVT(bar_lambda(w), bar_f).

    Every value v becomes d+1-v and the diagram is rotated by 180 degrees:
    box (i, j) goes to (r+1-i, w(d)-d+1-j).

    Args:
        w: Grassmannian permutation with descent at d
        tableau: Tableau of shape sigma(w)

    Returns:
        The image tableau
    """
    data = grassmannian_data(w)
    if data is None:
        raise NotApplicableError(f"{w} is not Grassmannian")
    d = data.descent
    r = len(flag_sequences(w).f)
    offset = w(d) - d + 1
    return SetValuedTableau.from_fillings(
        {
            (r + 1 - row, offset - col): [d + 1 - v for v in filling]
            for (row, col), filling in tableau.entries
        }
    )


def _cell_texts(tableau: SetValuedTableau) -> Dict[Box, str]:
    return {box: ",".join(str(v) for v in filling) for box, filling in tableau.entries}


def render_text(shape: SkewShape, tableau: SetValuedTableau) -> str:
    """
    Render a tableau as rows of ``[v,v]`` boxes, mu-cells left blank.

    Args:
        shape: Shape of the tableau
        tableau: Tableau to render

    Returns:
        Multi-line string
    """
    if not shape.boxes():
        return "(empty)"
    cells = _cell_texts(tableau)
    width = max(len(text) for text in cells.values())
    lines = []
    for row in range(1, shape.rows + 1):
        parts = [" " * (width + 2)] * shape.mu[row - 1]
        parts += [
            "[" + cells[(row, col)].ljust(width) + "]"
            for col in range(shape.mu[row - 1] + 1, shape.lam[row - 1] + 1)
        ]
        lines.append("".join(parts).rstrip())
    return "\n".join(lines)


def render_latex(shape: SkewShape, tableau: SetValuedTableau) -> str:
    """Render a tableau as a ytableau environment."""
    if not shape.boxes():
        return "\\emptyset"
    cells = _cell_texts(tableau)
    rows = []
    for row in range(1, shape.rows + 1):
        parts = ["\\none"] * shape.mu[row - 1]
        parts += [
            cells[(row, col)]
            for col in range(shape.mu[row - 1] + 1, shape.lam[row - 1] + 1)
        ]
        rows.append(" & ".join(parts))
    return "\\begin{ytableau}\n" + " \\\\\n".join(rows) + "\n\\end{ytableau}"


def tableau_to_json(tableau: SetValuedTableau) -> str:
    from .schemas import TableauModel

    model = TableauModel(
        boxes=[
            {"row": row, "col": col, "vals": list(filling)}
            for (row, col), filling in tableau.entries
        ]
    )
    return model.model_dump_json()
