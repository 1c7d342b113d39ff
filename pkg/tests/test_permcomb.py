"""
Tests for permutation combinatorics.
"""

import os
import sys
import unittest

# Add the parent directory to the path so we can import the package during testing
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from polygroth.exceptions import (
    IndexRangeError,
    NotApplicableError,
    PermutationError,
    ShapeError,
)
from polygroth.permcomb import (
    Permutation,
    SkewShape,
    admissible_rows,
    all_permutations,
    as_permutation,
    ascent_path_to_longest,
    avoiding_321,
    chain_class,
    descents,
    flag_sequences,
    from_flag_sequences,
    grassmannian_data,
    grassmannian_minimum,
    induction_chain,
    is_321_avoiding,
    lemtabkey_step,
    length,
    right_multiply,
    shape_prime,
    skew_shape,
)

W = Permutation((3, 1, 2, 5, 4))
GRASS = Permutation((1, 3, 5, 2, 4))


class TestPermutation(unittest.TestCase):
    """Test parsing and basic operations."""

    def test_parse(self):
        """Test one-line notation parsing."""
        self.assertEqual(Permutation.parse("3,1,2,5,4"), W)
        self.assertEqual(str(W), "3,1,2,5,4")
        self.assertEqual(as_permutation([3, 1, 2, 5, 4]), W)
        self.assertEqual(as_permutation("3,1,2,5,4"), W)
        self.assertIs(as_permutation(W), W)

    def test_invalid(self):
        """Test that non-bijections and bad text are rejected."""
        for text in ("1,1", "0,1", "1,3", "a,b", ""):
            with self.assertRaises(PermutationError):
                Permutation.parse(text)

    def test_non_integer_entries(self):
        """Test that fractional and boolean entries are rejected, not truncated."""
        for values in ((1.5, 2), (1.0, 2), (True, 2), ("1", "2")):
            with self.assertRaises(PermutationError):
                Permutation(values)
        with self.assertRaises(PermutationError):
            as_permutation([1.5, 2])

    def test_extend(self):
        """Test embedding by fixed points."""
        self.assertEqual(Permutation.parse("2,1").extend(4), Permutation((2, 1, 3, 4)))
        with self.assertRaises(PermutationError):
            W.extend(3)

    def test_length(self):
        """Test inversion counts."""
        self.assertEqual(length(Permutation.identity(3)), 0)
        self.assertEqual(length(Permutation.longest(3)), 3)
        self.assertEqual(length(W), 3)
        self.assertEqual(length(Permutation.longest(6)), 15)

    def test_right_multiply(self):
        """Test w s_i."""
        self.assertEqual(right_multiply(Permutation.identity(3), 1), Permutation((2, 1, 3)))
        self.assertEqual(right_multiply(Permutation((3, 1, 5, 2, 4)), 3), W)
        self.assertEqual(right_multiply(right_multiply(W, 2), 2), W)
        with self.assertRaises(IndexRangeError):
            right_multiply(W, 5)

    def test_descents(self):
        self.assertEqual(descents(W), [1, 4])
        self.assertEqual(descents(GRASS), [3])
        self.assertEqual(descents(Permutation.identity(4)), [])


class TestAvoidance(unittest.TestCase):
    """Test 321-avoidance and the enumeration of S_n."""

    def test_is_321_avoiding(self):
        self.assertTrue(is_321_avoiding(W))
        self.assertFalse(is_321_avoiding(Permutation((3, 2, 1))))
        self.assertTrue(is_321_avoiding(Permutation.identity(5)))

    def test_catalan_counts(self):
        """Test that S_1..S_6 hold 1, 2, 5, 14, 42, 132 321-avoiding permutations."""
        counts = [sum(1 for _ in avoiding_321(n)) for n in range(1, 7)]
        self.assertEqual(counts, [1, 2, 5, 14, 42, 132])

    def test_lexicographic_order(self):
        perms = [w.one_line for w in all_permutations(3)]
        self.assertEqual(perms, sorted(perms))
        self.assertEqual(len(perms), 6)

    def test_not_applicable(self):
        with self.assertRaises(NotApplicableError):
            flag_sequences(Permutation((3, 2, 1)))


class TestShapes(unittest.TestCase):
    """Test f(w), h(w) and the shapes sigma(w), sigma'(w)."""

    def test_flag_sequences(self):
        sequences = flag_sequences(W)
        self.assertEqual(sequences.f, (1, 4))
        self.assertEqual(sequences.h, (3, 5))
        self.assertEqual(sequences.f_c, (2, 3, 5))
        self.assertEqual(sequences.h_c, (1, 2, 4))
        self.assertEqual(flag_sequences(GRASS)[:2], ((2, 3), (3, 5)))

    def test_identity_sequences(self):
        sequences = flag_sequences(Permutation.identity(4))
        self.assertEqual(sequences.f, ())
        self.assertEqual(sequences.h, ())
        self.assertEqual(sequences.f_c, (1, 2, 3, 4))
        self.assertEqual(sequences.h_c, (1, 2, 3, 4))

    def test_skew_shape(self):
        self.assertEqual(skew_shape(W), SkewShape((3, 1), (1, 0), (1, 4)))
        self.assertEqual(skew_shape(GRASS), SkewShape((2, 2), (1, 0), (2, 3)))
        self.assertEqual(skew_shape(Permutation((2, 1))), SkewShape((1,), (0,), (1,)))
        with self.assertRaises(NotApplicableError):
            skew_shape(Permutation.identity(3))

    def test_shape_prime(self):
        self.assertEqual(shape_prime(W), ((3, 2), (2, 0)))
        self.assertEqual(shape_prime(GRASS), ((3, 2), (1, 1)))
        self.assertEqual(shape_prime(Permutation((2, 1))), ((1,), (0,)))

    def test_shape_size_is_length(self):
        """Test |sigma(w)| = length(w) and the 180 degree rotation for n <= 6."""
        for n in range(2, 7):
            for w in avoiding_321(n):
                if w.is_identity():
                    continue
                shape = skew_shape(w)
                self.assertEqual(shape.size, length(w), str(w))
                lam_prime, mu_prime = shape_prime(w)
                self.assertEqual(
                    sum(lam_prime) - sum(mu_prime), shape.size, str(w)
                )
                self.assertEqual(shape.flag, flag_sequences(w).f)

    def test_invalid_shapes(self):
        with self.assertRaises(ShapeError):
            SkewShape((1, 2), (0, 0), (1, 2))
        with self.assertRaises(ShapeError):
            SkewShape((2, 1), (0, 2), (1, 2))
        with self.assertRaises(ShapeError):
            SkewShape((2,), (0,), (1, 2))
        with self.assertRaises(ShapeError):
            SkewShape((2, 1), (0, 0), (2, 1))

    def test_boxes(self):
        shape = skew_shape(W)
        self.assertEqual(shape.boxes(), [(1, 2), (1, 3), (2, 1)])
        self.assertTrue(shape.contains(2, 1))
        self.assertFalse(shape.contains(1, 1))
        self.assertEqual(SkewShape.empty().boxes(), [])

    def test_reconstruction(self):
        """Test that (f(w), h(w)) determines w for every 321-avoiding w, n <= 6."""
        for n in range(1, 7):
            for w in avoiding_321(n):
                sequences = flag_sequences(w)
                self.assertEqual(from_flag_sequences(sequences.f, sequences.h, n), w)
        with self.assertRaises(NotApplicableError):
            from_flag_sequences((1, 2), (3,), 4)
        with self.assertRaises(NotApplicableError):
            from_flag_sequences((2,), (2,), 3)


class TestGrassmannian(unittest.TestCase):
    """Test the Grassmannian data."""

    def test_grassmannian_data(self):
        data = grassmannian_data(GRASS)
        self.assertEqual(data.descent, 3)
        self.assertEqual(data.bar_lambda, (2, 1))
        self.assertEqual(data.bar_flag, (3, 3))
        self.assertEqual(data.shape, SkewShape((2, 1), (0, 0), (3, 3)))

    def test_not_grassmannian(self):
        self.assertIsNone(grassmannian_data(W))
        self.assertIsNone(grassmannian_data(Permutation.identity(3)))


class TestPaths(unittest.TestCase):
    """Test ascent paths to the longest element."""

    def test_ascent_path(self):
        self.assertEqual(ascent_path_to_longest(Permutation.identity(2)), [1])
        self.assertEqual(ascent_path_to_longest(Permutation.longest(4)), [])
        self.assertEqual(ascent_path_to_longest(Permutation((2, 1, 3))), [2, 1])
        self.assertEqual(
            ascent_path_to_longest(Permutation.identity(3), "largest"), [2, 1, 2]
        )
        with self.assertRaises(ValueError):
            ascent_path_to_longest(W, "random")

    def test_path_reaches_longest(self):
        """Test that every path has length l(w0) - l(w) and ends at w0."""
        for w in all_permutations(4):
            for rule in ("smallest", "largest"):
                path = ascent_path_to_longest(w, rule)
                self.assertEqual(len(path), 6 - length(w))
                current = w
                for i in path:
                    current = right_multiply(current, i)
                self.assertEqual(current, Permutation.longest(4))


class TestStepLemma(unittest.TestCase):
    """Test admissible rows and the one-step move of a flag."""

    def test_admissible_rows(self):
        self.assertEqual(admissible_rows(Permutation((3, 1, 5, 2, 4))), [1, 2])
        self.assertEqual(admissible_rows(Permutation((2, 1))), [])

    def test_step_example(self):
        v, shape = lemtabkey_step(Permutation((3, 1, 5, 2, 4)), 2)
        self.assertEqual(v, W)
        self.assertEqual(flag_sequences(v).f, (1, 4))
        self.assertEqual(skew_shape(Permutation((3, 1, 5, 2, 4))).lam, (3, 2))
        self.assertEqual(shape.lam, (3, 1))

    def test_step_rejects_inadmissible_rows(self):
        with self.assertRaises(NotApplicableError):
            lemtabkey_step(Permutation((2, 1)), 1)

    def test_step_sweep(self):
        """Test every admissible (w, i) for n <= 5."""
        checked = 0
        for n in range(2, 6):
            for w in avoiding_321(n):
                for i in admissible_rows(w):
                    v, _ = lemtabkey_step(w, i)
                    self.assertEqual(flag_sequences(v).h, flag_sequences(w).h)
                    checked += 1
        self.assertGreater(checked, 0)


class TestChains(unittest.TestCase):
    """Test the chains C_h and the induction chain."""

    def test_grassmannian_minimum(self):
        v0 = grassmannian_minimum((3, 5), 5)
        self.assertEqual(v0, Permutation((3, 5, 1, 2, 4)))
        self.assertEqual(descents(v0), [2])

    def test_chain_class(self):
        chain = chain_class((3, 5), 5)
        self.assertEqual(chain[0], grassmannian_minimum((3, 5), 5))
        self.assertIn(W, chain)
        self.assertIn(Permutation((3, 1, 5, 2, 4)), chain)
        fs = [flag_sequences(v).f for v in chain]
        self.assertEqual(fs, sorted(fs))
        self.assertTrue(all(flag_sequences(v).h == (3, 5) for v in chain))

    def test_induction_chain_example(self):
        self.assertEqual(
            induction_chain(W),
            [
                (Permutation((3, 5, 1, 2, 4)), 2),
                (Permutation((3, 1, 5, 2, 4)), 3),
            ],
        )
        self.assertEqual(induction_chain(grassmannian_minimum((3, 5), 5)), [])

    def test_induction_chain_steps_are_admissible(self):
        """Test that every chain step is an admissible flag move, n <= 5."""
        for n in range(2, 6):
            for v in avoiding_321(n):
                if v.is_identity():
                    continue
                chain = induction_chain(v)
                for w, t in chain:
                    rows = [i for i in admissible_rows(w) if flag_sequences(w).f[i - 1] == t]
                    self.assertEqual(len(rows), 1, f"{w} at s_{t}")
                if chain:
                    last, t = chain[-1]
                    self.assertEqual(right_multiply(last, t), v)


if __name__ == "__main__":
    unittest.main()
