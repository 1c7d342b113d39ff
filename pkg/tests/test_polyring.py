"""
Tests for exact polynomial arithmetic and the divided difference operators.
"""

import json
import os
import pickle
import random
import sys
import unittest

import sympy

# Add the parent directory to the path so we can import the package during testing
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from polygroth.exceptions import IndexRangeError, RingSizeMismatchError
from polygroth.identities import random_polynomial
from polygroth.polyring import (
    Monomial,
    Polynomial,
    arith,
    divided_difference,
    oplus,
    oplus_xb,
    product,
    specialize,
    sum_polynomials,
    swap_adjacent,
)


def x(i, n=3):
    return Polynomial.x(n, i)


def b(j, n=3):
    return Polynomial.b(n, j)


class TestArithmetic(unittest.TestCase):
    """Test ring arithmetic and oplus."""

    def setUp(self):
        self.beta = Polynomial.beta(3)

    def test_arith(self):
        """Test add, sub and mul."""
        self.assertEqual(arith(x(1), x(1), "add"), 2 * x(1))
        p = x(1) + 3 * b(2)
        self.assertEqual(arith(p, Polynomial.one(3), "mul"), p)
        self.assertEqual(arith(x(1) + b(1), x(1) - b(1), "mul"), x(1) ** 2 - b(1) ** 2)
        self.assertTrue(arith(p, p, "sub").is_zero())
        with self.assertRaises(ValueError):
            arith(p, p, "div")

    def test_ring_size_mismatch(self):
        """Test that operands of different ring size are rejected."""
        with self.assertRaises(RingSizeMismatchError):
            arith(x(1, 2), x(1, 3), "add")
        with self.assertRaises(RingSizeMismatchError):
            x(1, 2) * x(1, 3)

    def test_variable_range(self):
        """Test that variables outside the ring are rejected."""
        with self.assertRaises(IndexRangeError):
            Polynomial.x(2, 3)
        with self.assertRaises(IndexRangeError):
            Polynomial.b(2, 0)

    def test_oplus(self):
        """Test u (+) v = u + v + B u v."""
        self.assertEqual(oplus(x(1), b(1)), x(1) + b(1) + self.beta * x(1) * b(1))
        p = x(2) * b(3) - 4
        self.assertEqual(oplus(p, Polynomial.zero(3)), p)
        self.assertEqual(oplus(b(2), b(2)), 2 * b(2) + self.beta * b(2) ** 2)
        self.assertEqual(oplus_xb(3, 1, 1), oplus(x(1), b(1)))

    def test_sum_and_product(self):
        """Test the bulk helpers and their empty cases."""
        self.assertTrue(sum_polynomials(3, []).is_zero())
        self.assertEqual(product(3, []), 1)
        self.assertEqual(sum_polynomials(3, [x(1), x(1), b(2)]), 2 * x(1) + b(2))
        self.assertEqual(product(3, [x(1), x(2), x(1)]), x(1) ** 2 * x(2))

    def test_cancellation_leaves_no_terms(self):
        """Test that zero coefficients never survive."""
        p = x(1) * b(2) + 7
        total = p + (-p)
        self.assertEqual(len(total), 0)
        self.assertEqual(total.terms(), [])


class TestSwapAndDividedDifference(unittest.TestCase):
    """Test s_i and pi_i."""

    def setUp(self):
        self.beta = Polynomial.beta(3)

    def test_swap_adjacent(self):
        """Test the transposition action on x variables only."""
        self.assertEqual(swap_adjacent(x(1), 1), x(2))
        self.assertEqual(swap_adjacent(x(1) * x(2), 1), x(1) * x(2))
        self.assertEqual(swap_adjacent(x(1) + b(2), 2), x(1) + b(2))
        with self.assertRaises(IndexRangeError):
            swap_adjacent(x(1), 3)

    def test_divided_difference_examples(self):
        """Test pi_1 on small monomials."""
        one = Polynomial.one(3)
        self.assertEqual(divided_difference(one, 1), -self.beta)
        self.assertEqual(divided_difference(x(1), 1), 1)
        self.assertEqual(
            divided_difference(x(1) ** 2, 1),
            x(1) + x(2) + self.beta * x(1) * x(2),
        )
        self.assertEqual(
            divided_difference(x(2), 1), -1 - self.beta * (x(1) + x(2))
        )
        with self.assertRaises(IndexRangeError):
            divided_difference(one, 0)

    def test_divided_difference_matches_rational_expression(self):
        """Test pi_i against sympy's cancellation of the defining quotient."""
        B = sympy.Symbol("B")
        xs = sympy.symbols("x1 x2 x3")
        rng = random.Random(11)
        for _ in range(25):
            p = random_polynomial(rng, 3, max_degree=3, max_terms=4)
            i = rng.randint(1, 2)
            f = p.as_expr()
            xi, xj = xs[i - 1], xs[i]
            s_f = f.subs({xi: xj, xj: xi}, simultaneous=True)
            quotient = sympy.cancel(((1 + B * xj) * f - (1 + B * xi) * s_f) / (xi - xj))
            got = divided_difference(p, i).as_expr()
            self.assertEqual(sympy.expand(quotient - got), 0)

    def test_image_is_symmetric(self):
        """Test that pi_i(p) is invariant under s_i."""
        rng = random.Random(3)
        for _ in range(20):
            p = random_polynomial(rng, 3)
            image = divided_difference(p, 2)
            self.assertEqual(swap_adjacent(image, 2), image)


class TestSpecialize(unittest.TestCase):
    """Test specializations of beta, b and x."""

    def test_specialize(self):
        g = oplus_xb(2, 1, 1)
        self.assertEqual(specialize(g, beta_val=0), x(1, 2) + b(1, 2))
        self.assertEqual(specialize(g, kill_b=True), x(1, 2))
        self.assertEqual(specialize(g, kill_x=True), b(1, 2))
        self.assertEqual(specialize(g), g)
        self.assertEqual(
            specialize(g, beta_val=-1), x(1, 2) + b(1, 2) - x(1, 2) * b(1, 2)
        )


class TestRendering(unittest.TestCase):
    """Test text, LaTeX and JSON output."""

    def test_text(self):
        """Test the canonical plain-text form."""
        self.assertEqual(oplus_xb(2, 1, 1).to_text(), "x1 + b1 + B*x1*b1")
        self.assertEqual(Polynomial.zero(2).to_text(), "0")
        self.assertEqual((-x(1)).to_text(), "-x1")
        self.assertEqual((3 * x(1) ** 2 - 2 * b(2) + 1).to_text(), "3*x1^2 - 2*b2 + 1")
        self.assertEqual(str(Polynomial.beta(2) ** 2), "B^2")

    def test_latex(self):
        """Test the LaTeX form."""
        self.assertEqual(
            oplus_xb(2, 1, 1).to_latex(), "x_{1} + b_{1} + \\beta x_{1} b_{1}"
        )
        self.assertEqual((Polynomial.beta(2) ** 2 * x(2, 2) ** 3).to_latex(), "\\beta^{2} x_{2}^{3}")

    def test_json(self):
        """Test the JSON document and reading it back."""
        g = oplus_xb(2, 1, 1)
        data = json.loads(g.to_json())
        self.assertEqual(data["n"], 2)
        self.assertEqual(
            data["terms"][0], {"coeff": "1", "beta": 0, "x": [1, 0], "b": [0, 0]}
        )
        self.assertEqual(
            data["terms"][2], {"coeff": "1", "beta": 1, "x": [1, 0], "b": [1, 0]}
        )
        self.assertEqual(Polynomial.from_json(g.to_json()), g)

    def test_terms_and_coefficients(self):
        """Test term access through Monomial."""
        p = 5 * x(2) * b(3) - Polynomial.beta(3)
        self.assertEqual(p.coefficient(Monomial(0, (0, 1, 0), (0, 0, 1))), 5)
        self.assertEqual(p.coefficient(Monomial(1, (0, 0, 0), (0, 0, 0))), -1)
        self.assertEqual(p.coefficient(Monomial(2, (0, 0, 0), (0, 0, 0))), 0)
        self.assertEqual(Polynomial.from_terms(3, p.terms()), p)

    def test_pickle(self):
        """Test that polynomials survive transfer to worker processes."""
        p = oplus_xb(3, 2, 1) ** 2
        self.assertEqual(pickle.loads(pickle.dumps(p)), p)


if __name__ == "__main__":
    unittest.main()
