from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from services.exceptions import PreconditionError, StructuralError
from services.polyring import (
    MultiPoly,
    add,
    coefficient,
    congruent_mod,
    first_difference,
    has_unit_coefficient,
    is_integral,
    linear_combination,
    mul,
    negate,
    phi,
    variable_name,
)
from tests.conftest import integral_polys, small_polys

x = MultiPoly.variable(1, 0)
y = MultiPoly.variable(1, 1)
W_E8 = x ** 8 + 14 * x ** 4 * y ** 4 + y ** 8


class TestCanonicalText:
    def test_e8(self):
        assert W_E8.to_text() == "x^8 + 14*x^4*y^4 + y^8"

    def test_golay(self):
        w = MultiPoly.genus1_from_weights(24, {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1})
        assert w.to_text() == "x^24 + 759*x^16*y^8 + 2576*x^12*y^12 + 759*x^8*y^16 + y^24"

    def test_fraction_and_sign(self):
        p = MultiPoly(0, {(1,): Fraction(11, 7)})
        assert p.to_text() == "11/7*x"
        assert (y ** 2 - x ** 2).to_text() == "-x^2 + y^2"

    def test_zero_and_constant(self):
        assert MultiPoly.zero(2).to_text() == "0"
        assert MultiPoly.constant(1, 3).to_text() == "3"

    def test_genus2_names(self):
        assert [variable_name(2, i) for i in range(4)] == ["x_00", "x_10", "x_01", "x_11"]
        assert variable_name(3, 5) == "x_101"

    def test_parse_inverts_text(self):
        p = Fraction(-3, 2) * MultiPoly.variable(2, 1, 3) * MultiPoly.variable(2, 2) + 7
        assert MultiPoly.parse(p.to_text(), 2) == p
        assert MultiPoly.parse("0", 3) == MultiPoly.zero(3)

    def test_parse_unknown_variable(self):
        with pytest.raises(StructuralError):
            MultiPoly.parse("x_00^2", 1)

    @settings(max_examples=50)
    @given(small_polys(genus=2))
    def test_parse_inverts_text_generated(self, p):
        assert MultiPoly.parse(p.to_text(), 2) == p

    def test_latex(self):
        p = Fraction(11, 7) * x - y
        assert p.to_latex() == "\\frac{11}{7}x-y"
        assert MultiPoly.variable(2, 1, 2).to_latex() == "x_{10}^{2}"

    def test_json(self):
        assert W_E8.to_json() == {"genus": 1, "terms": {"8,0": "1", "4,4": "14", "0,8": "1"}}


class TestArithmetic:
    def test_cube_of_e8_matches_sympy(self):
        sx, sy = sympy.symbols("x y")
        oracle = sympy.Poly(sympy.expand((sx ** 8 + 14 * sx ** 4 * sy ** 4 + sy ** 8) ** 3), sx, sy)
        cube = W_E8 ** 3
        assert {e: int(c) for e, c in oracle.terms()} == {e: int(c) for e, c in cube.terms.items()}
        assert coefficient(cube, (20, 4)) == 42
        assert coefficient(cube, (16, 8)) == 591

    def test_zero_terms_dropped(self):
        assert len(x - x) == 0
        assert (x - x) == 0

    def test_genus_mismatch(self):
        with pytest.raises(StructuralError):
            x + MultiPoly.variable(2, 0)

    def test_exponent_arity(self):
        with pytest.raises(StructuralError):
            MultiPoly(1, {(1, 2, 3): 1})
        with pytest.raises(StructuralError):
            coefficient(W_E8, (8,))

    def test_linear_combination(self):
        assert linear_combination([2, -1], [x, y]) == 2 * x - y

    def test_division_by_scalar(self):
        assert (6 * x / 4).terms == {(1, 0): Fraction(3, 2)}

    @settings(max_examples=40)
    @given(small_polys(), small_polys(), small_polys())
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == MultiPoly.zero(1)

    @settings(max_examples=40)
    @given(small_polys(), small_polys(), st.tuples(*[st.integers(min_value=0, max_value=3)] * 2))
    def test_coefficient_of_sum(self, a, b, exponent):
        assert coefficient(add(a, b), exponent) == coefficient(a, exponent) + coefficient(b, exponent)
        assert coefficient(negate(a), exponent) == -coefficient(a, exponent)

    @settings(max_examples=40)
    @given(small_polys(), small_polys())
    def test_module_functions_match_operators(self, a, b):
        assert add(a, b) == a + b
        assert mul(a, b) == a * b
        assert add(a, negate(a)) == MultiPoly.zero(1)


class TestCongruence:
    def test_mod(self):
        assert congruent_mod(x ** 2 + 13 * y ** 2, x ** 2 + y ** 2, 6)
        assert not congruent_mod(x ** 2 + 7 * y ** 2, x ** 2 + y ** 2, 4)

    def test_needs_integral_input(self):
        with pytest.raises(PreconditionError):
            congruent_mod(x / 2, x, 3)

    def test_needs_positive_modulus(self):
        with pytest.raises(PreconditionError):
            congruent_mod(x, x, 0)

    def test_unit_coefficient(self):
        assert has_unit_coefficient(5 * x - y)
        assert not has_unit_coefficient(5 * x + 2 * y)
        assert is_integral(W_E8) and not is_integral(W_E8 / 2)

    @given(integral_polys(), integral_polys())
    def test_difference_of_multiple(self, a, b):
        assert congruent_mod(a + 6 * b, a, 6)


class TestPhi:
    def test_drops_top_half_variables(self):
        d4 = sum((MultiPoly.variable(2, i, 4) for i in range(4)), MultiPoly.zero(2))
        assert phi(d4) == x ** 4 + y ** 4

    def test_down_to_genus_zero(self):
        assert phi(x ** 4 + y ** 4) == MultiPoly.variable(0, 0, 4)

    def test_genus_zero_rejected(self):
        with pytest.raises(StructuralError):
            phi(MultiPoly.constant(0, 1))

    @given(st.integers(min_value=1, max_value=3), st.fractions(min_value=-10, max_value=10, max_denominator=6))
    def test_constant_is_fixed(self, genus, c):
        assert phi(MultiPoly.constant(genus, c)) == MultiPoly.constant(genus - 1, c)

    @settings(max_examples=40)
    @given(small_polys(genus=2), small_polys(genus=2))
    def test_linear_and_multiplicative(self, a, b):
        assert phi(a + b) == phi(a) + phi(b)
        assert phi(a * b) == phi(a) * phi(b)


class TestFirstDifference:
    def test_graded_lex_first(self):
        assert first_difference(W_E8, W_E8) is None
        other = W_E8 + y ** 8 + x ** 4 * y ** 4
        exponent, expected, actual = first_difference(W_E8, other)
        assert exponent == (4, 4)
        assert (expected, actual) == (14, 15)
