from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import rq
from qrst.errors import DegenerateBracket, DivisionByZero, PoleAtOne, PoleAtPoint, PoleOnLocus
from qrst.local_rules import alpha_pair, definition_entry, kernel
from qrst.partitions import Partition
from qrst.qt_algebra import (
    BracketProduct,
    LaurentPoly,
    RationalQT,
    bracket,
    bracket_to_rq,
    rq_arith,
    rq_eq,
    rq_eval,
    rq_limit_q1_diagonal,
    rq_substitute,
)

ZERO = RationalQT.from_laurent(0)

small_coef = st.integers(-3, 3)
exponent = st.integers(-2, 3)


@st.composite
def laurent(draw, max_terms: int = 3) -> LaurentPoly:
    terms = draw(st.lists(st.tuples(st.tuples(exponent, exponent), small_coef), max_size=max_terms))
    return LaurentPoly(terms)


@st.composite
def rational(draw) -> RationalQT:
    num = draw(laurent())
    den = draw(laurent())
    assume(not den.is_zero())
    return RationalQT.from_polys(num, den)


@st.composite
def brackets(draw) -> RationalQT:
    """Products of brackets and monomials, the shape every kernel entry takes."""
    factors = draw(
        st.lists(
            st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda ij: ij != (0, 0)), st.integers(-2, 2)),
            max_size=4,
        )
    )
    mono = draw(st.tuples(st.integers(-1, 2), st.integers(-1, 2)))
    return BracketProduct(draw(st.integers(1, 3)), mono, factors).to_rq()


# -- arithmetic --------------------------------------------------------------------------------


def test_two_outgoing_probabilities_of_a_single_box_sum_to_one():
    total = rq_arith(rq("(1-t)/(1-q*t)"), rq("t*(1-q)/(1-q*t)"), "+")
    assert rq_eq(total, RationalQT.from_laurent(1))


def test_adding_zero_is_identity():
    f = rq("(1-t**2)/(1-q*t**2)")
    assert rq_eq(rq_arith(f, ZERO, "+"), f)


def test_bracket_quotient_expands_to_polynomial():
    f = (bracket(2, 2) / bracket(1, 1)).to_rq()
    assert rq_eq(f, rq("1+q*t"))
    assert f.to_polys()[1] == LaurentPoly.constant(1)


def test_division_by_zero_function():
    with pytest.raises(DivisionByZero):
        rq_arith(rq("q"), ZERO, "/")
    with pytest.raises(DivisionByZero):
        RationalQT.from_polys(LaurentPoly.constant(1), LaurentPoly())


def test_equality_examples():
    f = rq("(1-t**2)/(1-q*t**2)")
    assert rq_eq(f, f)
    assert rq_eq(rq("(1-q**2)/(1-q)"), rq("1+q"))
    assert not rq_eq(rq("(1-q**2)/(1-q)"), rq("1-q"))


def test_definition_and_explicit_entry_agree_on_a_two_row_shape():
    lam = Partition((3, 2))
    k = kernel(lam)
    mu, nu = k.dstar[1], k.ups[0]
    assert rq_eq(definition_entry(lam, mu, nu).to_rq(), k.forward[(1, 0)])


# -- evaluation ----------------------------------------------------------------------------------


def test_evaluation_examples():
    f = rq("(1-t)/(1-q*t)")
    assert rq_eval(f, 0, 0) == 1
    assert rq_eval(f, Fraction(1, 2), Fraction(1, 3)) == Fraction(4, 5)
    assert rq_eval(rq("q*t**2"), Fraction(1, 2), Fraction(1, 3)) == Fraction(1, 18)


def test_pole_at_point():
    with pytest.raises(PoleAtPoint):
        rq_eval(rq("1/(1-q*t)"), 1, 1)


# -- substitution ----------------------------------------------------------------------------------


@pytest.mark.parametrize("i,j", [(1, 0), (0, 1), (2, 3), (1, 1)])
def test_inverting_both_variables_on_a_bracket(i, j):
    b = bracket(i, j).to_rq()
    want = RationalQT.monomial(-i, -j, -1) * b
    assert rq_eq(rq_substitute(b, "invert_both"), want)


def test_t_to_zero_kills_monomial_prefactor():
    for v in (1, 2, 3):
        f = rq(f"t**{v}*(1-q**2)/(1-q**2*t**{v})")
        assert rq_substitute(f, "t_to_zero").is_zero()


def test_pole_on_locus():
    with pytest.raises(PoleOnLocus):
        rq_substitute(rq("1/t"), "t_to_zero")


def test_swap_and_diagonal():
    assert rq_eq(rq_substitute(rq("q*(1-t)"), "swap_qt"), rq("t*(1-q)"))
    assert rq_eq(rq_substitute(rq("(1-q**2*t)/(1-q*t**2)"), "t_equals_q"), RationalQT.from_laurent(1))


# -- diagonal limit ----------------------------------------------------------------------------------


def test_diagonal_limit_examples():
    assert rq_limit_q1_diagonal(rq("(1-t)/(1-q)")) == 1
    alpha = alpha_pair(Partition((1,)), Partition((2,)))[0]
    assert rq_limit_q1_diagonal(alpha) == Fraction(1, 2)
    assert rq_limit_q1_diagonal(rq("(1-q**2*t)/(1-q*t**2)")) == 1
    assert rq_limit_q1_diagonal(rq("(1-q**3)/(1-q)**2 * (1-t)")) == 3


def test_diagonal_limit_diverges():
    with pytest.raises(PoleAtOne):
        rq_limit_q1_diagonal(rq("1/(1-q*t)"))


# -- brackets ------------------------------------------------------------------------------------------


def test_bracket_to_rq_examples():
    assert rq_eq(bracket_to_rq(BracketProduct()), RationalQT.from_laurent(1))
    assert rq_eq(bracket_to_rq(BracketProduct(1, (0, 0), {(1, 1): -1, (0, 1): 1})), rq("(1-t)/(1-q*t)"))
    alpha0 = alpha_pair(Partition((3, 2)), Partition((4, 2)))[0]
    assert rq_eq(alpha0, rq("(1-t)*(1-q*t**2)/((1-q*t)*(1-q**3*t**2))"))


def test_degenerate_bracket_rejected():
    with pytest.raises(DegenerateBracket):
        bracket(0, 0)


def test_bracket_text_form():
    assert str(BracketProduct(1, (1, 2), {(0, 1): 1, (1, 1): -2})) == "q*t^2*[0,1]/([1,1]^2)"


def test_json_round_trip():
    f = rq("(3*q - t/2)/(1-q**2*t)")
    assert rq_eq(RationalQT.from_json(f.to_json()), f)


# -- properties ------------------------------------------------------------------------------------------


@given(rational(), rational(), rational())
def test_distributive_law(f, g, h):
    assert rq_eq((f + g) * h, f * h + g * h)


@given(brackets(), brackets())
def test_field_inverse_and_subtraction(f, g):
    assert rq_eq((f - g) + g, f)
    assert rq_eq((f / g) * g, f)


@given(rational(), rational(), st.sampled_from(["+", "-", "*"]))
def test_evaluation_is_a_homomorphism(f, g, op):
    qv, tv = Fraction(2, 7), Fraction(3, 11)
    try:
        fv, gv = rq_eval(f, qv, tv), rq_eval(g, qv, tv)
    except PoleAtPoint:
        return
    want = {"+": fv + gv, "-": fv - gv, "*": fv * gv}[op]
    assert rq_eval(rq_arith(f, g, op), qv, tv) == want


@given(rational())
def test_equality_is_representation_independent(f):
    num, den = f.to_polys()
    scaled = RationalQT.from_polys(num * LaurentPoly({(1, 1): 2, (0, 0): -1}), den * LaurentPoly({(1, 1): 2, (0, 0): -1}))
    assert rq_eq(scaled, f)
    assert hash(scaled) == hash(f)


@given(brackets())
def test_invert_both_is_an_involution(f):
    assert rq_eq(rq_substitute(rq_substitute(f, "invert_both"), "invert_both"), f)


@given(st.integers(0, 5), st.integers(0, 5), st.fractions(0, 1).filter(lambda x: x < 1), st.fractions(0, 1).filter(lambda x: x < 1))
def test_brackets_are_in_unit_interval(i, j, qv, tv):
    assume(i + j > 0)
    v = rq_eval(bracket(i, j).to_rq(), qv, tv)
    assert 0 < v <= 1
