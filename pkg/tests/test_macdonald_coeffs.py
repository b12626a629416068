from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rq
from qrst.errors import DegenerateBracket, NotContained, NotHorizontalStrip
from qrst.macdonald_coeffs import (
    SkewStrip,
    b_coeff,
    b_partition,
    macdonald_eval,
    psi_phi,
    rc_sets,
    strips_below,
    tableau_weights,
    weights,
)
from qrst.partitions import Cell, Partition, StandardTableau, partitions_of, partitions_up_to, syt_enumerate
from qrst.qt_algebra import RationalQT, rq_eq, rq_eval, rq_substitute

P = Partition
ONE = RationalQT.from_laurent(1)


def product(values):
    return reduce(lambda a, b: a * b, values, ONE)


def strips(max_n):
    for lam in partitions_up_to(max_n):
        for mu in strips_below(lam):
            yield lam, mu


def test_b_coefficients():
    assert rq_eq(b_coeff(0, 0), rq("(1-t)/(1-q)"))
    assert rq_eq(b_coeff(2, 1), rq("(1-q**2*t**2)/(1-q**3*t)"))
    assert rq_eq(rq_substitute(b_coeff(3, 2), "t_equals_q"), ONE)
    with pytest.raises(DegenerateBracket):
        b_coeff(-1, 0)


def test_rc_sets_on_a_five_row_shape():
    r_set, c_set = rc_sets(P((7, 5, 5, 2, 1)), P((7, 5, 4, 2, 1)))
    assert sorted(r_set) == [Cell(x, 3) for x in range(1, 5)]
    assert sorted(c_set) == [Cell(5, 1), Cell(5, 2)]


def test_rc_sets_small_cases():
    assert rc_sets(P((2, 1)), P((2, 1))) == ([], [])
    assert rc_sets(P((2,)), P((1,))) == ([Cell(1, 1)], [])
    with pytest.raises(NotContained):
        rc_sets(P((2,)), P((1, 1)))


def test_psi_phi_on_a_five_row_shape():
    b = b_coeff
    psi, phi = psi_phi(SkewStrip(P((7, 5, 5, 2, 1)), P((7, 5, 4, 2, 1))))
    assert rq_eq(psi, b(0, 0) * b(2, 1) * b(3, 2) / (b(2, 0) * b(3, 1) * b(4, 2)))
    assert rq_eq(phi, b(0, 1) * b(2, 2) / b(2, 1))


def test_psi_phi_trivial_and_errors():
    psi, phi = psi_phi((P((3, 1)), P((3, 1))))
    assert rq_eq(psi, ONE) and rq_eq(phi, ONE)
    with pytest.raises(NotHorizontalStrip):
        SkewStrip(P((1, 1)), P())


def test_single_box_weights():
    psi, phi = psi_phi((P((1,)), P()))
    assert rq_eq(psi, ONE)
    assert rq_eq(phi, rq("(1-t)/(1-q)"))


@pytest.mark.parametrize(
    "tableau,want",
    [("1,2", "(1-t)**3*(1-q**2)/((1-q)**3*(1-q*t))"), ("1;2", "(1-t)*(1-t**2)/((1-q)*(1-q*t))")],
)
def test_two_box_tableau_weights(tableau, want):
    t = StandardTableau.parse(tableau)
    psi, phi = tableau_weights(t)
    assert rq_eq(psi * phi, rq(want))


def test_tableau_weights_at_q_equals_t():
    for t in syt_enumerate(P((3, 2))):
        psi, phi = tableau_weights(t)
        assert rq_eq(rq_substitute(psi, "t_equals_q"), ONE)
        assert rq_eq(rq_substitute(phi, "t_equals_q"), ONE)


def test_phi_is_b_ratio_times_psi():
    for lam, mu in strips(7):
        psi, phi = psi_phi((lam, mu))
        assert rq_eq(phi, b_partition(lam).to_rq() / b_partition(mu).to_rq() * psi), (lam, mu)


def test_coefficients_under_inverting_both_variables():
    for lam, mu in strips(6):
        psi, phi = psi_phi((lam, mu))
        k = lam.size - mu.size
        assert rq_eq(rq_substitute(psi, "invert_both"), psi)
        assert rq_eq(rq_substitute(phi, "invert_both"), RationalQT.monomial(k, -k) * phi)


@pytest.mark.parametrize("n", range(1, 6))
def test_squarefree_cauchy_accounting(n):
    total = RationalQT.from_laurent(0)
    for lam in partitions_of(n):
        tabs = [tableau_weights(t) for t in syt_enumerate(lam)]
        total = total + sum((p for p, _ in tabs), RationalQT.from_laurent(0)) * sum(
            (f for _, f in tabs), RationalQT.from_laurent(0)
        )
    assert rq_eq(total, rq("(1-t)/(1-q)") ** n * factorial(n))


# -- Macdonald polynomials -----------------------------------------------------------------


xs3 = st.lists(st.fractions(-3, 3, max_denominator=5), min_size=3, max_size=3)
qt = st.fractions(0, 1, max_denominator=7).filter(lambda x: x < 1)


@given(xs3, qt, qt)
def test_single_box_polynomial_is_power_sum(xs, qv, tv):
    assert macdonald_eval(P((1,)), "P", xs, qv, tv) == sum(xs)


@given(st.fractions(-3, 3, max_denominator=5), st.fractions(-3, 3, max_denominator=5), qt)
def test_reduces_to_schur_on_the_diagonal(x1, x2, qv):
    assert macdonald_eval(P((2,)), "P", [x1, x2], qv, qv) == x1 * x1 + x1 * x2 + x2 * x2
    assert macdonald_eval(P((2,)), "Q", [x1, x2], qv, qv) == x1 * x1 + x1 * x2 + x2 * x2


@given(st.fractions(-3, 3, max_denominator=5), st.fractions(-3, 3, max_denominator=5), qt, qt)
def test_two_row_polynomial_in_two_variables(x1, x2, qv, tv):
    # P_(2) = m_2 + (1+q)(1-t)/(1-qt) m_11, an independent closed form.
    coeff = (1 + qv) * (1 - tv) / (1 - qv * tv)
    assert macdonald_eval(P((2,)), "P", [x1, x2], qv, tv) == x1**2 + x2**2 + coeff * x1 * x2


@given(xs3, qt, qt)
def test_polynomials_are_symmetric(xs, qv, tv):
    for lam in (P((2, 1)), P((3,)), P((2, 1, 1))):
        for kind in ("P", "Q"):
            assert macdonald_eval(lam, kind, xs, qv, tv) == macdonald_eval(lam, kind, xs[::-1], qv, tv)
            assert macdonald_eval(lam, kind, xs, qv, tv) == macdonald_eval(lam, kind, xs[1:] + xs[:1], qv, tv)


@given(xs3, qt, qt)
def test_q_is_b_times_p(xs, qv, tv):
    lam = P((2, 1))
    b = rq_eval(b_partition(lam).to_rq(), qv, tv)
    assert macdonald_eval(lam, "Q", xs, qv, tv) == b * macdonald_eval(lam, "P", xs, qv, tv)


def test_too_few_variables_vanish():
    assert macdonald_eval(P((1, 1, 1)), "P", [Fraction(1), Fraction(2)], Fraction(1, 2), Fraction(1, 3)) == 0


# -- weights -----------------------------------------------------------------------------------


@pytest.mark.parametrize("h,v", [(1, 1), (2, 2), (3, 2), (2, 4)])
def test_rectangle_weights(h, v):
    lam = P([h] * v)
    omega, omega_bar = weights(lam)
    down = P([h] * (v - 1) + [h - 1])
    assert rq_eq(omega[lam], ONE)
    assert rq_eq(omega[down], rq(f"(1-t**{v})*(1-q**{h})/((1-q*t**{v - 1})*(1-q**{h - 1}*t))"))
    plus0 = P([h + 1] + [h] * (v - 1))
    assert rq_eq(omega_bar[plus0], rq(f"(1-t**{v})*(1-q**{h + 1}*t**{v - 1})/((1-q*t**{v - 1})*(1-q**{h}*t**{v}))"))


@pytest.mark.parametrize("lam", [lam for lam in partitions_up_to(7)])
def test_weight_sums_balance(lam):
    omega, omega_bar = weights(lam)
    assert rq_eq(sum(omega.values(), RationalQT.from_laurent(0)), sum(omega_bar.values(), RationalQT.from_laurent(0)))


def brute_force_schur(lam: Partition, xs) -> Fraction:
    """Sum of x^T over column-strict fillings, found by trying every value in every cell."""
    cells = lam.cells()
    k = len(xs)
    total = Fraction(0)

    def fill(i: int, values: dict) -> None:
        nonlocal total
        if i == len(cells):
            term = Fraction(1)
            for v in values.values():
                term *= xs[v - 1]
            total += term
            return
        x, y = cells[i]
        for v in range(1, k + 1):
            if x > 1 and values.get((x - 1, y), 0) > v:
                continue
            if y > 1 and values.get((x, y - 1), 0) >= v:
                continue
            values[(x, y)] = v
            fill(i + 1, values)
            del values[(x, y)]

    fill(0, {})
    return total


@pytest.mark.parametrize("lam", [lam for lam in partitions_up_to(4) if lam])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_diagonal_macdonald_is_brute_force_schur(lam, k):
    xs = [Fraction(2, 3), Fraction(-1, 2), Fraction(5, 7)][:k]
    qv = Fraction(2, 5)
    want = brute_force_schur(lam, xs)
    assert macdonald_eval(lam, "P", xs, qv, qv) == want
    assert macdonald_eval(lam, "Q", xs, qv, qv) == want
