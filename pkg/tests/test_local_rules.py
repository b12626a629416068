from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rq
from qrst.errors import NotCoverChain
from qrst.local_rules import (
    FORMULATIONS,
    SPECIALIZATIONS,
    alpha_pair,
    col_sums,
    corner_cell,
    diagonal_limit_entry,
    evaluate_kernel,
    interpolation_identity,
    kernel,
    kernel_col,
    kernel_specialized,
    row_sums,
    substituted_kernel,
)
from qrst.partitions import Cell, Partition, cell_stats, conjugate, downs, dstar, hook_product, n_stats, partitions_up_to, syt_count, ups
from qrst.qt_algebra import RationalQT, rq_eq, rq_eval, rq_limit_q1_diagonal, rq_substitute
from qrst.verify import unsigned_diagonal_entry, signed_hook_exponent

P = Partition
ONE = RationalQT.from_laurent(1)
SMALL = partitions_up_to(6)


def chains(max_n):
    for lam in partitions_up_to(max_n):
        for mu in downs(lam):
            for nu in ups(lam):
                yield lam, mu, nu


def swap(f: RationalQT) -> RationalQT:
    return rq_substitute(f, "swap_qt")


# -- alpha ------------------------------------------------------------------------------------------


def test_alpha_examples():
    alpha, _ = alpha_pair(P((3, 2)), P((4, 2)))
    assert rq_eq(alpha, rq("(1-t)*(1-q*t**2)/((1-q*t)*(1-q**3*t**2))"))
    alpha, alpha_bar = alpha_pair(P(), P((1,)))
    assert rq_eq(alpha, ONE) and rq_eq(alpha_bar, ONE)
    with pytest.raises(NotCoverChain):
        alpha_pair(P((1,)), P((3,)))


@pytest.mark.parametrize("lam", SMALL)
def test_alpha_under_conjugation(lam):
    for nu in ups(lam):
        a, ab = alpha_pair(lam, nu)
        ac, abc = alpha_pair(conjugate(lam), conjugate(nu))
        assert rq_eq(swap(a), ac)
        assert rq_eq(swap(ab), abc)


@pytest.mark.parametrize("lam", [lam for lam in SMALL if lam])
def test_alpha_diagonal_limit_is_hook_ratio(lam):
    for nu in ups(lam):
        assert rq_limit_q1_diagonal(alpha_pair(lam, nu)[0]) == Fraction(hook_product(lam), hook_product(nu))


# -- kernels -----------------------------------------------------------------------------------------


def test_single_box_kernel():
    k = kernel(P((1,)))
    assert rq_eq(k.forward[(0, 0)], rq("(1-t)/(1-q*t)"))
    assert rq_eq(k.forward[(0, 1)], rq("t*(1-q)/(1-q*t)"))


def test_square_kernel():
    k = kernel(P((2, 2)))
    assert rq_eq(k.forward[(0, 0)], rq("(1-t**2)/(1-q**2*t**2)"))
    assert rq_eq(k.forward[(1, 0)], rq("q*t*(1-q*t)/(1-q**2*t**2)"))
    assert rq_eq(k.backward[(1, 1)], rq("(1-t**2)/(1-q*t**3)"))


def test_empty_kernel():
    for formulation in FORMULATIONS:
        k = kernel(P(), formulation)
        assert list(k.forward) == [(0, 0)] and rq_eq(k.forward[(0, 0)], ONE)
    assert k.ups == [P((1,))]


def test_numeric_kernel_of_a_hook():
    k = evaluate_kernel(P((2, 1)), Fraction(1, 2), Fraction(1, 2))
    assert k.forward_row(0) == [Fraction(28, 45), Fraction(2, 9), Fraction(7, 45)]


def test_unknown_formulation():
    with pytest.raises(ValueError):
        kernel(P((1,)), "guess")


@pytest.mark.parametrize("lam", SMALL)
def test_stochastic_and_formulations_agree(lam):
    k = kernel(lam)
    assert all(rq_eq(v, ONE) for v in row_sums(k))
    assert all(rq_eq(v, ONE) for v in col_sums(k))
    for formulation in ("definition", "lagrange"):
        other = kernel(lam, formulation)
        assert all(rq_eq(other.forward[key], k.forward[key]) for key in k.forward)
        assert all(rq_eq(other.backward[key], k.backward[key]) for key in k.backward)


@pytest.mark.parametrize("lam", SMALL)
def test_kernel_at_zero_is_the_identity(lam):
    k = evaluate_kernel(lam, 0, 0)
    assert all(v == (r == s) for (r, s), v in k.forward.items())


@pytest.mark.parametrize("point", [(Fraction(1, 3), Fraction(1, 2)), (Fraction(3, 2), Fraction(5, 4)), (Fraction(9, 10), Fraction(1, 10)), (Fraction(7, 2), Fraction(11, 5))])
def test_entries_are_probabilities(point):
    for lam in SMALL:
        for column in (False, True):
            k = evaluate_kernel(lam, *point, column=column)
            for v in list(k.forward.values()) + list(k.backward.values()):
                assert 0 <= v <= 1, (lam, point, column)


# -- column kernel ---------------------------------------------------------------------------------------


def test_single_box_column_kernel():
    k = kernel_col(P((1,)))
    assert rq_eq(k.forward[(0, 0)], rq("q*(1-t)/(1-q*t)"))
    assert rq_eq(k.forward[(0, 1)], rq("(1-q)/(1-q*t)"))


@pytest.mark.parametrize("lam", SMALL)
def test_column_kernel_routes_agree(lam):
    closed, inverted = kernel_col(lam), kernel_col(lam, "inversion")
    for key in closed.forward:
        assert rq_eq(closed.forward[key], inverted.forward[key])
        assert rq_eq(closed.backward[key], inverted.backward[key])


@pytest.mark.parametrize("lam", SMALL)
def test_column_kernel_at_zero_shifts_rows(lam):
    k = evaluate_kernel(lam, 0, 0, column=True)
    d = k.d
    for (r, s), v in k.forward.items():
        assert v == (s == (r - 1 if r else d))


@pytest.mark.parametrize("lam", [lam for lam in SMALL if lam])
def test_row_and_column_kernels_under_conjugation(lam):
    k, kc = kernel(lam), kernel_col(conjugate(lam))
    d = k.d
    for (r, s), v in k.forward.items():
        assert rq_eq(swap(v), kc.forward[((d + 1 - r) % (d + 1), d - s)]), (lam, r, s)


# -- specializations ---------------------------------------------------------------------------------------


@pytest.mark.parametrize("lam", partitions_up_to(5))
@pytest.mark.parametrize("which", SPECIALIZATIONS)
def test_closed_forms_match_substitution(lam, which):
    closed, subst = kernel_specialized(lam, which), substituted_kernel(lam, which)
    for key in closed.forward:
        assert closed.forward[key] == subst.forward[key] if which == "diagonal_limit_1" else rq_eq(closed.forward[key], subst.forward[key])
        assert closed.backward[key] == subst.backward[key] if which == "diagonal_limit_1" else rq_eq(closed.backward[key], subst.backward[key])


def test_q_whittaker_row_on_a_hook():
    # lam = (3,1): blocks of height one, so rows r = 1, 2 split between s = r-1 and s = r.
    k = kernel_specialized(P((3, 1)), "qWhittaker_row")
    want = {
        (0, 0): "1+0*q", (1, 0): "q", (1, 1): "1-q",
        (2, 1): "q*(1-q**2)/(1-q**3)", (2, 2): "(1-q)/(1-q**3)",
    }
    for key, v in k.forward.items():
        assert rq_eq(v, rq(want.get(key, "0*q"))), key


def test_hall_littlewood_row_on_a_column():
    # Rectangle entry (1-t^v)/(1-q^h t^v) at q = 0 with h = 1, v = 2.
    k = kernel_specialized(P((1, 1)), "HL_row")
    assert rq_eq(k.forward[(0, 0)], rq("1-t**2"))
    assert rq_eq(k.forward[(0, 1)], rq("t**2+0*q"))
    assert k.forward[(1, 0)].is_zero() and rq_eq(k.forward[(1, 1)], ONE)


@pytest.mark.parametrize("lam", SMALL)
def test_diagonal_row_zero(lam):
    k = kernel_specialized(lam, "diagonal_qt")
    h_lam = RationalQT.from_laurent(1)
    for c in lam.cells():
        h_lam = h_lam * rq(f"1-q**{cell_stats(lam, c)[2]}")
    for nu in ups(lam):
        h_nu = RationalQT.from_laurent(1)
        for c in nu.cells():
            h_nu = h_nu * rq(f"1-q**{cell_stats(nu, c)[2]}")
        exponent = n_stats(nu)[0] - n_stats(lam)[0]
        assert rq_eq(k.forward_prob(lam, nu), RationalQT.monomial(exponent, 0) * rq("1-q") * h_lam / h_nu)


def test_diagonal_limit_on_a_hook():
    lam = P((2, 1))
    # mu = (1,1), three outer corners; hooks of lam are 3,1,1.
    # Outer corners (3,1), (2,2), (2,1,1) have hook products 8, 12, 8 and corner hooks 1, 1, 3.
    got = [diagonal_limit_entry(lam, P((1, 1)), nu) for nu in ups(lam)]
    assert got == [Fraction(9, 16), Fraction(3, 8), Fraction(1, 16)]
    corollary = sum(Fraction(syt_count(P((1, 1))) * syt_count(nu), cell_stats(lam, corner_cell(lam, P((1, 1)), nu))[2] ** 2) for nu in ups(lam))
    assert corollary == Fraction(4, 3) * 4


# -- corner cell and the q = t closed form -------------------------------------------------------------------


def test_corner_cell_examples():
    assert corner_cell(P((2, 1)), P((1, 1)), P((3, 1))) == Cell(2, 1)
    assert corner_cell(P((2, 1)), P((2,)), P((2, 2))) == Cell(1, 2)
    assert corner_cell(P((2, 1)), P((2,)), P((3, 1))) == Cell(1, 1)
    with pytest.raises(NotCoverChain):
        corner_cell(P((2, 1)), P((2, 1)), P((3, 1)))


def test_signed_exponent_has_the_corner_hook_as_size():
    for lam, mu, nu in chains(7):
        assert abs(signed_hook_exponent(lam, mu, nu)) == cell_stats(lam, corner_cell(lam, mu, nu))[2]


def test_unsigned_diagonal_form_fails_exactly_for_negative_exponents():
    first = None
    for lam, mu, nu in chains(6):
        generic = rq_substitute(kernel(lam).forward_prob(mu, nu), "t_equals_q")
        ok = rq_eq(unsigned_diagonal_entry(lam, mu, nu), generic)
        assert ok == (signed_hook_exponent(lam, mu, nu) > 0)
        if not ok and first is None:
            first = (lam, mu, nu)
    assert first == (P((1,)), P(), P((2,)))


def test_smallest_negative_exponent_case():
    lam, mu, nu = P((1,)), P(), P((2,))
    assert signed_hook_exponent(lam, mu, nu) == -1
    generic = rq_substitute(kernel(lam).forward_prob(mu, nu), "t_equals_q")
    assert rq_eq(generic, rq("q/(1+q)"))
    assert rq_eq(unsigned_diagonal_entry(lam, mu, nu), rq("1/(q*(1+q))"))


# -- interpolation -------------------------------------------------------------------------------------------------


fractions = st.fractions(-5, 5, max_denominator=9)


@given(st.lists(fractions, min_size=1, max_size=5, unique=True), st.data())
def test_interpolation_identity(points, data):
    coeffs = data.draw(st.lists(fractions, min_size=1, max_size=len(points)))
    x = data.draw(fractions)
    value, interpolated = interpolation_identity(points, coeffs, x)
    assert value == interpolated
