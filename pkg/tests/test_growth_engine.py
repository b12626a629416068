from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rq
from qrst.errors import InvalidParameterRange, InvalidPermutation, ShapeMismatch, SizeBoundExceeded
from qrst.growth_engine import (
    ExactSampler,
    Permutation,
    all_permutations,
    backward_exact,
    backward_exact_growths,
    classical_rs,
    enumerate_growths,
    fgrowth,
    forward_by_insertion,
    forward_exact,
    growth_probability,
    qrst_insert,
    sample,
    sample_backward,
    sample_forward,
    transpose_tableau,
)
from qrst.macdonald_coeffs import tableau_weights
from qrst.partitions import PartialTableau, Partition, StandardTableau, partitions_of, syt_enumerate
from qrst.qt_algebra import RationalQT, rq_eq

P = Partition
T = StandardTableau.parse
ONE = RationalQT.from_laurent(1)
ZERO = RationalQT.from_laurent(0)
ROW, COL = T("1,2"), T("1;2")

permutation = st.integers(1, 5).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


def test_permutation_parsing():
    assert Permutation.parse("526134") == Permutation.parse("5,2,6,1,3,4") == Permutation((5, 2, 6, 1, 3, 4))
    assert Permutation.parse("231").inverse() == Permutation.parse("312")
    with pytest.raises(InvalidPermutation):
        Permutation((1, 3))
    assert sum(1 for _ in all_permutations(4)) == 24


# -- exact distributions -------------------------------------------------------------------------------


def test_two_box_distributions():
    d = forward_exact(Permutation.parse("12"))
    assert set(d) == {(ROW, ROW), (COL, COL)}
    assert rq_eq(d[(ROW, ROW)], rq("(1-t)/(1-q*t)"))
    assert rq_eq(d[(COL, COL)], rq("t*(1-q)/(1-q*t)"))
    d = forward_exact(Permutation.parse("21"))
    assert rq_eq(d[(ROW, ROW)], rq("q*(1-t)/(1-q*t)"))
    assert rq_eq(d[(COL, COL)], rq("(1-q)/(1-q*t)"))


@pytest.mark.parametrize("n", range(1, 5))
def test_identity_permutation_gives_equal_tableaux(n):
    d = forward_exact(Permutation.identity(n))
    assert all(p == q for p, q in d)


def test_growths_of_213():
    growths = enumerate_growths(Permutation.parse("213"))
    assert sorted(g[3, 3] for g, _ in growths) == sorted([P((3,)), P((2, 1)), P((2, 1)), P((1, 1, 1))])
    assert all(g.is_valid() for g, _ in growths)
    assert rq_eq(sum((w for _, w in growths), ZERO), ONE)


def test_square_weights_recomputed_from_labels():
    for sigma in ("231", "2413", "3142"):
        for g, w in enumerate_growths(Permutation.parse(sigma)):
            assert rq_eq(growth_probability(g), w)


@pytest.mark.parametrize("n", range(1, 5))
def test_mass_one_and_insertion_route(n):
    for sigma in all_permutations(n):
        d = forward_exact(sigma)
        assert rq_eq(d.total(), ONE)
        by_insertion = forward_by_insertion(sigma)
        assert set(by_insertion) == set(d)
        assert all(rq_eq(by_insertion[k], d[k]) for k in d)


@pytest.mark.parametrize("sigma", ["2413", "4231", "3412", "1432"])
def test_fill_order_does_not_matter(sigma):
    by_rows = forward_exact(Permutation.parse(sigma), order="row")
    by_cols = forward_exact(Permutation.parse(sigma), order="column")
    assert set(by_rows) == set(by_cols)
    assert all(rq_eq(by_rows[k], by_cols[k]) for k in by_rows)


@pytest.mark.parametrize("n", range(1, 4))
def test_backward_mass_and_compatibility(n):
    ratio = rq("(1-t)/(1-q)") ** n
    forward = {sigma: forward_exact(sigma) for sigma in all_permutations(n)}
    for lam in partitions_of(n):
        for p in syt_enumerate(lam):
            for q in syt_enumerate(lam):
                back = backward_exact(p, q)
                assert rq_eq(sum(back.values(), ZERO), ONE)
                weight = tableau_weights(p)[0] * tableau_weights(q)[1]
                for sigma, dist in forward.items():
                    assert rq_eq(ratio * dist[(p, q)], back.get(sigma, ZERO) * weight)


def test_backward_single_box():
    assert backward_exact(T("1"), T("1")) == {Permutation((1,)): ONE}
    with pytest.raises(ShapeMismatch):
        backward_exact(ROW, COL)


def test_backward_growths_are_valid():
    for g, _ in backward_exact_growths(T("1,3;2"), T("1,2;3")):
        assert g.is_valid()


def test_backward_distribution_at_a_point():
    back = backward_exact(T("1,3;2"), T("1,2;3"))
    got = {"".join(map(str, s)): v.evaluate(Fraction(1, 2), Fraction(1, 3)) for s, v in back.items()}
    assert got == {"132": Fraction(1, 6), "231": Fraction(1, 2), "312": Fraction(1, 12), "321": Fraction(1, 4)}


def test_symmetry_small():
    forward = {sigma: forward_exact(sigma) for sigma in all_permutations(3)}
    for sigma, d in forward.items():
        inv = forward[sigma.inverse()]
        assert all(rq_eq(inv[(q, p)], v) for (p, q), v in d.items())


def test_exact_size_bound():
    with pytest.raises(SizeBoundExceeded):
        forward_exact(Permutation.parse("2143"), bound=3)


# -- insertion -------------------------------------------------------------------------------------------


def test_inserting_six_into_a_two_row_tableau():
    dist = qrst_insert(PartialTableau.parse("1,3,4;2,5,7"), 6)
    want = {
        "1,3,4,6;2,5,7": "(1-t)*(1-q*t**2)/((1-q*t)*(1-q**3*t**2))",
        "1,3,4,7;2,5,6": "q*t**2*(1-q)*(1-t)/((1-q*t)*(1-q**3*t**2))",
        "1,3,4;2,5,6;7": "t*(1-q)*(1-t)/((1-q**2*t)*(1-q**3*t**2))",
        "1,3,4;2,5,7;6": "t**2*(1-q**2)*(1-q**3*t)/((1-q**2*t)*(1-q**3*t**2))",
    }
    assert {str(t) for t in dist} == set(want)
    for t, w in dist.items():
        assert rq_eq(w, rq(want[str(t)])), str(t)


def test_insert_into_empty():
    dist = qrst_insert(PartialTableau({}), 4)
    assert list(dist.values()) == [ONE] and str(next(iter(dist))) == "4"


def test_sampled_insertion_is_an_outcome():
    tab = PartialTableau.parse("1,3,4;2,5,7")
    outcomes = set(qrst_insert(tab, 6))
    for seed in range(20):
        assert qrst_insert(tab, 6, "sample", Fraction(1, 2), Fraction(1, 3), seed) in outcomes


# -- deterministic rules ---------------------------------------------------------------------------------


def test_classical_row_insertion_of_526134():
    p, q = classical_rs(Permutation.parse("526134"))
    assert (str(p), str(q)) == ("1,3,4;2,6;5", "1,3,6;2,5;4")
    assert classical_rs(Permutation.identity(4)) == (T("1,2,3,4"), T("1,2,3,4"))


def test_deterministic_growths():
    g = fgrowth(Permutation.parse("526134"))
    assert g[6, 6] == P((3, 2, 1)) and g.is_valid()
    assert (str(g.p_tableau()), str(g.q_tableau())) == ("1,3,4;2,6;5", "1,3,6;2,5;4")
    g = fgrowth(Permutation.parse("213"))
    assert g.p_tableau() == g.q_tableau() == T("1,3;2")
    assert "X" in g.to_text()


@given(permutation)
def test_deterministic_rules_and_transposition(sigma):
    p, q = classical_rs(sigma)
    g = fgrowth(sigma)
    assert (g.p_tableau(), g.q_tableau()) == (p, q)
    col = fgrowth(sigma, "F_col")
    assert (col.p_tableau(), col.q_tableau()) == (transpose_tableau(p), transpose_tableau(q))
    assert classical_rs(sigma, "column") == (transpose_tableau(p), transpose_tableau(q))
    assert classical_rs(sigma.inverse()) == (q, p)
    assert g.transpose().is_valid()


# -- sampling ------------------------------------------------------------------------------------------------


@settings(max_examples=30)
@given(permutation, st.integers(0, 2**64 - 1))
def test_zero_parameters_reproduce_classical_insertion(sigma, seed):
    p, q = classical_rs(sigma)
    assert sample_forward(sigma, 0, 0, seed) == (p, q)
    assert sample_forward(sigma, 0, 0, seed, variant="column") == (transpose_tableau(p), transpose_tableau(q))
    assert sample_backward(p, q, 0, 0, seed) == sigma


def test_526134_at_zero():
    p, q = sample(Permutation.parse("526134"), 0, 0, seed=7)
    assert (str(p), str(q)) == ("1,3,4;2,6;5", "1,3,6;2,5;4")


def test_sampling_is_deterministic_per_seed():
    sigma = Permutation.parse("35142")
    half = Fraction(1, 2)
    assert [sample_forward(sigma, half, half, s) for s in range(10)] == [sample_forward(sigma, half, half, s) for s in range(10)]
    p, q = sample_forward(sigma, half, half, 3)
    assert sample((p, q), half, half, 5, "backward") == sample_backward(p, q, half, half, 5)


def test_samples_lie_in_the_support():
    sigma = Permutation.parse("3142")
    support = set(forward_exact(sigma))
    sampler = ExactSampler(11)
    assert all(sample_forward(sigma, Fraction(2), Fraction(3), sampler) in support for _ in range(200))


def test_parameter_range():
    for qv, tv in [(Fraction(1, 2), 2), (1, 0), (-1, 0)]:
        with pytest.raises(InvalidParameterRange):
            sample_forward(Permutation.parse("21"), qv, tv, 0)


def test_column_pair_frequency_for_21():
    # P(21 -> column pair) = (1-q)/(1-qt) = 2/3 at q = t = 1/2.
    n = 100_000
    sampler = ExactSampler(2021)
    half = Fraction(1, 2)
    hits = Counter(sample_forward(Permutation.parse("21"), half, half, sampler) for _ in range(n))[(COL, COL)]
    p = 2 / 3
    assert abs(hits / n - p) <= 3 * math.sqrt(p * (1 - p) / n)
