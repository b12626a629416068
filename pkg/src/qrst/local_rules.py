"""Forward and backward transition probabilities between D*(lam) and U(lam).

Entry ``(r, s)`` of a kernel is the probability attached to the move from
``lam^(-r)`` to ``lam^(+s)``; row ``r = 0`` starts from ``lam`` itself. The
same entries are produced three independent ways (from the cell-by-cell
definition, from the boundary parameters, and in interpolation form), which
the test-suite compares exactly.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Literal

from .errors import NotCoverChain, PoleAtPoint
from .partitions import (
    Cell,
    Parameters,
    Partition,
    arm_leg,
    boundary,
    cell_stats,
    covers,
    dstar,
    hook_product,
    hook_products,
    n_stats,
    single_cell,
    ups,
)
from .macdonald_coeffs import rc_sets
from .qt_algebra import BracketProduct, LaurentPoly, RationalQT, bracket

Formulation = Literal["definition", "explicit", "lagrange"]
Specialization = Literal["qWhittaker_row", "qWhittaker_col", "HL_row", "HL_col", "diagonal_qt", "diagonal_limit_1"]
FORMULATIONS: tuple[Formulation, ...] = ("definition", "explicit", "lagrange")
SPECIALIZATIONS: tuple[Specialization, ...] = (
    "qWhittaker_row",
    "qWhittaker_col",
    "HL_row",
    "HL_col",
    "diagonal_qt",
    "diagonal_limit_1",
)

Entry = RationalQT | Fraction


@dataclass(frozen=True)
class TransitionKernel:
    """The ``(d+1) x (d+1)`` forward and backward matrices of one partition."""

    lam: Partition
    forward: dict[tuple[int, int], Entry]
    backward: dict[tuple[int, int], Entry]
    source: str = "explicit"
    brackets: dict[str, dict[tuple[int, int], BracketProduct]] = field(default_factory=dict, compare=False, repr=False)

    @property
    def d(self) -> int:
        return boundary(self.lam).d

    @property
    def ups(self) -> list[Partition]:
        return ups(self.lam)

    @property
    def dstar(self) -> list[Partition]:
        return dstar(self.lam)

    def forward_row(self, r: int) -> list[Entry]:
        return [self.forward[(r, s)] for s in range(self.d + 1)]

    def backward_col(self, s: int) -> list[Entry]:
        return [self.backward[(r, s)] for r in range(self.d + 1)]

    def forward_prob(self, mu: Partition, nu: Partition) -> Entry:
        return self.forward[(self.dstar.index(mu), self.ups.index(nu))]

    def backward_prob(self, mu: Partition, nu: Partition) -> Entry:
        return self.backward[(self.dstar.index(mu), self.ups.index(nu))]


@dataclass(frozen=True)
class AlphaBeta:
    """Building blocks of the explicit formulation, as bracket products."""

    alpha: dict[int, BracketProduct]
    alpha_bar: dict[int, BracketProduct]
    beta: dict[int, BracketProduct]
    beta_bar: dict[int, BracketProduct]
    gamma: dict[tuple[int, int], BracketProduct]
    gamma_prime: dict[tuple[int, int], BracketProduct]
    tau: dict[tuple[int, int], BracketProduct]
    tau_col: dict[tuple[int, int], BracketProduct]


# -- cell-by-cell definition ------------------------------------------------------


@lru_cache(maxsize=None)
def alpha_pair_brackets(lam: Partition, nu: Partition) -> tuple[BracketProduct, BracketProduct]:
    """``(alpha_{nu/lam}, alpha-bar_{nu/lam})`` from arms and legs."""
    if not covers(nu, lam):
        raise NotCoverChain(f"{nu} does not cover {lam}")
    r_set, c_set = rc_sets(nu, lam)
    alpha = BracketProduct.one()
    alpha_bar = BracketProduct.one()
    for c in r_set:
        al, ll = arm_leg(lam, c)
        an, ln = arm_leg(nu, c)
        alpha = alpha * bracket(al, ll + 1) / bracket(an, ln + 1)
        alpha_bar = alpha_bar * bracket(al + 1, ll) / bracket(an + 1, ln)
    for c in c_set:
        al, ll = arm_leg(lam, c)
        an, ln = arm_leg(nu, c)
        alpha = alpha * bracket(al + 1, ll) / bracket(an + 1, ln)
        alpha_bar = alpha_bar * bracket(al, ll + 1) / bracket(an, ln + 1)
    return alpha, alpha_bar


def alpha_pair(lam: Partition, nu: Partition) -> tuple[RationalQT, RationalQT]:
    a, ab = alpha_pair_brackets(Partition(lam), Partition(nu))
    return a.to_rq(), ab.to_rq()


def _n_skew(outer: Partition, inner: Partition) -> tuple[int, int]:
    no, npo = n_stats(outer)
    ni, npi = n_stats(inner)
    return no - ni, npo - npi


def definition_entry(lam: Partition, mu: Partition, nu: Partition, backward: bool = False) -> BracketProduct:
    """One forward (or backward) probability straight from the definition."""
    alpha, alpha_bar = alpha_pair_brackets(lam, nu)
    a = alpha_bar if backward else alpha
    n_up, np_up = _n_skew(nu, lam)
    if mu == lam:
        return a * BracketProduct.monomial(0, n_up)
    beta, beta_bar = (x.inverse() for x in alpha_pair_brackets(mu, lam))
    b = beta_bar if backward else beta
    n_down, np_down = _n_skew(lam, mu)
    big_a = np_down - np_up
    big_b = n_up - n_down
    gamma = bracket(big_a, big_b) * bracket(big_a + 1, big_b - 1) / (bracket(1, 0) * bracket(0, 1))
    return BracketProduct.monomial(0, n_up - n_down - 1) * a * b / gamma


def _definition_kernel(lam: Partition) -> tuple[dict, dict]:
    fwd, bwd = {}, {}
    for r, mu in enumerate(dstar(lam)):
        for s, nu in enumerate(ups(lam)):
            fwd[(r, s)] = definition_entry(lam, mu, nu)
            bwd[(r, s)] = definition_entry(lam, mu, nu, backward=True)
    return fwd, bwd


# -- boundary-parameter formulation -------------------------------------------------


def _plus(i: int, j: int) -> BracketProduct:
    return bracket(i + 1, j - 1)


def _minus(i: int, j: int) -> BracketProduct:
    return bracket(i - 1, j + 1)


@lru_cache(maxsize=None)
def alpha_beta(lam: Partition) -> AlphaBeta:
    """The explicit building blocks for ``lam`` (empty maps when ``lam`` is empty)."""
    pr = boundary(lam)
    d, hs, vs = pr.d, pr.hs, pr.vs
    one = BracketProduct.one
    alpha, alpha_bar = {}, {}
    for s in range(d + 1):
        a, ab = one(), one()
        for i in range(1, s + 1):
            a = a * bracket(hs(i, s), vs(i + 1, s)) / bracket(hs(i, s), vs(i, s))
            ab = ab * _minus(hs(i, s), vs(i + 1, s)) / _minus(hs(i, s), vs(i, s))
        for i in range(s + 1, d + 1):
            a = a * bracket(hs(s + 1, i - 1), vs(s + 1, i)) / bracket(hs(s + 1, i), vs(s + 1, i))
            ab = ab * _plus(hs(s + 1, i - 1), vs(s + 1, i)) / _plus(hs(s + 1, i), vs(s + 1, i))
        alpha[s], alpha_bar[s] = a, ab
    beta, beta_bar = {}, {}
    for r in range(1, d + 1):
        b, bb = one(), one()
        for i in range(1, r):
            b = b * _plus(hs(i, r - 1), vs(i, r)) / _plus(hs(i, r - 1), vs(i + 1, r))
            bb = bb * bracket(hs(i, r - 1), vs(i, r)) / bracket(hs(i, r - 1), vs(i + 1, r))
        b = b * _plus(0, pr.v[r - 1]) / _plus(0, 1) * _minus(pr.h[r - 1], 0) / _minus(1, 0)
        bb = bb * bracket(0, pr.v[r - 1]) / bracket(0, 1) * bracket(pr.h[r - 1], 0) / bracket(1, 0)
        for i in range(r + 1, d + 1):
            b = b * _minus(hs(r, i), vs(r + 1, i)) / _minus(hs(r, i - 1), vs(r + 1, i))
            bb = bb * bracket(hs(r, i), vs(r + 1, i)) / bracket(hs(r, i - 1), vs(r + 1, i))
        beta[r], beta_bar[r] = b, bb
    gamma, gamma_prime, tau, tau_col = {}, {}, {}, {}
    unit = bracket(0, 1) * bracket(1, 0)
    for r in range(1, d + 1):
        for s in range(d + 1):
            if r <= s:
                i, j = hs(r, s), vs(r + 1, s)
                gp = bracket(i, j) * _minus(i, j) / unit
                gamma[(r, s)] = gp
                tau[(r, s)] = BracketProduct.monomial(0, vs(r + 1, s))
                tau_col[(r, s)] = BracketProduct.monomial(-1 + hs(r, s), 1 + 2 * vs(r + 1, s))
            else:
                i, j = hs(s + 1, r - 1), vs(s + 1, r)
                gp = bracket(i, j) * _plus(i, j) / unit
                gamma[(r, s)] = gp * BracketProduct.monomial(-1 - 2 * i, 1 - 2 * j)
                tau[(r, s)] = BracketProduct.monomial(1 + 2 * i, -1 + j)
                tau_col[(r, s)] = BracketProduct.monomial(i, 0)
            gamma_prime[(r, s)] = gp
    return AlphaBeta(alpha, alpha_bar, beta, beta_bar, gamma, gamma_prime, tau, tau_col)


def _explicit_kernel(lam: Partition, column: bool = False) -> tuple[dict, dict]:
    ab = alpha_beta(lam)
    pr = boundary(lam)
    d = pr.d
    fwd, bwd = {}, {}
    for s in range(d + 1):
        lead = BracketProduct.monomial(pr.hs(s + 1, d), 0) if column else BracketProduct.monomial(0, pr.vs(1, s))
        fwd[(0, s)] = lead * ab.alpha[s]
        bwd[(0, s)] = lead * ab.alpha_bar[s]
        for r in range(1, d + 1):
            tau = (ab.tau_col if column else ab.tau)[(r, s)]
            gp = ab.gamma_prime[(r, s)]
            fwd[(r, s)] = tau * ab.alpha[s] * ab.beta[r] / gp
            bwd[(r, s)] = tau * ab.alpha_bar[s] * ab.beta_bar[r] / gp
    return fwd, bwd


# -- interpolation formulation -------------------------------------------------------


def _diff(x1: tuple[int, int], x2: tuple[int, int]) -> BracketProduct:
    """``q^a t^b - q^c t^d`` written as ``q^a t^b [c - a, d - b]``."""
    (a, b), (c, e) = x1, x2
    return BracketProduct.monomial(a, b) * bracket(c - a, e - b)


def _lagrange_kernel(lam: Partition) -> tuple[dict, dict]:
    pr = boundary(lam)
    d = pr.d
    xs = [pr.hs(1, i) for i in range(d + 1)]
    ys = [pr.vs(1, i) for i in range(d + 1)]
    a_pt = [(xs[i], ys[i]) for i in range(d + 1)]
    b_pt = [None] + [(xs[i - 1], ys[i]) for i in range(1, d + 1)]
    one = BracketProduct.one
    fwd, bwd = {}, {}
    for s in range(d + 1):
        a_s = a_pt[s]
        a_bar = (xs[s] - 1, ys[s] + 1)
        num, den = one(), one()
        num_b, den_b = one(), one()
        for i in range(1, d + 1):
            num = num * _diff(a_s, b_pt[i])
            num_b = num_b * _diff(a_bar, b_pt[i])
        for i in range(d + 1):
            if i != s:
                den = den * _diff(a_s, a_pt[i])
                den_b = den_b * _diff(a_bar, a_pt[i])
        fwd[(0, s)] = num / den
        bwd[(0, s)] = num_b / den_b
        for r in range(1, d + 1):
            b_r = (xs[r - 1] + 1, ys[r] - 1)
            b_r_bar = (xs[r - 1], ys[r])
            p, pb = one(), one()
            for i in range(d + 1):
                if i != s:
                    p = p * _diff(b_r, a_pt[i]) / _diff(a_s, a_pt[i])
                    pb = pb * _diff(b_r_bar, a_pt[i]) / _diff(a_bar, a_pt[i])
            for i in range(1, d + 1):
                if i != r:
                    p = p * _diff(a_s, b_pt[i]) / _diff(b_r, b_pt[i])
                    pb = pb * _diff(a_bar, b_pt[i]) / _diff(b_r_bar, b_pt[i])
            fwd[(r, s)] = p
            bwd[(r, s)] = pb
    return fwd, bwd


_BUILDERS: dict[str, Callable[[Partition], tuple[dict, dict]]] = {
    "definition": _definition_kernel,
    "explicit": _explicit_kernel,
    "lagrange": _lagrange_kernel,
}


@lru_cache(maxsize=None)
def kernel_brackets(lam: Partition, formulation: Formulation = "explicit") -> tuple[dict, dict]:
    """Forward and backward entries as bracket products (memoized)."""
    return _BUILDERS[formulation](Partition(lam))


@lru_cache(maxsize=None)
def kernel(lam: Partition, formulation: Formulation = "explicit") -> TransitionKernel:
    """All forward and backward probabilities of ``lam``."""
    if formulation not in _BUILDERS:
        raise ValueError(f"unknown formulation {formulation!r}")
    lam = Partition(lam)
    fwd, bwd = kernel_brackets(lam, formulation)
    return TransitionKernel(
        lam,
        {k: v.to_rq() for k, v in fwd.items()},
        {k: v.to_rq() for k, v in bwd.items()},
        formulation,
        {"forward": fwd, "backward": bwd},
    )


@lru_cache(maxsize=None)
def kernel_col(lam: Partition, route: Literal["closed_form", "inversion"] = "closed_form") -> TransitionKernel:
    """Column-insertion probabilities, i.e. the kernel at ``(1/q, 1/t)``."""
    lam = Partition(lam)
    if route == "inversion":
        k = kernel(lam)
        return TransitionKernel(
            lam,
            {key: v.substitute("invert_both") for key, v in k.forward.items()},
            {key: v.substitute("invert_both") for key, v in k.backward.items()},
            "column/inversion",
        )
    fwd, bwd = _explicit_kernel(lam, column=True)
    return TransitionKernel(
        lam,
        {k: v.to_rq() for k, v in fwd.items()},
        {k: v.to_rq() for k, v in bwd.items()},
        "column/closed_form",
        {"forward": fwd, "backward": bwd},
    )


# -- specializations ---------------------------------------------------------------------


def _q_bracket(n: int | None) -> RationalQT:
    """``1 - q^n``, where ``None`` stands for an infinite exponent."""
    if n is None:
        return RationalQT.from_laurent(1)
    return bracket(n, 0).to_rq()


def _q_pow(n: int) -> RationalQT:
    return RationalQT.monomial(n, 0)


def _h(pr: Parameters, i: int) -> int | None:
    """``h_i`` with ``h_0`` infinite."""
    return None if i == 0 else pr.h[i - 1]


def _plus1(n: int | None) -> int | None:
    return None if n is None else n + 1


def qwhittaker_row_entry(pr: Parameters, r: int, s: int) -> RationalQT:
    """Closed form of the row kernel at ``t = 0``."""
    zero, one = RationalQT.from_laurent(0), RationalQT.from_laurent(1)
    if r == 0 or pr.v[r - 1] > 1:
        return one if r == s else zero
    h_prev = _h(pr, r - 1)
    if s == r - 1:
        return _q_pow(1) * _q_bracket(h_prev) / _q_bracket(_plus1(h_prev))
    if s == r:
        return _q_bracket(1) / _q_bracket(_plus1(h_prev))
    return zero


def qwhittaker_col_entry(pr: Parameters, r: int, s: int) -> RationalQT:
    """Closed form of the column kernel at ``t = 0``."""
    zero = RationalQT.from_laurent(0)
    d = pr.d
    if r == 0:
        return _q_pow(pr.hs(s + 1, d)) * _q_bracket(_h(pr, s))
    if s >= r:
        return zero
    if pr.v[r - 1] > 1:
        return _q_pow(pr.hs(s + 1, r - 1)) * _q_bracket(_h(pr, s))
    h_prev = _h(pr, r - 1)
    if s == r - 1:
        return _q_bracket(h_prev) / _q_bracket(_plus1(h_prev))
    return _q_pow(pr.hs(s + 1, r - 1)) * _q_bracket(1) * _q_bracket(_h(pr, s)) / _q_bracket(_plus1(h_prev))


def corner_cell(lam: Partition, mu: Partition, nu: Partition) -> Cell:
    """The cell of ``lam`` where the row of one changed cell meets the column of the other."""
    if not (covers(lam, mu) and covers(nu, lam)):
        raise NotCoverChain("expected mu < lam < nu, each a cover")
    i1, j1 = single_cell(nu, lam)
    i2, j2 = single_cell(lam, mu)
    c1, c2 = Cell(i1, j2), Cell(i2, j1)
    return c1 if c1 in lam else c2


def diagonal_qt_entry(lam: Partition, mu: Partition, nu: Partition) -> RationalQT:
    """Closed form of a forward probability at ``q = t``, univariate in q."""
    h_lam, h_nu = hook_products(lam)[1], hook_products(nu)[1]
    n_up = _n_skew(nu, lam)[0]
    if mu == lam:
        return _q_pow(n_up) * _q_bracket(1) * h_lam / h_nu
    h_mu = hook_products(mu)[1]
    n_down, np_down = _n_skew(lam, mu)
    np_up = _n_skew(nu, lam)[1]
    hook = cell_stats(lam, corner_cell(lam, mu, nu))[2]
    # gamma(q,q) = [A+B]^2/[1]^2 needs an extra q^(2h) when A+B = -h < 0.
    shift = 2 * hook if (np_down - np_up) + (n_up - n_down) < 0 else 0
    return _q_pow(n_up - n_down - 1 + shift) * h_lam * h_lam / (h_mu * h_nu) * (_q_bracket(1) / _q_bracket(hook)) ** 2


def diagonal_limit_entry(lam: Partition, mu: Partition, nu: Partition) -> Fraction:
    """The ``q = t -> 1`` limit of a forward probability, via hook lengths."""
    h_lam, h_nu = hook_product(lam), hook_product(nu)
    if mu == lam:
        return Fraction(h_lam, h_nu)
    hook = cell_stats(lam, corner_cell(lam, mu, nu))[2]
    return Fraction(h_lam * h_lam, hook_product(mu) * h_nu * hook * hook)


def _conjugate_index(d: int, r: int, s: int) -> tuple[int, int]:
    return (d + 1 - r) % (d + 1), d - s


@lru_cache(maxsize=None)
def kernel_specialized(lam: Partition, spec: Specialization) -> TransitionKernel:
    """Closed-form specialized kernel.

    Forward entries come from closed forms. Backward entries are the
    forward ones for the two diagonal cases (the weights collapse to 1
    there) and otherwise the specialized generic backward kernel.
    """
    lam = Partition(lam)
    pr = boundary(lam)
    d = pr.d
    idx = [(r, s) for r in range(d + 1) for s in range(d + 1)]
    if not lam:
        one = Fraction(1) if spec == "diagonal_limit_1" else RationalQT.from_laurent(1)
        return TransitionKernel(lam, {(0, 0): one}, {(0, 0): one}, spec)
    mus, nus = dstar(lam), ups(lam)
    if spec == "qWhittaker_row":
        fwd = {(r, s): qwhittaker_row_entry(pr, r, s) for r, s in idx}
        bwd = {k: v.substitute("t_to_zero") for k, v in kernel(lam).backward.items()}
    elif spec == "qWhittaker_col":
        fwd = {(r, s): qwhittaker_col_entry(pr, r, s) for r, s in idx}
        bwd = {k: v.substitute("t_to_zero") for k, v in kernel_col(lam).backward.items()}
    elif spec == "HL_row":
        prc = boundary(lam.conjugate())
        fwd = {(r, s): qwhittaker_col_entry(prc, *_conjugate_index(d, r, s)).substitute("swap_qt") for r, s in idx}
        bwd = {k: v.substitute("q_to_zero") for k, v in kernel(lam).backward.items()}
    elif spec == "HL_col":
        prc = boundary(lam.conjugate())
        fwd = {(r, s): qwhittaker_row_entry(prc, *_conjugate_index(d, r, s)).substitute("swap_qt") for r, s in idx}
        bwd = {k: v.substitute("q_to_zero") for k, v in kernel_col(lam).backward.items()}
    elif spec == "diagonal_qt":
        fwd = {(r, s): diagonal_qt_entry(lam, mus[r], nus[s]) for r, s in idx}
        bwd = dict(fwd)
    elif spec == "diagonal_limit_1":
        fwd = {(r, s): diagonal_limit_entry(lam, mus[r], nus[s]) for r, s in idx}
        bwd = dict(fwd)
    else:
        raise ValueError(f"unknown specialization {spec!r}")
    return TransitionKernel(lam, fwd, bwd, spec)


def substituted_kernel(lam: Partition, spec: Specialization) -> TransitionKernel:
    """The same specialization obtained from the generic kernel by substitution or limit."""
    lam = Partition(lam)
    base = kernel_col(lam) if spec in ("qWhittaker_col", "HL_col") else kernel(lam)
    if spec == "diagonal_limit_1":
        conv: Callable = RationalQT.limit_q1_diagonal
    else:
        mode = {
            "qWhittaker_row": "t_to_zero",
            "qWhittaker_col": "t_to_zero",
            "HL_row": "q_to_zero",
            "HL_col": "q_to_zero",
            "diagonal_qt": "t_equals_q",
        }[spec]

        def conv(v: RationalQT) -> RationalQT:
            return v.substitute(mode)

    return TransitionKernel(
        lam,
        {k: conv(v) for k, v in base.forward.items()},
        {k: conv(v) for k, v in base.backward.items()},
        f"substituted/{spec}",
    )


def evaluate_kernel(lam: Partition, qv, tv, column: bool = False) -> TransitionKernel:
    """Numeric kernel at a rational point, from the bracket form."""
    lam = Partition(lam)
    if column:
        fwd, bwd = _explicit_kernel(lam, column=True)
        reduced = kernel_col(lam)
    else:
        fwd, bwd = kernel_brackets(lam, "explicit")
        reduced = kernel(lam)

    def value(v: BracketProduct, exact: RationalQT) -> Fraction:
        # A bracket such as [1,-1] vanishes on q = t although the entry is finite.
        try:
            return Fraction(v.evaluate(qv, tv))
        except PoleAtPoint:
            return Fraction(exact.evaluate(qv, tv))

    return TransitionKernel(
        lam,
        {k: value(v, reduced.forward[k]) for k, v in fwd.items()},
        {k: value(v, reduced.backward[k]) for k, v in bwd.items()},
        f"numeric q={qv} t={tv}",
    )


def row_sums(k: TransitionKernel) -> list:
    d = k.d
    return [sum((k.forward[(r, s)] for s in range(d + 1)), RationalQT.from_laurent(0)) for r in range(d + 1)]


def col_sums(k: TransitionKernel) -> list:
    d = k.d
    return [sum((k.backward[(r, s)] for r in range(d + 1)), RationalQT.from_laurent(0)) for s in range(d + 1)]


def interpolation_identity(points: list[Fraction], coeffs: list[Fraction], x: Fraction) -> tuple[Fraction, Fraction]:
    """Return ``(f(x), I_f(x))`` for the polynomial with ``coeffs`` and nodes ``points``."""

    def f(z: Fraction) -> Fraction:
        return sum((c * z**k for k, c in enumerate(coeffs)), Fraction(0))

    total = Fraction(0)
    for s, a_s in enumerate(points):
        term = f(a_s)
        for i, a_i in enumerate(points):
            if i != s:
                term *= (x - a_i) / (a_s - a_i)
        total += term
    return f(x), total


__all__ = [
    "AlphaBeta",
    "FORMULATIONS",
    "SPECIALIZATIONS",
    "TransitionKernel",
    "alpha_beta",
    "alpha_pair",
    "corner_cell",
    "kernel",
    "kernel_col",
    "kernel_specialized",
    "substituted_kernel",
]
