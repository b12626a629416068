"""Executable identity suite.

Each ``check_*`` function runs one family of identities over a bounded range
of instances and returns a :class:`CheckReport`. Everything is exact: rational
functions are compared under ``rq_eq`` and ``q = t -> 1`` limits are computed
symbolically. A failing report carries the first offending instance as JSON.
"""

from __future__ import annotations

import json
import math
from collections.abc import Callable, Iterable
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any, Literal

from .errors import SizeBoundExceeded
from .growth_engine import (
    Permutation,
    _f_index,
    all_permutations,
    backward_exact,
    classical_rs,
    fgrowth,
    forward_by_insertion,
    forward_exact,
    sample,
    sample_forward,
    transpose_tableau,
)
from .hook_walk import (
    absorption_exact,
    axis_closed_forms,
    canonical_start,
    exterior_cells,
    gnw_absorption,
    hook_ratio,
    is_outer_corner,
    qt_step_distribution,
    walk_sample,
)
from .local_rules import (
    FORMULATIONS,
    SPECIALIZATIONS,
    _n_skew,
    alpha_pair,
    corner_cell,
    evaluate_kernel,
    kernel,
    kernel_col,
    kernel_specialized,
    substituted_kernel,
)
from .macdonald_coeffs import down_coefficients, macdonald_eval, tableau_weights, up_coefficients, weights
from .partitions import (
    Partition,
    cell_stats,
    dstar,
    hook_product,
    hook_products,
    n_stats,
    partitions_of,
    partitions_up_to,
    single_cell,
    syt_count,
    syt_enumerate,
    ups,
)
from .qt_algebra import RationalQT, bracket, rq_eq, rq_limit_q1_diagonal

Status = Literal["pass", "fail"]

KERNEL_BOUND = 8
GROWTH_BOUND = 5

ZERO = RationalQT.from_laurent(0)
ONE = RationalQT.from_laurent(1)
Q = RationalQT.q()


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one named check."""

    name: str
    range: str
    status: Status
    witness: str | None = None
    instances: int = 0

    def __post_init__(self) -> None:
        if self.status not in ("pass", "fail"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and not self.witness:
            raise ValueError("a failing report needs a witness")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_obj(self) -> dict[str, Any]:
        return asdict(self)


def _show(x: object) -> object:
    if isinstance(x, (RationalQT, Fraction, Partition, Permutation)):
        return str(x)
    if isinstance(x, (tuple, list)):
        return [_show(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _show(v) for k, v in x.items()}
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return str(x)


class _Tally:
    """Counts assertions and keeps the first failure."""

    def __init__(self, name: str, range_text: str) -> None:
        self.name = name
        self.range = range_text
        self.count = 0
        self.witness: dict[str, Any] | None = None

    @property
    def failed(self) -> bool:
        return self.witness is not None

    def expect(self, ok: bool, identity: str, **instance: object) -> bool:
        self.count += 1
        if not ok and self.witness is None:
            self.witness = {"identity": identity, **{k: _show(v) for k, v in instance.items()}}
        return ok

    def equal(self, got: object, want: object, identity: str, **instance: object) -> bool:
        if isinstance(got, RationalQT) and isinstance(want, RationalQT):
            ok = rq_eq(got, want)
        else:
            ok = got == want
        return self.expect(ok, identity, got=got, want=want, **instance)

    def report(self) -> CheckReport:
        if self.witness is None:
            return CheckReport(self.name, self.range, "pass", None, self.count)
        return CheckReport(self.name, self.range, "fail", json.dumps(self.witness, sort_keys=True), self.count)


def _bound(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise SizeBoundExceeded(f"{what} = {value} exceeds the bound {limit}")
    if value < 0:
        raise ValueError(f"{what} must be nonnegative")


def _sum(values: Iterable[RationalQT]) -> RationalQT:
    total = ZERO
    for v in values:
        total = total + v
    return total


def _ratio() -> RationalQT:
    """``(1 - t) / (1 - q)``."""
    return (bracket(0, 1) / bracket(1, 0)).to_rq()


# -- commutation relation --------------------------------------------------------------------


def _apply(op: Callable[[Partition], dict], vector: dict[Partition, RationalQT]) -> dict[Partition, RationalQT]:
    out: dict[Partition, RationalQT] = {}
    for lam, coef in vector.items():
        for image, c in op(lam).items():
            term = coef * c.to_rq()
            out[image] = out[image] + term if image in out else term
    return out


def check_commutator(max_n: int = 7) -> CheckReport:
    """``(DU - UD) lam = (1-t)/(1-q) lam`` with ``U`` weighted by psi and ``D`` by phi."""
    _bound(max_n, KERNEL_BOUND, "maxN")
    tally = _Tally("commutator", f"all lambda with |lambda| <= {max_n}; U, D on sizes <= {max_n + 1}")
    ratio = _ratio()
    for lam in partitions_up_to(max_n):
        start = {lam: ONE}
        du = _apply(down_coefficients, _apply(up_coefficients, start))
        ud = _apply(up_coefficients, _apply(down_coefficients, start))
        for rho in partitions_of(lam.size):
            value = du.get(rho, ZERO) - ud.get(rho, ZERO)
            tally.equal(value, ratio if rho == lam else ZERO, "<(DU-UD)lambda, rho>", lam=lam, rho=rho)
            if tally.failed:
                return tally.report()
    return tally.report()


# -- squarefree Cauchy identity ---------------------------------------------------------------


def check_cauchy_squarefree(n: int = 4) -> CheckReport:
    """Aggregate identity and its refinement to each pair ``(P, Q)``."""
    _bound(n, 4, "n")
    tally = _Tally("cauchy_squarefree", f"n <= {n}: aggregate sum and every (P, Q)")
    ratio = _ratio()
    for k in range(n + 1):
        scale = ratio**k
        tableaux = {lam: syt_enumerate(lam) for lam in partitions_of(k)}
        weight = {t: tableau_weights(t) for ts in tableaux.values() for t in ts}
        aggregate = _sum(weight[p][0] * weight[qq][1] for ts in tableaux.values() for p in ts for qq in ts)
        tally.equal(aggregate, scale * math.factorial(k), "sum psi_P phi_Q = n! ((1-t)/(1-q))^n", n=k)
        dists = [forward_exact(sigma) for sigma in all_permutations(k)]
        for ts in tableaux.values():
            for p in ts:
                for qq in ts:
                    mass = _sum(d[(p, qq)] for d in dists)
                    tally.equal(scale * mass, weight[p][0] * weight[qq][1], "refinement", P=p, Q=qq)
        if tally.failed:
            break
    return tally.report()


def two_box_values() -> dict[str, RationalQT]:
    """The four ``n = 2`` transition probabilities and the two pair weights, recomputed."""
    row = syt_enumerate(Partition((2,)))[0]
    col = syt_enumerate(Partition((1, 1)))[0]
    out: dict[str, RationalQT] = {}
    for sigma in ("12", "21"):
        d = forward_exact(Permutation.parse(sigma))
        out[f"{sigma}->row"] = d[(row, row)]
        out[f"{sigma}->column"] = d[(col, col)]
    for name, t in (("row", row), ("column", col)):
        psi, phi = tableau_weights(t)
        out[f"weight:{name}"] = psi * phi
    return out


def two_box_expected() -> dict[str, RationalQT]:
    def b(i: int, j: int) -> RationalQT:
        return bracket(i, j).to_rq()

    t = RationalQT.t()
    return {
        "12->row": b(0, 1) / b(1, 1),
        "12->column": t * b(1, 0) / b(1, 1),
        "21->row": Q * b(0, 1) / b(1, 1),
        "21->column": b(1, 0) / b(1, 1),
        "weight:row": b(0, 1) ** 3 * b(2, 0) / (b(1, 0) ** 3 * b(1, 1)),
        "weight:column": b(0, 1) * b(0, 2) / (b(1, 0) * b(1, 1)),
    }


# -- kernel laws -------------------------------------------------------------------------------------


def check_kernel_laws(max_n: int = 8) -> CheckReport:
    """Stochasticity, agreement of formulations, and weight compatibility."""
    _bound(max_n, KERNEL_BOUND, "maxN")
    tally = _Tally("kernel_laws", f"all lambda with |lambda| <= {max_n}")
    for lam in partitions_up_to(max_n):
        k = kernel(lam)
        d = k.d
        for r in range(d + 1):
            tally.equal(_sum(k.forward_row(r)), ONE, "forward row sums to 1", lam=lam, r=r)
        for s in range(d + 1):
            tally.equal(_sum(k.backward_col(s)), ONE, "backward column sums to 1", lam=lam, s=s)
        for formulation in FORMULATIONS:
            other = kernel(lam, formulation)
            for key in k.forward:
                tally.equal(other.forward[key], k.forward[key], f"forward {formulation} = explicit", lam=lam, rs=key)
                tally.equal(other.backward[key], k.backward[key], f"backward {formulation} = explicit", lam=lam, rs=key)
        omega, omega_bar = weights(lam)
        for mu in dstar(lam):
            for nu in ups(lam):
                tally.equal(
                    omega[mu] * k.forward_prob(mu, nu),
                    k.backward_prob(mu, nu) * omega_bar[nu],
                    "omega(mu) p(mu->nu) = pbar(mu<-nu) omegabar(nu)",
                    lam=lam,
                    mu=mu,
                    nu=nu,
                )
        closed, inverted = kernel_col(lam), kernel_col(lam, "inversion")
        for key in closed.forward:
            tally.equal(closed.forward[key], inverted.forward[key], "column kernel: closed form = inversion", lam=lam, rs=key)
            tally.equal(closed.backward[key], inverted.backward[key], "column kernel backward routes", lam=lam, rs=key)
        if tally.failed:
            break
    return tally.report()


# -- specializations --------------------------------------------------------------------------------


def check_specializations(max_n: int = 7) -> CheckReport:
    """Closed-form specialized kernels against substitution into the generic one."""
    _bound(max_n, KERNEL_BOUND, "maxN")
    tally = _Tally("specializations", f"all lambda with |lambda| <= {max_n}, {len(SPECIALIZATIONS)} specializations")
    for lam in partitions_up_to(max_n):
        for spec in SPECIALIZATIONS:
            closed, subst = kernel_specialized(lam, spec), substituted_kernel(lam, spec)
            for key in closed.forward:
                tally.equal(closed.forward[key], subst.forward[key], f"{spec} forward", lam=lam, rs=key)
                tally.equal(closed.backward[key], subst.backward[key], f"{spec} backward", lam=lam, rs=key)
        d = len(ups(lam)) - 1
        for rules, column in (("F_row", False), ("F_col", True)):
            at_zero = evaluate_kernel(lam, 0, 0, column=column)
            for (r, s), v in at_zero.forward.items():
                want = Fraction(int(s == _f_index(rules, d, r)))
                tally.equal(v, want, f"kernel at q=t=0 is the {rules} matrix", lam=lam, rs=(r, s))
        if tally.failed:
            break
    return tally.report()


def unsigned_diagonal_entry(lam: Partition, mu: Partition, nu: Partition) -> RationalQT:
    """The ``q = t`` closed form with the unsigned hook in the denominator, for ``mu`` in D(lam).

    It disagrees with the generic kernel whenever the signed exponent below is
    negative; kept so tests can pin the discrepancy down.
    """
    h_lam, h_nu, h_mu = hook_products(lam)[1], hook_products(nu)[1], hook_products(mu)[1]
    n_up, n_down = _n_skew(nu, lam)[0], _n_skew(lam, mu)[0]
    hook = cell_stats(lam, corner_cell(lam, mu, nu))[2]
    return Q ** (n_up - n_down - 1) * h_lam * h_lam / (h_mu * h_nu) * (_one_minus_q(1) / _one_minus_q(hook)) ** 2


def signed_hook_exponent(lam: Partition, mu: Partition, nu: Partition) -> int:
    """``n'(lam/mu) - n'(nu/lam) + n(nu/lam) - n(lam/mu)``; its absolute value is the hook of ``c_{mu,nu}``."""
    n_down, np_down = _n_skew(lam, mu)
    n_up, np_up = _n_skew(nu, lam)
    return np_down - np_up + n_up - n_down


# -- symmetry -----------------------------------------------------------------------------------------


def check_symmetry(n: int = 4) -> CheckReport:
    """``P(sigma -> P, Q) = P(sigma^-1 -> Q, P)``."""
    _bound(n, GROWTH_BOUND, "n")
    tally = _Tally("symmetry", f"all sigma in S_{n}")
    dists = {sigma: forward_exact(sigma) for sigma in all_permutations(n)}
    for sigma, dist in dists.items():
        inv = dists[sigma.inverse()]
        keys = set(dist) | {(qq, p) for p, qq in inv}
        for p, qq in keys:
            tally.equal(dist[(p, qq)], inv[(qq, p)], "P(sigma->P,Q) = P(sigma^-1->Q,P)", sigma=sigma, P=p, Q=qq)
        if tally.failed:
            break
    return tally.report()


# -- Plancherel -----------------------------------------------------------------------------------------


def _one_minus_q(k: int) -> RationalQT:
    return bracket(k, 0).to_rq()


def q_plancherel(lam: Partition) -> RationalQT:
    """``q^{n(lam)} (1-q)^{|lam|} f_lam / H_lam(q)``."""
    return Q ** n_stats(lam)[0] * _one_minus_q(1) ** lam.size * syt_count(lam) / hook_products(lam)[1]


def check_plancherel(n: int = 5) -> CheckReport:
    """Insertion of the identity: exact probabilities, ``q = t`` masses, and the ``q = t -> 1`` limit."""
    _bound(n, GROWTH_BOUND, "n")
    tally = _Tally("plancherel", f"identity permutation of size <= {n}")
    for k in range(n + 1):
        dist = forward_exact(Permutation.identity(k))
        masses: dict[Partition, RationalQT] = {}
        for lam in partitions_of(k):
            for p in syt_enumerate(lam):
                for qq in syt_enumerate(lam):
                    if p != qq:
                        tally.equal(dist[(p, qq)], ZERO, "P(id->P,Q) = 0 for P != Q", P=p, Q=qq)
            closed_diag = Q ** n_stats(lam)[0] * _one_minus_q(1) ** k / hook_products(lam)[1]
            for p in syt_enumerate(lam):
                value = dist[(p, p)]
                generic = RationalQT.t() ** n_stats(lam)[0]
                for a, b in zip(p.chain, p.chain[1:]):
                    generic = generic * alpha_pair(a, b)[0]
                tally.equal(value, generic, "P(id->P,P) = t^n(lam) prod alpha", P=p)
                tally.equal(value.substitute("t_equals_q"), closed_diag, "q=t value", P=p)
                tally.equal(rq_limit_q1_diagonal(value), Fraction(1, hook_product(lam)), "q=t->1 limit 1/H", P=p)
            masses[lam] = _sum(dist[(p, p)] for p in syt_enumerate(lam)).substitute("t_equals_q")
            tally.equal(masses[lam], q_plancherel(lam), "q=t mass per shape is q-Plancherel", lam=lam)
        tally.equal(_sum(masses.values()), ONE, "q-Plancherel masses sum to 1", n=k)
        if tally.failed:
            break
    return tally.report()


# -- hook walks ----------------------------------------------------------------------------------------


def check_hookwalk(max_n: int = 8, reach: int = 2) -> CheckReport:
    """Absorption law, product property, axis closed forms, and the uniform limit."""
    _bound(max_n, KERNEL_BOUND, "maxN")
    tally = _Tally("hookwalk", f"all lambda with |lambda| <= {max_n}, offsets <= {reach}")
    for lam in partitions_up_to(max_n):
        for c in exterior_cells(lam, 1):
            if not is_outer_corner(lam, c):
                tally.equal(_sum(qt_step_distribution(lam, c).values()), ONE, "step probabilities sum to 1", lam=lam, cell=c)
        row = dict(zip(ups(lam), kernel(lam).forward_row(0)))
        start = canonical_start(lam)
        absorbed = absorption_exact(lam, start)
        for nu in ups(lam):
            tally.equal(absorbed[nu], row[nu], "absorption = r=0 kernel row", lam=lam, nu=nu, start=start)
            x, y = single_cell(nu, lam)

            def at(c: tuple[int, int], nu: Partition = nu) -> RationalQT:
                return absorption_exact(lam, c)[nu]

            for u in range(reach + 1):
                if u:
                    tally.equal(axis_closed_forms(lam, nu, u, "row"), at((x + u, y)), "row closed form", lam=lam, nu=nu, u=u)
                    tally.equal(axis_closed_forms(lam, nu, u, "column"), at((x, y + u)), "column closed form", lam=lam, nu=nu, v=u)
                for v in range(reach + 1):
                    tally.equal(at((x + u, y + v)), at((x + u, y)) * at((x, y + v)), "product property", lam=lam, nu=nu, u=u, v=v)
        tally.equal(walk_sample(lam, start, 0, 0, 0), ups(lam)[0], "q=t=0 walk ends in the bottom row", lam=lam)
        uniform = gnw_absorption(lam, start)
        for nu in ups(lam):
            tally.equal(uniform[nu], hook_ratio(lam, nu), "uniform walk lands at nu with H_lam/H_nu", lam=lam, nu=nu)
            tally.equal(rq_limit_q1_diagonal(absorbed[nu]), hook_ratio(lam, nu), "q=t->1 limit of absorption", lam=lam, nu=nu)
        if tally.failed:
            break
    return tally.report()


# -- hook-length identities ------------------------------------------------------------------------------


def ps_schur(lam: Partition) -> RationalQT:
    """Principal specialization ``s_lam(1, q, q^2, ...) = q^{n(lam)} / H_lam(q)``."""
    return Q ** n_stats(lam)[0] / hook_products(lam)[1]


def _ps_pair_term(lam: Partition, mu: Partition, nu: Partition, signed: bool) -> RationalQT:
    if signed:
        e = signed_hook_exponent(lam, mu, nu)
        denom = _one_minus_q(e) if e > 0 else Q**e * -1 * _one_minus_q(-e)
    else:
        denom = _one_minus_q(cell_stats(lam, corner_cell(lam, mu, nu))[2])
    return ps_schur(mu) * ps_schur(nu) / denom**2


def ps_identity_sides(lam: Partition, which: Literal["pieri", "down", "up"], other: Partition | None = None, signed: bool = True) -> tuple[RationalQT, RationalQT]:
    """Left and right sides of the principal-specialization identities.

    ``signed=True`` uses ``1 - q^e`` with ``e`` the signed hook exponent;
    ``signed=False`` uses the hook length itself.
    """
    ps_lam = ps_schur(lam)
    rhs = Q / _one_minus_q(1) ** 2 * ps_lam * ps_lam
    if which == "pieri":
        return _sum(ps_schur(nu) for nu in ups(lam)), ps_lam / _one_minus_q(1)
    if which == "down":
        return _sum(_ps_pair_term(lam, other, nu, signed) for nu in ups(lam)), rhs
    if which == "up":
        head = Q / _one_minus_q(1) * ps_lam * ps_schur(other)
        return head + _sum(_ps_pair_term(lam, mu, other, signed) for mu in dstar(lam)[1:]), rhs
    raise ValueError(f"unknown identity {which!r}")


PS_VARIABLES = 3
PS_POINT = Fraction(1, 3)


def finite_ps_schur(lam: Partition, k: int, qv: Fraction) -> Fraction:
    """``s_lam(1, q, ..., q^(k-1))`` by the content-hook product."""
    out = qv ** n_stats(lam)[0]
    for x, y in lam.cells():
        out *= (1 - qv ** (k + x - y)) / (1 - qv ** cell_stats(lam, (x, y))[2])
    return out


def _corner_hook(lam: Partition, mu: Partition, nu: Partition) -> int:
    return cell_stats(lam, corner_cell(lam, mu, nu))[2]


def check_corollaries(max_n: int = 8) -> CheckReport:
    """Hook-length identities at ``q = t -> 1`` and their principal-specialization analogues."""
    _bound(max_n, KERNEL_BOUND, "maxN")
    tally = _Tally("corollaries", f"all lambda with 1 <= |lambda| <= {max_n}")
    for lam in partitions_up_to(max_n):
        if not lam:
            continue
        n = lam.size
        f = syt_count
        target = Fraction(n + 1, n) * f(lam) ** 2
        downs_ = dstar(lam)[1:]
        for mu in downs_:
            lhs = sum(Fraction(f(mu) * f(nu), _corner_hook(lam, mu, nu) ** 2) for nu in ups(lam))
            tally.equal(lhs, target, "sum_nu f_mu f_nu / h^2 = (n+1)/n f_lam^2", lam=lam, mu=mu)
        for nu in ups(lam):
            lhs = Fraction(f(lam) * f(nu), n) + sum(Fraction(f(mu) * f(nu), _corner_hook(lam, mu, nu) ** 2) for mu in downs_)
            tally.equal(lhs, target, "f_lam f_nu / n + sum_mu f_mu f_nu / h^2 = (n+1)/n f_lam^2", lam=lam, nu=nu)
        tally.equal(sum(hook_ratio(lam, nu) for nu in ups(lam)), Fraction(1), "sum_nu H_lam/H_nu = 1", lam=lam)
        tally.equal(*ps_identity_sides(lam, "pieri"), "principal-specialized Pieri rule", lam=lam)
        tally.equal(
            macdonald_eval(lam, "P", [PS_POINT**i for i in range(PS_VARIABLES)], PS_POINT, PS_POINT),
            finite_ps_schur(lam, PS_VARIABLES, PS_POINT),
            "P_lam(1, q, q^2; q, q) = finite principal specialization of s_lam",
            lam=lam,
        )
        for mu in downs_:
            tally.equal(*ps_identity_sides(lam, "down", mu), "ps identity over U(lam), signed exponent", lam=lam, mu=mu)
        for nu in ups(lam):
            tally.equal(*ps_identity_sides(lam, "up", nu), "ps identity over D(lam), signed exponent", lam=lam, nu=nu)
        if tally.failed:
            break
    return tally.report()


# -- degeneration to classical insertion ----------------------------------------------------------------


def check_degeneration(n: int = 6) -> CheckReport:
    """``q = t = 0`` sampling is row insertion; the column variant is column insertion."""
    _bound(n, 8, "n")
    tally = _Tally("degeneration", f"all sigma in S_{n}")
    for sigma in all_permutations(n):
        rs_row, rs_col = classical_rs(sigma, "row"), classical_rs(sigma, "column")
        tally.equal(sample_forward(sigma, 0, 0, 0), rs_row, "q=t=0 sample = row insertion", sigma=sigma)
        tally.equal(sample_forward(sigma, 0, 0, 0, variant="column"), rs_col, "column variant at 0 = column insertion", sigma=sigma)
        tally.equal(sample(rs_row, 0, 0, 0, "backward"), sigma, "q=t=0 backward sample inverts row insertion", sigma=sigma)
        conjugated = tuple(transpose_tableau(x) for x in rs_row)
        tally.equal(rs_col, conjugated, "column insertion = conjugated row insertion", sigma=sigma)
        g = fgrowth(sigma, "F_row")
        tally.equal((g.p_tableau(), g.q_tableau()), rs_row, "F_row growth = row insertion", sigma=sigma)
        g = fgrowth(sigma, "F_col")
        tally.equal((g.p_tableau(), g.q_tableau()), rs_col, "F_col growth = column insertion", sigma=sigma)
        if tally.failed:
            break
    return tally.report()


# -- growth engine consistency -----------------------------------------------------------------------


def check_growth_consistency(n: int = 4) -> CheckReport:
    """Mass one, agreement with recursive insertion, fill-order independence, backward sums."""
    _bound(n, GROWTH_BOUND, "n")
    tally = _Tally("growth_consistency", f"all sigma in S_k, k <= {n}")
    for k in range(n + 1):
        dists = {}
        for sigma in all_permutations(k):
            dist = forward_exact(sigma)
            dists[sigma] = dist
            tally.equal(dist.total(), ONE, "forward mass is 1", sigma=sigma)
            by_insertion = forward_by_insertion(sigma)
            by_column = forward_exact(sigma, order="column")
            for key in set(dist) | set(by_insertion) | set(by_column):
                tally.equal(by_insertion[key], dist[key], "growth = recursive insertion", sigma=sigma, pair=key)
                tally.equal(by_column[key], dist[key], "row fill order = column fill order", sigma=sigma, pair=key)
        pairs = {pq for d in dists.values() for pq in d}
        for p, qq in pairs:
            back = backward_exact(p, qq)
            tally.equal(_sum(back.values()), ONE, "backward mass is 1", P=p, Q=qq)
        if tally.failed:
            break
    return tally.report()


CHECKS: dict[str, Callable[..., CheckReport]] = {
    "commutator": check_commutator,
    "cauchy_squarefree": check_cauchy_squarefree,
    "kernel_laws": check_kernel_laws,
    "specializations": check_specializations,
    "symmetry": check_symmetry,
    "plancherel": check_plancherel,
    "hookwalk": check_hookwalk,
    "corollaries": check_corollaries,
    "degeneration": check_degeneration,
    "growth_consistency": check_growth_consistency,
}

# Which size argument each check takes: "max_n" (partition size) or "n" (permutation size).
SIZE_ARGUMENT = {
    "commutator": "max_n",
    "kernel_laws": "max_n",
    "specializations": "max_n",
    "hookwalk": "max_n",
    "corollaries": "max_n",
    "cauchy_squarefree": "n",
    "symmetry": "n",
    "plancherel": "n",
    "degeneration": "n",
    "growth_consistency": "n",
}

# Public operations each check exercises; the test-suite asserts the union is complete.
COVERAGE: dict[str, tuple[str, ...]] = {
    "commutator": ("up_coefficients", "down_coefficients", "rq_eq"),
    "cauchy_squarefree": ("tableau_weights", "syt_enumerate", "forward_exact", "all_permutations"),
    "kernel_laws": ("kernel", "kernel_col", "weights"),
    "specializations": ("kernel_specialized", "substituted_kernel", "rq_substitute", "evaluate_kernel"),
    "symmetry": ("forward_exact", "Permutation.inverse"),
    "plancherel": ("alpha_pair", "rq_limit_q1_diagonal", "hook_products", "syt_count"),
    "hookwalk": (
        "absorption_exact",
        "qt_step_distribution",
        "axis_closed_forms",
        "gnw_absorption",
        "canonical_start",
        "exterior_cells",
        "walk_sample",
    ),
    "corollaries": ("corner_cell", "syt_count", "hook_ratio", "ps_schur", "macdonald_eval"),
    "degeneration": ("sample_forward", "sample", "classical_rs", "fgrowth", "transpose_tableau"),
    "growth_consistency": ("forward_by_insertion", "backward_exact", "forward_exact"),
}


def run_check(name: str, size: int | None = None) -> CheckReport:
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; choose from {sorted(CHECKS)}")
    if size is None:
        return CHECKS[name]()
    return CHECKS[name](**{SIZE_ARGUMENT[name]: size})


def run_all(max_size: int | None = None, n: int | None = None) -> list[CheckReport]:
    """Every check, in name order; ``max_size`` bounds partitions and ``n`` bounds permutations."""
    reports = []
    for name in sorted(CHECKS):
        size = max_size if SIZE_ARGUMENT[name] == "max_n" else n
        reports.append(run_check(name, size))
    return reports


__all__ = [
    "CHECKS",
    "COVERAGE",
    "CheckReport",
    "check_cauchy_squarefree",
    "check_commutator",
    "check_corollaries",
    "check_degeneration",
    "check_growth_consistency",
    "check_hookwalk",
    "check_kernel_laws",
    "check_plancherel",
    "check_specializations",
    "check_symmetry",
    "finite_ps_schur",
    "two_box_expected",
    "two_box_values",
    "unsigned_diagonal_entry",
    "ps_identity_sides",
    "ps_schur",
    "q_plancherel",
    "run_all",
    "run_check",
    "signed_hook_exponent",
]
