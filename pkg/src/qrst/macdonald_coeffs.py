"""Branching coefficients psi/phi of Macdonald polynomials and derived weights."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Literal

from .errors import NotContained, NotHorizontalStrip, SizeBoundExceeded
from .partitions import Cell, Partition, arm_leg, dstar, neighborhoods, skew_cells, ups
from .qt_algebra import BracketProduct, RationalQT, bracket

MACDONALD_BOUND = 12


@dataclass(frozen=True)
class SkewStrip:
    """A horizontal strip ``outer / inner``."""

    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not is_horizontal_strip(self.outer, self.inner):
            raise NotHorizontalStrip(f"{self.outer}/{self.inner} is not a horizontal strip")


def is_horizontal_strip(outer: Partition, inner: Partition) -> bool:
    if not outer.contains(inner):
        raise NotContained(f"{inner} is not contained in {outer}")
    # Interlacing: outer_{i+1} <= inner_i.
    return all(outer.row(i + 1) <= inner.row(i) for i in range(1, len(outer) + 1))


def b_bracket(i: int, j: int) -> BracketProduct:
    """``b_{i,j} = [i, j+1] / [i+1, j]`` in bracket form."""
    return bracket(i, j + 1) / bracket(i + 1, j)


def b_coeff(i: int, j: int) -> RationalQT:
    return b_bracket(i, j).to_rq()


def b_cell(kappa: Partition, c: Cell) -> BracketProduct:
    """``b_kappa(c)``, using arm and leg of ``c`` in ``kappa``."""
    a, leg = arm_leg(kappa, c)
    return b_bracket(a, leg)


def b_partition(kappa: Partition) -> BracketProduct:
    """``b_kappa``: product of ``b_kappa(c)`` over all cells."""
    out = BracketProduct.one()
    for c in kappa.cells():
        out = out * b_cell(kappa, c)
    return out


def rc_sets(lam: Partition, mu: Partition) -> tuple[list[Cell], list[Cell]]:
    """Cells of ``mu`` sharing a row (R) or a column (C) with ``lam / mu``."""
    skew = skew_cells(lam, mu)
    rows = {c.y for c in skew}
    cols = {c.x for c in skew}
    cells = mu.cells()
    return [c for c in cells if c.y in rows], [c for c in cells if c.x in cols]


@lru_cache(maxsize=None)
def psi_phi_brackets(outer: Partition, inner: Partition) -> tuple[BracketProduct, BracketProduct]:
    """psi and phi of a horizontal strip as bracket products."""
    SkewStrip(outer, inner)
    r_set, c_set = rc_sets(outer, inner)
    c_lookup = set(c_set)
    psi = BracketProduct.one()
    for c in r_set:
        if c not in c_lookup:
            psi = psi * b_cell(inner, c) / b_cell(outer, c)
    phi = BracketProduct.one()
    for c in skew_cells(outer, inner):
        phi = phi * b_cell(outer, c)
    for c in c_set:
        phi = phi * b_cell(outer, c) / b_cell(inner, c)
    return psi, phi


def psi_phi(skew: SkewStrip | tuple[Partition, Partition]) -> tuple[RationalQT, RationalQT]:
    outer, inner = (skew.outer, skew.inner) if isinstance(skew, SkewStrip) else skew
    psi, phi = psi_phi_brackets(Partition(outer), Partition(inner))
    return psi.to_rq(), phi.to_rq()


def tableau_weights_brackets(chain: Sequence[Partition]) -> tuple[BracketProduct, BracketProduct]:
    psi = BracketProduct.one()
    phi = BracketProduct.one()
    for a, b in zip(chain, chain[1:]):
        p, f = psi_phi_brackets(Partition(b), Partition(a))
        psi, phi = psi * p, phi * f
    return psi, phi


def tableau_weights(tableau) -> tuple[RationalQT, RationalQT]:
    """``(psi_T, phi_T)`` for a standard tableau or a chain of horizontal strips."""
    chain = getattr(tableau, "chain", tableau)
    if callable(chain):
        chain = chain()
    psi, phi = tableau_weights_brackets(chain)
    return psi.to_rq(), phi.to_rq()


def strips_below(outer: Partition) -> Iterator[Partition]:
    """All ``inner`` with ``outer / inner`` a horizontal strip."""
    n = len(outer)

    def rec(i: int, acc: list[int]) -> Iterator[Partition]:
        if i > n:
            yield Partition(acc)
            return
        lo = outer.row(i + 1)
        for part in range(lo, outer.row(i) + 1):
            yield from rec(i + 1, acc + [part])

    yield from rec(1, [])


def ssyt_chains(lam: Partition, k: int) -> Iterator[tuple[Partition, ...]]:
    """Semistandard tableaux of shape ``lam`` with entries <= k, as strip chains."""
    if k == 0:
        if not lam:
            yield (lam,)
        return
    if len(lam) > k:
        return
    for inner in strips_below(lam):
        for chain in ssyt_chains(inner, k - 1):
            yield chain + (lam,)


def macdonald_eval(
    lam: Partition,
    kind: Literal["P", "Q"],
    xs: Sequence[Rational],
    qv: Rational,
    tv: Rational,
) -> Fraction:
    """Monomial expansion of ``P_lam`` or ``Q_lam`` evaluated at rational data."""
    if lam.size > MACDONALD_BOUND:
        raise SizeBoundExceeded(f"|lambda| = {lam.size} exceeds {MACDONALD_BOUND}")
    which = 0 if kind == "P" else 1
    total = Fraction(0)
    for chain in ssyt_chains(Partition(lam), len(xs)):
        weight = Fraction(tableau_weights_brackets(chain)[which].evaluate(qv, tv))
        for x, a, b in zip(xs, chain, chain[1:]):
            weight *= Fraction(x) ** (b.size - a.size)
        total += weight
    return total


@lru_cache(maxsize=None)
def weights_brackets(lam: Partition) -> tuple[dict[Partition, BracketProduct], dict[Partition, BracketProduct]]:
    """omega on D*(lam) and omega-bar on U(lam) as bracket products."""
    omega = {lam: BracketProduct.one()}
    for mu in neighborhoods(lam)[0]:
        r_set, c_set = rc_sets(lam, mu)
        w = BracketProduct.one()
        for c in r_set:
            w = w * b_cell(mu, c) / b_cell(lam, c)
        for c in c_set:
            w = w * b_cell(lam, c) / b_cell(mu, c)
        omega[mu] = w
    omega_bar = {}
    for nu in ups(lam):
        r_set, c_set = rc_sets(nu, lam)
        w = BracketProduct.one()
        for c in r_set:
            w = w * b_cell(lam, c) / b_cell(nu, c)
        for c in c_set:
            w = w * b_cell(nu, c) / b_cell(lam, c)
        omega_bar[nu] = w
    return omega, omega_bar


def weights(lam: Partition) -> tuple[dict[Partition, RationalQT], dict[Partition, RationalQT]]:
    omega, omega_bar = weights_brackets(Partition(lam))
    return {k: v.to_rq() for k, v in omega.items()}, {k: v.to_rq() for k, v in omega_bar.items()}


def up_coefficients(lam: Partition) -> dict[Partition, BracketProduct]:
    """``U lam = sum psi_{nu/lam} nu``."""
    return {nu: psi_phi_brackets(nu, lam)[0] for nu in ups(lam)}


def down_coefficients(lam: Partition) -> dict[Partition, BracketProduct]:
    """``D lam = sum phi_{lam/mu} mu``."""
    return {mu: psi_phi_brackets(lam, mu)[1] for mu in dstar(lam)[1:]}
