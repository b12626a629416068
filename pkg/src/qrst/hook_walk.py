"""Exterior hook walks on the complement of a Young diagram.

From a cell outside ``lam`` that is not an outer corner, the walk jumps to a
cell of its exterior arm (to the left) or exterior leg (below). The uniform
version is the classical one; the ``(q, t)`` version weights arm jumps
geometrically in ``q`` and leg jumps geometrically in ``t``. Absorption happens
at outer corners, so the walk lands on some ``nu`` covering ``lam``.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Literal

from .errors import AlreadyAbsorbed, CellInsideDiagram, NotCover
from .partitions import Cell, Partition, covers, hook_product, single_cell, ups
from .qt_algebra import BracketProduct, RationalQT, bracket
from .sampling import ExactSampler, as_sampler, check_parameters, cumulative_thresholds


@dataclass(frozen=True)
class ExteriorCell:
    """A first-quadrant cell outside ``lam``."""

    cell: Cell
    lam: Partition

    def __post_init__(self) -> None:
        object.__setattr__(self, "cell", Cell(*self.cell))
        object.__setattr__(self, "lam", Partition(self.lam))
        x, y = self.cell
        if x < 1 or y < 1:
            raise ValueError(f"{self.cell} is not in the first quadrant")
        if self.cell in self.lam:
            raise CellInsideDiagram(f"{self.cell} lies inside {self.lam}")


def _exterior(lam: Partition, c: tuple[int, int] | ExteriorCell) -> Cell:
    if isinstance(c, ExteriorCell):
        if c.lam != lam:
            raise ValueError(f"cell was built for {c.lam}, not {lam}")
        return c.cell
    return ExteriorCell(Cell(*c), lam).cell


def exterior_stats(lam: Partition, c: tuple[int, int] | ExteriorCell) -> tuple[list[Cell], list[Cell], int]:
    """Exterior arm cells, leg cells, and the exterior hook length of ``c``."""
    lam = Partition(lam)
    x, y = _exterior(lam, c)
    arm = [Cell(i, y) for i in range(lam.row(y) + 1, x)]
    leg = [Cell(x, j) for j in range(lam.col(x) + 1, y)]
    return arm, leg, len(arm) + len(leg) + 1


def exterior_arm_leg(lam: Partition, c: tuple[int, int]) -> tuple[int, int]:
    x, y = c
    return x - lam.row(y) - 1, y - lam.col(x) - 1


def is_outer_corner(lam: Partition, c: tuple[int, int]) -> bool:
    return exterior_arm_leg(lam, c) == (0, 0) and tuple(c) not in lam


# -- step distributions ------------------------------------------------------------------


@lru_cache(maxsize=None)
def step_brackets(lam: Partition, c: Cell) -> tuple[tuple[Cell, BracketProduct], ...]:
    """Targets and probabilities of one ``(q, t)`` step, arm targets first (nearest first)."""
    a, leg = exterior_arm_leg(lam, c)
    if a == 0 and leg == 0:
        raise AlreadyAbsorbed(f"{c} is an outer corner of {lam}")
    x, y = c
    denom = bracket(a, leg)
    out = [(Cell(x - i, y), BracketProduct.monomial(a - i, leg) * bracket(1, 0) / denom) for i in range(1, a + 1)]
    out += [(Cell(x, y - j), BracketProduct.monomial(0, j - 1) * bracket(0, 1) / denom) for j in range(1, leg + 1)]
    return tuple(out)


def qt_step_distribution(lam: Partition, c: tuple[int, int] | ExteriorCell) -> dict[Cell, RationalQT]:
    lam = Partition(lam)
    return {cell: w.to_rq() for cell, w in step_brackets(lam, _exterior(lam, c))}


def uniform_step_distribution(lam: Partition, c: tuple[int, int] | ExteriorCell) -> dict[Cell, Fraction]:
    """The classical walk: uniform over exterior arm and leg."""
    lam = Partition(lam)
    arm, leg, hook = exterior_stats(lam, c)
    if hook == 1:
        raise AlreadyAbsorbed(f"{tuple(c)} is an outer corner of {lam}")
    return {cell: Fraction(1, hook - 1) for cell in arm + leg}


# -- absorption ----------------------------------------------------------------------------


def _corner_of(lam: Partition, c: Cell) -> Partition:
    return lam.with_cell(c.y)


@lru_cache(maxsize=None)
def _absorption(lam: Partition, c: Cell) -> tuple[tuple[Partition, RationalQT], ...]:
    if is_outer_corner(lam, c):
        return ((_corner_of(lam, c), RationalQT.from_laurent(1)),)
    acc: dict[Partition, RationalQT] = {}
    for target, w in step_brackets(lam, c):
        p = w.to_rq()
        for nu, v in _absorption(lam, target):
            acc[nu] = acc[nu] + p * v if nu in acc else p * v
    return tuple(acc.items())


def absorption_exact(lam: Partition, start: tuple[int, int] | ExteriorCell) -> dict[Partition, RationalQT]:
    """Probability of ending at each ``nu`` in U(lam), by memoized recursion on cells."""
    lam = Partition(lam)
    c = _exterior(lam, start)
    got = dict(_absorption(lam, c))
    zero = RationalQT.from_laurent(0)
    return {nu: got.get(nu, zero) for nu in ups(lam)}


@lru_cache(maxsize=None)
def _gnw(lam: Partition, c: Cell) -> tuple[tuple[Partition, Fraction], ...]:
    if is_outer_corner(lam, c):
        return ((_corner_of(lam, c), Fraction(1)),)
    acc: dict[Partition, Fraction] = {}
    for target, p in uniform_step_distribution(lam, c).items():
        for nu, v in _gnw(lam, target):
            acc[nu] = acc.get(nu, Fraction(0)) + p * v
    return tuple(acc.items())


def gnw_absorption(lam: Partition, start: tuple[int, int] | ExteriorCell) -> dict[Partition, Fraction]:
    """Absorption probabilities of the uniform walk, in exact rationals."""
    lam = Partition(lam)
    got = dict(_gnw(lam, _exterior(lam, start)))
    return {nu: got.get(nu, Fraction(0)) for nu in ups(lam)}


def canonical_start(lam: Partition) -> Cell:
    """``(lam_1 + 1, lam'_1 + 1)``: the smallest cell sharing no row or column with ``lam``."""
    lam = Partition(lam)
    return Cell(lam.row(1) + 1, len(lam) + 1)


def hook_ratio(lam: Partition, nu: Partition) -> Fraction:
    return Fraction(hook_product(lam), hook_product(nu))


# -- closed forms along the axes of a corner ---------------------------------------------------


def _ext(lam: Partition, c: tuple[int, int]) -> tuple[int, int]:
    """Exterior arm and leg of a cell outside ``lam`` (no validation)."""
    return exterior_arm_leg(lam, c)


def axis_closed_forms_brackets(
    lam: Partition, nu: Partition, offset: int, axis: Literal["row", "column"]
) -> BracketProduct:
    lam, nu = Partition(lam), Partition(nu)
    if not covers(nu, lam):
        raise NotCover(f"{nu} does not cover {lam}")
    if offset < 1:
        raise ValueError("offset must be at least 1")
    x, y = single_cell(nu, lam)
    if axis == "row":
        c = Cell(x + offset, y)
        a_nu, l_nu = _ext(nu, c)
        out = BracketProduct.monomial(0, _ext(lam, c)[1]) * bracket(1, 0) / bracket(a_nu + 1, l_nu)
        for i in range(x + 1, x + offset):
            a_l, l_l = _ext(lam, (i, y))
            a_n, l_n = _ext(nu, (i, y))
            out = out * bracket(a_l + 1, l_l) / bracket(a_n + 1, l_n)
        return out
    if axis == "column":
        c = Cell(x, y + offset)
        a_nu, l_nu = _ext(nu, c)
        out = bracket(0, 1) / bracket(a_nu, l_nu + 1)
        for j in range(y + 1, y + offset):
            a_l, l_l = _ext(lam, (x, j))
            a_n, l_n = _ext(nu, (x, j))
            out = out * bracket(a_l, l_l + 1) / bracket(a_n, l_n + 1)
        return out
    raise ValueError(f"unknown axis {axis!r}")


def axis_closed_forms(lam: Partition, nu: Partition, offset: int, axis: Literal["row", "column"]) -> RationalQT:
    """Closed product form of the absorption probability at ``nu`` from a cell in line with ``nu/lam``.

    ``axis="row"`` starts ``offset`` cells to the right of ``nu/lam``;
    ``axis="column"`` starts ``offset`` cells above it.
    """
    return axis_closed_forms_brackets(lam, nu, offset, axis).to_rq()


# -- sampling -----------------------------------------------------------------------------------


@lru_cache(maxsize=65536)
def _step_thresholds(lam: Partition, c: Cell, qv: Fraction, tv: Fraction) -> tuple[tuple[Cell, ...], tuple[int, ...]]:
    steps = step_brackets(lam, c)
    return tuple(cell for cell, _ in steps), cumulative_thresholds([Fraction(w.evaluate(qv, tv)) for _, w in steps])


def walk_path(
    lam: Partition,
    start: tuple[int, int] | ExteriorCell,
    qv: Rational,
    tv: Rational,
    seed: int | ExactSampler,
) -> list[Cell]:
    """Visited cells of one ``(q, t)`` walk, ending at an outer corner."""
    lam = Partition(lam)
    qv, tv = check_parameters(qv, tv)
    sampler = as_sampler(seed)
    c = _exterior(lam, start)
    path = [c]
    while not is_outer_corner(lam, c):
        targets, thresholds = _step_thresholds(lam, c, qv, tv)
        c = targets[sampler.choose_threshold(thresholds)]
        path.append(c)
    return path


def walk_sample(
    lam: Partition,
    start: tuple[int, int] | ExteriorCell,
    qv: Rational,
    tv: Rational,
    seed: int | ExactSampler,
) -> Partition:
    """One absorbed corner, returned as the partition ``nu``."""
    lam = Partition(lam)
    return _corner_of(lam, walk_path(lam, start, qv, tv, seed)[-1])


def exterior_cells(lam: Partition, extra: int = 3) -> Iterable[Cell]:
    """Exterior cells with ``x <= lam_1 + extra`` and ``y <= lam'_1 + extra``."""
    lam = Partition(lam)
    for y in range(1, len(lam) + extra + 1):
        for x in range(1, lam.row(1) + extra + 1):
            if (x, y) not in lam:
                yield Cell(x, y)


__all__ = [
    "ExteriorCell",
    "absorption_exact",
    "axis_closed_forms",
    "axis_closed_forms_brackets",
    "canonical_start",
    "exterior_cells",
    "exterior_stats",
    "gnw_absorption",
    "hook_ratio",
    "is_outer_corner",
    "qt_step_distribution",
    "step_brackets",
    "uniform_step_distribution",
    "walk_path",
    "walk_sample",
]
