"""Growth diagrams over permutation matrices, qRSt insertion, and classical RS.

Vertices are matrix-indexed: ``labels[i][j]`` sits below row ``i`` and right of
column ``j`` of the permutation matrix, whose 1s occupy squares ``(sigma(j), j)``.
A square ``(i, j)`` has corners NW ``(i-1, j-1)``, NE ``(i-1, j)``,
SW ``(i, j-1)`` and SE ``(i, j)``.
"""

from __future__ import annotations

import os
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Literal

from .errors import (
    DuplicateEntry,
    InvalidPermutation,
    ShapeMismatch,
    SizeBoundExceeded,
)
from .local_rules import evaluate_kernel, kernel_brackets
from .partitions import Cell, PartialTableau, Partition, StandardTableau, dstar, single_cell, ups
from .qt_algebra import BracketProduct, RationalQT
from .sampling import GENERATOR, ExactSampler, as_sampler, check_parameters, cumulative_thresholds

MAX_EXACT_N = int(os.environ.get("QRST_MAX_N", "6"))

FillOrder = Literal["row", "column"]
Variant = Literal["row", "column"]
Rules = Literal["F_row", "F_col"]


class Permutation(tuple):
    """A permutation of ``1..n`` in one-line notation."""

    def __new__(cls, one_line: Iterable[int]) -> Permutation:
        values = tuple(int(v) for v in one_line)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidPermutation(f"{values} is not a permutation of 1..{len(values)}")
        return super().__new__(cls, values)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Accept ``"5,2,6,1,3,4"`` or, for n < 10, ``"526134"``."""
        text = text.strip()
        if "," in text or " " in text:
            return cls(int(v) for v in text.replace(" ", ",").split(",") if v)
        return cls(int(ch) for ch in text)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, j: int) -> int:
        return self[j - 1]

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for j, v in enumerate(self, 1):
            inv[v - 1] = j
        return Permutation(inv)

    def __str__(self) -> str:
        sep = "" if len(self) < 10 else ","
        return sep.join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({','.join(map(str, self))})"


def all_permutations(n: int) -> Iterator[Permutation]:
    from itertools import permutations

    for p in permutations(range(1, n + 1)):
        yield Permutation(p)


# -- squares -------------------------------------------------------------------------


def square_type(nw: Partition, ne: Partition, sw: Partition, se: Partition) -> str:
    """Classify a completed square as ``"I"``, ``"II"`` or ``"III"``."""
    if ne != sw:
        return "II"
    if nw == ne == se:
        return "I"
    return "III"


@lru_cache(maxsize=65536)
def _forward_options(nw: Partition, ne: Partition, sw: Partition, marked: bool) -> list[tuple[Partition, int | None]]:
    """Possible SE labels, each with the kernel column ``s`` (``None`` if forced)."""
    if ne != sw:
        if marked:
            raise InvalidPermutation("a marked square needs equal NE and SW labels")
        return [(ne.union(sw), None)]
    lam = sw
    if nw == lam and not marked:
        return [(lam, None)]
    return [(nu, s) for s, nu in enumerate(ups(lam))]


@lru_cache(maxsize=65536)
def _backward_options(ne: Partition, sw: Partition, se: Partition) -> list[tuple[Partition, bool, int | None]]:
    """Possible ``(NW label, marked, r)`` given the three other corners."""
    if ne != sw:
        return [(ne.intersection(sw), False, None)]
    lam = sw
    if se == lam:
        return [(lam, False, None)]
    return [(mu, r == 0, r) for r, mu in enumerate(dstar(lam))]


def _square_order(n: int, order: FillOrder) -> list[tuple[int, int]]:
    if order == "row":
        return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    if order == "column":
        return [(i, j) for j in range(1, n + 1) for i in range(1, n + 1)]
    raise ValueError(f"unknown fill order {order!r}")


# -- diagrams --------------------------------------------------------------------------


@dataclass(frozen=True)
class GrowthDiagram:
    sigma: Permutation
    labels: tuple[tuple[Partition, ...], ...]

    def __post_init__(self) -> None:
        n = self.sigma.n
        if len(self.labels) != n + 1 or any(len(row) != n + 1 for row in self.labels):
            raise ShapeMismatch(f"a growth for n={n} has {(n + 1)}x{(n + 1)} labels")

    @property
    def n(self) -> int:
        return self.sigma.n

    def __getitem__(self, ij: tuple[int, int]) -> Partition:
        i, j = ij
        return self.labels[i][j]

    def marked(self, i: int, j: int) -> bool:
        return self.sigma(j) == i

    def square(self, i: int, j: int) -> tuple[Partition, Partition, Partition, Partition]:
        """``(NW, NE, SW, SE)`` of square ``(i, j)``."""
        L = self.labels
        return L[i - 1][j - 1], L[i - 1][j], L[i][j - 1], L[i][j]

    def square_type(self, i: int, j: int) -> str:
        return square_type(*self.square(i, j))

    def type_iii_squares(self) -> list[tuple[int, int]]:
        n = self.n
        return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if self.square_type(i, j) == "III"]

    def p_tableau(self) -> StandardTableau:
        return StandardTableau(self.labels[i][self.n] for i in range(self.n + 1))

    def q_tableau(self) -> StandardTableau:
        return StandardTableau(self.labels[self.n])

    def transpose(self) -> GrowthDiagram:
        n = self.n
        return GrowthDiagram(self.sigma.inverse(), tuple(tuple(self.labels[j][i] for j in range(n + 1)) for i in range(n + 1)))

    def is_valid(self) -> bool:
        """Containment, size and square-type invariants."""
        n, L = self.n, self.labels
        for i in range(n + 1):
            for j in range(n + 1):
                count = sum(1 for c in range(1, j + 1) if self.sigma(c) <= i)
                if L[i][j].size != count:
                    return False
                if j < n and not L[i][j + 1].contains(L[i][j]):
                    return False
                if i < n and not L[i + 1][j].contains(L[i][j]):
                    return False
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                nw, ne, sw, se = self.square(i, j)
                kind = square_type(nw, ne, sw, se)
                if kind == "II" and (nw != ne.intersection(sw) or se != ne.union(sw)):
                    return False
                if kind == "III" and not (nw in dstar(sw) and se in ups(sw)):
                    return False
        return True

    def to_text(self) -> str:
        """Text grid: vertex labels with ``X`` marking the 1s of the permutation matrix."""
        n = self.n

        def label(p: Partition) -> str:
            if not p:
                return "∅"
            return ("" if max(p) < 10 else ",").join(map(str, p))

        width = max(len(label(p)) for row in self.labels for p in row) + 2
        lines = []
        for i in range(n + 1):
            lines.append("".join(label(p).ljust(width) for p in self.labels[i]).rstrip())
            if i < n:
                marks = " " * (width // 2) + "".join(
                    ("X" if self.marked(i + 1, j) else ".").ljust(width) for j in range(1, n + 1)
                )
                lines.append(marks.rstrip())
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.to_text()


def _empty_grid(n: int) -> list[list[Partition | None]]:
    grid: list[list[Partition | None]] = [[None] * (n + 1) for _ in range(n + 1)]
    empty = Partition(())
    for k in range(n + 1):
        grid[0][k] = empty
        grid[k][0] = empty
    return grid


def _freeze(sigma: Permutation, grid: list[list[Partition | None]]) -> GrowthDiagram:
    return GrowthDiagram(sigma, tuple(tuple(row) for row in grid))  # type: ignore[arg-type]


def _check_bound(n: int, bound: int | None) -> None:
    bound = MAX_EXACT_N if bound is None else bound
    if n > bound:
        raise SizeBoundExceeded(f"n = {n} exceeds the exact-enumeration bound {bound}")


# -- kernels as lookups ----------------------------------------------------------------


@lru_cache(maxsize=None)
def _forward_brackets(lam: Partition) -> dict[tuple[int, int], BracketProduct]:
    return kernel_brackets(lam, "explicit")[0]


@lru_cache(maxsize=None)
def _backward_brackets(lam: Partition) -> dict[tuple[int, int], BracketProduct]:
    return kernel_brackets(lam, "explicit")[1]


@lru_cache(maxsize=4096)
def _numeric(lam: Partition, qv: Fraction, tv: Fraction, column: bool):
    return evaluate_kernel(lam, qv, tv, column)


@lru_cache(maxsize=65536)
def _forward_thresholds(lam: Partition, mu: Partition, qv: Fraction, tv: Fraction, column: bool) -> tuple[int, ...]:
    return cumulative_thresholds(_numeric(lam, qv, tv, column).forward_row(dstar(lam).index(mu)))


@lru_cache(maxsize=65536)
def _backward_thresholds(lam: Partition, nu: Partition, qv: Fraction, tv: Fraction, column: bool) -> tuple[int, ...]:
    return cumulative_thresholds(_numeric(lam, qv, tv, column).backward_col(ups(lam).index(nu)))


# -- exact enumeration -------------------------------------------------------------------


def _enumerate(sigma: Permutation, order: FillOrder) -> Iterator[tuple[list[list[Partition]], BracketProduct]]:
    squares = _square_order(sigma.n, order)
    grid = _empty_grid(sigma.n)

    def rec(k: int, weight: BracketProduct) -> Iterator[tuple[list[list[Partition]], BracketProduct]]:
        if k == len(squares):
            yield grid, weight
            return
        i, j = squares[k]
        nw, ne, sw = grid[i - 1][j - 1], grid[i - 1][j], grid[i][j - 1]
        for nu, s in _forward_options(nw, ne, sw, sigma(j) == i):
            if s is None:
                w = weight
            else:
                r = dstar(sw).index(nw)
                w = weight * _forward_brackets(sw)[(r, s)]
                if w.is_zero():
                    continue
            grid[i][j] = nu
            yield from rec(k + 1, w)
        grid[i][j] = None

    yield from rec(0, BracketProduct.one())


def enumerate_growths_brackets(
    sigma: Permutation, order: FillOrder = "row", bound: int | None = None
) -> list[tuple[GrowthDiagram, BracketProduct]]:
    sigma = Permutation(sigma)
    _check_bound(sigma.n, bound)
    return [(_freeze(sigma, g), w) for g, w in _enumerate(sigma, order)]


def enumerate_growths(
    sigma: Permutation, order: FillOrder = "row", bound: int | None = None
) -> list[tuple[GrowthDiagram, RationalQT]]:
    """Every growth of ``sigma`` with nonzero forward probability."""
    return [(g, w.to_rq()) for g, w in enumerate_growths_brackets(sigma, order, bound)]


def growth_probability(growth: GrowthDiagram, backward: bool = False) -> RationalQT:
    """Product of the Type III square probabilities, recomputed from the labels."""
    weight = BracketProduct.one()
    for i, j in growth.type_iii_squares():
        nw, _, sw, se = growth.square(i, j)
        key = (dstar(sw).index(nw), ups(sw).index(se))
        table = _backward_brackets(sw) if backward else _forward_brackets(sw)
        weight = weight * table[key]
    return weight.to_rq()


def _rq_sum(values: Iterable[RationalQT]) -> RationalQT:
    total = RationalQT.from_laurent(0)
    for v in values:
        total = total + v
    return total


@dataclass(frozen=True)
class PairDistribution:
    """Mapping ``(P, Q) -> probability`` over pairs of standard tableaux of equal shape."""

    entries: dict[tuple[StandardTableau, StandardTableau], RationalQT]

    def __getitem__(self, pq: tuple[StandardTableau, StandardTableau]) -> RationalQT:
        return self.entries.get(pq, RationalQT.from_laurent(0))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def items(self):
        return self.entries.items()

    def total(self) -> RationalQT:
        return _rq_sum(self.entries.values())

    def evaluate(self, qv: Rational, tv: Rational) -> dict[tuple[StandardTableau, StandardTableau], Fraction]:
        return {k: Fraction(v.evaluate(qv, tv)) for k, v in self.entries.items()}


def forward_exact(sigma: Permutation, order: FillOrder = "row", bound: int | None = None) -> PairDistribution:
    """``P(sigma -> P, Q)`` for every pair reached with nonzero probability."""
    groups: dict[tuple[StandardTableau, StandardTableau], list[RationalQT]] = {}
    for g, w in enumerate_growths_brackets(sigma, order, bound):
        groups.setdefault((g.p_tableau(), g.q_tableau()), []).append(w.to_rq())
    return PairDistribution({k: _rq_sum(v) for k, v in groups.items()})


def _backward_growths(
    p: StandardTableau, q: StandardTableau
) -> Iterator[tuple[list[list[Partition]], list[list[bool]], BracketProduct]]:
    n = p.n
    grid: list[list[Partition | None]] = [[None] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        grid[i][n] = p.chain[i]
        grid[n][i] = q.chain[i]
    marks = [[False] * (n + 1) for _ in range(n + 1)]
    squares = [(i, j) for i in range(n, 0, -1) for j in range(n, 0, -1)]

    def rec(k: int, weight: BracketProduct):
        if k == len(squares):
            yield grid, marks, weight
            return
        i, j = squares[k]
        ne, sw, se = grid[i - 1][j], grid[i][j - 1], grid[i][j]
        if ne is None or sw is None:
            raise AssertionError("fill order must visit SE before NW")
        for mu, marked, r in _backward_options(ne, sw, se):
            if r is None:
                w = weight
            else:
                s = ups(sw).index(se)
                w = weight * _backward_brackets(sw)[(r, s)]
                if w.is_zero():
                    continue
            previous = grid[i - 1][j - 1]
            if previous is not None and previous != mu:
                continue
            grid[i - 1][j - 1] = mu
            marks[i][j] = marked
            yield from rec(k + 1, w)
            marks[i][j] = False
            if previous is None:
                grid[i - 1][j - 1] = None

    # Corners (i-1, j-1) are written exactly once in this order, except that the
    # top row and left column must come out empty; the final check enforces it.
    yield from rec(0, BracketProduct.one())


def _sigma_from_marks(n: int, marks: list[list[bool]]) -> Permutation | None:
    one_line = []
    for j in range(1, n + 1):
        rows = [i for i in range(1, n + 1) if marks[i][j]]
        if len(rows) != 1:
            return None
        one_line.append(rows[0])
    try:
        return Permutation(one_line)
    except InvalidPermutation:
        return None


def backward_exact_growths(
    p: StandardTableau, q: StandardTableau, bound: int | None = None
) -> list[tuple[GrowthDiagram, RationalQT]]:
    """Growths reached from ``(P, Q)`` by the backward rules, with their backward probabilities."""
    if p.shape != q.shape:
        raise ShapeMismatch(f"shapes {p.shape} and {q.shape} differ")
    n = p.n
    _check_bound(n, bound)
    out = []
    for grid, marks, w in _backward_growths(p, q):
        if any(grid[0][k] or grid[k][0] for k in range(n + 1)):
            continue
        sigma = _sigma_from_marks(n, marks)
        if sigma is None:
            continue
        out.append((_freeze(sigma, grid), w.to_rq()))
    return out


def backward_exact(p: StandardTableau, q: StandardTableau, bound: int | None = None) -> dict[Permutation, RationalQT]:
    """``P-bar(sigma <- P, Q)`` for every permutation reached with nonzero probability."""
    groups: dict[Permutation, list[RationalQT]] = {}
    for g, w in backward_exact_growths(p, q, bound):
        groups.setdefault(g.sigma, []).append(w)
    return {k: _rq_sum(v) for k, v in groups.items()}


# -- sampling -----------------------------------------------------------------------------


def sample_forward(
    sigma: Permutation,
    qv: Rational,
    tv: Rational,
    seed: int | ExactSampler,
    variant: Variant = "row",
    order: FillOrder = "row",
) -> tuple[StandardTableau, StandardTableau]:
    """One draw of ``(P, Q)`` from ``P(sigma -> P, Q)``.

    ``variant="column"`` uses the kernel at ``(1/q, 1/t)``, so ``q = t = 0`` then
    gives column insertion.
    """
    return sample_forward_growth(sigma, qv, tv, seed, variant, order).p_tableau_pair()


def sample_forward_growth(
    sigma: Permutation,
    qv: Rational,
    tv: Rational,
    seed: int | ExactSampler,
    variant: Variant = "row",
    order: FillOrder = "row",
) -> _SampledGrowth:
    sigma = Permutation(sigma)
    qv, tv = check_parameters(qv, tv)
    sampler = as_sampler(seed)
    column = variant == "column"
    grid = _empty_grid(sigma.n)
    for i, j in _square_order(sigma.n, order):
        nw, ne, sw = grid[i - 1][j - 1], grid[i - 1][j], grid[i][j - 1]
        options = _forward_options(nw, ne, sw, sigma(j) == i)
        if len(options) == 1 and options[0][1] is None:
            grid[i][j] = options[0][0]
            continue
        idx = sampler.choose_threshold(_forward_thresholds(sw, nw, qv, tv, column))
        grid[i][j] = options[idx][0]
    return _SampledGrowth(_freeze(sigma, grid))


@dataclass(frozen=True)
class _SampledGrowth:
    growth: GrowthDiagram

    def p_tableau_pair(self) -> tuple[StandardTableau, StandardTableau]:
        return self.growth.p_tableau(), self.growth.q_tableau()


def sample_backward(
    p: StandardTableau,
    q: StandardTableau,
    qv: Rational,
    tv: Rational,
    seed: int | ExactSampler,
    variant: Variant = "row",
) -> Permutation:
    """One draw of ``sigma`` from ``P-bar(sigma <- P, Q)``."""
    if p.shape != q.shape:
        raise ShapeMismatch(f"shapes {p.shape} and {q.shape} differ")
    qv, tv = check_parameters(qv, tv)
    sampler = as_sampler(seed)
    column = variant == "column"
    n = p.n
    grid: list[list[Partition | None]] = [[None] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        grid[i][n] = p.chain[i]
        grid[n][i] = q.chain[i]
    marks = [[False] * (n + 1) for _ in range(n + 1)]
    for i in range(n, 0, -1):
        for j in range(n, 0, -1):
            ne, sw, se = grid[i - 1][j], grid[i][j - 1], grid[i][j]
            options = _backward_options(ne, sw, se)
            if len(options) == 1 and options[0][2] is None:
                choice = options[0]
            else:
                choice = options[sampler.choose_threshold(_backward_thresholds(sw, se, qv, tv, column))]
            mu, marked, _ = choice
            if grid[i - 1][j - 1] is not None and grid[i - 1][j - 1] != mu:
                raise AssertionError("inconsistent backward growth")
            grid[i - 1][j - 1] = mu
            marks[i][j] = marked
    sigma = _sigma_from_marks(n, marks)
    if sigma is None:
        raise AssertionError("backward growth did not produce a permutation")
    return sigma


def sample(
    source: Permutation | tuple[StandardTableau, StandardTableau],
    qv: Rational,
    tv: Rational,
    seed: int | ExactSampler,
    direction: Literal["forward", "backward"] = "forward",
    variant: Variant = "row",
):
    """Forward draw ``(P, Q)`` from a permutation, or backward draw ``sigma`` from a pair."""
    if direction == "forward":
        return sample_forward(source, qv, tv, seed, variant)  # type: ignore[arg-type]
    if direction == "backward":
        p, q = source  # type: ignore[misc]
        return sample_backward(p, q, qv, tv, seed, variant)
    raise ValueError(f"unknown direction {direction!r}")


# -- insertion --------------------------------------------------------------------------


def _insertion_paths(
    tableau: PartialTableau, k: int, choose: Callable[[Partition, int], Iterable[tuple[int, object]]]
) -> Iterator[tuple[PartialTableau, list[object]]]:
    """Expand the insertion tree; ``choose(lam, r)`` yields ``(s, weight)`` branches."""
    if k in tableau.filling.values():
        raise DuplicateEntry(f"{k} is already an entry of {tableau}")

    def rec(fill: dict[Cell, int], value: int, lam: Partition, r: int, trail: list[object]):
        for s, w in choose(lam, r):
            nu = ups(lam)[s]
            cell = single_cell(nu, lam)
            bumped = fill.get(cell)
            new = dict(fill)
            new[cell] = value
            if bumped is None:
                yield PartialTableau(new), trail + [w]
                continue
            shape_z = tableau.subshape(bumped)
            below = tableau.subshape(bumped - 1)
            yield from rec(new, bumped, shape_z, dstar(shape_z).index(below), trail + [w])

    lam = tableau.subshape(k)
    yield from rec(dict(tableau.filling), k, lam, 0, [])


def qrst_insert_brackets(tableau: PartialTableau, k: int) -> dict[PartialTableau, BracketProduct]:
    def choose(lam: Partition, r: int):
        table = _forward_brackets(lam)
        return [(s, table[(r, s)]) for s in range(len(ups(lam)))]

    out: dict[PartialTableau, BracketProduct] = {}
    for result, trail in _insertion_paths(tableau, k, choose):
        w = BracketProduct.one()
        for f in trail:
            w = w * f  # type: ignore[operator]
        if result in out:
            raise AssertionError("distinct insertion paths reached the same tableau")
        out[result] = w
    return out


def qrst_insert(
    tableau: PartialTableau,
    k: int,
    mode: Literal["exact_distribution", "sample"] = "exact_distribution",
    qv: Rational | None = None,
    tv: Rational | None = None,
    seed: int | ExactSampler | None = None,
    variant: Variant = "row",
) -> dict[PartialTableau, RationalQT] | PartialTableau:
    """qRSt insertion of ``k`` into ``tableau``: the exact outcome distribution, or one draw."""
    if mode == "exact_distribution":
        return {t: w.to_rq() for t, w in qrst_insert_brackets(tableau, k).items()}
    if mode != "sample":
        raise ValueError(f"unknown mode {mode!r}")
    if qv is None or tv is None or seed is None:
        raise ValueError("sampling needs q, t and a seed")
    qv, tv = check_parameters(qv, tv)
    sampler = as_sampler(seed)
    column = variant == "column"

    def choose(lam: Partition, r: int):
        return [(sampler.choose_threshold(_forward_thresholds(lam, dstar(lam)[r], qv, tv, column)), None)]

    return next(iter(_insertion_paths(tableau, k, choose)))[0]


def forward_by_insertion(sigma: Permutation) -> PairDistribution:
    """``P(sigma -> P, Q)`` by successive exact qRSt insertions (independent of growth filling)."""
    sigma = Permutation(sigma)
    states: dict[tuple[PartialTableau, tuple[Partition, ...]], RationalQT] = {
        (PartialTableau({}), (Partition(()),)): RationalQT.from_laurent(1)
    }
    for k in sigma:
        nxt: dict[tuple[PartialTableau, tuple[Partition, ...]], RationalQT] = {}
        for (tab, rec_chain), w in states.items():
            for new, p in qrst_insert_brackets(tab, k).items():
                key = (new, rec_chain + (new.shape,))
                val = w * p.to_rq()
                nxt[key] = nxt[key] + val if key in nxt else val
        states = nxt
    n = sigma.n
    out: dict[tuple[StandardTableau, StandardTableau], RationalQT] = {}
    for (tab, rec_chain), w in states.items():
        out[(StandardTableau(tab.chain(n)), StandardTableau(rec_chain))] = w
    return PairDistribution(out)


# -- deterministic growths and classical RS -----------------------------------------------


def _f_index(rules: Rules, d: int, r: int) -> int:
    if rules == "F_row":
        return r
    if rules == "F_col":
        return d if r == 0 else r - 1
    raise ValueError(f"unknown local rules {rules!r}")


def fgrowth(sigma: Permutation, rules: Rules = "F_row") -> GrowthDiagram:
    """The unique growth diagram of ``sigma`` for the deterministic local rules."""
    sigma = Permutation(sigma)
    grid = _empty_grid(sigma.n)
    for i, j in _square_order(sigma.n, "row"):
        nw, ne, sw = grid[i - 1][j - 1], grid[i - 1][j], grid[i][j - 1]
        options = _forward_options(nw, ne, sw, sigma(j) == i)
        if options[0][1] is None:
            grid[i][j] = options[0][0]
        else:
            r = dstar(sw).index(nw)
            grid[i][j] = ups(sw)[_f_index(rules, len(options) - 1, r)]
    return _freeze(sigma, grid)


def classical_rs(sigma: Permutation, variant: Variant = "row") -> tuple[StandardTableau, StandardTableau]:
    """Schensted insertion along rows, or along columns."""
    sigma = Permutation(sigma)
    lines: list[list[int]] = []
    q_cells: dict[Cell, int] = {}
    for step, k in enumerate(sigma, 1):
        value, idx = k, 0
        while True:
            if idx == len(lines):
                lines.append([value])
                pos = 0
                break
            line = lines[idx]
            bigger = [p for p, v in enumerate(line) if v > value]
            if not bigger:
                line.append(value)
                pos = len(line) - 1
                break
            pos = bigger[0]
            line[pos], value = value, line[pos]
            idx += 1
        q_cells[Cell(pos + 1, idx + 1) if variant == "row" else Cell(idx + 1, pos + 1)] = step
    if variant == "row":
        p_fill = {Cell(x, y): v for y, line in enumerate(lines, 1) for x, v in enumerate(line, 1)}
    elif variant == "column":
        p_fill = {Cell(x, y): v for x, line in enumerate(lines, 1) for y, v in enumerate(line, 1)}
    else:
        raise ValueError(f"unknown variant {variant!r}")
    n = sigma.n
    return (
        StandardTableau(PartialTableau(p_fill).chain(n)),
        StandardTableau(PartialTableau(q_cells).chain(n)),
    )


def transpose_tableau(t: StandardTableau) -> StandardTableau:
    return StandardTableau(p.conjugate() for p in t.chain)


__all__ = [
    "GENERATOR",
    "MAX_EXACT_N",
    "ExactSampler",
    "GrowthDiagram",
    "PairDistribution",
    "Permutation",
    "all_permutations",
    "backward_exact",
    "backward_exact_growths",
    "check_parameters",
    "classical_rs",
    "enumerate_growths",
    "enumerate_growths_brackets",
    "fgrowth",
    "forward_by_insertion",
    "forward_exact",
    "growth_probability",
    "qrst_insert",
    "qrst_insert_brackets",
    "sample",
    "sample_backward",
    "sample_forward",
    "sample_forward_growth",
    "square_type",
    "transpose_tableau",
]
