"""Partitions, Young diagrams, Young's lattice, and tableaux viewed as chains.

Cells use Cartesian coordinates in the French convention: ``x`` is the
column and ``y`` the row, both starting at 1, so the longest row sits at
the bottom.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial
from typing import NamedTuple

from .errors import (
    CellOutsideDiagram,
    DuplicateEntry,
    EmptyPartition,
    NotContained,
    NotCover,
    NotCoverChain,
    SizeBoundExceeded,
)
from .qt_algebra import BracketProduct, RationalQT

SYT_BOUND = int(os.environ.get("QRST_SYT_BOUND", "12"))


class Cell(NamedTuple):
    """A box of a Young diagram: column ``x`` and row ``y``, both >= 1."""

    x: int
    y: int


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        text = text.strip()
        if text in ("", "0", "-"):
            return cls()
        return cls(int(p) for p in text.split(","))

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({str(self)!r})"

    def row(self, y: int) -> int:
        """Length of row ``y`` (1-based); 0 beyond the last row."""
        return self[y - 1] if 1 <= y <= len(self) else 0

    def col(self, x: int) -> int:
        """Height of column ``x`` (1-based)."""
        return sum(1 for p in self if p >= x)

    @property
    def size(self) -> int:
        return sum(self)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, tuple) and len(item) == 2 and not isinstance(item, Partition):
            x, y = item
            return x >= 1 and y >= 1 and x <= self.row(y)
        return super().__contains__(item)

    def cells(self) -> list[Cell]:
        return [Cell(x, y) for y, p in enumerate(self, 1) for x in range(1, p + 1)]

    def contains(self, other: Partition) -> bool:
        return len(other) <= len(self) and all(a <= b for a, b in zip(other, self))

    def union(self, other: Partition) -> Partition:
        n = max(len(self), len(other))
        return Partition(max(self.row(i), other.row(i)) for i in range(1, n + 1))

    def intersection(self, other: Partition) -> Partition:
        n = min(len(self), len(other))
        return Partition(min(self.row(i), other.row(i)) for i in range(1, n + 1))

    def with_cell(self, y: int) -> Partition:
        """Add one cell at the end of row ``y``."""
        parts = list(self) + [0]
        parts[y - 1] += 1
        return Partition(parts)

    def without_cell(self, y: int) -> Partition:
        """Remove the last cell of row ``y``."""
        parts = list(self)
        parts[y - 1] -= 1
        return Partition(parts)

    @cached_property
    def _conjugate(self) -> Partition:
        return Partition(self.col(x) for x in range(1, self.row(1) + 1))

    def conjugate(self) -> Partition:
        return self._conjugate


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


def skew_cells(outer: Partition, inner: Partition) -> list[Cell]:
    """Cells of ``outer / inner``."""
    if not outer.contains(inner):
        raise NotContained(f"{inner} is not contained in {outer}")
    return [Cell(x, y) for y, p in enumerate(outer, 1) for x in range(inner.row(y) + 1, p + 1)]


def single_cell(outer: Partition, inner: Partition) -> Cell:
    """The unique cell of ``outer / inner``; raises NotCover otherwise."""
    if outer.size != inner.size + 1 or not outer.contains(inner):
        raise NotCover(f"{outer} does not cover {inner}")
    (c,) = skew_cells(outer, inner)
    return c


def covers(outer: Partition, inner: Partition) -> bool:
    return outer.size == inner.size + 1 and outer.contains(inner)


def cell_stats(lam: Partition, c: tuple[int, int]) -> tuple[int, int, int]:
    """Arm, leg, and hook length of a cell of ``lam``."""
    x, y = c
    if (x, y) not in lam:
        raise CellOutsideDiagram(f"{c} is not a cell of {lam}")
    arm = lam.row(y) - x
    leg = lam.col(x) - y
    return arm, leg, arm + leg + 1


def arm_leg(lam: Partition, c: tuple[int, int]) -> tuple[int, int]:
    """Arm and leg of any cell, signed; used for cells of a neighbouring shape."""
    x, y = c
    return lam.row(y) - x, lam.col(x) - y


def n_stats(lam: Partition) -> tuple[int, int]:
    """``(n(lam), n'(lam))``: sums of legs and of arms."""
    n = sum((y - 1) * p for y, p in enumerate(lam, 1))
    nprime = sum(p * (p - 1) // 2 for p in lam)
    return n, nprime


@dataclass(frozen=True)
class Parameters:
    """Boundary description of a nonempty partition.

    ``h[i]`` is the horizontal step and ``v[i]`` the vertical step of the
    i-th block (1-based in the accessors), counted from the top-right.
    """

    h: tuple[int, ...]
    v: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.h)

    def hs(self, i: int, j: int) -> int:
        """``h_i + ... + h_j``, zero when ``i > j``."""
        return sum(self.h[i - 1 : j]) if i <= j else 0

    def vs(self, i: int, j: int) -> int:
        """``v_i + ... + v_j``, zero when ``i > j``."""
        return sum(self.v[i - 1 : j]) if i <= j else 0

    def to_partition(self) -> Partition:
        parts: list[int] = []
        for i in range(1, self.d + 1):
            parts += [self.hs(i, self.d)] * self.v[i - 1]
        return Partition(parts)


def boundary(lam: Partition) -> Parameters:
    """Parameters, allowing the empty partition (``d = 0``)."""
    distinct = sorted(set(lam), reverse=True)
    u = distinct + [0]
    h = tuple(u[i] - u[i + 1] for i in range(len(distinct)))
    v = tuple(lam.count(p) for p in distinct)
    return Parameters(h, v)


def parameters(lam: Partition) -> Parameters:
    if not lam:
        raise EmptyPartition("the empty partition has no parameters")
    return boundary(lam)


@lru_cache(maxsize=None)
def neighborhoods(lam: Partition) -> tuple[list[Partition], list[Partition], list[Partition]]:
    """``(down, up, dstar)`` in the fixed ``(+s)`` / ``(-r)`` order."""
    pr = boundary(lam)
    up = [lam.with_cell(pr.vs(1, s) + 1) for s in range(pr.d + 1)]
    dstar = [lam] + [lam.without_cell(pr.vs(1, r)) for r in range(1, pr.d + 1)]
    return dstar[1:], up, dstar


def ups(lam: Partition) -> list[Partition]:
    return neighborhoods(lam)[1]


def dstar(lam: Partition) -> list[Partition]:
    return neighborhoods(lam)[2]


def downs(lam: Partition) -> list[Partition]:
    return neighborhoods(lam)[0]


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(n, n))


def partitions_up_to(n: int) -> list[Partition]:
    return [p for k in range(n + 1) for p in partitions_of(k)]


def hook_products(lam: Partition) -> tuple[int, RationalQT]:
    """``H = prod hook`` and its q-analogue ``prod (1 - q^hook)``."""
    hooks = [cell_stats(lam, c)[2] for c in lam.cells()]
    h = 1
    for k in hooks:
        h *= k
    bp = BracketProduct(1, (0, 0), [((k, 0), 1) for k in hooks])
    return h, bp.to_rq()


def hook_product(lam: Partition) -> int:
    return hook_products(lam)[0]


def syt_count(lam: Partition) -> int:
    """Number of standard tableaux by the hook-length formula."""
    return factorial(lam.size) // hook_product(lam)


# -- tableaux -----------------------------------------------------------------


def _parse_rows(text: str) -> list[list[int]]:
    text = text.strip()
    if not text:
        return []
    return [[int(v) for v in row.split(",") if v.strip()] for row in text.split(";")]


def _rows_text(rows: Iterable[Iterable[int]]) -> str:
    return ";".join(",".join(map(str, r)) for r in rows)


class StandardTableau:
    """A saturated chain ``0 = T^0 < T^1 < ... < T^n`` in Young's lattice."""

    __slots__ = ("chain",)

    def __init__(self, chain: Iterable[Partition]) -> None:
        chain = tuple(Partition(p) for p in chain)
        if not chain or chain[0]:
            raise NotCoverChain("a standard tableau chain starts at the empty partition")
        for a, b in zip(chain, chain[1:]):
            if not covers(b, a):
                raise NotCoverChain(f"{b} does not cover {a}")
        self.chain = chain

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> StandardTableau:
        filling = {Cell(x, y): v for y, r in enumerate(rows, 1) for x, v in enumerate(r, 1)}
        n = len(filling)
        if sorted(filling.values()) != list(range(1, n + 1)):
            raise DuplicateEntry("a standard tableau holds each of 1..n once")
        pt = PartialTableau(filling)
        return cls(pt.chain(n))

    @classmethod
    def parse(cls, text: str) -> StandardTableau:
        return cls.from_rows(_parse_rows(text))

    @property
    def shape(self) -> Partition:
        return self.chain[-1]

    @property
    def n(self) -> int:
        return len(self.chain) - 1

    def filling(self) -> dict[Cell, int]:
        return {single_cell(b, a): i for i, (a, b) in enumerate(zip(self.chain, self.chain[1:]), 1)}

    def rows(self) -> list[list[int]]:
        f = self.filling()
        return [[f[Cell(x, y)] for x in range(1, p + 1)] for y, p in enumerate(self.shape, 1)]

    def __str__(self) -> str:
        return _rows_text(self.rows())

    def __repr__(self) -> str:
        return f"StandardTableau({str(self)!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, StandardTableau) and self.chain == other.chain

    def __hash__(self) -> int:
        return hash(self.chain)

    def __lt__(self, other: StandardTableau) -> bool:
        return self.rows() < other.rows()


class PartialTableau:
    """Increasing filling by distinct positive integers, not necessarily 1..n."""

    __slots__ = ("filling",)

    def __init__(self, filling: Mapping[tuple[int, int], int]) -> None:
        fill = {Cell(*c): int(v) for c, v in filling.items()}
        if len(set(fill.values())) != len(fill):
            raise DuplicateEntry("entries of a partial tableau are distinct")
        if any(v <= 0 for v in fill.values()):
            raise ValueError("entries must be positive")
        for (x, y), v in fill.items():
            if (x > 1 and fill.get(Cell(x - 1, y), v + 1) >= v) or (y > 1 and fill.get(Cell(x, y - 1), v + 1) >= v):
                raise ValueError("rows and columns must increase and the shape must be a partition")
        self.filling = fill
        Partition(self.shape)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> PartialTableau:
        return cls({Cell(x, y): v for y, r in enumerate(rows, 1) for x, v in enumerate(r, 1)})

    @classmethod
    def parse(cls, text: str) -> PartialTableau:
        return cls.from_rows(_parse_rows(text))

    @property
    def shape(self) -> Partition:
        rows: dict[int, int] = {}
        for x, y in self.filling:
            rows[y] = max(rows.get(y, 0), x)
        return Partition(rows.get(y, 0) for y in range(1, len(rows) + 1))

    def entries(self) -> list[int]:
        return sorted(self.filling.values())

    def max_entry(self) -> int:
        return max(self.filling.values(), default=0)

    def subshape(self, z: int) -> Partition:
        """Shape ``T^(z)`` of the entries at most ``z``."""
        rows: dict[int, int] = {}
        for (x, y), v in self.filling.items():
            if v <= z:
                rows[y] = max(rows.get(y, 0), x)
        return Partition(rows.get(y, 0) for y in range(1, len(rows) + 1))

    def chain(self, top: int | None = None) -> tuple[Partition, ...]:
        """``(T^(0), ..., T^(top))``; consecutive shapes differ by at most one cell."""
        top = self.max_entry() if top is None else top
        return tuple(self.subshape(z) for z in range(top + 1))

    @classmethod
    def from_chain(cls, chain: Iterable[Partition]) -> PartialTableau:
        chain = list(chain)
        fill = {}
        for z, (a, b) in enumerate(zip(chain, chain[1:]), 1):
            if a != b:
                fill[single_cell(b, a)] = z
        return cls(fill)

    def rows(self) -> list[list[int]]:
        return [[self.filling[Cell(x, y)] for x in range(1, p + 1)] for y, p in enumerate(self.shape, 1)]

    def __str__(self) -> str:
        return _rows_text(self.rows())

    def __repr__(self) -> str:
        return f"PartialTableau({str(self)!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PartialTableau) and self.filling == other.filling

    def __hash__(self) -> int:
        return hash(frozenset(self.filling.items()))


def syt_enumerate(lam: Partition, bound: int | None = None) -> list[StandardTableau]:
    """All standard tableaux of shape ``lam`` as chains."""
    bound = SYT_BOUND if bound is None else bound
    if lam.size > bound:
        raise SizeBoundExceeded(f"|lambda| = {lam.size} exceeds the bound {bound}")
    return [StandardTableau(c) for c in _chains_to(lam)]


@lru_cache(maxsize=None)
def _chains_to(lam: Partition) -> tuple[tuple[Partition, ...], ...]:
    if not lam:
        return ((lam,),)
    return tuple(c + (lam,) for mu in downs(lam) for c in _chains_to(mu))
