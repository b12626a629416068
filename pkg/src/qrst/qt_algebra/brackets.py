"""Products of brackets ``[i, j] = 1 - q^i t^j`` with a scalar and a monomial.

Transition probabilities are built in this multiplicative form, which keeps
them cheap to multiply, invert, and evaluate, and readable when printed.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from numbers import Rational

from ..errors import DegenerateBracket, PoleAtPoint
from .cyclotomic import bracket_decomposition, factor_poly
from .laurent import Coef, LaurentPoly, norm_coef
from .rational import RationalQT


def _check(i: int, j: int) -> None:
    if i == 0 and j == 0:
        raise DegenerateBracket("[0,0] is identically zero")


class BracketProduct:
    """``scalar * q^mq * t^mt * prod [i, j]^e``; exponents ``e`` may be negative."""

    __slots__ = ("scalar", "mono", "factors")

    def __init__(
        self,
        scalar: Rational = 1,
        mono: tuple[int, int] = (0, 0),
        factors: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = (),
    ) -> None:
        acc: dict[tuple[int, int], int] = {}
        items = factors.items() if isinstance(factors, Mapping) else factors
        for (i, j), e in items:
            _check(i, j)
            acc[(i, j)] = acc.get((i, j), 0) + e
        self.scalar: Coef = norm_coef(scalar)
        self.mono = (int(mono[0]), int(mono[1]))
        self.factors: dict[tuple[int, int], int] = {k: e for k, e in acc.items() if e}

    @classmethod
    def bracket(cls, i: int, j: int, e: int = 1) -> BracketProduct:
        return cls(1, (0, 0), {(i, j): e})

    @classmethod
    def monomial(cls, mq: int, mt: int, scalar: Rational = 1) -> BracketProduct:
        return cls(scalar, (mq, mt))

    @classmethod
    def one(cls) -> BracketProduct:
        return cls()

    def is_zero(self) -> bool:
        return self.scalar == 0

    def __mul__(self, other: BracketProduct | Rational) -> BracketProduct:
        if not isinstance(other, BracketProduct):
            return BracketProduct(self.scalar * other, self.mono, self.factors)
        merged = dict(self.factors)
        for k, e in other.factors.items():
            merged[k] = merged.get(k, 0) + e
        return BracketProduct(
            self.scalar * other.scalar,
            (self.mono[0] + other.mono[0], self.mono[1] + other.mono[1]),
            merged,
        )

    __rmul__ = __mul__

    def inverse(self) -> BracketProduct:
        if self.scalar == 0:
            raise ZeroDivisionError("inverse of the zero product")
        return BracketProduct(
            Fraction(1) / self.scalar,
            (-self.mono[0], -self.mono[1]),
            {k: -e for k, e in self.factors.items()},
        )

    def __truediv__(self, other: BracketProduct | Rational) -> BracketProduct:
        if not isinstance(other, BracketProduct):
            return BracketProduct(Fraction(self.scalar) / other, self.mono, self.factors)
        return self * other.inverse()

    def __pow__(self, n: int) -> BracketProduct:
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        return BracketProduct(
            base.scalar**n,
            (base.mono[0] * n, base.mono[1] * n),
            {k: e * n for k, e in base.factors.items()},
        )

    def swap_qt(self) -> BracketProduct:
        """Exchange the roles of q and t."""
        return BracketProduct(self.scalar, self.mono[::-1], {(j, i): e for (i, j), e in self.factors.items()})

    def evaluate(self, qv: Rational, tv: Rational) -> Coef:
        """Exact value at a rational point."""
        qv, tv = Fraction(qv), Fraction(tv)
        value = Fraction(self.scalar)
        if value == 0:
            return 0
        value *= LaurentPoly.monomial(*self.mono).evaluate(qv, tv)
        for (i, j), e in self.factors.items():
            b = 1 - LaurentPoly.monomial(i, j).evaluate(qv, tv)
            if b == 0 and e < 0:
                raise PoleAtPoint(f"[{i},{j}] vanishes at q={qv}, t={tv}")
            value *= Fraction(b) ** e
        return norm_coef(value)

    def to_rq(self) -> RationalQT:
        """Convert to a reduced rational function."""
        if self.scalar == 0:
            return RationalQT.from_laurent(0)
        sign = 1
        mq, mt = self.mono
        net: dict[tuple[int, int, int], int] = {}
        for (i, j), e in self.factors.items():
            s, (a, b), keys = bracket_decomposition(i, j)
            sign *= s**e
            mq += a * e
            mt += b * e
            for k in keys:
                net[k] = net.get(k, 0) + e
        num = LaurentPoly.monomial(mq, mt, self.scalar * sign)
        den: dict[tuple[int, int, int], int] = {}
        for k, e in sorted(net.items()):
            if e > 0:
                num = num * factor_poly(k, e)
            elif e < 0:
                den[k] = -e
        return RationalQT._make(num, den, reduced=True)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BracketProduct):
            return self.to_rq() == other.to_rq()
        if isinstance(other, (RationalQT, int, Fraction)):
            return self.to_rq() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.to_rq())

    def __repr__(self) -> str:
        return f"BracketProduct({self})"

    def __str__(self) -> str:
        if self.scalar == 0:
            return "0"
        head = []
        if self.scalar != 1:
            head.append(str(self.scalar))
        mq, mt = self.mono
        if mq:
            head.append("q" if mq == 1 else f"q^{mq}")
        if mt:
            head.append("t" if mt == 1 else f"t^{mt}")
        num = [f"[{i},{j}]" + (f"^{e}" if e > 1 else "") for (i, j), e in sorted(self.factors.items()) if e > 0]
        den = [f"[{i},{j}]" + (f"^{-e}" if e < -1 else "") for (i, j), e in sorted(self.factors.items()) if e < 0]
        top = "*".join(head + num) or "1"
        return top if not den else f"{top}/({'*'.join(den)})"


def bracket(i: int, j: int) -> BracketProduct:
    """The single bracket ``[i, j] = 1 - q^i t^j``."""
    return BracketProduct.bracket(i, j)


def bracket_to_rq(b: BracketProduct) -> RationalQT:
    return b.to_rq()
