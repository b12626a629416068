"""Exact rational functions in q, t whose denominators stay factored."""

from __future__ import annotations

import json
from collections.abc import Mapping
from fractions import Fraction
from functools import reduce
from numbers import Rational
from typing import Literal

from ..errors import DivisionByZero, PoleAtOne, PoleAtPoint, PoleOnLocus
from .cyclotomic import (
    FactorKey,
    canonical_direction,
    divide_by_factor,
    euler_phi,
    factor_poly,
    phi_at_one,
    phi_at_zero,
    reciprocal_sign,
    split_cyclotomic,
    univariate_split,
)
from .laurent import Coef, LaurentPoly, norm_coef

# A denominator factor is either a cyclotomic key or, as a fallback for
# divisors that are not products of brackets, an opaque Laurent polynomial.
Factor = FactorKey | LaurentPoly
SubstitutionMode = Literal["q_to_zero", "t_to_zero", "t_equals_q", "invert_both", "swap_qt"]

_HASH_POINT = (Fraction(3, 7), Fraction(5, 11))


def _is_key(f: Factor) -> bool:
    return isinstance(f, tuple)


def _expand(f: Factor, e: int) -> LaurentPoly:
    return factor_poly(f, e) if _is_key(f) else f**e


def _as_poly(x: LaurentPoly | Rational) -> LaurentPoly:
    return x if isinstance(x, LaurentPoly) else LaurentPoly.constant(x)


def _reduce(num: LaurentPoly, den: dict[Factor, int]) -> tuple[LaurentPoly, dict[Factor, int]]:
    """Cancel every denominator factor that divides the numerator."""
    if num.is_zero():
        return num, {}
    out: dict[Factor, int] = {}
    for f, e in den.items():
        while e > 0:
            nxt = divide_by_factor(num, f) if _is_key(f) else num.exact_div(f)
            if nxt is None:
                break
            num, e = nxt, e - 1
        if e:
            out[f] = e
    return num, out


class RationalQT:
    """An element of Q(q, t), stored as ``num / prod factor^exp``.

    When every factor is a cyclotomic key the representation is fully
    reduced and therefore unique, so equality is structural. Opaque factors
    fall back to cross-multiplication.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(
        self,
        num: LaurentPoly | Rational = 0,
        den: LaurentPoly | Rational | None = None,
    ) -> None:
        obj = RationalQT.from_polys(_as_poly(num), _as_poly(1 if den is None else den))
        self.num, self.den, self._hash = obj.num, obj.den, None

    @classmethod
    def _make(cls, num: LaurentPoly, den: Mapping[Factor, int], reduced: bool = False) -> RationalQT:
        obj = cls.__new__(cls)
        if not reduced:
            num, den = _reduce(num, dict(den))
        obj.num = num
        obj.den = {f: e for f, e in den.items() if e} if not num.is_zero() else {}
        obj._hash = None
        return obj

    @classmethod
    def from_polys(cls, num: LaurentPoly, den: LaurentPoly) -> RationalQT:
        """Build ``num / den``, factoring ``den`` into cyclotomic pieces."""
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            return cls._make(num, {}, reduced=True)
        rest, keys = split_cyclotomic(den)
        factors: dict[Factor, int] = dict(keys)
        if rest.is_monomial():
            ((k, c),) = rest.terms.items()
            num = num.shift(-k[0], -k[1]).scale(Fraction(1) / c)
        else:
            # Strip monomial content and the leading scalar before storing.
            lo = rest.min_exponents()
            rest = rest.shift(-lo[0], -lo[1])
            c = rest.terms[max(rest.terms)]
            rest = rest.scale(Fraction(1) / c)
            num = num.shift(-lo[0], -lo[1]).scale(Fraction(1) / c)
            factors[rest] = 1
        return cls._make(num, factors)

    @classmethod
    def from_laurent(cls, p: LaurentPoly | Rational) -> RationalQT:
        return cls._make(_as_poly(p), {}, reduced=True)

    @classmethod
    def q(cls) -> RationalQT:
        return cls.from_laurent(LaurentPoly.monomial(1, 0))

    @classmethod
    def t(cls) -> RationalQT:
        return cls.from_laurent(LaurentPoly.monomial(0, 1))

    @classmethod
    def monomial(cls, eq: int, et: int, coef: Rational = 1) -> RationalQT:
        return cls.from_laurent(LaurentPoly.monomial(eq, et, coef))

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_canonical(self) -> bool:
        return all(_is_key(f) for f in self.den)

    def den_poly(self) -> LaurentPoly:
        return reduce(lambda acc, fe: acc * _expand(*fe), self.den.items(), LaurentPoly.constant(1))

    def to_polys(self) -> tuple[LaurentPoly, LaurentPoly]:
        """Normalized ``(num, den)``: ordinary polynomials, no common monomial,
        and the lexicographically smallest denominator term positive."""
        if self.is_zero():
            return LaurentPoly(), LaurentPoly.constant(1)
        num, den = self.num, self.den_poly()
        nlo, dlo = num.min_exponents(), den.min_exponents()
        sq, st = min(nlo[0], dlo[0]), min(nlo[1], dlo[1])
        num, den = num.shift(-sq, -st), den.shift(-sq, -st)
        if den.terms[min(den.terms)] < 0:
            num, den = -num, -den
        return num, den

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x: object) -> RationalQT:
        if isinstance(x, RationalQT):
            return x
        if isinstance(x, LaurentPoly):
            return RationalQT.from_laurent(x)
        if isinstance(x, (int, Fraction)):
            return RationalQT.from_laurent(LaurentPoly.constant(x))
        raise TypeError(f"cannot interpret {type(x).__name__} as a rational function")

    def _lift(self, common: Mapping[Factor, int]) -> LaurentPoly:
        num = self.num
        for f, e in common.items():
            extra = e - self.den.get(f, 0)
            if extra:
                num = num * _expand(f, extra)
        return num

    def __add__(self, other: object) -> RationalQT:
        try:
            g = RationalQT._coerce(other)
        except TypeError:
            return NotImplemented
        if g.is_zero():
            return self
        if self.is_zero():
            return g
        common = dict(self.den)
        for f, e in g.den.items():
            common[f] = max(e, common.get(f, 0))
        return RationalQT._make(self._lift(common) + g._lift(common), common)

    __radd__ = __add__

    def __neg__(self) -> RationalQT:
        return RationalQT._make(-self.num, self.den, reduced=True)

    def __sub__(self, other: object) -> RationalQT:
        try:
            g = RationalQT._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other: object) -> RationalQT:
        return RationalQT._coerce(other) - self

    def __mul__(self, other: object) -> RationalQT:
        try:
            g = RationalQT._coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or g.is_zero():
            return RationalQT.from_laurent(0)
        # Cancel across before multiplying; irreducibility makes this complete.
        a, da = _reduce(self.num, g.den)
        b, db = _reduce(g.num, self.den)
        den = dict(da)
        for f, e in db.items():
            den[f] = den.get(f, 0) + e
        return RationalQT._make(a * b, den, reduced=self.is_canonical() and g.is_canonical())

    __rmul__ = __mul__

    def inverse(self) -> RationalQT:
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        inv = RationalQT.from_polys(LaurentPoly.constant(1), self.num)
        return inv * RationalQT._make(self.den_poly(), {}, reduced=True)

    def __truediv__(self, other: object) -> RationalQT:
        try:
            g = RationalQT._coerce(other)
        except TypeError:
            return NotImplemented
        if g.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return self * g.inverse()

    def __rtruediv__(self, other: object) -> RationalQT:
        return RationalQT._coerce(other) / self

    def __pow__(self, n: int) -> RationalQT:
        if n < 0:
            return self.inverse() ** (-n)
        return RationalQT._make(self.num**n, {f: e * n for f, e in self.den.items()}, reduced=self.is_canonical())

    # -- comparison --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        try:
            g = RationalQT._coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_canonical() and g.is_canonical():
            return self.den == g.den and self.num == g.num
        common = dict(self.den)
        for f, e in g.den.items():
            common[f] = max(e, common.get(f, 0))
        return self._lift(common) == g._lift(common)

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_canonical():
                self._hash = hash((self.num, frozenset(self.den.items())))
            else:
                try:
                    self._hash = hash(self.evaluate(*_HASH_POINT))
                except ZeroDivisionError:
                    self._hash = 0
        return self._hash

    # -- evaluation and substitution ---------------------------------------

    def evaluate(self, qv: Rational, tv: Rational) -> Coef:
        """Exact value at a rational point."""
        try:
            value = Fraction(self.num.evaluate(qv, tv))
            for f, e in self.den.items():
                d = _expand(f, 1).evaluate(qv, tv)
                if d == 0:
                    raise PoleAtPoint("denominator factor vanishes")
                value /= Fraction(d) ** e
            return norm_coef(value)
        except PoleAtPoint:
            num, den = self.to_polys()
            d = den.evaluate(qv, tv)
            if d == 0:
                raise PoleAtPoint(f"pole at q={qv}, t={tv}") from None
            return norm_coef(Fraction(num.evaluate(qv, tv)) / d)

    def substitute(self, mode: SubstitutionMode) -> RationalQT:
        if mode == "invert_both":
            return self._map_exponents((-1, 0, 0, -1))
        if mode == "swap_qt":
            return self._map_exponents((0, 1, 1, 0))
        if mode == "t_to_zero":
            return self._kill(1)
        if mode == "q_to_zero":
            return self._kill(0)
        if mode == "t_equals_q":
            return self._diagonal()
        raise ValueError(f"unknown substitution mode {mode!r}")

    def _map_exponents(self, m: tuple[int, int, int, int]) -> RationalQT:
        num = self.num.map_exponents(m)
        den: dict[Factor, int] = {}
        for f, e in self.den.items():
            if not _is_key(f):
                den[f.map_exponents(m)] = e
                continue
            a, b, d = f
            a2, b2 = m[0] * a + m[1] * b, m[2] * a + m[3] * b
            a3, b3, flipped = canonical_direction(a2, b2)
            if flipped:
                # 1 / Phi_d(w^-1) = sign * w^phi / Phi_d(w)
                k = euler_phi(d) * e
                num = num.shift(a3 * k, b3 * k).scale(reciprocal_sign(d) ** e)
            key = (a3, b3, d)
            den[key] = den.get(key, 0) + e
        return RationalQT._make(num, den, reduced=self.is_canonical())

    def _kill(self, var: int) -> RationalQT:
        """Set q (var=0) or t (var=1) to zero."""
        keep = 1 - var
        num = self.num
        den: dict[Factor, int] = {}
        for f, e in self.den.items():
            if not _is_key(f):
                lo = f.min_exponents()[var]
                shifted = f.shift(*((-lo, 0) if var == 0 else (0, -lo)))
                num = num.shift(*((-lo * e, 0) if var == 0 else (0, -lo * e)))
                rest = LaurentPoly({k: c for k, c in shifted.terms.items() if k[var] == 0})
                den_f = RationalQT.from_polys(LaurentPoly.constant(1), rest)
                num = num * den_f.num**e
                for g, ge in den_f.den.items():
                    den[g] = den.get(g, 0) + ge * e
                continue
            a, b, d = f
            exps = (a, b)
            if exps[var] == 0:
                den[f] = den.get(f, 0) + e
            elif exps[var] > 0:
                num = num.scale(Fraction(phi_at_zero(d)) ** -e)
            else:
                # Phi_d(u) = sign * u^phi * Phi_d(1/u), and 1/u vanishes on the locus.
                k = euler_phi(d) * e
                num = num.shift(-a * k, -b * k).scale(reciprocal_sign(d) ** e * Fraction(phi_at_zero(d)) ** -e)
        terms = num.terms
        if any(k[var] < 0 for k in terms):
            raise PoleOnLocus(("q" if var == 0 else "t") + " = 0 is a pole")
        num = LaurentPoly({k: c for k, c in terms.items() if k[var] == 0})
        return RationalQT._make(num, den)

    def _diagonal(self) -> RationalQT:
        num = self.num.map_exponents((1, 1, 0, 0))
        den: dict[Factor, int] = {}
        for f, e in self.den.items():
            if not _is_key(f):
                sub = RationalQT.from_polys(LaurentPoly.constant(1), f.map_exponents((1, 1, 0, 0)))
                num = num * sub.num**e
                for g, ge in sub.den.items():
                    den[g] = den.get(g, 0) + ge * e
                continue
            a, b, d = f
            m = a + b
            if m == 0:
                value = phi_at_one(d)
                if value == 0:
                    raise PoleOnLocus("t = q is a pole")
                num = num.scale(Fraction(value) ** -e)
                continue
            if m < 0:
                k = euler_phi(d) * e
                num = num.shift(-m * k, 0).scale(reciprocal_sign(d) ** e)
                m = -m
            for d2, k2 in univariate_split(d, m):
                key = (1, 0, d2)
                den[key] = den.get(key, 0) + k2 * e
        return RationalQT._make(num, den)

    def limit_q1_diagonal(self) -> Fraction:
        """Value of ``lim_{q = t -> 1}``, cancelling powers of ``1 - q`` first."""
        num, den = self.substitute("t_equals_q").to_polys()
        one_minus_q = LaurentPoly({(0, 0): 1, (1, 0): -1})
        while not den.is_zero() and den.evaluate(1, 1) == 0:
            if num.evaluate(1, 1) != 0:
                raise PoleAtOne("denominator vanishes at q = t = 1")
            num = num.exact_div(one_minus_q)
            den = den.exact_div(one_minus_q)
        return Fraction(num.evaluate(1, 1)) / den.evaluate(1, 1)

    # -- serialization -----------------------------------------------------

    def to_json_obj(self) -> dict[str, list[list]]:
        num, den = self.to_polys()
        return {"num": _poly_json(num), "den": _poly_json(den)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, list]) -> RationalQT:
        return cls.from_polys(_poly_from_json(obj["num"]), _poly_from_json(obj["den"]))

    @classmethod
    def from_json(cls, text: str) -> RationalQT:
        return cls.from_json_obj(json.loads(text))

    def __repr__(self) -> str:
        return f"RationalQT({self})"

    def __str__(self) -> str:
        if not self.den:
            return str(self.num)
        num, den = self.to_polys()
        if den == 1:
            return str(num)
        return f"({num})/({den})"


def _poly_json(p: LaurentPoly) -> list[list]:
    return [[a, b, str(Fraction(c))] for (a, b), c in p.items()]


def _poly_from_json(terms: list) -> LaurentPoly:
    out: dict[tuple[int, int], Fraction] = {}
    for eq, et, c in terms:
        if isinstance(c, float) or not isinstance(eq, int) or not isinstance(et, int):
            raise ValueError("exponents must be integers and coefficients exact")
        out[(eq, et)] = out.get((eq, et), 0) + Fraction(c)
    return LaurentPoly(out)


# Functional interface ---------------------------------------------------------


def rq_arith(f: RationalQT, g: RationalQT, op: Literal["+", "-", "*", "/"]) -> RationalQT:
    if op == "+":
        return f + g
    if op == "-":
        return f - g
    if op == "*":
        return f * g
    if op == "/":
        return f / g
    raise ValueError(f"unknown operator {op!r}")


def rq_eq(f: RationalQT, g: RationalQT) -> bool:
    return f == g


def rq_eval(f: RationalQT, qv: Rational, tv: Rational) -> Coef:
    return f.evaluate(qv, tv)


def rq_substitute(f: RationalQT, mode: SubstitutionMode) -> RationalQT:
    return f.substitute(mode)


def rq_limit_q1_diagonal(f: RationalQT) -> Fraction:
    return f.limit_q1_diagonal()
