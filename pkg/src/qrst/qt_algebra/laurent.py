"""Sparse Laurent polynomials in two variables q, t with rational coefficients."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from numbers import Rational

from ..errors import PoleAtPoint

Coef = int | Fraction
Exponent = tuple[int, int]


def norm_coef(c: Rational) -> Coef:
    """Return ``c`` as an int when integral, otherwise as a Fraction."""
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _power(base: Fraction | int, e: int) -> Fraction | int:
    if e >= 0:
        return base**e
    if base == 0:
        raise PoleAtPoint("negative power of zero")
    return Fraction(1, base) ** (-e) if isinstance(base, int) else base**e


class LaurentPoly:
    """Immutable mapping ``(eq, et) -> coefficient`` meaning ``sum c q^eq t^et``.

    Zero coefficients are never stored. Coefficients are ints when integral.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(
        self,
        terms: Mapping[Exponent, Rational] | Iterable[tuple[Exponent, Rational]] | None = None,
    ) -> None:
        acc: dict[Exponent, Coef] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (a, b), c in items:
                key = (int(a), int(b))
                acc[key] = acc.get(key, 0) + c
        self._terms = {k: norm_coef(c) for k, c in acc.items() if c}
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, Coef]) -> LaurentPoly:
        # Caller guarantees normalized, nonzero coefficients.
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, eq: int = 0, et: int = 0, coef: Rational = 1) -> LaurentPoly:
        return cls._raw({(eq, et): norm_coef(coef)} if coef else {})

    @classmethod
    def constant(cls, c: Rational) -> LaurentPoly:
        return cls.monomial(0, 0, c)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, Coef]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exponent, Coef]]:
        """Terms sorted by exponent of q, then of t."""
        return sorted(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0, 0) in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, eq: int, et: int) -> Coef:
        return self._terms.get((eq, et), 0)

    def min_exponents(self) -> Exponent:
        if not self._terms:
            return (0, 0)
        return (min(k[0] for k in self._terms), min(k[1] for k in self._terms))

    def max_exponents(self) -> Exponent:
        if not self._terms:
            return (0, 0)
        return (max(k[0] for k in self._terms), max(k[1] for k in self._terms))

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other: LaurentPoly | Rational) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = norm_coef(s)
            else:
                out.pop(k, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other: LaurentPoly | Rational) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: Rational) -> LaurentPoly:
        return LaurentPoly.constant(other) - self

    def scale(self, c: Rational) -> LaurentPoly:
        if not c:
            return LaurentPoly._raw({})
        if c == 1:
            return self
        return LaurentPoly._raw({k: norm_coef(v * c) for k, v in self._terms.items()})

    def shift(self, eq: int, et: int) -> LaurentPoly:
        """Multiply by the monomial ``q^eq t^et``."""
        if eq == 0 and et == 0:
            return self
        return LaurentPoly._raw({(a + eq, b + et): c for (a, b), c in self._terms.items()})

    def __mul__(self, other: LaurentPoly | Rational) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((k, c),) = b.items()
            return self.shift(*k).scale(c) if a is self._terms else other.shift(*k).scale(c)
        out: dict[Exponent, Coef] = {}
        get = out.get
        for (e1, f1), c1 in b.items():
            for (e2, f2), c2 in a.items():
                k = (e1 + e2, f1 + f2)
                out[k] = get(k, 0) + c1 * c2
        return LaurentPoly._raw({k: norm_coef(c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if self.is_monomial():
                ((k, c),) = self._terms.items()
                return LaurentPoly.monomial(k[0] * n, k[1] * n, Fraction(c) ** n)
            raise ValueError("negative power of a non-monomial Laurent polynomial")
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def map_exponents(self, m: tuple[int, int, int, int]) -> LaurentPoly:
        """Apply the linear exponent map ``(a, b) -> (m0 a + m1 b, m2 a + m3 b)``."""
        m0, m1, m2, m3 = m
        return LaurentPoly([((m0 * a + m1 * b, m2 * a + m3 * b), c) for (a, b), c in self._terms.items()])

    def exact_div(self, g: LaurentPoly) -> LaurentPoly | None:
        """Return ``self / g`` if it is a Laurent polynomial, else None."""
        if g.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        if g.is_monomial():
            ((k, c),) = g._terms.items()
            return self.shift(-k[0], -k[1]).scale(Fraction(1) / c)
        fmin, fmax = self.min_exponents(), self.max_exponents()
        gmin, gmax = g.min_exponents(), g.max_exponents()
        lo = (fmin[0] - gmin[0], fmin[1] - gmin[1])
        hi = (fmax[0] - gmax[0], fmax[1] - gmax[1])
        if lo[0] > hi[0] or lo[1] > hi[1]:
            return None
        glead = max(g._terms)
        gc = g._terms[glead]
        gitems = list(g._terms.items())
        rem = dict(self._terms)
        quot: dict[Exponent, Coef] = {}
        while rem:
            lead = max(rem)
            qk = (lead[0] - glead[0], lead[1] - glead[1])
            if not (lo[0] <= qk[0] <= hi[0] and lo[1] <= qk[1] <= hi[1]):
                return None
            r = rem[lead]
            if isinstance(r, int) and isinstance(gc, int) and r % gc == 0:
                qc: Coef = r // gc
            else:
                qc = norm_coef(Fraction(r) / gc)
            quot[qk] = qc
            for (a, b), c in gitems:
                k = (a + qk[0], b + qk[1])
                v = rem.get(k, 0) - qc * c
                if v:
                    rem[k] = norm_coef(v)
                else:
                    rem.pop(k, None)
        return LaurentPoly._raw(quot)

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, qv: Rational, tv: Rational) -> Coef:
        """Exact value at ``(q, t) = (qv, tv)``; raises PoleAtPoint on 1/0."""
        qv = norm_coef(qv)
        tv = norm_coef(tv)
        qcache: dict[int, Coef] = {}
        tcache: dict[int, Coef] = {}
        total: Coef = 0
        for (a, b), c in self._terms.items():
            if a not in qcache:
                qcache[a] = _power(qv, a)
            if b not in tcache:
                tcache[b] = _power(tv, b)
            total += c * qcache[a] * tcache[b]
        return norm_coef(total)

    # -- comparison and display ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self._terms.items()):
            mono = []
            if a:
                mono.append("q" if a == 1 else f"q^{a}")
            if b:
                mono.append("t" if b == 1 else f"t^{b}")
            body = "*".join(mono)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


Q = LaurentPoly.monomial(1, 0)
T = LaurentPoly.monomial(0, 1)
ONE = LaurentPoly.constant(1)
ZERO = LaurentPoly()
