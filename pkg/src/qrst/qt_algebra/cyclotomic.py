"""Cyclotomic factors of monomials, the irreducible pieces of every bracket.

A factor key ``(a, b, d)`` stands for ``Phi_d(q^a t^b)`` with ``gcd(a, b) = 1``
and ``(a, b)`` oriented so that ``a > 0`` or ``a == 0 < b``. Such a polynomial
is irreducible over Q, so keeping denominators as products of keys gives a
unique factorization for free.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .laurent import Coef, LaurentPoly, norm_coef

FactorKey = tuple[int, int, int]


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[int, ...]:
    """Integer coefficients of ``Phi_n(x)``, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _udiv_exact(poly, list(cyclotomic(d)))
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic(n)) - 1


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _udiv_exact(f: list, g: list) -> list:
    """Univariate exact division for a monic divisor; raises if inexact."""
    quot, rem = _udivmod(f, g)
    if any(rem):
        raise ArithmeticError("inexact univariate division")
    return quot


def _udivmod(f: list, g: list) -> tuple[list, list]:
    m = len(g) - 1
    rem = list(f)
    if len(rem) - 1 < m:
        return [0], rem
    quot = [0] * (len(rem) - m)
    lead = g[-1]
    for i in range(len(rem) - 1, m - 1, -1):
        c = rem[i]
        if not c:
            continue
        qc = c if lead == 1 else norm_coef(Fraction(c) / lead)
        quot[i - m] = qc
        for j in range(m + 1):
            rem[i - m + j] -= qc * g[j]
    return quot, rem[:m]


def canonical_direction(a: int, b: int) -> tuple[int, int, bool]:
    """Orient ``(a, b)``; the flag says whether it was negated."""
    if a < 0 or (a == 0 and b < 0):
        return -a, -b, True
    return a, b, False


def phi_at_zero(d: int) -> int:
    return -1 if d == 1 else 1


def phi_at_one(d: int) -> int:
    """``Phi_d(1)``: 0 for d = 1, p for a prime power p^k, else 1."""
    if d == 1:
        return 0
    for p in range(2, d + 1):
        if d % p == 0:
            while d % p == 0:
                d //= p
            return p if d == 1 else 1
    return 1


def reciprocal_sign(d: int) -> int:
    """``Phi_d(1/x) = sign * x^(-phi(d)) * Phi_d(x)``."""
    return -1 if d == 1 else 1


@lru_cache(maxsize=None)
def factor_poly(key: FactorKey, power: int = 1) -> LaurentPoly:
    """Expanded ``Phi_d(q^a t^b) ** power``."""
    a, b, d = key
    if power != 1:
        return factor_poly(key, 1) ** power
    return LaurentPoly({(k * a, k * b): c for k, c in enumerate(cyclotomic(d)) if c})


@lru_cache(maxsize=None)
def bracket_decomposition(i: int, j: int) -> tuple[int, tuple[int, int], tuple[FactorKey, ...]]:
    """Write ``1 - q^i t^j`` as ``sign * q^m t^n * prod Phi_d(q^a t^b)``."""
    g = gcd(i, j)
    a, b = i // g, j // g
    a, b, flipped = canonical_direction(a, b)
    keys = tuple((a, b, d) for d in divisors(g))
    if flipped:
        # 1 - u^-g = u^-g (u^g - 1)
        return 1, (-g * a, -g * b), keys
    return -1, (0, 0), keys


def _ext_gcd(a: int, b: int) -> tuple[int, int]:
    """Integers ``(c, e)`` with ``a * e - b * c = 1`` for coprime a, b."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_u, u = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_s, s = s, old_s - k * s
        old_u, u = u, old_u - k * u
    # old_s * a + old_u * b = old_r = +-1
    if old_r < 0:
        old_s, old_u = -old_s, -old_u
    return -old_u, old_s


def _group_by_direction(p: LaurentPoly, a: int, b: int) -> tuple[tuple[int, int], dict[int, dict[int, Coef]]]:
    """Split ``p`` as ``sum_l w^l g_l(u)`` for ``u = q^a t^b`` and a complement ``w``."""
    c, e = _ext_gcd(a, b)
    groups: dict[int, dict[int, Coef]] = {}
    for (x, y), coef in p.terms.items():
        k = x * e - y * c
        layer = -x * b + y * a
        groups.setdefault(layer, {})[k] = coef
    return (c, e), groups


def divide_by_factor(p: LaurentPoly, key: FactorKey) -> LaurentPoly | None:
    """Return ``p / Phi_d(q^a t^b)`` when exact, else None."""
    a, b, d = key
    phi = list(cyclotomic(d))
    (c, e), groups = _group_by_direction(p, a, b)
    out: dict[tuple[int, int], Coef] = {}
    for layer, g in groups.items():
        lo = min(g)
        dense = [0] * (max(g) - lo + 1)
        for k, v in g.items():
            dense[k - lo] = v
        if len(dense) < len(phi):
            return None
        quot, rem = _udivmod(dense, phi)
        if any(rem):
            return None
        for k, v in enumerate(quot):
            if v:
                kk = k + lo
                out[(kk * a + layer * c, kk * b + layer * e)] = v
    return LaurentPoly(out)


def split_cyclotomic(p: LaurentPoly) -> tuple[LaurentPoly, dict[FactorKey, int]]:
    """Pull every cyclotomic-of-monomial factor out of ``p``.

    Returns the cofactor and the multiplicities found. A direction can only
    carry such a factor if every layer of ``p`` along it has two or more
    terms, which prunes the search to a handful of candidates.
    """
    found: dict[FactorKey, int] = {}
    if p.is_zero() or p.is_monomial():
        return p, found
    lo, hi = p.min_exponents(), p.max_exponents()
    span_q, span_t = hi[0] - lo[0], hi[1] - lo[1]
    for a in range(0, span_q + 1):
        for b in range(-span_t, span_t + 1):
            if (a == 0 and b <= 0) or gcd(a, b) != 1:
                continue
            _, groups = _group_by_direction(p, a, b)
            if any(len(g) < 2 for g in groups.values()):
                continue
            width = min(max(g) - min(g) for g in groups.values())
            for d in range(1, 6 * width + 7):
                deg = euler_phi(d)
                if deg > width:
                    continue
                key = (a, b, d)
                while True:
                    nxt = divide_by_factor(p, key)
                    if nxt is None:
                        break
                    p = nxt
                    found[key] = found.get(key, 0) + 1
                    _, groups = _group_by_direction(p, a, b)
                    width = min(max(g) - min(g) for g in groups.values())
                    if width < deg:
                        break
            lo, hi = p.min_exponents(), p.max_exponents()
            if p.is_monomial():
                return p, found
    return p, found


@lru_cache(maxsize=None)
def univariate_split(d: int, m: int) -> tuple[tuple[int, int], ...]:
    """Factor ``Phi_d(x^m)`` for ``m > 0`` as ``prod Phi_e(x)^k``; returns (e, k) pairs."""
    poly = [0] * (m * euler_phi(d) + 1)
    for k, c in enumerate(cyclotomic(d)):
        poly[k * m] = c
    out = []
    for e in divisors(d * m):
        ce = list(cyclotomic(e))
        k = 0
        while len(poly) >= len(ce):
            quot, rem = _udivmod(poly, ce)
            if any(rem):
                break
            poly, k = quot, k + 1
        if k:
            out.append((e, k))
    return tuple(out)
