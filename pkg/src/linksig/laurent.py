"""Laurent polynomials over the rationals.

A :class:`LaurentPoly` stores a dense coefficient tuple and the exponent of
its lowest term.  Arithmetic is exact and keeps the unit factors ``c*t^k``;
:meth:`LaurentPoly.canonical` picks the representative used for comparing
invariants (integer, primitive, constant term nonzero, positive leading
coefficient).

Dense polynomial helpers (``poly_*``) operate on plain coefficient tuples in
ascending order with no trailing zeros; ``()`` is the zero polynomial.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd as _igcd
from math import lcm as _ilcm
from typing import Iterable, Sequence

from .qfield import QuadraticNumber

__all__ = [
    "LaurentPoly",
    "T",
    "ONE",
    "ZERO",
    "associates",
    "bar_conjugate",
    "canonicalize",
    "gcd",
    "multiplicity",
    "evaluate",
]


def exact_quotient(a, b):
    """a / b, returned as int when the quotient is integral."""
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    q = Fraction(a) / b
    return int(q.numerator) if q.denominator == 1 else q


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


# ---------------------------------------------------------------------------
# dense polynomials (ascending coefficient tuples)


def poly_trim(p: Sequence) -> tuple:
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return tuple(_clean(c) for c in p[:n])


def poly_add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return poly_trim(out)


def poly_neg(p):
    return tuple(-c for c in p)


def poly_sub(p, q):
    return poly_add(p, poly_neg(q))


def poly_scale(p, c):
    if c == 0:
        return ()
    return tuple(_clean(x * c) for x in p)


def poly_mul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p, q):
    """Division with remainder over Q."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = len(q) - 1
    lead = q[-1]
    if len(r) <= dq:
        return (), poly_trim(r)
    quot = [0] * (len(r) - dq)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k]
        if c == 0:
            continue
        f = exact_quotient(c, lead)
        quot[k - dq] = f
        for j in range(dq + 1):
            r[k - dq + j] -= f * q[j]
    return poly_trim(quot), poly_trim(r[:dq])


def poly_exact_div(p, q):
    quot, rem = poly_divmod(p, q)
    if rem:
        raise ValueError("polynomial division is not exact")
    return quot


def poly_deriv(p):
    return poly_trim([i * p[i] for i in range(1, len(p))])


def poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_content(p):
    """Positive rational content: p / content(p) is a primitive integer polynomial."""
    if not p:
        return 0
    den = reduce(_ilcm, (Fraction(c).denominator for c in p), 1)
    num = reduce(_igcd, (int(Fraction(c) * den) for c in p), 0)
    return Fraction(num, den)


def poly_primitive(p):
    """Primitive integer associate of p with positive leading coefficient."""
    if not p:
        return ()
    c = poly_content(p)
    if p[-1] < 0:
        c = -c
    return tuple(int(Fraction(x) / c) for x in p)


def poly_gcd(p, q):
    """Primitive GCD over Q[x] via the primitive remainder sequence over Z."""
    a, b = poly_primitive(p), poly_primitive(q)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        # pseudo-remainder: scale a by lead(b)^k so the division stays integral
        k = len(a) - len(b) + 1
        _, r = poly_divmod(poly_scale(a, b[-1] ** k), b)
        a, b = b, poly_primitive(r)
    return poly_primitive(a)


def poly_pow(p, e):
    out = (1,)
    for _ in range(e):
        out = poly_mul(out, p)
    return out


def squarefree_decomposition(p):
    """Yun's algorithm: list of (q_k, k) with p ~ prod q_k**k, q_k squarefree, pairwise coprime.

    Only nonconstant factors are returned; factors are primitive integer polynomials.
    """
    p = poly_primitive(p)
    if len(p) <= 1:
        return []
    out = []
    dp = poly_deriv(p)
    a = poly_gcd(p, dp)
    b = poly_exact_div(p, a)
    c = poly_exact_div(dp, a)
    d = poly_sub(c, poly_deriv(b))
    k = 1
    while len(b) > 1:
        g = poly_gcd(b, d)
        if len(g) > 1:
            out.append((g, k))
        b = poly_exact_div(b, g)
        c = poly_exact_div(d, g)
        d = poly_sub(c, poly_deriv(b))
        k += 1
    return out


# ---------------------------------------------------------------------------
# Laurent polynomials


@dataclass(frozen=True)
class LaurentPoly:
    """sum(coeffs[i] * t**(low + i)); immutable, exact."""

    coeffs: tuple = ()
    low: int = 0

    def __post_init__(self):
        cs = [_clean(c) for c in self.coeffs]
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        end = len(cs)
        while end > start and cs[end - 1] == 0:
            end -= 1
        cs = cs[start:end]
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "low", int(self.low) + start if cs else 0)

    # -- constructors -----------------------------------------------------
    @classmethod
    def constant(cls, c) -> LaurentPoly:
        return cls((c,), 0)

    @classmethod
    def monomial(cls, c, k: int) -> LaurentPoly:
        return cls((c,), k)

    @classmethod
    def from_poly(cls, coeffs: Iterable, shift: int = 0) -> LaurentPoly:
        return cls(tuple(coeffs), shift)

    @classmethod
    def from_terms(cls, terms: dict) -> LaurentPoly:
        terms = {k: v for k, v in terms.items() if v != 0}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(tuple(terms.get(k, 0) for k in range(lo, hi + 1)), lo)

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse the report form, e.g. ``t^-1 - 2 + t`` or ``1 - 3t + 2t^2``."""
        s = text.replace(" ", "").replace("*", "")
        if s in ("", "0"):
            return cls()
        terms: dict[int, Fraction] = {}
        pattern = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(t(?:\^(-?\d+))?)?")
        pos = 0
        while pos < len(s):
            m = pattern.match(s, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            exp = 0
            if m.group(3):
                exp = int(m.group(4)) if m.group(4) is not None else 1
            terms[exp] = terms.get(exp, 0) + sign * coef
            pos = m.end()
        return cls.from_terms(terms)

    # -- basic queries ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def high(self) -> int:
        """Exponent of the top term (meaningless for zero)."""
        return self.low + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        """high - low; the degree of the polynomial part after clearing t-powers."""
        return len(self.coeffs) - 1 if self.coeffs else -1

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def terms(self) -> dict:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c != 0}

    def poly_part(self) -> tuple:
        """Coefficients with the lowest exponent shifted to zero."""
        return self.coeffs

    # -- arithmetic -------------------------------------------------------
    def _wrap(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - lo + i] += c
        return LaurentPoly(tuple(out), lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(tuple(-c for c in self.coeffs), self.low)

    def __sub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return LaurentPoly(poly_mul(self.coeffs, other.coeffs), self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit")
            return LaurentPoly((Fraction(1) / self.coeffs[0],), -self.low) ** (-e)
        out = ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t**k."""
        return LaurentPoly(self.coeffs, self.low + k)

    def divmod_exact(self, other: LaurentPoly):
        """(quotient, remainder-is-zero) for division in the Laurent ring."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        q, r = poly_divmod(self.coeffs, other.coeffs)
        return LaurentPoly(q, self.low - other.low), not r

    def __floordiv__(self, other):
        """Exact division; raises ValueError if ``other`` does not divide ``self``."""
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        q, ok = self.divmod_exact(other)
        if not ok:
            raise ValueError(f"{other} does not divide {self}")
        return q

    def divides(self, other: LaurentPoly) -> bool:
        if not self.coeffs:
            return not other.coeffs
        return other.divmod_exact(self)[1]

    def bar(self) -> LaurentPoly:
        """Image under t -> 1/t (not canonicalized)."""
        if not self.coeffs:
            return self
        return LaurentPoly(tuple(reversed(self.coeffs)), -self.high)

    def substitute_power(self, k: int) -> LaurentPoly:
        """p(t**k)."""
        if not self.coeffs:
            return self
        return LaurentPoly.from_terms({e * k: c for e, c in self.terms().items()})

    def canonical(self) -> LaurentPoly:
        if not self.coeffs:
            return self
        return LaurentPoly(poly_primitive(self.coeffs), 0)

    def is_canonical(self) -> bool:
        return self == self.canonical()

    def is_self_reciprocal(self) -> bool:
        return self.canonical() == self.bar().canonical()

    def evaluate(self, z):
        return evaluate(self, z)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.terms().items()):
            neg = c < 0
            a = -c if neg else c
            if e == 0:
                body = str(a)
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if a == 1 else f"{a}{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly((1,), 0)
T = LaurentPoly((1,), 1)


def canonicalize(p: LaurentPoly) -> LaurentPoly:
    return p.canonical()


def associates(p: LaurentPoly, q: LaurentPoly) -> bool:
    """True when p = c * t^k * q for a nonzero rational c."""
    return p.canonical() == q.canonical()


def gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return LaurentPoly(poly_gcd(p.coeffs, q.coeffs), 0)


def gcd_all(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out = ZERO
    for p in polys:
        out = gcd(out, p)
        if out == ONE:
            break
    return out


def multiplicity(p: LaurentPoly, f: LaurentPoly) -> int:
    """Largest e with f**e dividing p. f is assumed irreducible and must not be a unit."""
    if p.is_zero():
        raise ValueError("multiplicity is undefined for the zero polynomial")
    if f.is_zero() or f.is_unit():
        raise ValueError(f"{f} is a unit or zero; multiplicity would be infinite")
    e = 0
    rest = p.coeffs
    fc = f.coeffs
    while len(rest) >= len(fc):
        q, r = poly_divmod(rest, fc)
        if r:
            break
        rest = q
        e += 1
    return e


def bar_conjugate(p: LaurentPoly) -> LaurentPoly:
    return p.bar().canonical()


def evaluate(p: LaurentPoly, z) -> QuadraticNumber:
    """Exact value of p at a point z = c + delta of a quadratic field.

    ``z`` is anything with attributes ``c`` and ``d_squared`` (for example a
    :class:`~linksig.circle.QuadraticComplexPoint`) or a :class:`QuadraticNumber`.
    """
    if isinstance(z, QuadraticNumber):
        zq = z
    else:
        zq = QuadraticNumber(z.c, 1, z.d_squared)
    if zq.is_zero():
        raise ZeroDivisionError("cannot evaluate a Laurent polynomial at 0")
    if not p.coeffs:
        return QuadraticNumber(0, 0, zq.d2)
    acc = QuadraticNumber(0, 0, zq.d2)
    for c in reversed(p.coeffs):
        acc = acc * zq + c
    if p.low > 0:
        acc = acc * _qpow(zq, p.low)
    elif p.low < 0:
        acc = acc * _qpow(zq.inverse(), -p.low)
    return acc


def _qpow(z: QuadraticNumber, e: int) -> QuadraticNumber:
    out = QuadraticNumber(1, 0, z.d2)
    for _ in range(e):
        out = out * z
    return out
