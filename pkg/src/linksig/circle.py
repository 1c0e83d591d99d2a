"""Exact points on the upper unit semicircle and unit-circle roots of Laurent polynomials.

A point e^{i theta}, theta in [0, pi], is identified by its cosine.  Cosines
are either rational or real algebraic numbers, the latter stored as
``x = 2 cos theta`` together with its minimal polynomial and an isolating
interval inside (-2, 2).  Ordering on the semicircle is by decreasing cosine.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import comb, floor

import sympy

from .laurent import (
    LaurentPoly,
    ONE,
    T,
    bar_conjugate,
    gcd,
    multiplicity,
    poly_deriv,
    poly_divmod,
    poly_eval,
    poly_primitive,
    squarefree_decomposition,
)
from .qfield import QuadraticNumber

__all__ = [
    "Kind",
    "CirclePoint",
    "QuadraticComplexPoint",
    "trace_factor_of",
    "trace_polynomial",
    "from_trace_polynomial",
    "circle_roots",
    "rational_sample_between",
    "rational_samples_between",
    "sturm_chain",
    "count_roots",
    "isolate_roots",
    "simplest_between",
    "angular_sort",
    "compare_cos",
]

T_MINUS_ONE = T - ONE
T_PLUS_ONE = T + ONE


@dataclass(frozen=True)
class QuadraticComplexPoint:
    """c + delta with delta**2 = d_squared = c**2 - 1 <= 0, delta on the positive imaginary side."""

    c: Fraction
    d_squared: Fraction

    def __post_init__(self):
        c = Fraction(self.c)
        d2 = Fraction(self.d_squared)
        if c * c - d2 != 1 or d2 > 0:
            raise ValueError(f"({c}, {d2}) is not a point of the unit circle")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d_squared", d2)

    @classmethod
    def from_cos(cls, c) -> QuadraticComplexPoint:
        c = Fraction(c)
        return cls(c, c * c - 1)

    def as_number(self) -> QuadraticNumber:
        return QuadraticNumber(self.c, 1, self.d_squared)

    def to_complex(self) -> complex:
        c = float(self.c)
        return complex(c, (max(0.0, 1.0 - c * c)) ** 0.5)


# ---------------------------------------------------------------------------
# Sturm sequences on polynomials in x = t + 1/t


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def sturm_chain(q) -> list:
    chain = [tuple(Fraction(c) for c in q)]
    d = poly_deriv(chain[0])
    if not d:
        return chain
    chain.append(d)
    while True:
        _, r = poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append(tuple(-c for c in r))
    return chain


def _variations(chain, x) -> int:
    signs = [s for s in (_sign(poly_eval(p, x)) for p in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(q, lo, hi, chain=None) -> int:
    """Number of distinct real roots of q in the half-open interval (lo, hi]."""
    chain = chain if chain is not None else sturm_chain(q)
    return _variations(chain, lo) - _variations(chain, hi)


def isolate_roots(q, lo, hi) -> list:
    """Isolate the distinct real roots of q in the open interval (lo, hi).

    Returns a sorted list whose items are either an exact ``Fraction`` root or
    an open interval ``(a, b)`` with rational endpoints that are not roots and
    which contains exactly one root.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    chain = sturm_chain(q)
    exact = set()
    out = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = count_roots(q, a, b, chain)
        b_root = poly_eval(q, b) == 0
        if b_root:
            n -= 1
            if b < hi:
                exact.add(b)
        if n == 0:
            continue
        if n == 1 and not b_root and poly_eval(q, a) != 0:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        stack.append((a, mid))
        stack.append((mid, b))
    out.extend(exact)
    return sorted(out, key=lambda r: r if isinstance(r, Fraction) else r[0])


def refine_interval(q, lo, hi):
    """Halve an isolating interval of a simple root of q (q nonzero at lo and hi)."""
    mid = (lo + hi) / 2
    vm = poly_eval(q, mid)
    if vm == 0:
        return mid, mid
    if _sign(poly_eval(q, lo)) != _sign(vm):
        return lo, mid
    return mid, hi


def simplest_between(lo, hi) -> Fraction:
    """The rational of smallest denominator in the open interval (lo, hi)."""
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("empty interval")
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -simplest_between(-hi, -lo)
    fl = floor(lo)
    if fl + 1 < hi:
        return Fraction(fl + 1)
    if lo == fl:
        y = Fraction(floor(1 / (hi - fl)) + 1)
    else:
        y = simplest_between(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / y


# ---------------------------------------------------------------------------
# trace polynomials


def trace_polynomial(p: LaurentPoly) -> tuple:
    """q with p = t^low * t^d * q(t + 1/t), for p palindromic of even span 2d.

    Returns ascending coefficients of q; raises ValueError when p is not
    palindromic with even span.
    """
    cs = p.coeffs
    if not cs:
        return ()
    if len(cs) % 2 == 0 or tuple(cs) != tuple(reversed(cs)):
        raise ValueError(f"{p} is not palindromic of even span")
    d = (len(cs) - 1) // 2
    work = {j - d: cs[j] for j in range(len(cs))}
    q = [0] * (d + 1)
    for k in range(d, -1, -1):
        c = work.get(k, 0)
        q[k] = c
        if c:
            for i in range(k + 1):
                work[k - 2 * i] = work.get(k - 2 * i, 0) - c * comb(k, i)
    if any(v != 0 for v in work.values()):
        raise AssertionError("trace polynomial residual is nonzero")
    return tuple(q)


def from_trace_polynomial(q) -> LaurentPoly:
    """Canonical Laurent polynomial t^d q(t + 1/t)."""
    x = T + T ** -1
    acc = LaurentPoly()
    for c in reversed(tuple(q)):
        acc = acc * x + c
    return acc.canonical()


def _x_poly_str(q) -> str:
    parts = []
    for k in range(len(q) - 1, -1, -1):
        c = q[k]
        if c == 0:
            continue
        a = abs(c)
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        body = str(a) if (k == 0 or a != 1) else ""
        body += mono
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts) or "0"


# ---------------------------------------------------------------------------
# points


class Kind(enum.Enum):
    ONE = "one"
    MINUS_ONE = "minus_one"
    RATIONAL_COS = "rational_cos"
    ALGEBRAIC_COS = "algebraic_cos"


@dataclass(frozen=True, eq=False)
class CirclePoint:
    """A point e^{i theta} with 0 <= theta <= pi.

    ``cos`` is set for the three rational kinds; ``minpoly`` (ascending
    integer coefficients in x = 2 cos theta) and ``interval`` (open isolating
    interval for x) are set for ALGEBRAIC_COS.
    """

    kind: Kind
    cos: Fraction | None = None
    minpoly: tuple = ()
    interval: tuple = ()

    @classmethod
    def one(cls) -> CirclePoint:
        return cls(Kind.ONE, Fraction(1))

    @classmethod
    def minus_one(cls) -> CirclePoint:
        return cls(Kind.MINUS_ONE, Fraction(-1))

    @classmethod
    def rational(cls, c) -> CirclePoint:
        c = Fraction(c)
        if c == 1:
            return cls.one()
        if c == -1:
            return cls.minus_one()
        if not -1 < c < 1:
            raise ValueError(f"cosine {c} outside [-1, 1]")
        return cls(Kind.RATIONAL_COS, c)

    @classmethod
    def algebraic(cls, minpoly, lo, hi) -> CirclePoint:
        q = poly_primitive(tuple(minpoly))
        lo, hi = Fraction(lo), Fraction(hi)
        if len(q) < 3:
            raise ValueError("algebraic cosines need a minimal polynomial of degree >= 2")
        if not (-2 <= lo < hi <= 2):
            raise ValueError(f"isolating interval ({lo}, {hi}) not inside (-2, 2)")
        if poly_eval(q, lo) == 0 or poly_eval(q, hi) == 0 or count_roots(q, lo, hi) != 1:
            raise ValueError(f"({lo}, {hi}) does not isolate a root of {_x_poly_str(q)}")
        return cls(Kind.ALGEBRAIC_COS, None, q, (lo, hi))

    # -- queries ------------------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return self.kind is not Kind.ALGEBRAIC_COS

    @property
    def is_boundary(self) -> bool:
        return self.kind in (Kind.ONE, Kind.MINUS_ONE)

    def x_interval(self) -> tuple:
        """Closed bounds on x = 2 cos theta; exact (degenerate) for rational kinds."""
        if self.is_rational:
            return (2 * self.cos, 2 * self.cos)
        return self.interval

    def refined(self) -> CirclePoint:
        if self.is_rational:
            return self
        lo, hi = refine_interval(self.minpoly, *self.interval)
        return CirclePoint(Kind.ALGEBRAIC_COS, None, self.minpoly, (lo, hi))

    def quadratic_point(self) -> QuadraticComplexPoint:
        if not self.is_rational:
            raise ValueError("algebraic cosines have no quadratic coordinates")
        return QuadraticComplexPoint.from_cos(self.cos)

    def trace_factor(self) -> LaurentPoly:
        return trace_factor_of(self)

    def approx_cos(self) -> float:
        if self.is_rational:
            return float(self.cos)
        p = self
        while p.interval[1] - p.interval[0] > Fraction(1, 10**12):
            p = p.refined()
        return float(sum(p.interval) / 4)

    def describe(self) -> str:
        if self.kind is Kind.ONE:
            return "θ = 0"
        if self.kind is Kind.MINUS_ONE:
            return "θ = π"
        if self.kind is Kind.RATIONAL_COS:
            return f"cos θ = {self.cos}"
        lo, hi = self.interval
        return f"2cos θ = root of {_x_poly_str(self.minpoly)} in ({lo},{hi})"

    def to_json(self) -> dict:
        d = {"kind": self.kind.value, "describe": self.describe()}
        if self.is_rational:
            d["cos"] = str(self.cos)
        else:
            d["minpoly_x"] = _x_poly_str(self.minpoly)
            d["interval_x"] = [str(self.interval[0]), str(self.interval[1])]
        return d

    def __eq__(self, other):
        if not isinstance(other, CirclePoint):
            return NotImplemented
        if self.is_rational or other.is_rational:
            return self.is_rational and other.is_rational and self.cos == other.cos
        if self.minpoly != other.minpoly:
            return False
        lo = max(self.interval[0], other.interval[0])
        hi = min(self.interval[1], other.interval[1])
        # endpoints of isolating intervals are never roots
        return lo < hi and count_roots(self.minpoly, lo, hi) == 1

    def __hash__(self):
        return hash((self.kind, self.cos, self.minpoly))

    def __repr__(self):
        return f"CirclePoint({self.describe()})"


def compare_cos(a: CirclePoint, b: CirclePoint) -> int:
    """Sign of cos(a) - cos(b), decided exactly by interval refinement."""
    if a == b:
        return 0
    while True:
        alo, ahi = a.x_interval()
        blo, bhi = b.x_interval()
        if a.is_rational and b.is_rational:
            return _sign(alo - blo)
        # at least one interval is open, so touching bounds still separate strictly
        if alo >= bhi:
            return 1
        if ahi <= blo:
            return -1
        a, b = a.refined(), b.refined()


def angular_sort(points):
    """Sort points by increasing angle theta in [0, pi] (decreasing cosine)."""
    return sorted(points, key=cmp_to_key(lambda p, q: -compare_cos(p, q)))


def trace_factor_of(p: CirclePoint) -> LaurentPoly:
    """The irreducible bar-invariant factor vanishing at p, canonicalized."""
    if p.kind is Kind.ONE:
        return T_MINUS_ONE
    if p.kind is Kind.MINUS_ONE:
        return T_PLUS_ONE
    if p.kind is Kind.RATIONAL_COS:
        c = p.cos
        return LaurentPoly((1, -2 * c, 1), 0).canonical()
    return from_trace_polynomial(p.minpoly)


def _irreducible_factors(q) -> list:
    """Irreducible factors over Q of a squarefree integer polynomial (ascending coefficients)."""
    if len(q) == 2:
        return [poly_primitive(q)]
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed([int(c) for c in q])), x, domain="ZZ")
    _, factors = poly.factor_list()
    out = []
    for f, e in factors:
        if e != 1:
            raise AssertionError("input to irreducible factorization was not squarefree")
        out.append(poly_primitive(tuple(int(c) for c in reversed(f.all_coeffs()))))
    return out


def circle_roots(p: LaurentPoly) -> list:
    """Roots of p on the closed upper semicircle with multiplicities, in angular order."""
    if p.is_zero():
        raise ValueError("circle roots of the zero polynomial are undefined")
    p = p.canonical()
    out = []
    m_one = multiplicity(p, T_MINUS_ONE) if not p.is_unit() else 0
    rest = p // (T_MINUS_ONE ** m_one)
    m_minus = multiplicity(rest, T_PLUS_ONE) if not rest.is_unit() else 0
    rest = rest // (T_PLUS_ONE ** m_minus)
    if m_one:
        out.append((CirclePoint.one(), m_one))
    interior = []
    recip = gcd(rest, bar_conjugate(rest))
    if recip.span > 0:
        q = trace_polynomial(recip)
        for part, k in squarefree_decomposition(q):
            found = 0
            for f in _irreducible_factors(part):
                if len(f) == 2:
                    r = Fraction(-f[0], f[1])
                    if -2 < r < 2:
                        interior.append(CirclePoint.rational(r / 2))
                        found += 1
                    continue
                for iso in isolate_roots(f, -2, 2):
                    if isinstance(iso, Fraction):
                        raise AssertionError("irreducible polynomial with a rational root")
                    interior.append(CirclePoint.algebraic(f, *iso))
                    found += 1
            if found != count_roots(part, Fraction(-2), Fraction(2)):
                raise AssertionError("Sturm count disagrees with isolated roots")
    pts = []
    for pt in interior:
        m = multiplicity(p, trace_factor_of(pt))
        pts.append((pt, m))
    pts = sorted(pts, key=cmp_to_key(lambda u, v: -compare_cos(u[0], v[0])))
    out.extend(pts)
    if m_minus:
        out.append((CirclePoint.minus_one(), m_minus))
    return out


def _open_gap(a: CirclePoint, b: CirclePoint):
    """Rational (L, R) with cos b <= L < R <= cos a such that (L, R) avoids both points."""
    if a == b:
        raise ValueError("sample endpoints coincide")
    if compare_cos(a, b) <= 0:
        raise ValueError(f"{a.describe()} does not precede {b.describe()}")
    while True:
        lo = b.x_interval()[1] / 2
        hi = a.x_interval()[0] / 2
        if lo < hi:
            return lo, hi
        a, b = a.refined(), b.refined()


def rational_samples_between(a: CirclePoint, b: CirclePoint, count: int = 1) -> list:
    """``count`` distinct points with rational cosine strictly between a and b (a before b)."""
    lo, hi = _open_gap(a, b)
    step = (hi - lo) / count
    out = []
    for j in range(count):
        c = simplest_between(lo + j * step, lo + (j + 1) * step)
        out.append(QuadraticComplexPoint.from_cos(c))
    return out


def rational_sample_between(a: CirclePoint, b: CirclePoint) -> QuadraticComplexPoint:
    return rational_samples_between(a, b, 1)[0]
