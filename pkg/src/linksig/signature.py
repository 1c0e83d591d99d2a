"""Exact Levine-Tristram signatures and the signature step function.

W(omega) = (1 - omega) V + (1 - conj(omega)) V^T is evaluated exactly at
points with rational cosine; its signature comes from the characteristic
polynomial (division-free Berkowitz) and Descartes' rule of signs, which is
exact because Hermitian characteristic polynomials are real-rooted.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

import numpy as np

from .circle import (
    CirclePoint,
    Kind,
    QuadraticComplexPoint,
    circle_roots,
    rational_samples_between,
    trace_factor_of,
)
from .laurent import T, ONE, multiplicity
from .qfield import QuadraticNumber
from .seifert import LinkInvariants, SeifertMatrix, link_invariants

__all__ = [
    "SignatureValue",
    "Unresolved",
    "Arc",
    "StepFunction",
    "UnresolvedPointError",
    "SignatureConsistencyError",
    "hermitian_at",
    "charpoly",
    "signature_of_charpoly",
    "signature_at",
    "nullity_at",
    "signature_function",
    "jumps_at",
    "shadow_signature",
]


@dataclass(frozen=True)
class SignatureValue:
    signature: int
    nullity: int


@dataclass(frozen=True)
class Unresolved:
    """Point value not computed exactly; only the adjacent arcs and the nullity are known."""

    before: int
    after: int
    nullity: int


@dataclass(frozen=True)
class Arc:
    start: CirclePoint
    end: CirclePoint
    value: int
    samples: tuple = ()  # rational cosines sampled inside the arc
    sample_values: tuple = ()
    closed_end: bool = False  # True for the last arc when theta = pi is not critical


@dataclass(frozen=True)
class StepFunction:
    n: int
    critical_points: tuple
    multiplicities: tuple  # multiplicity of each critical point as a root of (t-1) A_L
    arcs: tuple
    point_values: tuple
    jumps: tuple  # (ju_minus, ju_plus) or None at unresolved points
    murasugi: int

    def index_of(self, p: CirclePoint) -> int:
        for i, q in enumerate(self.critical_points):
            if q == p:
                return i
        raise KeyError(p.describe())

    def arc_before(self, i: int) -> int:
        """sigma just before critical point i (conjugation symmetry at theta = 0)."""
        if i == 0:
            return self.arcs[0].value if self.arcs else 0
        return self.arcs[i - 1].value

    def arc_after(self, i: int) -> int:
        """sigma just after critical point i (conjugation symmetry at theta = pi)."""
        if i < len(self.arcs):
            return self.arcs[i].value
        return self.arcs[i - 1].value

    def values(self) -> list:
        """Every evaluated SignatureValue (exact points and arc samples)."""
        out = [v for v in self.point_values if isinstance(v, SignatureValue)]
        for arc in self.arcs:
            out.extend(arc.sample_values)
        return out


class UnresolvedPointError(ValueError):
    def __init__(self, point: CirclePoint, nullity: int):
        super().__init__(f"signature at {point.describe()} is not computed exactly (nullity {nullity})")
        self.point = point
        self.nullity = nullity


class SignatureConsistencyError(RuntimeError):
    """Samples inside one arc disagree: a jump happened away from every candidate point."""


# ---------------------------------------------------------------------------


def hermitian_at(S: SeifertMatrix, z: QuadraticComplexPoint) -> list:
    """W(z) with entries in Q(delta), z = c + delta."""
    c, d2 = z.c, z.d_squared
    V = S.V
    n = S.n
    return [
        [
            QuadraticNumber((1 - c) * (V[j][k] + V[k][j]), -(V[j][k] - V[k][j]), d2)
            for k in range(n)
        ]
        for j in range(n)
    ]


def _scaled_hermitian(S: SeifertMatrix, c: Fraction) -> list:
    """q * W(c + delta) with c = p/q, written over Z[delta'] with delta'^2 = p^2 - q^2."""
    p, q = c.numerator, c.denominator
    d2 = p * p - q * q
    V = S.V
    n = S.n
    return [
        [
            QuadraticNumber((q - p) * (V[j][k] + V[k][j]), -(V[j][k] - V[k][j]), d2)
            for k in range(n)
        ]
        for j in range(n)
    ]


def charpoly(A, one=1, zero=0) -> list:
    """Coefficients of det(x I - A), highest degree first, by Berkowitz's algorithm."""
    n = len(A)
    if n == 0:
        return [one]
    coeffs = [one, zero - A[0][0]]
    for r in range(1, n):
        a = A[r][r]
        row = A[r][:r]
        col = [A[i][r] for i in range(r)]
        toeplitz = [one, zero - a]
        v = col
        for _ in range(r):
            s = zero
            for x, y in zip(row, v):
                s = s + x * y
            toeplitz.append(zero - s)
            v = [_dot(A[i][:r], v, zero) for i in range(r)]
        new = []
        for i in range(r + 2):
            s = zero
            for j in range(max(0, i - len(toeplitz) + 1), min(i, r) + 1):
                s = s + toeplitz[i - j] * coeffs[j]
            new.append(s)
        coeffs = new
    return coeffs


def _dot(row, v, zero):
    s = zero
    for x, y in zip(row, v):
        s = s + x * y
    return s


def _variations(seq) -> int:
    signs = [(x > 0) - (x < 0) for x in seq if x != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def signature_of_charpoly(coeffs) -> SignatureValue:
    """Signature and nullity of a real-rooted polynomial (coefficients highest first)."""
    n = len(coeffs) - 1
    cs = list(coeffs)
    nullity = 0
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
        nullity += 1
    pos = _variations(cs)
    deg = len(cs) - 1
    neg = _variations([c if (deg - i) % 2 == 0 else -c for i, c in enumerate(cs)])
    if pos + neg + nullity != n:
        raise ArithmeticError("characteristic polynomial is not real-rooted")
    return SignatureValue(pos - neg, nullity)


def _signature_at_cos(S: SeifertMatrix, c: Fraction) -> SignatureValue:
    if S.n == 0:
        return SignatureValue(0, 0)
    H = _scaled_hermitian(S, Fraction(c))
    d2 = H[0][0].d2
    cp = charpoly(H, QuadraticNumber(1, 0, d2), QuadraticNumber(0, 0, d2))
    return signature_of_charpoly([x.rational_value() for x in cp])


def nullity_at(S: SeifertMatrix, point: CirclePoint, inv: LinkInvariants | None = None) -> int:
    """dim ker W at a circle point, read off the invariant factors of tV - V^T."""
    if point.kind is Kind.ONE:
        return S.n
    inv = inv or link_invariants(S)
    f = trace_factor_of(point)
    return inv.free_rank + sum(1 for d in inv.factors if multiplicity(d, f) > 0)


def signature_at(
    S: SeifertMatrix,
    p: Union[CirclePoint, QuadraticComplexPoint],
    inv: LinkInvariants | None = None,
) -> SignatureValue:
    if isinstance(p, QuadraticComplexPoint):
        return _signature_at_cos(S, p.c)
    if p.kind is Kind.ALGEBRAIC_COS:
        raise UnresolvedPointError(p, nullity_at(S, p, inv))
    return _signature_at_cos(S, p.cos)


def shadow_signature(S: SeifertMatrix, c) -> tuple:
    """Floating-point (signature, smallest |eigenvalue|) of W at the point with cosine c."""
    n = S.n
    if n == 0:
        return 0, float("inf")
    V = S.array().astype(np.float64)
    cf = float(c)
    w = complex(cf, max(0.0, 1.0 - cf * cf) ** 0.5)
    W = (1 - w) * V + (1 - w.conjugate()) * V.T
    eig = np.linalg.eigvalsh(W)
    return int(np.sum(eig > 0) - np.sum(eig < 0)), float(np.min(np.abs(eig)))


def signature_function(
    S: SeifertMatrix, samples_per_arc: int = 1, inv: LinkInvariants | None = None
) -> StepFunction:
    """The signature function on the upper semicircle as an exact step function."""
    inv = inv or link_invariants(S)
    roots = circle_roots((T - ONE) * inv.a_poly)
    points = [p for p, _ in roots]
    mults = [m for _, m in roots]
    ends = points[1:]
    if points[-1].kind is not Kind.MINUS_ONE:
        ends.append(CirclePoint.minus_one())
    arcs = []
    for start, end in zip(points, ends):
        samples = rational_samples_between(start, end, samples_per_arc)
        sample_values = tuple(_signature_at_cos(S, z.c) for z in samples)
        values = {v.signature for v in sample_values}
        if len(values) != 1:
            raise SignatureConsistencyError(
                f"signature not constant between {start.describe()} and {end.describe()}: {sorted(values)}"
            )
        arcs.append(
            Arc(start, end, values.pop(), tuple(z.c for z in samples), sample_values,
                closed_end=end.kind is Kind.MINUS_ONE and points[-1].kind is not Kind.MINUS_ONE)
        )
    point_values = []
    jumps = []
    for i, p in enumerate(points):
        before = arcs[0].value if i == 0 else arcs[i - 1].value
        after = arcs[i].value if i < len(arcs) else arcs[i - 1].value
        if p.kind is Kind.ONE:
            value = SignatureValue(0, S.n)
        elif p.kind is Kind.ALGEBRAIC_COS:
            point_values.append(Unresolved(before, after, nullity_at(S, p, inv)))
            jumps.append(None)
            continue
        else:
            value = signature_at(S, p)
        point_values.append(value)
        jumps.append((value.signature - before, after - value.signature))
    murasugi = signature_at(S, CirclePoint.minus_one()).signature
    return StepFunction(
        S.n, tuple(points), tuple(mults), tuple(arcs), tuple(point_values), tuple(jumps), murasugi
    )


def jumps_at(sf: StepFunction, p: CirclePoint) -> tuple:
    """(ju_minus, ju_plus, ju_total) at a critical point with an exact value."""
    i = sf.index_of(p)
    j = sf.jumps[i]
    if j is None:
        raise UnresolvedPointError(p, sf.point_values[i].nullity)
    return j[0], j[1], j[0] + j[1]
