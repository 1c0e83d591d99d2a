import cmath
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from linksig.circle import (
    CirclePoint,
    Kind,
    QuadraticComplexPoint,
    angular_sort,
    circle_roots,
    compare_cos,
    count_roots,
    isolate_roots,
    rational_sample_between,
    rational_samples_between,
    simplest_between,
    trace_factor_of,
    trace_polynomial,
    from_trace_polynomial,
)
from linksig.laurent import ONE, LaurentPoly, associates, multiplicity, poly_eval

from conftest import laurent_polys

P = LaurentPoly.parse
x = sp.Symbol("x")

ON_CIRCLE = [P("t - 1"), P("t + 1"), P("t^2 + t + 1"), P("t^2 + 1"), P("t^2 - t + 1"),
             P("t^4 + t^3 + t^2 + t + 1"), P("t^4 + 1"), P("t^4 - t^2 + 1"), P("2t^2 - t + 2"),
             P("t^4 - t^3 - t^2 - t + 1")]
OFF_CIRCLE = [P("t - 2"), P("t^2 - 3t + 1"), P("t^3 - t - 1"), P("3t + 1")]


def test_quadratic_point_validation():
    z = QuadraticComplexPoint.from_cos(Fraction(1, 2))
    assert z.c ** 2 - z.d_squared == 1
    with pytest.raises(ValueError):
        QuadraticComplexPoint(Fraction(1, 2), Fraction(1, 4))


def test_trace_factor_examples():
    assert trace_factor_of(CirclePoint.one()) == P("t - 1")
    assert trace_factor_of(CirclePoint.minus_one()) == P("t + 1")
    assert trace_factor_of(CirclePoint.rational(Fraction(1, 2))) == P("t^2 - t + 1")
    assert trace_factor_of(CirclePoint.rational(Fraction(3, 4))) == P("2t^2 - 3t + 2")


def test_circle_root_examples():
    assert circle_roots(P("t - 1") ** 3) == [(CirclePoint.one(), 3)]
    roots = circle_roots(P("t + 1") ** 2 * P("t^2 - t + 1"))
    assert roots == [(CirclePoint.rational(Fraction(1, 2)), 1), (CirclePoint.minus_one(), 2)]
    roots = circle_roots(P("t^4 + 1"))
    assert [m for _, m in roots] == [1, 1]
    assert all(p.kind is Kind.ALGEBRAIC_COS and p.minpoly == (-2, 0, 1) for p, _ in roots)
    (a, _), (b, _) = roots
    assert a.approx_cos() == pytest.approx(2**-0.5) and b.approx_cos() == pytest.approx(-(2**-0.5))
    assert a.describe().startswith("2cos θ = root of x^2-2 in (")
    with pytest.raises(ValueError):
        circle_roots(LaurentPoly())


def test_describe_forms():
    assert CirclePoint.one().describe() == "θ = 0"
    assert CirclePoint.minus_one().describe() == "θ = π"
    assert CirclePoint.rational(Fraction(1, 2)).describe() == "cos θ = 1/2"
    assert CirclePoint.rational(1) == CirclePoint.one()


def test_sample_examples():
    half = CirclePoint.rational(Fraction(1, 2))
    c = rational_sample_between(CirclePoint.one(), half).c
    assert Fraction(1, 2) < c < 1
    lo_root = circle_roots(P("t^4 + 1"))[1][0]
    c = rational_sample_between(lo_root, CirclePoint.minus_one()).c
    assert -1 < c and 4 * c * c - 2 > 0 and c < 0
    c = rational_sample_between(CirclePoint.one(), CirclePoint.rational(Fraction(3, 4))).c
    assert Fraction(3, 4) < c < 1
    with pytest.raises(ValueError):
        rational_sample_between(half, half)
    with pytest.raises(ValueError):
        rational_sample_between(CirclePoint.minus_one(), half)


def test_trace_polynomial_roundtrip():
    p = P("t^4 + t^3 + t^2 + t + 1")
    q = trace_polynomial(p)
    assert q == (-1, 1, 1)  # x^2 + x - 1
    assert associates(from_trace_polynomial(q), p)
    with pytest.raises(ValueError):
        trace_polynomial(P("t - 2"))


@given(st.fractions(-5, 5, max_denominator=30), st.fractions(-5, 5, max_denominator=30))
def test_simplest_between(a, b):
    if a == b:
        return
    lo, hi = min(a, b), max(a, b)
    r = simplest_between(lo, hi)
    assert lo < r < hi
    for d in range(1, r.denominator):
        assert not any(lo < Fraction(k, d) < hi for k in range(int(lo * d) - 1, int(hi * d) + 2))


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=7))
def test_sturm_count_matches_sympy(coeffs):
    if not any(coeffs[1:]):
        return
    poly = sp.Poly(list(reversed(coeffs)), x)
    if poly.degree() < 1:
        return
    sqf = sp.Poly(sp.quo(poly, sp.gcd(poly, poly.diff(x))), x)
    q = tuple(int(c) for c in reversed(sqf.all_coeffs()))
    expected = sum(1 for r in sp.real_roots(sqf) if -2 < r < 2)
    assert count_roots(q, Fraction(-2), Fraction(2)) - (1 if poly_eval(q, 2) == 0 else 0) == expected
    isolated = isolate_roots(q, -2, 2)
    assert len(isolated) == expected
    for item in isolated:
        if isinstance(item, Fraction):
            assert poly_eval(q, item) == 0
        else:
            a, b = item
            assert poly_eval(q, a) * poly_eval(q, b) < 0 or count_roots(q, a, b) == 1


def _numeric_circle_count(p: LaurentPoly) -> int:
    roots = np.roots(list(reversed([float(c) for c in p.coeffs])))
    return sum(1 for r in roots if abs(abs(r) - 1) < 1e-3)


@settings(max_examples=60)
@given(st.lists(st.sampled_from(ON_CIRCLE + OFF_CIRCLE), min_size=1, max_size=4), st.integers(-2, 2))
def test_circle_roots_of_products(factors, shift):
    p = ONE
    for f in factors:
        p = p * f
    p = p.shift(shift)
    roots = circle_roots(p)
    union = {}
    for f in factors:
        for pt, m in circle_roots(f):
            union[pt] = union.get(pt, 0) + m
    assert {pt: m for pt, m in roots} == union
    full = sum(m if pt.is_boundary else 2 * m for pt, m in roots)
    assert full <= p.span
    assert full == _numeric_circle_count(p.canonical())
    for pt, m in roots:
        assert multiplicity(p, trace_factor_of(pt)) == m
    pts = [pt for pt, _ in roots]
    assert angular_sort(list(reversed(pts))) == pts
    for a, b in zip(pts, pts[1:]):
        assert compare_cos(a, b) > 0
        for z in rational_samples_between(a, b, 3):
            assert b.approx_cos() < float(z.c) < a.approx_cos()


@settings(max_examples=60)
@given(laurent_polys(max_len=7, nonzero=True))
def test_circle_roots_random(p):
    roots = circle_roots(p)
    full = sum(m if pt.is_boundary else 2 * m for pt, m in roots)
    assert full <= max(p.span, 0)
    for pt, m in roots:
        assert m >= 1
        z = complex(pt.approx_cos(), (1 - pt.approx_cos() ** 2) ** 0.5)
        val = sum(complex(c) * z**e for e, c in p.terms().items())
        assert abs(val) < 1e-6 * sum(abs(float(c)) for c in p.coeffs)
