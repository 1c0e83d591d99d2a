from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from linksig.circle import QuadraticComplexPoint
from linksig.laurent import (
    ONE,
    T,
    ZERO,
    LaurentPoly,
    associates,
    bar_conjugate,
    canonicalize,
    evaluate,
    gcd,
    multiplicity,
    squarefree_decomposition,
)
from linksig.qfield import QuadraticNumber

from conftest import laurent_polys, t, to_sympy

P = LaurentPoly.parse


def test_zero_has_unique_representation():
    assert LaurentPoly((0, 0), 5) == ZERO
    assert ZERO.coeffs == () and ZERO.low == 0


@pytest.mark.parametrize(
    "src, expected",
    [("2t^-1 - 2", "-1 + t"), ("0", "0"), ("-3t^3 + 3t^2", "-1 + t")],
)
def test_canonicalize_examples(src, expected):
    assert str(canonicalize(P(src))) == expected


def test_parse_and_print_roundtrip():
    for s in ("t^-1 - 2 + t", "1 - 3t + 2t^2", "-1 + t^3", "1/2t^-2"):
        assert P(str(P(s))) == P(s)
    assert str(P("t^-1 - 2 + t")) == "t^-1 - 2 + t"
    with pytest.raises(ValueError):
        P("t^^2")


@pytest.mark.parametrize(
    "a, b, expected",
    [("t^2 - 1", "t^2 - 2t + 1", "-1 + t"), ("t^2 + 1", "t^2 - t + 1", "1")],
)
def test_gcd_examples(a, b, expected):
    assert str(gcd(P(a), P(b))) == expected


def test_gcd_with_zero():
    p = P("-4t^-1 + 6")
    assert gcd(p, ZERO) == canonicalize(p)
    assert gcd(ZERO, p) == canonicalize(p)


def test_multiplicity_examples():
    assert multiplicity(P("t - 1") ** 3, P("t - 1")) == 3
    assert multiplicity(P("t + 1") ** 2 * P("t^2 - t + 1"), P("t + 1")) == 2
    assert multiplicity(P("t^2 + 1"), P("t + 1")) == 0
    with pytest.raises(ValueError):
        multiplicity(ZERO, P("t - 1"))
    with pytest.raises(ValueError):
        multiplicity(P("t - 1"), P("3t^2"))


def test_bar_conjugate_examples():
    assert bar_conjugate(P("t^2 - 3t + 1")) == P("t^2 - 3t + 1")
    assert bar_conjugate(P("2t - 1")) == P("t - 2")
    assert bar_conjugate(ZERO) == ZERO


def test_evaluate_examples():
    one = QuadraticComplexPoint.from_cos(1)
    i = QuadraticComplexPoint.from_cos(0)
    z = QuadraticComplexPoint.from_cos(Fraction(3, 5))
    assert evaluate(P("t - 1"), one).is_zero()
    assert evaluate(P("t^2 + 1"), i).is_zero()
    assert evaluate(T + T**-1, z) == QuadraticNumber(Fraction(6, 5))
    with pytest.raises(ZeroDivisionError):
        evaluate(T, QuadraticNumber(0))


def test_exact_division():
    assert (P("t^2 - 1") // P("t + 1")) == P("t - 1")
    with pytest.raises(ValueError):
        P("t^2 + 1") // P("t + 1")
    with pytest.raises(ValueError):
        P("1 + t") ** -1


@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p - q) + q == p
    assert to_sympy(p * q).equals(sp.expand(to_sympy(p) * to_sympy(q)))


@given(laurent_polys(), laurent_polys())
def test_canonical_is_multiplicative(p, q):
    assert canonicalize(p * q) == canonicalize(canonicalize(p) * canonicalize(q))


@given(laurent_polys(nonzero=True))
def test_canonical_form_invariants(p):
    c = canonicalize(p)
    assert canonicalize(c) == c
    assert c.low == 0 and c.coeffs[0] != 0 and c.coeffs[-1] > 0
    assert all(isinstance(x, int) for x in c.coeffs)
    assert sp.gcd_list([sp.Integer(x) for x in c.coeffs]) == 1
    # p / c is a single monomial c' t^k
    ratio = sp.cancel(to_sympy(p) / to_sympy(c))
    assert len(sp.Add.make_args(sp.expand(ratio))) == 1
    assert associates(p, c)


@given(laurent_polys(nonzero=True))
def test_bar_is_involution(p):
    assert p.bar().bar() == p
    assert associates(bar_conjugate(bar_conjugate(p)), p)


@given(laurent_polys(), laurent_polys())
def test_gcd_matches_sympy(p, q):
    g = gcd(p, q)
    expected = sp.gcd(sp.Poly(to_sympy(canonicalize(p)) or 0, t), sp.Poly(to_sympy(canonicalize(q)) or 0, t))
    if g.is_zero():
        assert p.is_zero() and q.is_zero()
        return
    assert associates(g, LaurentPoly(tuple(int(c) for c in reversed(expected.all_coeffs())), 0))
    if not p.is_zero():
        assert g.divides(p)
    if not q.is_zero():
        assert g.divides(q)


@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_gcd_associative_commutative(p, q, r):
    assert gcd(p, q) == gcd(q, p)
    assert gcd(gcd(p, q), r) == gcd(p, gcd(q, r))


@given(laurent_polys(nonzero=True), st.integers(0, 5), st.sampled_from(["t - 1", "t + 1", "t^2 + 1", "t^2 - t + 1", "2t^2 - 3t + 2"]))
def test_multiplicity_adds(p, k, f):
    f = P(f)
    assert multiplicity(p * f**k, f) == multiplicity(p, f) + k


@given(laurent_polys(nonzero=True), laurent_polys(nonzero=True))
def test_squarefree_decomposition_reassembles(p, q):
    a = canonicalize(p * p * q)
    parts = squarefree_decomposition(a.coeffs)
    prod = ONE
    for f, k in parts:
        prod = prod * LaurentPoly(f, 0) ** k
        assert sp.Poly(list(reversed(f)), t).is_sqf
    assert associates(prod, a) or (a.is_unit() and not parts)


@given(laurent_polys(nonzero=True), st.fractions(min_value=-1, max_value=1, max_denominator=20))
def test_evaluate_matches_complex(p, c):
    z = QuadraticComplexPoint.from_cos(c)
    v = evaluate(p, z)
    expected = sum(complex(x) * z.to_complex() ** e for e, x in p.terms().items())
    got = complex(float(v.a), float(v.b) * abs(float(v.d2)) ** 0.5)
    assert abs(got - expected) < 1e-8 * (1 + abs(expected))
