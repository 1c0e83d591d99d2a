from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from linksig.circle import CirclePoint, Kind, QuadraticComplexPoint, trace_factor_of
from linksig.fixtures import load_fixture, twist_family
from linksig.laurent import ONE, T, LaurentPoly, evaluate, multiplicity
from linksig.localdiag import (
    DiagonalForm,
    LocalDiagError,
    LocalizedScalar,
    diagonalize_localized,
    evenness_witness,
    hermitian_laurent,
    jump_at_minus_one,
    jump_from_diagonal,
    symmetric_factor,
)
from linksig.seifert import link_invariants, phi_counts, validate_seifert
from linksig.signature import signature_at, signature_function
from linksig.verify import _laurent_det

from conftest import block_sum_family, seifert_matrices

P = LaurentPoly.parse
TREFOIL = validate_seifert([[-1, 1], [0, -1]])
HOPF = validate_seifert([[-1]])
ZERO_SIG = load_fixture("zero_signature_3comp")
HALF = CirclePoint.rational(Fraction(1, 2))


def test_trefoil_diagonal_form():
    d = diagonalize_localized(hermitian_laurent(TREFOIL), P("t^2 - t + 1"))
    assert sorted(e for _, e in d.entries) == [0, 1]
    pred = jump_from_diagonal(d, HALF)
    assert (pred.ju_minus, pred.ju_plus, pred.congruence_class) == (-1, -1, 2)
    sf = signature_function(TREFOIL)
    assert sf.jumps[sf.index_of(HALF)] == (-1, -1)


def test_trivial_exponent_form():
    d = diagonalize_localized(hermitian_laurent(TREFOIL), P("t^2 + 1"))
    assert d.total_exponent == 0
    pred = jump_from_diagonal(d, CirclePoint.rational(0))
    assert (pred.ju_minus, pred.ju_plus, pred.congruence_class) == (0, 0, 0)
    d = diagonalize_localized(hermitian_laurent(ZERO_SIG), P("t^2 + 1"))
    assert all(e == 0 for _, e in d.entries) and d.zero_count == 0


def test_even_exponent_entry_gives_no_total_jump():
    f = P("t^2 - t + 1")
    d = DiagonalForm(((LocalizedScalar(ONE, ONE, 0), 2),), 0, f)
    pred = jump_from_diagonal(d, HALF)
    assert pred.ju_total == 0 and pred.congruence_class == 0
    assert abs(pred.ju_minus) <= 1 and abs(pred.ju_plus) <= 1


def test_rejections():
    W = hermitian_laurent(TREFOIL)
    for f in ("t - 1", "t + 1", "3", "t^2 - 3t + 2"):
        with pytest.raises(LocalDiagError):
            diagonalize_localized(W, P(f))
    with pytest.raises(LocalDiagError):
        diagonalize_localized([[ONE, T], [T, ONE]], P("t^2 + 1"))
    d = diagonalize_localized(W, P("t^2 - t + 1"))
    with pytest.raises(LocalDiagError):
        jump_from_diagonal(d, CirclePoint.rational(0))


def test_symmetric_factor_is_bar_invariant():
    fs = symmetric_factor(P("2t^2 - 3t + 2"))
    assert fs == fs.bar() and fs == P("2t^-1 - 3 + 2t")


def test_alpha_trick_used_when_diagonal_divisible():
    f = P("t^2 + 1")
    fs = symmetric_factor(f)
    W = [[fs, ONE], [ONE, fs]]
    d = diagonalize_localized(W, f)
    assert any(op["op"] == "add" for op in d.operations)
    assert d.total_exponent == multiplicity(_laurent_det(W), f) == 0
    b = T - T**-1  # b + conj(b) = 0, forcing alpha = t
    W = [[fs * fs, b], [b.bar(), fs * fs]]
    d = diagonalize_localized(W, f)
    assert any(op.get("alpha") == "t" for op in d.operations)
    assert d.total_exponent == multiplicity(_laurent_det(W), f)


def test_minus_one_examples():
    mo = jump_at_minus_one(ZERO_SIG)
    B, C, D, E = mo.counts
    assert mo.balanced and D - E == 0 and mo.bound == 0
    assert (mo.ju_minus, mo.ju_plus) == (0, 0)
    assert mo.total_exponent == mo.expected_exponent == 2
    for n in range(-4, 4):
        mo = jump_at_minus_one(twist_family(n))
        assert mo.bound == 0 and mo.expected_exponent == 0


def test_zero_signature_negative_result():
    # no even-exponent entry at t + 1: the torsion at -1 splits into two odd parts
    inv = link_invariants(ZERO_SIG)
    assert phi_counts(inv, P("t + 1")) == (2, 0)
    assert jump_at_minus_one(ZERO_SIG).bound == 0
    assert multiplicity(inv.a_poly, P("t + 1")) == 2


def test_evenness_examples():
    for n in range(-4, 4):
        ev = evenness_witness(twist_family(n))
        m1 = 3 if n == 0 else 1  # A = (t - 1)^3 when n = 0
        assert ev.mult_one == m1
        assert ev.exponent == ev.expected == m1 + 2 + 3 - 2 and ev.even
    ev = evenness_witness(HOPF)
    assert ev.exponent == 2 and ev.consistent
    ev = evenness_witness(validate_seifert([]))
    assert ev.exponent == 0 and ev.consistent


def test_dump_format():
    d = diagonalize_localized(hermitian_laurent(TREFOIL), P("t^2 - t + 1"))
    js = d.to_json()
    assert js["schema"] == 1 and js["f"] == "1 - t + t^2"
    assert {op["op"] for op in js["operations"]} <= {"swap", "add", "pivot"}


def _rational_cos_points(S):
    sf = signature_function(S)
    return [p for p in sf.critical_points if p.kind is Kind.RATIONAL_COS]


def _diagonal_signature(d, c):
    z = QuadraticComplexPoint.from_cos(c)
    fs = symmetric_factor(d.f_factor)
    fz = evaluate(fs, z)
    sig = 0
    for unit, eps in d.entries:
        num, den = evaluate(unit.numerator, z), evaluate(unit.denominator, z)
        if num.is_zero() or den.is_zero() or fz.is_zero():
            return None
        s = num.sign() * den.sign() * (fz.sign() ** eps)
        sig += s
    return sig


@settings(max_examples=40)
@given(seifert_matrices(max_n=6), st.sampled_from([Fraction(1, 2), Fraction(0), Fraction(-1, 2), Fraction(1, 3)]),
       st.fractions(-1, 1, max_denominator=40))
def test_diagonal_form_is_congruent(S, rho, c):
    assume(-1 < c < 1)
    W = hermitian_laurent(S)
    d = diagonalize_localized(W, trace_factor_of(CirclePoint.rational(rho)))
    assert len(d.entries) + d.zero_count == S.n
    expected = signature_at(S, QuadraticComplexPoint.from_cos(c))
    got = _diagonal_signature(d, c)
    if got is not None and expected.nullity == d.zero_count:
        assert got == expected.signature
    if d.zero_count == 0 and S.n:
        assert d.total_exponent == multiplicity(_laurent_det(W), d.f_factor)


@settings(max_examples=40)
@given(seifert_matrices(max_n=6))
def test_prediction_matches_sampling(S):
    sf = signature_function(S)
    W = hermitian_laurent(S)
    for i, p in enumerate(sf.critical_points):
        if p.kind is not Kind.RATIONAL_COS:
            continue
        d = diagonalize_localized(W, trace_factor_of(p))
        pred = jump_from_diagonal(d, p)
        assert (pred.ju_minus, pred.ju_plus) == sf.jumps[i]
        assert max(map(abs, sf.jumps[i])) <= d.total_exponent
    mo = jump_at_minus_one(S)
    assert mo.balanced and mo.total_exponent == mo.expected_exponent
    before = sf.arcs[-1].value
    jm = sf.murasugi - before
    assert (mo.ju_minus, mo.ju_plus) == (jm, -jm)
    assert abs(jm) <= mo.bound
    ev = evenness_witness(S)
    assert ev.even and ev.consistent


def test_prediction_on_repeated_rational_roots():
    compared = 0
    for blocks, S in block_sum_family(40, 2024):
        sf = signature_function(S)
        W = hermitian_laurent(S)
        for i, p in enumerate(sf.critical_points):
            if p.kind is Kind.RATIONAL_COS:
                d = diagonalize_localized(W, trace_factor_of(p))
                pred = jump_from_diagonal(d, p)
                assert (pred.ju_minus, pred.ju_plus) == sf.jumps[i], (blocks, p.describe())
                assert d.total_exponent == multiplicity(_laurent_det(W), trace_factor_of(p))
                compared += 1
    assert compared >= 40
