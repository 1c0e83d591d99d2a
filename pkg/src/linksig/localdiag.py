"""Diagonalizing Hermitian Laurent-polynomial matrices over the localization at f.

Simultaneous row/column operations over Q[t, 1/t] localized at a
bar-invariant prime f (elements prime to f inverted) bring a Hermitian
matrix to diagonal form u_i f^eps_i.  The signs of the units u_i at the root
of f and the parities of eps_i determine the one-sided signature jumps there
without sampling.

Elimination is fraction-free (Bareiss): the working block holds the
Schur complement times the previous pivot, so every entry stays a Laurent
polynomial and each pivot p_k is a bar-invariant principal minor.  The k-th
diagonal entry is p_k / p_{k-1}.
"""
from __future__ import annotations

from dataclasses import dataclass

from .circle import CirclePoint, Kind, QuadraticComplexPoint, trace_factor_of
from .laurent import LaurentPoly, ONE, T, associates, evaluate, multiplicity
from .seifert import LinkInvariants, SeifertMatrix, link_invariants

__all__ = [
    "LocalDiagError",
    "LocalizedScalar",
    "DiagonalForm",
    "JumpPrediction",
    "MinusOneJump",
    "EvennessReport",
    "hermitian_laurent",
    "symmetric_factor",
    "diagonalize_localized",
    "jump_from_diagonal",
    "jump_at_minus_one",
    "evenness_witness",
]

T_PLUS_T_INV = T + T ** -1


class LocalDiagError(ValueError):
    pass


@dataclass(frozen=True)
class LocalizedScalar:
    """(numerator / denominator) * f^f_exponent with f dividing neither polynomial."""

    numerator: LaurentPoly
    denominator: LaurentPoly
    f_exponent: int

    def value_at(self, z: QuadraticComplexPoint):
        return evaluate(self.numerator, z) / evaluate(self.denominator, z)

    def sign_at(self, z: QuadraticComplexPoint) -> int:
        """Sign of a bar-invariant unit at a rational-cosine point of the circle."""
        num = evaluate(self.numerator, z)
        den = evaluate(self.denominator, z)
        if num.is_zero() or den.is_zero():
            raise LocalDiagError("unit vanishes at the localization point")
        return num.sign() * den.sign()


@dataclass(frozen=True)
class DiagonalForm:
    entries: tuple  # ((LocalizedScalar unit, epsilon), ...)
    zero_count: int
    f_factor: LaurentPoly
    operations: tuple = ()

    @property
    def total_exponent(self) -> int:
        return sum(e for _, e in self.entries)

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "f": str(self.f_factor),
            "entries": [
                {"unit_num": str(u.numerator), "unit_den": str(u.denominator), "epsilon": e}
                for u, e in self.entries
            ],
            "zero_count": self.zero_count,
            "operations": list(self.operations),
        }


@dataclass(frozen=True)
class JumpPrediction:
    ju_minus: int
    ju_plus: int
    congruence_class: int
    odd_entries: int
    even_entries: int

    @property
    def ju_total(self) -> int:
        return self.ju_minus + self.ju_plus


@dataclass(frozen=True)
class MinusOneJump:
    bound: int
    counts: tuple  # (B, C, D, E)
    ju_minus: int
    ju_plus: int
    total_exponent: int
    expected_exponent: int  # mult_{-1}(A_L)

    @property
    def balanced(self) -> bool:
        B, C, _, _ = self.counts
        return B == C


@dataclass(frozen=True)
class EvennessReport:
    exponent: int
    expected: int
    genus: int
    components: int
    h_index: int
    mult_one: int

    @property
    def even(self) -> bool:
        return self.exponent % 2 == 0

    @property
    def consistent(self) -> bool:
        return self.exponent == self.expected


def hermitian_laurent(S: SeifertMatrix, power: int = 1) -> list:
    """(1 - t^k) V + (1 - t^-k) V^T as a Laurent matrix (k = power)."""
    tk = T ** power
    a = ONE - tk
    b = ONE - T ** -power
    V = S.V
    n = S.n
    return [[a * V[j][k] + b * V[k][j] for k in range(n)] for j in range(n)]


def symmetric_factor(f: LaurentPoly) -> LaurentPoly:
    """The exactly bar-invariant associate t^{-d} f of a palindromic f of span 2d."""
    fc = f.canonical()
    if fc.span <= 0:
        raise LocalDiagError(f"{f} is a unit")
    if associates(fc, T - ONE) or associates(fc, T + ONE):
        raise LocalDiagError("the localized diagonalization does not apply at t = +1 or -1")
    if fc.span % 2 or fc.coeffs != tuple(reversed(fc.coeffs)):
        raise LocalDiagError(f"{f} is not a bar-invariant trace factor")
    return fc.shift(-(fc.span // 2))


def _check_hermitian(W):
    n = len(W)
    for j in range(n):
        if len(W[j]) != n:
            raise LocalDiagError("matrix is not square")
        for k in range(j, n):
            if W[k][j] != W[j][k].bar():
                raise LocalDiagError(f"matrix is not Hermitian at ({j}, {k})")


def diagonalize_localized(W, f: LaurentPoly) -> DiagonalForm:
    fs = symmetric_factor(f)
    _check_hermitian(W)
    M = [list(row) for row in W]
    n = len(M)
    ops = []

    def val(p):
        return None if p.is_zero() else multiplicity(p, fs)

    def swap(i, j):
        if i == j:
            return
        M[i], M[j] = M[j], M[i]
        for row in M:
            row[i], row[j] = row[j], row[i]
        ops.append({"op": "swap", "i": i, "j": j})

    entries = []
    prev = ONE
    prev_val = 0
    r = 0
    zero_count = 0
    while r < n:
        vals = {}
        for j in range(r, n):
            for k in range(r, n):
                v = val(M[j][k])
                if v is not None:
                    vals[j, k] = v
        if not vals:
            zero_count = n - r
            break
        m = min(vals.values())
        pivot = next((j for j in range(r, n) if vals.get((j, j)) == m), None)
        if pivot is None:
            j, k = next(jk for jk in sorted(vals) if jk[0] != jk[1] and vals[jk] == m)
            b = M[j][k]
            s = b + b.bar()
            alpha = ONE if (not s.is_zero() and val(s) == m) else T
            alpha_bar = alpha.bar()
            # row_k += alpha * row_j, then col_k += conj(alpha) * col_j
            M[k] = [x + alpha * y for x, y in zip(M[k], M[j])]
            for row in M:
                row[k] = row[k] + alpha_bar * row[j]
            ops.append({"op": "add", "target": k, "source": j, "alpha": str(alpha)})
            pivot = k
        swap(r, pivot)
        p = M[r][r]
        vp = val(p)
        ops.append({"op": "pivot", "index": r, "valuation": vp - prev_val})
        for j in range(r + 1, n):
            for k in range(r + 1, n):
                M[j][k] = (p * M[j][k] - M[j][r] * M[r][k]) // prev
        for j in range(r + 1, n):
            M[j][r] = LaurentPoly()
            M[r][j] = LaurentPoly()
        unit = LocalizedScalar(p // fs ** vp, prev // fs ** prev_val, 0)
        entries.append((unit, vp - prev_val))
        prev, prev_val = p, vp
        r += 1
    return DiagonalForm(tuple(entries), zero_count, f.canonical(), tuple(ops))


def jump_from_diagonal(d: DiagonalForm, p: CirclePoint) -> JumpPrediction:
    """One-sided jumps at p predicted from the diagonal form (no sampling)."""
    if not associates(trace_factor_of(p), d.f_factor):
        raise LocalDiagError(f"{p.describe()} is not a root of {d.f_factor}")
    if p.kind is not Kind.RATIONAL_COS:
        raise LocalDiagError("jump prediction needs an interior point with rational cosine")
    z = p.quadratic_point()
    return _predict(d, z)


def _predict(d: DiagonalForm, z: QuadraticComplexPoint) -> JumpPrediction:
    # near the root, f = 2cos(theta) - 2cos(rho) is positive before it and negative after
    ju_minus = ju_plus = 0
    odd = even = 0
    for unit, eps in d.entries:
        if eps == 0:
            continue
        s = unit.sign_at(z)
        ju_minus -= s
        ju_plus += s if eps % 2 == 0 else -s
        if eps % 2:
            odd += 1
        else:
            even += 1
    return JumpPrediction(ju_minus, ju_plus, (2 * odd) % 4, odd, even)


def jump_at_minus_one(S: SeifertMatrix, inv: LinkInvariants | None = None) -> MinusOneJump:
    """Jumps at -1 via W*(t) = W(t^2), diagonalized at t + 1/t (the point i)."""
    inv = inv or link_invariants(S)
    d = diagonalize_localized(hermitian_laurent(S, 2), T_PLUS_T_INV)
    z = QuadraticComplexPoint.from_cos(0)
    B = C = D = E = 0
    for unit, eps in d.entries:
        if eps == 0:
            continue
        s = unit.sign_at(z)
        if eps % 2:
            B, C = (B + 1, C) if s > 0 else (B, C + 1)
        else:
            D, E = (D + 1, E) if s > 0 else (D, E + 1)
    pred = _predict(d, z)
    return MinusOneJump(
        abs(D - E),
        (B, C, D, E),
        pred.ju_minus,
        pred.ju_plus,
        d.total_exponent,
        multiplicity(inv.a_poly, T + ONE),
    )


def evenness_witness(S: SeifertMatrix, inv: LinkInvariants | None = None) -> EvennessReport:
    """e_{t+1/t}(W(t^4)), which equals e_{t-1}(W) = mult_1(A_L) + 2g + mu - h and is even."""
    inv = inv or link_invariants(S)
    d = diagonalize_localized(hermitian_laurent(S, 4), T_PLUS_T_INV)
    m1 = multiplicity(inv.a_poly, T - ONE)
    expected = m1 + 2 * S.genus + S.components - inv.h_index
    return EvennessReport(d.total_exponent, expected, S.genus, S.components, inv.h_index, m1)
