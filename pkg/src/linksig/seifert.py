"""Seifert matrices, the presentation matrix tV - V^T and higher Alexander polynomials.

Higher Alexander polynomials are computed two ways: from the invariant
factors of tV - V^T over the Laurent-polynomial PID (the production path)
and directly as GCDs of minors (the cross-check oracle, exponential in n).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .laurent import (
    LaurentPoly,
    ONE,
    ZERO,
    multiplicity,
    poly_divmod,
    poly_exact_div,
    poly_gcd,
    poly_mul,
    poly_scale,
    poly_sub,
    poly_add,
)

__all__ = [
    "SeifertError",
    "SeifertMatrix",
    "LinkInvariants",
    "validate_seifert",
    "presentation_matrix",
    "invariant_factors",
    "higher_alexander_by_minors",
    "link_invariants",
    "phi_counts",
    "random_seifert",
    "elementary_divisors",
]


class SeifertError(ValueError):
    """Raised when an integer matrix cannot be the Seifert matrix of a connected surface."""


@dataclass(frozen=True)
class SeifertMatrix:
    V: tuple
    genus: int
    components: int

    @property
    def n(self) -> int:
        return len(self.V)

    def array(self) -> np.ndarray:
        return np.array(self.V, dtype=np.int64).reshape(self.n, self.n)

    def entry(self, j: int, k: int) -> int:
        return self.V[j][k]

    def to_json(self, name: str = "") -> dict:
        return {"name": name, "matrix": [list(r) for r in self.V]}


@dataclass(frozen=True)
class LinkInvariants:
    """Δ_1, Δ_2, ... (stopping at the first 1), A_L, h_L and the invariant factors d_i."""

    deltas: tuple
    a_poly: LaurentPoly
    h_index: int
    factors: tuple
    free_rank: int

    @property
    def alexander(self) -> LaurentPoly:
        return self.deltas[0]

    def delta(self, i: int) -> LaurentPoly:
        if i <= len(self.deltas):
            return self.deltas[i - 1]
        return ONE


# ---------------------------------------------------------------------------
# Smith-type diagonalization over a Euclidean domain


class _IntegerDomain:
    zero = 0

    @staticmethod
    def is_zero(a):
        return a == 0

    @staticmethod
    def size(a):
        return abs(a)

    @staticmethod
    def divmod(a, b):
        q, r = divmod(a, b)
        return q, r

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def add(a, b):
        return a + b


class _PolyDomain:
    """Q[t] on ascending coefficient tuples."""

    zero = ()

    @staticmethod
    def is_zero(a):
        return not a

    @staticmethod
    def size(a):
        return len(a) - 1

    divmod = staticmethod(poly_divmod)
    mul = staticmethod(poly_mul)
    sub = staticmethod(poly_sub)
    add = staticmethod(poly_add)


def _smith_diagonal(matrix, dom) -> list:
    """Diagonal of a Smith form (nonzero entries, in divisibility order, up to units)."""
    A = [list(row) for row in matrix]
    m = len(A)
    ncols = len(A[0]) if m else 0
    diag = []
    r = 0

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]

    def smallest(cells):
        best = None
        for i, j in cells:
            a = A[i][j]
            if not dom.is_zero(a) and (best is None or dom.size(a) < best[0]):
                best = (dom.size(a), i, j)
        return best

    while r < min(m, ncols):
        best = smallest((i, j) for i in range(r, m) for j in range(r, ncols))
        if best is None:
            break
        _, i, j = best
        swap_rows(r, i)
        swap_cols(r, j)
        while True:
            piv = A[r][r]
            for i in range(r + 1, m):
                if not dom.is_zero(A[i][r]):
                    q, _ = dom.divmod(A[i][r], piv)
                    A[i] = [dom.sub(a, dom.mul(q, b)) for a, b in zip(A[i], A[r])]
            for j in range(r + 1, ncols):
                if not dom.is_zero(A[r][j]):
                    q, _ = dom.divmod(A[r][j], piv)
                    for row in A:
                        row[j] = dom.sub(row[j], dom.mul(q, row[r]))
            line = [(i, r) for i in range(r + 1, m)] + [(r, j) for j in range(r + 1, ncols)]
            best = smallest(line)
            if best is not None:
                _, i, j = best
                swap_rows(r, i)
                swap_cols(r, j)
                continue
            bad = None
            for i in range(r + 1, m):
                for j in range(r + 1, ncols):
                    if not dom.is_zero(dom.divmod(A[i][j], piv)[1]):
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            A[r] = [dom.add(a, b) for a, b in zip(A[r], A[bad])]
        diag.append(A[r][r])
        r += 1
    return diag


def elementary_divisors(M) -> list:
    """Nonzero elementary divisors (positive integers) of an integer matrix."""
    return [abs(d) for d in _smith_diagonal([[int(x) for x in row] for row in M], _IntegerDomain)]


# ---------------------------------------------------------------------------


def _as_int_rows(V) -> tuple:
    if isinstance(V, np.ndarray):
        if V.size == 0:
            return ()
        if V.ndim != 2:
            raise SeifertError("Seifert matrix must be two-dimensional")
        V = V.tolist()
    rows = []
    for row in V:
        out = []
        for x in row:
            if isinstance(x, bool) or int(x) != x:
                raise SeifertError(f"non-integer entry {x!r}")
            out.append(int(x))
        rows.append(tuple(out))
    return tuple(rows)


def validate_seifert(V) -> SeifertMatrix:
    """Check V and derive genus and number of components from its skew part."""
    rows = _as_int_rows(V)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise SeifertError("Seifert matrix must be square")
    skew = [[rows[j][k] - rows[k][j] for k in range(n)] for j in range(n)]
    divisors = elementary_divisors(skew)
    bad = [d for d in divisors if d != 1]
    if bad:
        raise SeifertError(
            f"V - V^T has elementary divisors {bad} > 1; not the Seifert matrix of a connected surface"
        )
    rank = len(divisors)
    return SeifertMatrix(rows, rank // 2, n - rank + 1)


def presentation_matrix(S: SeifertMatrix) -> list:
    """Entries t*V[j][k] - V[k][j]."""
    n = S.n
    return [[LaurentPoly((-S.V[k][j], S.V[j][k]), 0) for k in range(n)] for j in range(n)]


def invariant_factors(M) -> tuple:
    """(d_1 | d_2 | ... | d_k canonical, free rank) of a matrix over Q[t, 1/t]."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    lows = [e.low for row in M for e in row if not e.is_zero()]
    shift = -min(lows) if lows else 0
    # multiplying by the unit t^shift makes every entry an ordinary polynomial
    P = [[_to_poly(e.shift(shift)) for e in row] for row in M]
    diag = _smith_diagonal(P, _PolyDomain)
    factors = tuple(LaurentPoly(d, 0).canonical() for d in diag)
    return factors, min(rows, cols) - len(factors)


def _to_poly(e: LaurentPoly) -> tuple:
    if e.is_zero():
        return ()
    if e.low < 0:
        raise ValueError("entry has negative exponents")
    return (0,) * e.low + e.coeffs


def _det_bareiss(M) -> tuple:
    """Determinant of a square matrix over Z[t] (ascending int tuples), fraction-free."""
    n = len(M)
    if n == 0:
        return (1,)
    A = [list(r) for r in M]
    sign = 1
    prev = (1,)
    for k in range(n - 1):
        if not A[k][k]:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return ()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = poly_sub(poly_mul(A[k][k], A[i][j]), poly_mul(A[i][k], A[k][j]))
                A[i][j] = poly_exact_div(num, prev) if num else ()
        prev = A[k][k]
    return poly_scale(A[n - 1][n - 1], sign)


def higher_alexander_by_minors(S: SeifertMatrix, i: int) -> LaurentPoly:
    """Canonical GCD of all (n + 1 - i)-minors of tV - V^T."""
    n = S.n
    if not 1 <= i <= n + 1:
        raise ValueError(f"index {i} outside 1..{n + 1}")
    size = n + 1 - i
    if size == 0:
        return ONE
    P = [[_to_poly(e) for e in row] for row in presentation_matrix(S)]
    g = ()
    for rs in combinations(range(n), size):
        for cs in combinations(range(n), size):
            det = _det_bareiss([[P[r][c] for c in cs] for r in rs])
            if det:
                g = poly_gcd(g, det)
                if g == (1,):
                    return ONE
    return LaurentPoly(g, 0).canonical() if g else ZERO


def _product(polys) -> LaurentPoly:
    out = ONE
    for p in polys:
        out = out * p
    return out.canonical()


def link_invariants(S: SeifertMatrix) -> LinkInvariants:
    factors, free_rank = invariant_factors(presentation_matrix(S))
    n = S.n
    k = len(factors)
    deltas = []
    i = 1
    while True:
        size = n + 1 - i
        delta = _product(factors[:size]) if size <= k else ZERO
        deltas.append(delta)
        if delta == ONE:
            break
        i += 1
    h = free_rank + 1
    return LinkInvariants(tuple(deltas), deltas[h - 1], h, factors, free_rank)


def phi_counts(inv: LinkInvariants, f: LaurentPoly) -> tuple:
    """(#d_i with odd positive f-exponent, #d_i with even positive f-exponent)."""
    odd = even = 0
    for d in inv.factors:
        e = multiplicity(d, f)
        if e > 0:
            if e % 2:
                odd += 1
            else:
                even += 1
    return odd, even


def _standard_skew_part(g: int, n: int) -> np.ndarray:
    B = np.zeros((n, n), dtype=np.int64)
    for i in range(g):
        B[2 * i, 2 * i + 1] = 1
    return B


def random_seifert(g: int, mu: int, bound: int, seed: int, congruence: bool = False) -> SeifertMatrix:
    """Random Seifert matrix with skew part (+)_g [[0,1],[-1,0]] (+) 0, optionally congruence-scrambled."""
    if g < 0 or mu < 1 or bound < 1:
        raise ValueError("need g >= 0, mu >= 1, bound >= 1")
    n = 2 * g + mu - 1
    rng = np.random.default_rng(seed)
    A = rng.integers(-bound, bound + 1, size=(n, n))
    A = np.triu(A) + np.triu(A, 1).T
    V = A + _standard_skew_part(g, n)
    if congruence and n > 1:
        P = np.eye(n, dtype=np.int64)
        for _ in range(n):
            i, j = rng.choice(n, size=2, replace=False)
            E = np.eye(n, dtype=np.int64)
            E[i, j] = rng.choice([-1, 1])
            P = P @ E
        V = P.T @ V @ P
    S = validate_seifert(V)
    if (S.genus, S.components) != (g, mu):
        raise AssertionError("random Seifert matrix has the wrong skew type")
    return S
