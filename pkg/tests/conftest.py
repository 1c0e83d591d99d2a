import numpy as np
import sympy as sp
from hypothesis import HealthCheck, settings, strategies as st

from linksig.laurent import LaurentPoly
from linksig.seifert import random_seifert, validate_seifert

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

t = sp.Symbol("t")


def to_sympy(p: LaurentPoly):
    return sum((sp.Rational(c) * t**e for e, c in p.terms().items()), sp.Integer(0))


def from_sympy(expr) -> LaurentPoly:
    expr = sp.expand(expr)
    if expr == 0:
        return LaurentPoly()
    terms = {}
    for term in sp.Add.make_args(expr):
        c, e = term.as_coeff_exponent(t)
        terms[int(e)] = terms.get(int(e), 0) + sp.Rational(c)
    from fractions import Fraction

    return LaurentPoly.from_terms({k: Fraction(int(v.p), int(v.q)) for k, v in terms.items()})


small_ints = st.integers(-5, 5)


@st.composite
def laurent_polys(draw, max_len=5, nonzero=False):
    coeffs = draw(st.lists(small_ints, min_size=1 if nonzero else 0, max_size=max_len))
    if nonzero and not any(coeffs):
        coeffs[0] = draw(st.sampled_from([-2, -1, 1, 3]))
    low = draw(st.integers(-3, 3))
    return LaurentPoly(tuple(coeffs), low)


@st.composite
def seifert_matrices(draw, max_n=5):
    g = draw(st.integers(0, 2))
    mu = draw(st.integers(1, max(1, max_n - 2 * g + 1)))
    seed = draw(st.integers(0, 2**32 - 1))
    bound = draw(st.integers(1, 3))
    congruence = draw(st.booleans())
    return random_seifert(g, mu, bound, seed, congruence=congruence)


BLOCKS = [(1, 1), (-1, -1), (1, 2), (-1, -2), (2, 2), (1, 3)]


def block_sum_family(count, seed):
    """Sums of 1-3 blocks [[a, 1], [0, c]] (roots at cos = 1 - 1/(2ac)), unimodularly scrambled."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        blocks = [BLOCKS[int(i)] for i in rng.integers(0, len(BLOCKS), size=int(rng.integers(1, 4)))]
        n = 2 * len(blocks)
        V = np.zeros((n, n), dtype=np.int64)
        for i, (a, c) in enumerate(blocks):
            V[2 * i, 2 * i], V[2 * i, 2 * i + 1], V[2 * i + 1, 2 * i + 1] = a, 1, c
        P = np.eye(n, dtype=np.int64)
        for _ in range(n):
            i, j = rng.choice(n, size=2, replace=False)
            E = np.eye(n, dtype=np.int64)
            E[i, j] = rng.choice([-1, 1])
            P = P @ E
        out.append((blocks, validate_seifert(P.T @ V @ P)))
    return out


ACCEPTANCE_LINES = {}


def record_acceptance(number: int, passed: bool, detail: str) -> None:
    line = f"ACCEPTANCE {number}: {'PASS' if passed else 'FAIL'} | {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
