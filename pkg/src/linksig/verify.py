"""Theorem checkers, cross-oracles and random property campaigns.

Every check compares exact integers (or half-integers as Fractions), never
floats.  A :class:`LinkAnalysis` bundles the expensive computations for one
matrix so that the individual checkers can share them.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .circle import CirclePoint, Kind, circle_roots, trace_factor_of
from .laurent import LaurentPoly, ONE, T, multiplicity
from .localdiag import (
    EvennessReport,
    MinusOneJump,
    diagonalize_localized,
    evenness_witness,
    hermitian_laurent,
    jump_at_minus_one,
    jump_from_diagonal,
)
from .seifert import (
    LinkInvariants,
    SeifertMatrix,
    _det_bareiss,
    _to_poly,
    higher_alexander_by_minors,
    link_invariants,
    phi_counts,
    random_seifert,
)
from .signature import (
    StepFunction,
    Unresolved,
    nullity_at,
    shadow_signature,
    signature_function,
)

log = logging.getLogger(__name__)

THEOREMS = ("main", "bound", "bound2", "cong", "even", "estmult", "remark", "module7")
ORACLES = ("minors", "localdiag", "minus_one", "structure", "shadow")
SHADOW_THRESHOLD = 1e-6
MINORS_SIZE_LIMIT = 6


@dataclass
class Check:
    description: str
    lhs: object
    rhs: object
    passed: bool
    weakened: bool = False

    def to_json(self) -> dict:
        d = {"description": self.description, "lhs": _jsonable(self.lhs),
             "rhs": _jsonable(self.rhs), "pass": self.passed}
        if self.weakened:
            d["weakened"] = True
        return d


@dataclass
class TheoremReport:
    theorem: str
    checks: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)
    applicable: bool = True
    fault: bool = False  # self-test mode: every check is evaluated negated

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, description, lhs, rhs, passed, weakened=False):
        self.checks.append(Check(description, lhs, rhs, bool(passed) != self.fault, weakened))

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "applicable": self.applicable,
            "overall": "pass" if self.overall else "fail",
            "checks": [c.to_json() for c in self.checks],
            "witnesses": {k: _jsonable(v) for k, v in self.witnesses.items()},
            **({"fault_injected": True} if self.fault else {}),
        }


def _jsonable(v):
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else str(v)
    if isinstance(v, LaurentPoly):
        return str(v)
    if isinstance(v, CirclePoint):
        return v.describe()
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return str(v)


# ---------------------------------------------------------------------------


@dataclass
class LinkAnalysis:
    S: SeifertMatrix
    inv: LinkInvariants
    sf: StepFunction
    minus_one: MinusOneJump
    evenness: EvennessReport
    local: dict  # interior rational critical point index -> (DiagonalForm, JumpPrediction)

    @property
    def a_poly(self) -> LaurentPoly:
        return self.inv.a_poly

    def jumps_at_minus_one(self) -> tuple:
        """Exact (ju_minus, ju_plus) at -1, whether or not -1 is a critical point."""
        sf = self.sf
        if sf.critical_points[-1].kind is Kind.MINUS_ONE:
            return sf.jumps[-1]
        before = sf.arcs[-1].value
        return sf.murasugi - before, before - sf.murasugi

    def sigma_plus_at_one(self) -> int:
        return self.sf.arcs[0].value

    def interior(self):
        """(index, point, multiplicity in A_L) for critical points other than +-1."""
        for i, p in enumerate(self.sf.critical_points):
            if not p.is_boundary:
                yield i, p, self.sf.multiplicities[i]


def analyze(S: SeifertMatrix, samples_per_arc: int = 1) -> LinkAnalysis:
    inv = link_invariants(S)
    sf = signature_function(S, samples_per_arc=samples_per_arc, inv=inv)
    W = None
    local = {}
    for i, p in enumerate(sf.critical_points):
        if p.kind is Kind.RATIONAL_COS:
            W = W if W is not None else hermitian_laurent(S)
            d = diagonalize_localized(W, trace_factor_of(p))
            local[i] = (d, jump_from_diagonal(d, p))
    return LinkAnalysis(S, inv, sf, jump_at_minus_one(S, inv), evenness_witness(S, inv), local)


def _mult(p: LaurentPoly, f: LaurentPoly) -> int:
    return 0 if p.is_unit() else multiplicity(p, f)


def _full_circle_count(p: LaurentPoly, include_one: bool) -> int:
    """Roots of p on the whole unit circle with multiplicity (conjugate pairs twice)."""
    total = 0
    for pt, m in circle_roots(p):
        if pt.kind is Kind.ONE:
            total += m if include_one else 0
        elif pt.kind is Kind.MINUS_ONE:
            total += m
        else:
            total += 2 * m
    return total


# ---------------------------------------------------------------------------
# theorem checkers


def check_main(S: SeifertMatrix, an: LinkAnalysis | None = None, fault: bool = False) -> TheoremReport:
    an = an or analyze(S)
    sf = an.sf
    rep = TheoremReport("main", witnesses={"matrix": S.V}, fault=fault)
    n_arcs = len(sf.arcs)
    consistent = sum(1 for a in sf.arcs if len({v.signature for v in a.sample_values}) == 1)
    rep.add("arcs between candidate roots of (t-1)A_L are constant", consistent, n_arcs,
            consistent == n_arcs)
    rep.add("σ(1) = 0", sf.point_values[0].signature, 0, sf.point_values[0].signature == 0)
    for i, p, m in an.interior():
        val = sf.point_values[i]
        if isinstance(val, Unresolved):
            diff = abs(val.after - val.before)
            rep.add(f"|arc difference| <= 2 mult at {p.describe()}", diff, 2 * m,
                    (diff <= 2 * m), weakened=True)
            continue
        jm, jp = sf.jumps[i]
        big = max(abs(jm), abs(jp))
        rep.add(f"|ju±| <= mult_ω(A_L) at {p.describe()}", big, m, (big <= m))
    m_minus = _mult(an.a_poly, T + ONE)
    rep.add("mult_{-1}(A_L) is even", m_minus % 2, 0, m_minus % 2 == 0)
    jm, jp = an.jumps_at_minus_one()
    big = max(abs(jm), abs(jp))
    rep.add("|ju±(-1)| <= mult_{-1}(A_L)/2", big, Fraction(m_minus, 2),
            (2 * big <= m_minus))
    j1 = abs(an.sigma_plus_at_one())
    rep.add("|ju±(1)| <= mu - 1", j1, S.components - 1, (j1 <= S.components - 1))
    return rep


def check_corollary_bound(S: SeifertMatrix, an: LinkAnalysis | None = None, fault: bool = False) -> TheoremReport:
    an = an or analyze(S)
    m_minus = _mult(an.a_poly, T + ONE)
    lhs = abs(an.sf.murasugi) + 1 - S.components + Fraction(m_minus, 2)
    rhs = _full_circle_count(an.a_poly, include_one=False)
    rep = TheoremReport("bound", witnesses={"matrix": S.V, "A_L": an.a_poly}, fault=fault)
    rep.add("|σ_L| + 1 - μ + mult_{-1}(A_L)/2 <= #roots of A_L on S¹ away from 1", lhs, rhs,
            (lhs <= rhs))
    return rep


def check_bound2(S: SeifertMatrix, an: LinkAnalysis | None = None, fault: bool = False) -> TheoremReport:
    an = an or analyze(S)
    delta = an.inv.alexander
    rep = TheoremReport("bound2", witnesses={"matrix": S.V, "Delta": delta}, fault=fault)
    if delta.is_zero():
        rep.applicable = False
        return rep
    sf = an.sf
    if _mult(delta, T - ONE) == 0:
        j1 = abs(an.sigma_plus_at_one())
        rep.add("σ⁺(1) = 0 when Δ_L(1) != 0", j1, 0, (j1 <= 0))
    m_minus = _mult(delta, T + ONE)
    lhs = abs(sf.murasugi) + Fraction(m_minus, 2)
    rhs = _full_circle_count(delta, include_one=True)
    rep.add("|σ_L| + mult_{-1}(Δ_L)/2 <= #roots of Δ_L on S¹", lhs, rhs, (lhs <= rhs))
    return rep


def check_cong(S: SeifertMatrix, an: LinkAnalysis | None = None, fault: bool = False) -> TheoremReport:
    an = an or analyze(S)
    sf = an.sf
    rep = TheoremReport("cong", witnesses={"matrix": S.V}, fault=fault)
    for i, p, m in an.interior():
        val = sf.point_values[i]
        if isinstance(val, Unresolved):
            total = val.after - val.before
        else:
            total = sum(sf.jumps[i])
        rep.add(f"ju ≡ 2 mult_ω(A_L) (mod 4) at {p.describe()}", total % 4, (2 * m) % 4,
                (total - 2 * m) % 4 == 0)
        if m == 1:
            if isinstance(val, Unresolved):
                rep.add(f"mult 1 forces |ju| = 2 at {p.describe()}", abs(total), 2, abs(total) == 2,
                        weakened=True)
            else:
                jm, jp = sf.jumps[i]
                rep.add(f"mult 1 forces ju+ = ju- = ±1 at {p.describe()}", (jm, jp), "(±1, ±1) equal",
                        jm == jp and abs(jm) == 1)
    return rep


def check_even(S: SeifertMatrix, an: LinkAnalysis | None = None, fault: bool = False) -> TheoremReport:
    an = an or analyze(S)
    m1 = _mult(an.a_poly, T - ONE)
    total = m1 + S.components + an.inv.h_index
    rep = TheoremReport("even", witnesses={"matrix": S.V, "A_L": an.a_poly}, fault=fault)
    rep.add("mult_1(A_L) + μ + h is even", total, "even", total % 2 == 0)
    ev = an.evenness
    rep.add("e_{t+1/t}(W(t^4)) is even", ev.exponent, "even", ev.even)
    rep.add("e_{t+1/t}(W(t^4)) = mult_1(A_L) + 2g + μ - h", ev.exponent, ev.expected, ev.consistent)
    return rep


def check_estmult(S: SeifertMatrix, an: LinkAnalysis | None = None, fault: bool = False) -> TheoremReport:
    an = an or analyze(S)
    delta = an.inv.alexander
    rep = TheoremReport("estmult", witnesses={"matrix": S.V, "Delta": delta}, fault=fault)
    if delta.is_zero():
        rep.applicable = False
        return rep
    m = _mult(delta, T - ONE)
    rep.add("mult_1(Δ_L) >= μ - 1", S.components - 1, m, (S.components - 1 <= m))
    return rep


def check_remark(S: SeifertMatrix, an: LinkAnalysis | None = None, fault: bool = False) -> TheoremReport:
    an = an or analyze(S)
    rep = TheoremReport("remark", witnesses={"matrix": S.V, "A_L": an.a_poly}, fault=fault)
    lhs = S.components - an.inv.h_index
    m = _mult(an.a_poly, T - ONE)
    rep.add("mult_1(A_L) >= μ - h", lhs, m, (lhs <= m))
    return rep


def check_module7(S: SeifertMatrix, an: LinkAnalysis | None = None, fault: bool = False) -> TheoremReport:
    an = an or analyze(S)
    sf = an.sf
    rep = TheoremReport("module7", witnesses={"matrix": S.V, "factors": list(an.inv.factors)}, fault=fault)
    phi_sum = 0
    for i, p, _ in an.interior():
        odd, _even = phi_counts(an.inv, trace_factor_of(p))
        phi_sum += 2 * odd  # the conjugate point carries the same counts
        val = sf.point_values[i]
        ju = (val.after - val.before) if isinstance(val, Unresolved) else sum(sf.jumps[i])
        rep.add(f"|ju| <= 2φ_o at {p.describe()}", abs(ju), 2 * odd, (abs(ju) <= 2 * odd))
        rep.add(f"|ju| ≡ 2φ_o (mod 4) at {p.describe()}", abs(ju) % 4, (2 * odd) % 4,
                (abs(ju) - 2 * odd) % 4 == 0)
    _odd, even_m1 = phi_counts(an.inv, T + ONE)
    jm, jp = an.jumps_at_minus_one()
    for name, j in (("ju-", jm), ("ju+", jp)):
        rep.add(f"|{name}(-1)| <= φ_e(-1)", abs(j), even_m1, (abs(j) <= even_m1))
        rep.add(f"|{name}(-1)| ≡ φ_e(-1) (mod 2)", abs(j) % 2, even_m1 % 2, (abs(j) - even_m1) % 2 == 0)
    lhs = abs(sf.murasugi - an.sigma_plus_at_one())
    rep.add("|σ_L - σ⁺(1)| <= φ_e(-1) + Σ φ_o", lhs, even_m1 + phi_sum,
            (lhs <= even_m1 + phi_sum))
    return rep


CHECKERS: dict[str, Callable] = {
    "main": check_main,
    "bound": check_corollary_bound,
    "bound2": check_bound2,
    "cong": check_cong,
    "even": check_even,
    "estmult": check_estmult,
    "remark": check_remark,
    "module7": check_module7,
}


# ---------------------------------------------------------------------------
# cross-oracles


def oracle_minors(S: SeifertMatrix, an: LinkAnalysis | None = None) -> TheoremReport:
    rep = TheoremReport("minors", witnesses={"matrix": S.V})
    if S.n > MINORS_SIZE_LIMIT:
        rep.applicable = False
        return rep
    inv = an.inv if an else link_invariants(S)
    for i in range(1, S.n + 2):
        by_minors = higher_alexander_by_minors(S, i)
        by_factors = inv.delta(i)
        rep.add(f"Δ_{i} by minors = Δ_{i} by invariant factors", by_minors, by_factors,
                by_minors == by_factors)
    return rep


def _laurent_det(W) -> LaurentPoly:
    lows = [e.low for row in W for e in row if not e.is_zero()]
    shift = -min(lows) if lows else 0
    P = [[_to_poly(e.shift(shift)) for e in row] for row in W]
    return LaurentPoly(_det_bareiss(P), 0)


def oracle_localdiag(S: SeifertMatrix, an: LinkAnalysis | None = None) -> TheoremReport:
    an = an or analyze(S)
    sf = an.sf
    rep = TheoremReport("localdiag", witnesses={"matrix": S.V})
    W = det_w = None
    for i, p, _ in an.interior():
        if i in an.local:
            d, pred = an.local[i]
            jm, jp = sf.jumps[i]
            rep.add(f"diagonal-form jumps = sampled jumps at {p.describe()}",
                    (pred.ju_minus, pred.ju_plus), (jm, jp), (pred.ju_minus, pred.ju_plus) == (jm, jp))
            big = max(abs(jm), abs(jp))
            rep.add(f"|ju±| <= e_ρ at {p.describe()}", big, d.total_exponent, big <= d.total_exponent)
            rep.add(f"congruence class 2·#odd ≡ ju (mod 4) at {p.describe()}", pred.congruence_class,
                    (jm + jp) % 4, pred.congruence_class == (jm + jp) % 4)
        else:
            W = W if W is not None else hermitian_laurent(S)
            d = diagonalize_localized(W, trace_factor_of(p))
            val = sf.point_values[i]
            diff = abs(val.after - val.before)
            rep.add(f"|arc difference| <= 2 e_ρ at {p.describe()}", diff, 2 * d.total_exponent,
                    diff <= 2 * d.total_exponent, weakened=True)
        if d.zero_count == 0:
            W = W if W is not None else hermitian_laurent(S)
            det_w = det_w if det_w is not None else _laurent_det(W)
            m = multiplicity(det_w, trace_factor_of(p))
            rep.add(f"Σε = mult_f(det W) at {p.describe()}", d.total_exponent, m, d.total_exponent == m)
    return rep


def oracle_minus_one(S: SeifertMatrix, an: LinkAnalysis | None = None) -> TheoremReport:
    an = an or analyze(S)
    mo = an.minus_one
    rep = TheoremReport("minus_one", witnesses={"matrix": S.V, "BCDE": mo.counts})
    rep.add("B = C in the diagonal form of W(t^2) at i", mo.counts[0], mo.counts[1], mo.balanced)
    rep.add("e_{t+1/t}(W(t^2)) = mult_{-1}(A_L)", mo.total_exponent, mo.expected_exponent,
            mo.total_exponent == mo.expected_exponent)
    jm, jp = an.jumps_at_minus_one()
    big = max(abs(jm), abs(jp))
    rep.add("sampled |ju±(-1)| <= |D - E|", big, mo.bound, big <= mo.bound)
    rep.add("predicted ju±(-1) = sampled ju±(-1)", (mo.ju_minus, mo.ju_plus), (jm, jp),
            (mo.ju_minus, mo.ju_plus) == (jm, jp))
    return rep


def oracle_structure(S: SeifertMatrix, an: LinkAnalysis | None = None) -> TheoremReport:
    an = an or analyze(S)
    sf = an.sf
    n = S.n
    rep = TheoremReport("structure", witnesses={"matrix": S.V})
    rep.add("σ(1) = 0", sf.point_values[0].signature, 0, sf.point_values[0].signature == 0)
    bad = [v for v in sf.values() if abs(v.signature) + v.nullity > n or (n - v.nullity - v.signature) % 2]
    rep.add("|σ| + ν <= n and σ ≡ n - ν (mod 2) at every evaluated point", len(bad), 0, not bad)
    for i, p in enumerate(sf.critical_points):
        v = sf.point_values[i]
        expected = nullity_at(S, p, an.inv)
        rep.add(f"nullity from invariant factors at {p.describe()}", v.nullity, expected,
                v.nullity == expected)
    generic = an.inv.free_rank
    off = [v.nullity for arc in sf.arcs for v in arc.sample_values if v.nullity != generic]
    rep.add("arc samples have nullity equal to the free rank", off, [], not off)
    return rep


def shadow_comparison(S: SeifertMatrix, an: LinkAnalysis | None = None) -> dict:
    """Compare exact arc-sample signatures with a float64 eigenvalue computation."""
    an = an or analyze(S)
    agree = disagree = skipped = 0
    min_gap = float("inf")
    for arc in an.sf.arcs:
        for c, v in zip(arc.samples, arc.sample_values):
            sig, gap = shadow_signature(S, c)
            min_gap = min(min_gap, gap)
            if gap <= SHADOW_THRESHOLD:
                skipped += 1
            elif sig == v.signature:
                agree += 1
            else:
                disagree += 1
    return {"agree": agree, "disagree": disagree, "skipped": skipped, "min_abs_eigenvalue": min_gap}


def oracle_shadow(S: SeifertMatrix, an: LinkAnalysis | None = None) -> TheoremReport:
    stats = shadow_comparison(S, an)
    rep = TheoremReport("shadow", witnesses={"matrix": S.V, "float_shadow": stats})
    rep.add("float64 shadow agrees where smallest |eigenvalue| > 1e-6", stats["disagree"], 0,
            stats["disagree"] == 0)
    return rep


ORACLE_CHECKERS: dict[str, Callable] = {
    "minors": oracle_minors,
    "localdiag": oracle_localdiag,
    "minus_one": oracle_minus_one,
    "structure": oracle_structure,
    "shadow": oracle_shadow,
}


def run_checks(S: SeifertMatrix, theorems=THEOREMS, oracles=(), samples_per_arc: int = 1,
               fault: str | None = None) -> list:
    an = analyze(S, samples_per_arc=samples_per_arc)
    reports = [CHECKERS[t](S, an, fault=(t == fault)) for t in theorems]
    reports += [ORACLE_CHECKERS[o](S, an) for o in oracles]
    return reports


# ---------------------------------------------------------------------------
# campaigns


@dataclass
class CampaignSummary:
    count: int
    size_bound: int
    seed: int
    passed: dict  # report name -> number of matrices where it passed (applicable only)
    applicable: dict
    failures: list  # dicts with witness data
    check_counts: dict  # report name -> check family -> number of checks run
    shadow: dict
    rational_interior_points: int
    unresolved_points: int

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "count": self.count,
            "size_bound": self.size_bound,
            "seed": self.seed,
            "passed": self.passed,
            "applicable": self.applicable,
            "failures": self.failures,
            "check_counts": self.check_counts,
            "float_shadow": self.shadow,
            "rational_interior_points": self.rational_interior_points,
            "unresolved_points": self.unresolved_points,
            "overall": "pass" if self.ok else "fail",
        }


def campaign_grid(size_bound: int) -> list:
    return [(g, mu) for g in range(4) for mu in range(1, 5) if 2 * g + mu - 1 <= size_bound]


def campaign_case(index: int, size_bound: int, seed: int, entry_bound: int = 2) -> dict:
    grid = campaign_grid(size_bound)
    if not grid:
        raise ValueError(f"size bound {size_bound} admits no (g, mu) pair")
    g, mu = grid[index % len(grid)]
    child = int(np.random.SeedSequence([seed, index]).generate_state(1)[0])
    congruence = (index // len(grid)) % 2 == 1
    return {"index": index, "genus": g, "components": mu, "entry_bound": entry_bound,
            "seed": child, "congruence": congruence}


def _tally(rep: TheoremReport) -> dict:
    """Number of checks per description family (point-specific suffixes removed)."""
    out = {}
    for c in rep.checks:
        key = c.description.split(" at ")[0]
        out[key] = out.get(key, 0) + 1
    return out


def _run_case(args) -> dict:
    case, samples_per_arc, fault = args
    S = random_seifert(case["genus"], case["components"], case["entry_bound"], case["seed"],
                       congruence=case["congruence"])
    witness = dict(case, matrix=[list(r) for r in S.V])
    out = {"case": witness, "reports": [], "error": None, "shadow": None, "points": (0, 0)}
    try:
        an = analyze(S, samples_per_arc=samples_per_arc)
        reps = [CHECKERS[t](S, an, fault=(t == fault)) for t in THEOREMS]
        reps += [ORACLE_CHECKERS[o](S, an) for o in ORACLES]
        out["reports"] = [(r.theorem, r.applicable, r.overall,
                           [c.to_json() for c in r.failures()], _tally(r)) for r in reps]
        out["shadow"] = next(r.witnesses["float_shadow"] for r in reps if r.theorem == "shadow")
        unresolved = sum(1 for v in an.sf.point_values if isinstance(v, Unresolved))
        out["points"] = (len(an.local), unresolved)
    except Exception as exc:  # reported as a failure with its witness
        log.exception("campaign case %s raised", case["index"])
        out["error"] = f"{type(exc).__name__}: {exc}"
    return out


def run_campaign(count: int, size_bound: int, seed: int, entry_bound: int = 2,
                 samples_per_arc: int = 2, fault: str | None = None, jobs: int = 1) -> CampaignSummary:
    cases = [campaign_case(i, size_bound, seed, entry_bound) for i in range(count)]
    args = [(c, samples_per_arc, fault) for c in cases]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_case, args))
    else:
        results = [_run_case(a) for a in args]
    names = THEOREMS + ORACLES
    passed = {k: 0 for k in names}
    applicable = {k: 0 for k in names}
    failures = []
    counts = {k: {} for k in names}
    shadow = {"agree": 0, "disagree": 0, "skipped": 0, "min_abs_eigenvalue": float("inf")}
    rational_pts = unresolved_pts = 0
    for res in results:  # merged in input order
        if res["error"]:
            failures.append({"witness": res["case"], "report": "internal", "error": res["error"]})
            continue
        for name, is_applicable, ok, bad, tally in res["reports"]:
            if not is_applicable:
                continue
            for key, k in tally.items():
                counts[name][key] = counts[name].get(key, 0) + k
            applicable[name] += 1
            if ok:
                passed[name] += 1
            else:
                failures.append({"witness": res["case"], "report": name, "failed_checks": bad})
        for k in ("agree", "disagree", "skipped"):
            shadow[k] += res["shadow"][k]
        shadow["min_abs_eigenvalue"] = min(shadow["min_abs_eigenvalue"], res["shadow"]["min_abs_eigenvalue"])
        rational_pts += res["points"][0]
        unresolved_pts += res["points"][1]
    return CampaignSummary(count, size_bound, seed, passed, applicable, failures, counts, shadow,
                           rational_pts, unresolved_pts)
