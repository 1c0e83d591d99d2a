"""JSON, CSV and SVG renderings of invariants and signature step functions.

All numbers in the JSON and CSV output are exact: integers, fractions as
"p/q" strings and polynomials as strings.  The SVG plot is the only place
floating point appears, and only for drawing positions.
"""
from __future__ import annotations

import csv
import io
import math
from fractions import Fraction

from .circle import CirclePoint, Kind, _x_poly_str
from .seifert import LinkInvariants, SeifertMatrix
from .signature import StepFunction, Unresolved

W_FORMULA = "W(w) = (1 - w) V + (1 - conj(w)) V^T"


def _frac(x) -> object:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def cos_form(p: CirclePoint) -> str:
    if p.kind is Kind.ONE:
        return "1"
    if p.kind is Kind.MINUS_ONE:
        return "-1"
    if p.kind is Kind.RATIONAL_COS:
        return str(_frac(p.cos))
    lo, hi = p.x_interval()
    return f"x/2 for the root x of {_x_poly_str(p.minpoly)} in ({_frac(lo)}, {_frac(hi)})"


def invariants_json(S: SeifertMatrix, inv: LinkInvariants, name: str = "") -> dict:
    return {
        "schema": 1,
        "name": name,
        "n": S.n,
        "mu": S.components,
        "g": S.genus,
        "h": inv.h_index,
        "deltas": [str(d) for d in inv.deltas],
        "A_L": str(inv.a_poly),
        "invariant_factors": [str(d) for d in inv.factors],
        "free_rank": inv.free_rank,
        "presentation": "tV - V^T",
    }


def step_function_json(sf: StepFunction, name: str = "", shadow: dict | None = None) -> dict:
    points = []
    for i, p in enumerate(sf.critical_points):
        v = sf.point_values[i]
        entry = {"point": p.to_json(), "cos": cos_form(p), "multiplicity": sf.multiplicities[i]}
        if isinstance(v, Unresolved):
            entry.update(unresolved=True, before=v.before, after=v.after, nullity=v.nullity)
        else:
            jm, jp = sf.jumps[i]
            entry.update(signature=v.signature, nullity=v.nullity, ju_minus=jm, ju_plus=jp)
        points.append(entry)
    arcs = [
        {
            "start": cos_form(a.start),
            "end": cos_form(a.end),
            "closed_end": a.closed_end,
            "value": a.value,
            "samples": [_frac(c) for c in a.samples],
        }
        for a in sf.arcs
    ]
    out = {
        "schema": 1,
        "name": name,
        "convention": W_FORMULA,
        "n": sf.n,
        "murasugi_signature": sf.murasugi,
        "critical_points": points,
        "arcs": arcs,
    }
    if shadow is not None:
        out["float_shadow_diagnostic"] = shadow
    return out


def step_function_csv(sf: StepFunction) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["arc_start_cos", "arc_end_cos", "value"])
    for a in sf.arcs:
        w.writerow([cos_form(a.start), cos_form(a.end), a.value])
    w.writerow(["point", "cos_form", "value_or_unresolved", "ju_minus", "ju_plus"])
    for i, p in enumerate(sf.critical_points):
        v = sf.point_values[i]
        if isinstance(v, Unresolved):
            w.writerow([p.describe(), cos_form(p), f"unresolved({v.before},{v.after};nullity {v.nullity})", "", ""])
        else:
            jm, jp = sf.jumps[i]
            w.writerow([p.describe(), cos_form(p), v.signature, jm, jp])
    return buf.getvalue()


def _theta_over_pi(p: CirclePoint) -> float:
    c = max(-1.0, min(1.0, p.approx_cos()))
    return math.acos(c) / math.pi


def step_function_svg(sf: StepFunction, path, title: str = "") -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 3.5))
    for a in sf.arcs:
        x0, x1 = _theta_over_pi(a.start), _theta_over_pi(a.end)
        ax.hlines(a.value, x0, x1, colors="C0", linewidth=2)
    for i, p in enumerate(sf.critical_points):
        x = _theta_over_pi(p)
        v = sf.point_values[i]
        if isinstance(v, Unresolved):
            for y in {v.before, v.after}:
                ax.plot(x, y, "o", mfc="white", mec="C0")
        else:
            ax.plot(x, v.signature, "o", color="C0")
    if sf.critical_points[-1].kind is not Kind.MINUS_ONE:
        ax.plot(1.0, sf.murasugi, "o", color="C0")
    ax.set_xlim(-0.02, 1.02)
    ax.set_xlabel("θ/π")
    ax.set_ylabel("σ")
    if title:
        ax.set_title(title)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)
