"""Invariant reports for a single action and for a pair of actions.

Reports are plain dicts with a fixed key order so that the text and JSON
renderings agree field for field and are stable across runs.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import linalg, spectra
from .action import (Status, Verdict, ZdAction, entropy_function, fixed_points, is_cartan,
                     is_irreducible, satisfies_R, weyl_chambers)
from .centralizer import affine_report, commutant_z_basis, is_maximal_cartan, torsion_elements
from .classify import ComparisonReport, compare, cyclicity

ENTROPY_BOX = 3


def _jsonable(x):
    if isinstance(x, Status):
        return x.value
    if isinstance(x, Verdict):
        return verdict_dict(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(t) for t in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if hasattr(x, "to_str"):
        return x.to_str()
    if isinstance(x, float):
        return round(x, 12)
    return x


def verdict_dict(v: Verdict) -> dict:
    out = {"status": v.status.value}
    if v.witness is not None:
        out["witness"] = _jsonable(v.witness)
    if v.detail:
        out["detail"] = v.detail
    return out


def analyze(a: ZdAction, box: int = 3, unit_box: int = 50) -> dict:
    """Every invariant of one action, in a fixed order."""
    rep: dict = {"n": a.n, "d": a.d}
    gens = []
    for g in a.generators:
        erg = spectra.is_ergodic(g)
        gens.append({"ergodic": erg.ergodic, "cyclotomic_factor": erg.cyclotomic_k,
                     "hyperbolic": spectra.is_hyperbolic(g),
                     "real_spectrum": spectra.all_eigenvalues_real(g),
                     "entropy": spectra.entropy(g)})
    rep["generators"] = gens
    irr = is_irreducible(a, box)
    rep["irreducible"] = irr
    rep["cartan"] = is_cartan(a)
    rep["condition_R"] = satisfies_R(a, box) if a.d >= 2 else None
    try:
        grid = list(linalg.box_vectors(a.d, ENTROPY_BOX if a.d <= 2 else 1))
        rep["entropy_table"] = [{"n": list(v), "h": entropy_function(a, v)} for v in sorted(grid)]
        if a.d == 2:
            wc = weyl_chambers(a)
            rep["weyl_chambers"] = {"count": len(wc.chambers), "degenerate": wc.degenerate}
    except ArithmeticError as e:
        rep["entropy_table"] = f"unavailable: {e}"
    try:
        fx = fixed_points(a)
        rep["fixed_points"] = fx.order
        rep["fixed_point_set"] = [[str(t) for t in p] for p in fx.points]
    except ValueError as e:
        rep["fixed_points"] = f"infinite ({e})"
    c = commutant_z_basis(a)
    rep["commutant_rank"] = c.rank
    rep["commutant_abelian"] = c.is_abelian()
    rep["cyclic"] = cyclicity(a)
    if irr and c.rank == a.n:
        rep["torsion"] = len(torsion_elements(c))
        if rep["cartan"]:
            rep["maximal"] = is_maximal_cartan(a, unit_box, c)
        if isinstance(rep["fixed_points"], int):
            af = affine_report(a, unit_box, c)
            rep["affine"] = {"torsion_order": af.torsion_order, "index": af.index,
                             "type": af.abstract_type, "unit_box": af.box}
    return rep


def exit_status(rep: dict) -> int:
    """0 when everything is decided, 2 when some verdict is only 'not verified'."""
    def walk(x):
        if isinstance(x, Verdict):
            yield x.status
        elif isinstance(x, dict):
            for v in x.values():
                yield from walk(v)
    return 2 if Status.NOT_VERIFIED in set(walk(rep)) else 0


def _fmt(v) -> str:
    if isinstance(v, Verdict):
        s = v.status.value if v.status is not Status.YES else "true"
        s = "false" if v.status is Status.NO else s
        if v.witness is not None:
            s += f" (witness {_jsonable(v.witness)})"
        if v.detail:
            s += f" [{v.detail}]"
        return s
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.10f}"
    return str(v)


def render_text(name: str, rep: dict) -> str:
    lines = [f"action: {name}", f"n: {rep['n']}", f"d: {rep['d']}"]
    for i, g in enumerate(rep["generators"]):
        lines.append(f"generator {i}: ergodic={_fmt(g['ergodic'])} hyperbolic={_fmt(g['hyperbolic'])}"
                     f" real_spectrum={_fmt(g['real_spectrum'])} entropy={g['entropy']:.10f}")
    for key in ("irreducible", "cartan", "condition_R"):
        if rep.get(key) is not None:
            lines.append(f"{key}: {_fmt(rep[key])}")
    if "weyl_chambers" in rep:
        wc = rep["weyl_chambers"]
        lines.append(f"weyl_chambers: {wc['count']}" + (" (degenerate)" if wc["degenerate"] else ""))
    lines.append(f"fixed_points: {rep['fixed_points']}")
    if rep.get("fixed_point_set"):
        lines.append("fixed_point_set: " + " ".join("(" + ",".join(p) + ")" for p in rep["fixed_point_set"]))
    lines.append(f"commutant_rank: {rep['commutant_rank']}")
    lines.append(f"commutant_abelian: {_fmt(rep['commutant_abelian'])}")
    if "torsion" in rep:
        lines.append(f"torsion: {rep['torsion']}")
    lines.append(f"cyclic: {_fmt(rep['cyclic'])}")
    if "maximal" in rep:
        lines.append(f"maximal: {_fmt(rep['maximal'])}")
    if "affine" in rep:
        af = rep["affine"]
        lines.append(f"affine_torsion_order: {af['torsion_order']}")
        lines.append(f"affine_index: {af['index']}")
        lines.append(f"affine_type: {af['type']}")
    if isinstance(rep.get("entropy_table"), list):
        lines.append("entropy_table:")
        for row in rep["entropy_table"]:
            lines.append(f"  {tuple(row['n'])}: {row['h']:.10f}")
    return "\n".join(lines) + "\n"


def render_json(name: str, rep: dict) -> str:
    return json.dumps({"action": name, **_jsonable(rep)}, indent=1) + "\n"


# --- pairs -----------------------------------------------------------------------

def comparison_dict(r: ComparisonReport) -> dict:
    return {
        "same_shape": r.same_shape,
        "entropy_equal": r.entropy_equal,
        "entropy_deviation": r.entropy_deviation,
        "rationally_conjugate": verdict_dict(r.q_conjugate),
        "z_conjugate": verdict_dict(r.z_conjugate),
        "weakly_isomorphic": verdict_dict(r.time_change_q),
        "cyclic": [s.value for s in r.cyclicity],
        "fixed_points": list(r.fixed_points),
        "commutant_ranks": list(r.commutant_ranks),
        "maximal": [None if m is None else m.value for m in r.maximality],
        "ideal_classes_equal": None if r.ideal_classes is None else r.ideal_classes.status.value,
        "distinguishing": r.distinguishing,
        "distinguished_by": r.distinguished_by,
        "verdict_chain_ok": r.chain_ok(),
    }


def render_comparison(name_a: str, name_b: str, r: ComparisonReport) -> str:
    lines = [f"compare: {name_a} vs {name_b}"]
    z = r.z_conjugate
    if z.status is Status.YES and z.witness == linalg.identity(len(z.witness)):
        lines.append("isomorphic: yes (identity)")
    if r.entropy_equal is not None:
        lines.append("entropy functions " + ("equal" if r.entropy_equal else "differ")
                     + f" (max deviation {r.entropy_deviation:.2e})")
    weak = r.time_change_q.status
    why = ""
    if weak is Status.NO:
        if r.commutant_ranks[0] != r.commutant_ranks[1]:
            why = f" (commutant ranks {r.commutant_ranks[0]} vs {r.commutant_ranks[1]})"
        elif r.time_change_q.detail:
            why = f" ({r.time_change_q.detail})"
    lines.append(f"weakly isomorphic: {weak.value}{why}")
    lines.append(f"rationally conjugate: {r.q_conjugate.status.value}")
    lines.append(f"Z-conjugate: {z.status.value}" + (f" ({z.detail})" if z.detail else ""))
    lines.append(f"cyclic: {r.cyclicity[0].value} / {r.cyclicity[1].value}")
    lines.append(f"fixed points: {r.fixed_points[0]} / {r.fixed_points[1]}")
    lines.append(f"commutant ranks: {r.commutant_ranks[0]} / {r.commutant_ranks[1]}")
    if None not in r.maximality:
        lines.append(f"maximal: {r.maximality[0].value} / {r.maximality[1].value}")
    if r.ideal_classes is not None:
        eq = {Status.YES: "equal", Status.NO: "differ", Status.NOT_VERIFIED: "not verified"}
        lines.append(f"ideal classes: {eq[r.ideal_classes.status]}")
    lines.append("distinguishing invariants: " + (", ".join(r.distinguishing) or "none"))
    lines.append(f"verdict chain consistent: {'yes' if r.chain_ok() else 'NO'}")
    return "\n".join(lines) + "\n"


def compare_pair(a: ZdAction, b: ZdAction) -> ComparisonReport:
    return compare(a, b)
