"""Data-driven checks of the bundled corpus (the ``verify-paper`` command).

Every check compares an expectation stored in the corpus with a value
computed from scratch and records both.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from . import linalg, spectra
from . import poly as P
from .action import (Status, ZdAction, ValidationError, fixed_points, is_cartan, new_action,
                     satisfies_R)
from .centralizer import affine_report, commutant_z_basis, is_maximal_cartan
from .classify import action_ring, compare, cyclicity, orbit_form, square_root_mod2
from .io import ActionFile, corpus_manifest, load_corpus, parse_rational


@dataclass(frozen=True)
class Check:
    tag: str
    name: str
    passed: bool
    expected: object
    computed: object

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.tag:<3} {self.name}: expected {self.expected}, computed {self.computed}"


def tag_of(name: str) -> str:
    m = re.match(r"example(\d[a-z]?)", name)
    if not m:
        return "?"
    t = m.group(1)
    return t if len(t) == 2 else t + ("b" if "alpha3" in name or "alpha2_x" in name else "a")


def _point_set(points) -> list:
    return sorted(tuple(parse_rational(c) % 1 for c in p) for p in points)


def entry_checks(af: ActionFile) -> list:
    tag = tag_of(af.name)
    out = []

    def add(name, expected, computed, passed=None):
        out.append(Check(tag, f"{af.name}: {name}", expected == computed if passed is None else passed,
                         expected, computed))

    try:
        a = af.action()
    except ValidationError as e:
        add("valid action", "valid", str(e), False)
        return out
    add("valid action", "valid", "valid")
    exp = af.expectations
    if af.field is not None and af.field.lattice:
        built = af.field.construct(af.field.lattice)
        add(f"construct on {af.field.lattice} equals stored generators", True,
            built == a)
    if af.printed is not None:
        for i, (p, g) in enumerate(zip(af.printed, af.generators)):
            add(f"printed generator {i} equals constructed", [list(r) for r in p], [list(r) for r in g])
    for i, g in enumerate(a.generators):
        erg = spectra.is_ergodic(g)
        flags = (erg.ergodic, spectra.is_hyperbolic(g), spectra.all_eigenvalues_real(g))
        add(f"generator {i} ergodic/hyperbolic/real", (True, True, True), flags)
    if a.d >= 2:
        r = satisfies_R(a)
        add("condition (R)", "yes", r.status.value)
    if "cartan" in exp:
        add("Cartan", exp["cartan"], is_cartan(a))
    if "fixed_points" in exp:
        add("fixed-point order", exp["fixed_points"], fixed_points(a).order)
    if "fixed_point_set" in exp:
        got = fixed_points(a, convention="column").points
        add("fixed-point set (x -> A x)", [tuple(str(t) for t in p) for p in _point_set(exp["fixed_point_set"])],
            [tuple(str(t) for t in p) for p in sorted(got)])
    c = None
    if "commutant_rank" in exp or "abelian_commutant" in exp or "maximal" in exp \
            or "affine_index" in exp or "affine_type" in exp:
        c = commutant_z_basis(a)
    if "commutant_rank" in exp:
        add("commutant rank", exp["commutant_rank"], c.rank)
    if "abelian_commutant" in exp:
        pair = c.noncommuting_pair()
        add("commutant abelian", exp["abelian_commutant"], pair is None)
    if "cyclic" in exp:
        v = cyclicity(a)
        add("cyclic", "yes" if exp["cyclic"] else "no", v.status.value)
    if "maximal" in exp:
        add("maximal (unit box 50)", "yes" if exp["maximal"] else "no",
            is_maximal_cartan(a, c=c).status.value)
    if any(k in exp for k in ("affine_torsion", "affine_index", "affine_type")) or af.field is not None:
        rep = affine_report(a, c=c)
        if "affine_torsion" in exp:
            add("affine torsion order", exp["affine_torsion"], rep.torsion_order)
        if "affine_index" in exp:
            add("affine index", exp["affine_index"], rep.index)
        if "affine_type" in exp:
            add("affine abstract type", exp["affine_type"], rep.abstract_type)
        if af.field is not None:
            k = af.field.field
            if k.n == 3 and k.signature == (3, 0):
                add("free rank of discovered units", 2, rep.free_rank)
    return out


def pair_checks(spec: dict, entries: dict) -> list:
    a, b = entries[spec["a"]].action(), entries[spec["b"]].action()
    tag = spec.get("tag", tag_of(spec["a"]))
    label = f"{spec['a']} vs {spec['b']}"
    exp = spec["expect"]
    r = compare(a, b)
    out = []

    def add(name, expected, computed, passed=None):
        out.append(Check(tag, f"{label}: {name}", expected == computed if passed is None else passed,
                         expected, computed))

    if "q_conjugate" in exp:
        add("rationally conjugate", "yes" if exp["q_conjugate"] else "no", r.q_conjugate.status.value)
    if "z_conjugate" in exp:
        add("Z-conjugate", "yes" if exp["z_conjugate"] else "no", r.z_conjugate.status.value)
    if "entropy_equal" in exp:
        add("entropy functions equal (1e-8)", exp["entropy_equal"], r.entropy_equal)
    if "distinguished_by" in exp:
        add("first distinguishing invariant", exp["distinguished_by"], r.distinguished_by)
    for inv in exp.get("distinguishing", []):
        add(f"distinguished by {inv}", True, inv in r.distinguishing)
    add("verdict chain Z => Q => entropy", True, r.chain_ok())
    return out


def identity_checks(spec: dict, entries: dict) -> list:
    tag = spec.get("tag", "?")
    kind = spec["kind"]
    out = []

    def add(name, expected, computed, passed=None):
        out.append(Check(tag, name, expected == computed if passed is None else passed,
                         expected, computed))

    if kind == "polynomial_relation":
        g = entries[spec["entry"]].generators
        val = P.eval_poly_at_matrix(spec["poly"], g[spec["source"]])
        add(f"{spec['entry']}: generator {spec['target']} = {P.to_str(tuple(spec['poly']), 'A')}",
            True, val == g[spec["target"]])
    elif kind == "charpoly":
        g = entries[spec["entry"]].generators[spec["generator"]]
        add(f"{spec['entry']}: charpoly of generator {spec['generator']}",
            P.to_str(tuple(spec["poly"])), P.to_str(linalg.charpoly(g)))
    elif kind == "conjugator":
        v = linalg.mat(spec["V"])
        vinv = linalg.inverse(v)
        ga, gb = entries[spec["a"]].generators, entries[spec["b"]].generators
        ok = all(linalg.matmul(linalg.matmul(v, x), vinv) == y for x, y in zip(ga, gb))
        add(f"V A V^-1 = A' and V B V^-1 = B' ({spec['a']} -> {spec['b']})", True, ok)
    elif kind == "square":
        m = linalg.mat(spec["root"])
        g = entries[spec["entry"]].generators[spec["generator"]]
        add(f"{spec['entry']}: generator {spec['generator']} = M^2 with det M = {linalg.det(m)}",
            True, linalg.matmul(m, m) == g and abs(linalg.det(m)) == 1)
    elif kind == "not_square_mod2":
        g = entries[spec["entry"]].generators[spec["generator"]]
        root, checked = square_root_mod2(g)
        add(f"{spec['entry']}: generator {spec['generator']} not a square mod 2 ({checked} matrices)",
            None, root)
    elif kind == "orbit_form":
        g = entries[spec["entry"]].generators[spec["generator"]]
        n = len(g)
        ring = [linalg.matpow(g, k) for k in range(n)]
        form = orbit_form(ring, n)
        got = [form.get(tuple(m), 0) for m in spec["monomials"]]
        extra = {e: c for e, c in form.items() if list(e) not in spec["monomials"]}
        want = spec["coefficients"]
        same = (got == want or got == [-x for x in want]) and not extra
        add(f"{spec['entry']}: orbit form det(m, mA, mA^2) coefficients (up to sign)",
            want, got, same)
        content = math.gcd(*form.values())
        add(f"{spec['entry']}: orbit form divisible by {spec['prime']}", True,
            content % spec["prime"] == 0)
    else:
        add(f"unknown identity kind {kind}", "known", kind, False)
    return out


def run(filter_: str | None = None, entries: dict | None = None, manifest: dict | None = None):
    """Yield Check results in corpus order (entries, identities, pairs)."""
    entries = entries if entries is not None else load_corpus()
    manifest = manifest if manifest is not None else corpus_manifest()

    def wanted(*names, tag=None):
        if not filter_:
            return True
        return any(filter_ in n for n in names) or (tag is not None and filter_ in tag)

    for name, af in entries.items():
        if wanted(name, tag=tag_of(name)):
            yield from entry_checks(af)
    for spec in manifest.get("identities", []):
        names = [spec.get(k) for k in ("entry", "a", "b") if spec.get(k)]
        if wanted(*names, tag=spec.get("tag")):
            yield from identity_checks(spec, entries)
    for spec in manifest.get("pairs", []):
        if wanted(spec["a"], spec["b"], tag=spec.get("tag")):
            yield from pair_checks(spec, entries)
