"""Regenerate src/torusact/corpus/*.json from the field data below.

Generators are always produced by multiplication matrices on the stated
lattice bases; matrices that were published differently are kept under
"printed" so the discrepancy stays visible.
"""

import json
from fractions import Fraction as F
from pathlib import Path

from torusact import linalg
from torusact.io import ActionFile, FieldBlock, dumps, format_json

OUT = Path(__file__).resolve().parent.parent / "src" / "torusact" / "corpus"
H = F(1, 2)

PB = [(1,), (0, 1), (0, 0, 1)]

FIELDS = {
    "2a": dict(min_poly=(1, -6, 3, 1), units=[(0, 1), (2, -4, -1)],
               lattices={"power_basis": PB,
                         "ok_basis": [(1,), (F(-2, 3), F(5, 3), F(1, 3)), (F(-1, 3), F(7, 3), F(2, 3))]}),
    "2b": dict(min_poly=(-1, 11, -7, 1), units=[(0, 1), (-2, 1)],
               lattices={"power_basis": PB, "ok_basis": [(1,), (0, 1), (H, 0, H)]}),
    "3a": dict(min_poly=(-1, -8, -2, 1), units=[(0, 1), (2, 1)],
               lattices={"power_basis": PB, "L": [(2,), (1, 1), (1, 0, 1)]}),
    "3b": dict(min_poly=(1, -8, -2, 1), units=[(0, 1), (2, 1)],
               lattices={"power_basis": PB, "L": [(2,), (1, 1), (1, 0, 1)],
                         "L2": [(4,), (3, 1), (3, 0, 1)]}),
    "3c": dict(min_poly=(-1, -11, -1, 1), units=[(0, -1), (0, 14, 5)],
               lattices={"power_basis": PB, "ok_basis": [(1,), (0, 1), (H, 0, H)]}),
}

HALF3 = [[0, 0, 0], [[1, 2], [1, 2], [1, 2]]]
FOUR = [[0, 0, 0], [0, 0, [1, 2]], [[1, 2], [1, 2], 0], [[1, 2], [1, 2], [1, 2]]]

ENTRIES = [
    ("example2a_min", "2a", "power_basis", None,
     dict(fixed_points=1, cyclic=True, maximal=True, cartan=True)),
    ("example2a_max", "2a", "ok_basis", None,
     dict(fixed_points=1, cyclic=False, maximal=False, cartan=True)),
    ("example2b_min", "2b", "power_basis", None,
     dict(fixed_points=2, fixed_point_set=HALF3, cyclic=True, affine_torsion=4, affine_index=4)),
    ("example2b_max", "2b", "ok_basis", None,
     dict(fixed_points=4, fixed_point_set=FOUR, cyclic=False, affine_torsion=8, affine_index=16)),
    ("example3a_principal", "3a", "power_basis", None,
     dict(fixed_points=2, fixed_point_set=HALF3, maximal=True, cartan=True,
          ideal_class_tag="3a/principal", affine_type="Z^2 x Z/2 x Z/2")),
    ("example3a_second", "3a", "L",
     [((-1, 2, 0), (-1, 1, 1), (-5, 9, 2)), ((1, 2, 0), (-1, 3, 1), (-5, 9, 5))],
     dict(fixed_points=1, fixed_point_set=[[0, 0, 0]], maximal=True, cartan=True,
          ideal_class_tag="3a/L", affine_type="Z^2 x Z/2")),
    ("example3b_principal", "3b", "power_basis", None,
     dict(fixed_points=2, fixed_point_set=HALF3, maximal=True, cartan=True,
          ideal_class_tag="3b/principal", affine_type="Z^2 x Z/2 x Z/2")),
    ("example3b_L", "3b", "L", None,
     dict(fixed_points=2, fixed_point_set=HALF3, maximal=True, cartan=True,
          ideal_class_tag="3b/L", affine_type="Z^2 x Z/2 x Z/2")),
    ("example3b_L2", "3b", "L2", None,
     dict(fixed_points=2, fixed_point_set=HALF3, maximal=True, cartan=True,
          ideal_class_tag="3b/L2", affine_type="Z^2 x Z/2 x Z/2")),
    ("example3c_min", "3c", "power_basis",
     [((0, -1, 0), (1, 0, -1), (1, 11, 1)), ((0, 14, 5), (5, 55, 19), (19, 214, 74))],
     dict(fixed_points=1, cyclic=True, maximal=True, cartan=True)),
    ("example3c_max", "3c", "ok_basis", None,
     dict(fixed_points=4, fixed_point_set=FOUR, cyclic=False, maximal=True, cartan=True)),
]

NOTES = {
    "example3a_second": "printed B' has last entry 5; multiplication by lam+2 on L gives 4",
    "example3c_min": "printed A has determinant 2 and does not commute with B; "
                     "the stored A is multiplication by -alpha on {1, alpha, alpha^2}",
}


def build():
    OUT.mkdir(exist_ok=True)
    names = []
    for name, fkey, lat, printed, exp in ENTRIES:
        fd = FIELDS[fkey]
        fb = FieldBlock(tuple(fd["min_poly"]),
                        [tuple(F(c) for c in u) for u in fd["units"]],
                        {k: [tuple(F(c) for c in r) + (F(0),) * (3 - len(r)) for r in v]
                         for k, v in fd["lattices"].items()}, lat)
        a = fb.construct(lat)
        af = ActionFile(name, [tuple(tuple(r) for r in g) for g in a.generators], fb,
                        exp, printed, NOTES.get(name, ""))
        (OUT / f"{name}.json").write_text(dumps(af))
        names.append(name)

    # products built from the 3a principal action
    A, B = ((0, 1, 0), (0, 0, 1), (1, 8, 2)), ((2, 1, 0), (0, 2, 1), (1, 8, 4))
    p = linalg.matpow
    bd = linalg.block_diag
    products = [
        ("example1_alpha2", [p(A, 2), p(B, 2)], dict(commutant_rank=3)),
        ("example1_alpha_x_alpha", [bd(A, A), bd(B, B)], dict(commutant_rank=12, abelian_commutant=False)),
        ("example1_alpha3_x_alpha", [bd(p(A, 3), A), bd(p(B, 3), B)],
         dict(commutant_rank=6, abelian_commutant=True)),
        ("example1_alpha2_x_alpha2", [bd(p(A, 2), p(A, 2)), bd(p(B, 2), p(B, 2))],
         dict(commutant_rank=12, abelian_commutant=False)),
    ]
    for name, gens, exp in products:
        af = ActionFile(name, [tuple(tuple(int(v) for v in r) for r in g) for g in gens],
                        expectations=exp)
        (OUT / f"{name}.json").write_text(dumps(af))
        names.append(name)

    manifest = {
        "entries": names,
        "pairs": [
            {"a": "example2a_min", "b": "example2a_max", "tag": "2a",
             "expect": {"q_conjugate": True, "z_conjugate": False, "distinguished_by": "cyclicity"}},
            {"a": "example2b_min", "b": "example2b_max", "tag": "2b",
             "expect": {"q_conjugate": True, "z_conjugate": False, "distinguishing": ["fixed points"]}},
            {"a": "example3a_principal", "b": "example3a_second", "tag": "3a",
             "expect": {"q_conjugate": True, "z_conjugate": False, "distinguishing": ["ideal class", "fixed points"]}},
            {"a": "example3b_principal", "b": "example3b_L", "tag": "3b",
             "expect": {"q_conjugate": True, "z_conjugate": False, "distinguishing": ["ideal class"]}},
            {"a": "example3b_principal", "b": "example3b_L2", "tag": "3b",
             "expect": {"q_conjugate": True, "z_conjugate": False, "distinguishing": ["ideal class"]}},
            {"a": "example3b_L", "b": "example3b_L2", "tag": "3b",
             "expect": {"q_conjugate": True, "z_conjugate": False, "distinguishing": ["ideal class"]}},
            {"a": "example3c_min", "b": "example3c_max", "tag": "3c",
             "expect": {"q_conjugate": True, "z_conjugate": False, "distinguishing": ["cyclicity"]}},
            {"a": "example1_alpha2", "b": "example1_alpha_x_alpha", "tag": "1a",
             "expect": {"q_conjugate": False, "entropy_equal": True}},
            {"a": "example1_alpha3_x_alpha", "b": "example1_alpha2_x_alpha2", "tag": "1b",
             "expect": {"q_conjugate": False, "entropy_equal": True, "distinguishing": ["centralizer"]}},
        ],
        "identities": [
            {"kind": "polynomial_relation", "entry": "example2a_min", "tag": "2a",
             "target": 1, "source": 0, "poly": [2, -4, -1]},
            {"kind": "polynomial_relation", "entry": "example2a_max", "tag": "2a",
             "target": 1, "source": 0, "poly": [2, -4, -1]},
            {"kind": "charpoly", "entry": "example2a_min", "tag": "2a", "generator": 0,
             "poly": [1, -6, 3, 1]},
            {"kind": "conjugator", "a": "example2a_min", "b": "example2a_max", "tag": "2a",
             "V": [[2, -2, -1], [0, -3, 0], [1, -4, -2]]},
            {"kind": "orbit_form", "entry": "example2a_max", "tag": "2a", "generator": 0,
             "prime": 3,
             "monomials": [[3, 0, 0], [2, 0, 1], [1, 2, 0], [1, 1, 1], [1, 0, 2], [0, 3, 0],
                           [0, 1, 2], [0, 0, 3]],
             "coefficients": [3, 18, -9, -9, 27, 3, -9, 3]},
            {"kind": "square", "entry": "example2b_max", "tag": "2b", "generator": 0,
             "root": [[0, -2, 1], [-1, -5, 3], [-2, -9, 6]]},
            {"kind": "not_square_mod2", "entry": "example2b_min", "tag": "2b", "generator": 0},
        ],
    }
    (OUT / "manifest.json").write_text(format_json(manifest) + "\n")


if __name__ == "__main__":
    build()
