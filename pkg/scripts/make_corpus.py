"""Regenerate the bundled corpus of algebra, module and expectation files."""

from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np

from assocloc.constructions import (cyclic_group_algebra, direct_product, matrix_algebra,
                                    poly_quotient, truncated_poly, upper_triangular)
from assocloc.fileio import serialize_algebra, serialize_module
from assocloc.linalg import PrimeField
from assocloc.modules import validate_module

F2, F3, F5 = PrimeField(2), PrimeField(3), PrimeField(5)

ALGEBRAS = {
    "f2": lambda: poly_quotient(F2, [0, 1], "f2"),
    "f5": lambda: poly_quotient(F5, [0, 1], "f5"),
    "m2f2": lambda: matrix_algebra(F2, 2, "m2f2"),
    "m2f3": lambda: matrix_algebra(F3, 2, "m2f3"),
    "m3f2": lambda: matrix_algebra(F2, 3, "m3f2"),
    "ut2f2": lambda: upper_triangular(F2, 2, "ut2f2"),
    "ut2f3": lambda: upper_triangular(F3, 2, "ut2f3"),
    "ut3f2": lambda: upper_triangular(F2, 3, "ut3f2"),
    "f4": lambda: poly_quotient(F2, [1, 1, 1], "f4"),
    "f9": lambda: poly_quotient(F3, [1, 0, 1], "f9"),
    "f2x2": lambda: truncated_poly(F2, 2, "f2x2"),
    "f3x2": lambda: truncated_poly(F3, 2, "f3x2"),
    "f5x2": lambda: truncated_poly(F5, 2, "f5x2"),
    "f2x3": lambda: truncated_poly(F2, 3, "f2x3"),
    "f3x3": lambda: truncated_poly(F3, 3, "f3x3"),
    "f2xf2": lambda: direct_product(poly_quotient(F2, [0, 1]), poly_quotient(F2, [0, 1]), "f2xf2"),
    "f3xf3": lambda: direct_product(poly_quotient(F3, [0, 1]), poly_quotient(F3, [0, 1]), "f3xf3"),
    "f3_x2m1": lambda: poly_quotient(F3, [2, 0, 1], "f3_x2m1"),
    "f2c2": lambda: cyclic_group_algebra(F2, 2, "f2c2"),
    "f2c3": lambda: cyclic_group_algebra(F2, 3, "f2c3"),
    "f3c3": lambda: cyclic_group_algebra(F3, 3, "f3c3"),
    "m2f2xf2": lambda: direct_product(matrix_algebra(F2, 2), poly_quotient(F2, [0, 1]), "m2f2xf2"),
}

# commutative algebras with nonzero radical: A_M is the residue field, A_m is not
EXPECTED_MISMATCH = ["f2x2", "f3x2", "f5x2", "f2x3", "f3x3", "f2c2", "f3c3"]

BROKEN = """\
# e1 e1 = e2, e2 e2 = e1, e1 e2 = 1, e2 e1 = 0: (e1 e1) e1 != e1 (e1 e1)
algebra broken p=2 dim=3
basis 1 e1 e2
unit 1 0 0
mul 0 0 : 1 0 0
mul 0 1 : 0 1 0
mul 0 2 : 0 0 1
mul 1 0 : 0 1 0
mul 1 1 : 0 0 1
mul 1 2 : 1 0 0
mul 2 0 : 0 0 1
mul 2 1 : 0 0 0
mul 2 2 : 0 1 0
"""


def natural_module(A, k: int, name: str):
    """F_p^k under right multiplication by the matrix units e_ab."""
    mats = []
    for label in A.basis_names:
        a, b = int(label[1]) - 1, int(label[2]) - 1
        E = np.zeros((k, k), dtype=np.int64)
        E[a, b] = 1
        mats.append(E)
    return validate_module(A, np.array(mats), name)


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "corpus")
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    built = {}
    for name, make in ALGEBRAS.items():
        built[name] = A = make()
        (args.out / f"{name}.alg").write_text(serialize_algebra(A), encoding="utf-8")
    (args.out / "m2f2_nat.mod").write_text(
        serialize_module(natural_module(built["m2f2"], 2, "m2f2_nat")), encoding="utf-8")
    (args.out / "broken.alg").write_text(BROKEN, encoding="utf-8")
    for name in EXPECTED_MISMATCH:
        (args.out / f"{name}.expect").write_text("lemma_AM_iso_Am: expected-fail\n", encoding="utf-8")
    print(f"wrote {len(built)} algebras to {args.out}")


if __name__ == "__main__":
    main()
