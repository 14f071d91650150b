"""Compare A_M with the classical localization A_m over the commutative corpus.

Prints, per simple module, the two dimensions, the nilradical of A_m and
whether the canonical map A -> A_m kills ker(eta).
"""

from pathlib import Path

from assocloc.algebra import is_commutative
from assocloc.fileio import load_algebra
from assocloc.modules import simples
from assocloc.oracle import maximal_ideals, oracle_compare

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    print(f"{'algebra':10} {'simple':6} {'dim A_M':>7} {'dim A_m':>7} {'nil':>3}  iso  ker-blocked")
    for path in sorted((ROOT / "corpus").glob("*.alg")):
        if path.stem == "broken":
            continue
        A = load_algebra(path)
        if not is_commutative(A):
            continue
        mds = maximal_ideals(A)
        for M in simples(A):
            o = oracle_compare(A, M, mds=mds)
            print(f"{A.name:10} {M.name:6} {o.ring.dim:>7} {o.local.dim:>7} {o.nilradical_dim:>3}  "
                  f"{'yes' if o.isomorphic else 'no ':3}  {o.kernel_not_contained}")


if __name__ == "__main__":
    main()
