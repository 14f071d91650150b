"""Run `verify` on every corpus algebra and print one summary row each.

Reports are written to --out (one YAML file per algebra).
"""

from __future__ import annotations

import argparse
import time
from collections import Counter
from pathlib import Path

from assocloc import commands
from assocloc.fileio import load_algebra, load_expectations

ROOT = Path(__file__).resolve().parent.parent


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--corpus", type=Path, default=ROOT / "corpus")
    ap.add_argument("--out", type=Path, default=ROOT / "reports")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--cap", type=int, default=1 << 16)
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    worst = 0
    print(f"{'algebra':10} {'p':>2} {'dim':>3} {'simples':>7} {'checks':>6}  statuses")
    for path in sorted(args.corpus.glob("*.alg")):
        if path.stem == "broken":
            continue
        A = load_algebra(path)
        t0 = time.perf_counter()
        wb = commands.Workbench(A, args.seed, args.cap)
        rep = commands.run_verify(wb)
        expect = path.with_suffix(".expect")
        if expect.exists():
            rep.apply_expectations(load_expectations(expect))
        (args.out / f"{path.stem}.yaml").write_text(rep.to_text(), encoding="utf-8")
        counts = Counter(c["status"] for c in rep.checks)
        worst = max(worst, rep.exit_code)
        summary = ", ".join(f"{k} {v}" for k, v in sorted(counts.items()))
        print(f"{A.name:10} {A.p:>2} {A.dim:>3} {len(wb.simples):>7} {len(rep.checks):>6}  "
              f"{summary}  ({time.perf_counter() - t0:.2f}s)")
    return worst


if __name__ == "__main__":
    raise SystemExit(main())
