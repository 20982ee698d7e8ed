"""Write every inequality sweep to CSV and print the summaries.

    python3 scripts/run_sweeps.py --outdir results
"""

import argparse
from pathlib import Path

from crossint import inequalities as ineq


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default="results")
    ap.add_argument("--nwindow", type=int, default=20)
    a = ap.parse_args()
    out = Path(a.outdir)
    out.mkdir(parents=True, exist_ok=True)
    reports = {
        "f_sweep": ineq.lemma31_sweep(12, a.nwindow),
        "T_sweep": ineq.lemma32_sweep(10, 10, a.nwindow),
        "ratio_constants": ineq.ratio_constants_check(60, None, a.nwindow),
        "polynomial_signs": ineq.proof_polynomial_signs(10, 10, a.nwindow),
    }
    ok = True
    for name, rep in reports.items():
        (out / f"{name}.csv").write_text("\n".join(rep.csv_lines()) + "\n")
        print("\n".join(rep.summary()))
        ok &= rep.ok
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
