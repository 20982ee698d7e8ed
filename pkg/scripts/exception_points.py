"""List the grid points where the excepted (s, i) pairs of the T inequality fail."""

import argparse

from crossint import inequalities as ineq


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmax", type=int, default=10)
    ap.add_argument("--lmax", type=int, default=10)
    ap.add_argument("--nwindow", type=int, default=20)
    a = ap.parse_args()
    rep = ineq.lemma32_sweep(a.kmax, a.lmax, a.nwindow)
    print("\n".join(rep.notes))
    print("n,k,l,s,i,T")
    for r in rep.recorded:
        if not r.passed:
            print(f"{r.n},{r.k},{r.l},{r.s},{r.i},{r.value}")


if __name__ == "__main__":
    main()
