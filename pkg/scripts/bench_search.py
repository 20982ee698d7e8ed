"""Time the exact search under each reduction and report pruning effect.

Every configuration must agree on the maximum; the script exits 1 otherwise.
"""

import argparse
import time

from crossint import CrossParams, SearchConfig, max_product

CASES = [(7, 2, 2), (9, 3, 3), (10, 3, 3), (11, 3, 3), (11, 2, 4)]


def configs(params, jobs):
    yield "no-prune", SearchConfig(params, prune=False)
    yield "prune", SearchConfig(params)
    yield "compress", SearchConfig(params, use_compression_reduction=True)
    yield "symmetry", SearchConfig(params, use_symmetry_reduction=True)
    if jobs > 1:
        yield f"jobs={jobs}", SearchConfig(params, jobs=jobs)


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--jobs", type=int, default=4)
    ap.add_argument("--skip-no-prune-above", type=int, default=10,
                    help="skip the unpruned run when n exceeds this")
    a = ap.parse_args()
    print(f"{'case':<12}{'config':<10}{'max':>8}{'witn':>6}{'explored':>10}{'pruned':>10}{'sec':>8}")
    ok = True
    for n, k, l in CASES:
        seen = set()
        for name, cfg in configs(CrossParams(n, k, l, 2), a.jobs):
            if name == "no-prune" and n > a.skip_no_prune_above:
                continue
            t0 = time.perf_counter()
            r = max_product(cfg)
            dt = time.perf_counter() - t0
            seen.add(r.max_product)
            print(f"{str((n, k, l)):<12}{name:<10}{r.max_product:>8}{len(r.witnesses):>6}"
                  f"{r.explored:>10}{r.pruned:>10}{dt:>8.2f}")
        ok &= len(seen) == 1
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
