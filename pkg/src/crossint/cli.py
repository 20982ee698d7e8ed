"""Command-line entry point.

Exit codes: 0 on success or PASS, 1 on a verification FAIL (counterexamples
are written as JSON or CSV), 2 on usage and domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import inequalities as ineq
from .compression import compress_pair, is_left_compressed
from .constructions import KINDS, FamilySpec, build, size_formula
from .core import DomainError, format_family, parse_family
from .genset import canonical_generators, s_plus, slice_view
from .relation import CrossParams
from .search import DEFAULT_MAX_LEVEL, SearchConfig, max_product
from .verify import verify_theorem14, verify_theorem51


def _read_family(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}") from exc
    return parse_family(text)


def cmd_search(a: argparse.Namespace) -> int:
    cfg = SearchConfig(CrossParams(a.n, a.k, a.l, a.t), nontrivial_only=a.nontrivial,
                       use_compression_reduction=a.compress_reduce,
                       use_symmetry_reduction=a.symmetry_reduce, product_floor=a.floor,
                       prune=not a.no_prune, jobs=a.jobs, max_level=a.max_level)
    res = max_product(cfg)
    payload = json.dumps(res.to_json(with_timing=not a.omit_timing)) + "\n"
    if a.out:
        Path(a.out).write_text(payload)
        print(f"max_product={res.max_product} witnesses={len(res.witnesses)} "
              f"explored={res.explored} pruned={res.pruned}")
    else:
        sys.stdout.write(payload)
    return 0


def cmd_verify(a: argparse.Namespace) -> int:
    kw = dict(jobs=a.jobs, force=a.force, max_level=a.max_level)
    if a.theorem == "1.4":
        verdict = verify_theorem14(a.n, a.k, a.l, **kw)
    else:
        verdict, _ = verify_theorem51(a.n, a.k, a.l, **kw)
    print("\n".join(verdict.lines()))
    if verdict.passed:
        return 0
    cx = json.dumps(verdict.counterexamples()) + "\n"
    if a.out:
        Path(a.out).write_text(cx)
    else:
        sys.stderr.write(cx)
    return 1


def cmd_compress(a: argparse.Namespace) -> int:
    A, B = _read_family(a.a), _read_family(a.b)
    A1, B1 = compress_pair(A, B)
    Path(a.out_a).write_text(format_family(A1))
    Path(a.out_b).write_text(format_family(B1))
    print(f"|A|={len(A1)} |B|={len(B1)} left-compressed={is_left_compressed(A1) and is_left_compressed(B1)}")
    return 0


def cmd_genset(a: argparse.Namespace) -> int:
    A = _read_family(a.family)
    g = canonical_generators(A)
    lines = [",".join(map(str, e)) if e else "{}" for e in g.as_lists()]
    if any(g.gens):
        sp = s_plus(g)
        view = slice_view(g, sp, t=a.t)
        lines.append(f"s+={sp}")
        for i, gens in view.slices.items():
            lines.append(f"slice {i}: {len(gens)} generators")
    else:
        lines.append("s+=undefined (family is the full level)")
    print("\n".join(lines))
    return 0


def cmd_construct(a: argparse.Namespace) -> int:
    spec = FamilySpec(a.kind, a.n, a.k, T=tuple(a.T), t=a.t, r=a.r, s=a.s)
    fam = build(spec)
    formula = size_formula(spec)
    if a.out:
        Path(a.out).write_text(format_family(fam))
    agree = len(fam) == formula
    print(f"size={len(fam)} formula={formula} agree={'yes' if agree else 'no'}")
    return 0 if agree else 1


def _report(a: argparse.Namespace, rep: ineq.SweepReport) -> int:
    print("\n".join(rep.summary()))
    if a.out:
        Path(a.out).write_text("\n".join(rep.csv_lines()) + "\n")
    if rep.ok:
        return 0
    if not a.out:
        bad = ineq.SweepReport(rep.name, rep.bounds, rep.failures)
        sys.stderr.write("\n".join(bad.csv_lines(include_recorded=False)) + "\n")
    for name, c in rep.failed_certificates:
        sys.stderr.write(f"tail certificate failed: {name} method={c.method} witness={c.witness}\n")
    return 1


def cmd_sweep_f(a):
    return _report(a, ineq.lemma31_sweep(a.kmax, a.nwindow))


def cmd_sweep_T(a):
    return _report(a, ineq.lemma32_sweep(a.kmax, a.lmax, a.nwindow))


def cmd_sweep_ratios(a):
    return _report(a, ineq.ratio_constants_check(a.kmax, a.lmax, a.nwindow))


def cmd_sweep_polys(a):
    return _report(a, ineq.proof_polynomial_signs(a.kmax, a.lmax, a.nwindow))


def _size_args(p: argparse.ArgumentParser, with_t: bool = True) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    if with_t:
        p.add_argument("--t", type=int, default=2)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-level", type=int, default=DEFAULT_MAX_LEVEL,
                   help="largest level set size accepted on either side")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="crossint", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="exact maximum product by concept enumeration")
    _size_args(p)
    p.add_argument("--nontrivial", action="store_true", help="only pairs with common core < 2")
    p.add_argument("--compress-reduce", action="store_true", help="restrict to left-compressed pairs")
    p.add_argument("--symmetry-reduce", action="store_true",
                   help="only pairs anchored at an initial segment; witnesses are representatives")
    p.add_argument("--floor", type=int, default=0, help="known lower bound used for pruning")
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--omit-timing", action="store_true", help="drop wall_time_ms for byte-stable output")
    p.add_argument("--out")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="PASS/FAIL verdict for a product theorem")
    p.add_argument("--theorem", choices=["1.4", "5.1"], required=True)
    _size_args(p, with_t=False)
    p.add_argument("--force", action="store_true", help="allow n below ceil(3.38*max(k,l))")
    p.add_argument("--out", help="counterexample JSON on FAIL")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compress", help="left-compress a pair of families")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--out-a", required=True)
    p.add_argument("--out-b", required=True)
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("genset", help="canonical generating antichain of a family")
    p.add_argument("family")
    p.add_argument("--t", type=int, default=1, help="smallest slice size shown")
    p.set_defaults(func=cmd_genset)

    p = sub.add_parser("construct", help="build a named family")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--T", type=int, nargs=2, default=[1, 2], metavar=("A", "B"))
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--s", type=int, default=3)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    sweeps = {
        "sweep-f": (cmd_sweep_f, 12, None),
        "sweep-T": (cmd_sweep_T, 10, 10),
        "sweep-ratios": (cmd_sweep_ratios, 60, None),
        "sweep-polys": (cmd_sweep_polys, 10, 10),
    }
    for name, (fn, kmax, lmax) in sweeps.items():
        p = sub.add_parser(name, help="exact inequality sweep, CSV output")
        p.add_argument("--kmax", type=int, default=kmax)
        if name != "sweep-f":
            # for sweep-ratios an absent --lmax follows --kmax
            p.add_argument("--lmax", type=int, default=lmax)
        p.add_argument("--nwindow", type=int, default=20)
        p.add_argument("--out", help="CSV file")
        p.set_defaults(func=fn)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return a.func(a)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
