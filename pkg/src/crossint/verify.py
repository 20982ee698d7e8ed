"""Verdicts for the extremal product statements at enumeration scale."""

from __future__ import annotations

from dataclasses import dataclass, field

from .constructions import (
    Candidate,
    HFormulaDiagnostic,
    best_candidates,
    build,
    h_formula_diagnostic,
    nontrivial_candidates,
    same_shape,
)
from .core import DomainError, binomial, common_core_mask
from .inequalities import n_min
from .relation import ClosedPair, CrossParams
from .search import DEFAULT_MAX_LEVEL, SearchConfig, SearchResult, max_product


class ThresholdError(DomainError):
    pass


@dataclass
class Verdict:
    theorem: str
    n: int
    k: int
    l: int
    expected: int
    result: SearchResult
    checks: dict[str, bool] = field(default_factory=dict)
    bad_witnesses: list[ClosedPair] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def lines(self) -> list[str]:
        out = [f"theorem {self.theorem} n={self.n} k={self.k} l={self.l}: "
               f"max={self.result.max_product} expected={self.expected} "
               f"witnesses={len(self.result.witnesses)}"]
        for name, ok in self.checks.items():
            out.append(f"  {'PASS' if ok else 'FAIL'} {name}")
        out.extend(f"  {x}" for x in self.notes)
        out.append("PASS" if self.passed else "FAIL")
        return out

    def counterexamples(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n, "k": self.k, "l": self.l,
            "expected": str(self.expected),
            "max_product": str(self.result.max_product),
            "failed_checks": [k for k, ok in self.checks.items() if not ok],
            "witnesses": [[p.A.as_lists(), p.B.as_lists()] for p in self.bad_witnesses],
        }


def _check_threshold(n: int, k: int, l: int, force: bool) -> None:
    if not force and n < n_min(k, l):
        raise ThresholdError(f"n={n} is below ceil(3.38*max(k,l))={n_min(k, l)}; use --force to explore")


def is_star_pair(p: ClosedPair) -> bool:
    """Both sides are full stars over the same 2-set."""
    n, k, l = p.params.n, p.params.k, p.params.l
    core = common_core_mask(list(p.A.sets) + list(p.B.sets), n)
    return (core.bit_count() == 2 and len(p.A) == binomial(n - 2, k - 2)
            and len(p.B) == binomial(n - 2, l - 2))


def verify_theorem14(n: int, k: int, l: int, *, jobs: int = 1, force: bool = False,
                     max_level: int = DEFAULT_MAX_LEVEL) -> Verdict:
    _check_threshold(n, k, l, force)
    params = CrossParams(n, k, l, 2)
    res = max_product(SearchConfig(params, jobs=jobs, max_level=max_level))
    expected = binomial(n - 2, k - 2) * binomial(n - 2, l - 2)
    v = Verdict("1.4", n, k, l, expected, res)
    v.bad_witnesses = [p for p in res.witnesses if not is_star_pair(p)]
    v.checks["max product equals the star product"] = res.max_product == expected
    v.checks["every witness is a star pair over a common 2-set"] = not v.bad_witnesses
    v.checks["one witness per 2-set"] = len(res.witnesses) == binomial(n, 2)
    return v


def matching_candidate(p: ClosedPair, cands: list[Candidate]) -> Candidate | None:
    n, k, l = p.params.n, p.params.k, p.params.l
    for c in cands:
        cA, cB = build(c.spec_A), build(c.spec_B)
        if same_shape(p.A, p.B, cA, cB):
            return c
        if k == l and same_shape(p.B, p.A, cA, cB):
            return c
    return None


def verify_theorem51(n: int, k: int, l: int, *, jobs: int = 1, force: bool = False,
                     max_level: int = DEFAULT_MAX_LEVEL) -> tuple[Verdict, HFormulaDiagnostic]:
    _check_threshold(n, k, l, force)
    params = CrossParams(n, k, l, 2)
    # shapes are checked up to relabelling, so pairs anchored at [k] suffice
    res = max_product(SearchConfig(params, nontrivial_only=True, use_symmetry_reduction=True,
                                   jobs=jobs, max_level=max_level))
    expected, winners = best_candidates(n, k, l)
    v = Verdict("5.1", n, k, l, expected, res)
    for c in nontrivial_candidates(n, k, l):
        v.notes.append(f"candidate {c.name}: {len(build(c.spec_A))} x {len(build(c.spec_B))} "
                       f"= {c.product}")
    v.bad_witnesses = [p for p in res.witnesses if matching_candidate(p, winners) is None]
    v.checks["nontrivial max equals the best candidate product"] = res.max_product == expected
    v.checks["every witness has a candidate shape"] = bool(res.witnesses) and not v.bad_witnesses
    diag = h_formula_diagnostic(n, k, l, 3)
    v.notes.extend(diag.lines())
    return v, diag
