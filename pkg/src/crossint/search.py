"""Exact maximum of |A||B| over cross-t-intersecting pairs.

Maximal cross-t-intersecting pairs are the formal concepts of the relation
``|X & Y| >= t`` between the k-level and the l-level, so the maximum product
is a maximum edge biclique and is attained at a concept.  Concepts are
enumerated with Close-by-One over integer bitsets; a depth-first order that
takes children with larger generator index first emits extents in lectic
order.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .core import DomainError, binomial, common_core_mask, full_mask, level_masks
from .relation import ClosedPair, Context, CrossParams, get_context

DEFAULT_MAX_LEVEL = 2000


class ScaleGuardError(DomainError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    """Search options.

    ``product_floor`` must be a product some admissible pair attains; nodes
    whose bound falls below it are skipped, so an unattainable floor leaves
    no witnesses and a reported maximum of 0.  ``use_symmetry_reduction``
    keeps only pairs whose side on the smaller level set contains the initial
    segment [m] of its uniformity m; every pair is a relabelling of one of
    these, so the maximum is unchanged but witnesses are representatives
    rather than the full list.
    """

    params: CrossParams
    nontrivial_only: bool = False
    use_compression_reduction: bool = False
    use_symmetry_reduction: bool = False
    product_floor: int = 0
    prune: bool = True
    jobs: int = 1
    max_level: int = DEFAULT_MAX_LEVEL

    def __post_init__(self) -> None:
        if self.product_floor < 0:
            raise DomainError("product_floor must be >= 0")
        if self.jobs < 1:
            raise DomainError("jobs must be >= 1")
        if self.nontrivial_only and self.use_compression_reduction:
            raise DomainError("compression reduction does not preserve nontriviality")


@dataclass
class SearchResult:
    max_product: int
    witnesses: list[ClosedPair] = field(default_factory=list)
    explored: int = 0
    pruned: int = 0
    wall_time_ms: int = 0

    def to_json(self, with_timing: bool = True) -> dict:
        out = {
            "max_product": str(self.max_product),
            "witnesses": [[p.A.as_lists(), p.B.as_lists()] for p in self.witnesses],
            "explored": self.explored,
            "pruned": self.pruned,
        }
        if with_timing:
            out["wall_time_ms"] = self.wall_time_ms
        return out


def check_scale(params: CrossParams, max_level: int = DEFAULT_MAX_LEVEL) -> None:
    a, b = binomial(params.n, params.k), binomial(params.n, params.l)
    if a > max_level or b > max_level:
        raise ScaleGuardError(
            f"level sets too large: C({params.n},{params.k})={a}, C({params.n},{params.l})={b}; "
            f"limit is {max_level} per side (raise --max-level to force)"
        )


def _iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _children(ctx: Context, extent: int, intent: int, y: int) -> list[tuple[int, int, int]]:
    """Canonical CbO children of (extent, intent) generated at index y."""
    out = []
    rows = ctx.rows
    for j in range(y + 1, len(ctx.objs)):
        if extent >> j & 1:
            continue
        b2 = intent & rows[j]
        a2 = ctx.alpha_bits(b2)
        if (a2 ^ extent) & ((1 << j) - 1):
            continue
        out.append((a2, b2, j))
    return out


def _root(ctx: Context, universe: int) -> tuple[int, int]:
    extent = ctx.alpha_bits(universe)
    return extent, ctx.beta_bits(extent) & universe


def iter_concept_bits(ctx: Context, universe: int | None = None) -> Iterator[tuple[int, int]]:
    """All (extent, intent) bit pairs of the context, in lectic extent order.

    With ``universe`` the attribute set is restricted to it; the concepts are
    then those of the original context whose intent lies inside ``universe``.
    """
    if universe is None:
        universe = ctx.full_attrs
    extent, intent = _root(ctx, universe)
    stack = [(extent, intent, -1)]
    while stack:
        extent, intent, y = stack.pop()
        yield extent, intent
        # children pushed in ascending j pop largest j first: lectic order
        stack.extend(_children(ctx, extent, intent, y))


def enumerate_concepts(
    params: CrossParams,
    visitor: Callable[[ClosedPair], None] | None = None,
    max_level: int = DEFAULT_MAX_LEVEL,
) -> Iterator[ClosedPair]:
    """Every closed pair exactly once, ordered lectically on the A side."""
    check_scale(params, max_level)
    ctx = get_context(params.n, params.k, params.l, params.t)
    for extent, intent in iter_concept_bits(ctx):
        pair = ClosedPair(params, ctx.objs_family(extent), ctx.attrs_family(intent))
        if visitor is not None:
            visitor(pair)
        yield pair


# --- branch and bound -------------------------------------------------------


def _is_compressed_bits(masks: list[int], n: int) -> bool:
    present = set(masks)
    for a in masks:
        for j in range(1, n):
            if not a >> j & 1:
                continue
            bj = 1 << j
            for i in range(j):
                bi = 1 << i
                if not a & bi and (a ^ bj ^ bi) not in present:
                    return False
    return True


class _Worker:
    """One branch-and-bound run over a set of top-level subtrees."""

    def __init__(self, params: CrossParams, swap: bool, nontrivial: bool, compressed: bool,
                 prune: bool, floor: int, anchored: bool = False):
        self.params = params
        self.swap = swap
        p = params.swapped() if swap else params
        self.ctx = get_context(p.n, p.k, p.l, p.t)
        self.nontrivial = nontrivial
        self.compressed = compressed
        self.anchored = anchored or compressed
        self.prune = prune
        self.best = floor
        self.hits: list[tuple[int, int]] = []
        self.explored = 0
        self.pruned = 0

    def universe(self) -> int:
        ctx = self.ctx
        if not self.anchored:
            return ctx.full_attrs
        # only pairs whose object side contains [k]: a nonempty left-compressed
        # family always does, and any pair can be relabelled so that it does
        return ctx.rows[ctx.obj_index[full_mask(ctx.k)]]

    def feasible(self, extent: int, intent: int) -> bool:
        ctx = self.ctx
        if self.nontrivial:
            masks = [ctx.objs[i] for i in _iter_bits(extent)]
            masks += [ctx.attrs[i] for i in _iter_bits(intent)]
            if common_core_mask(masks, ctx.n).bit_count() >= 2:
                return False
        if self.compressed:
            if not _is_compressed_bits([ctx.objs[i] for i in _iter_bits(extent)], ctx.n):
                return False
            if not _is_compressed_bits([ctx.attrs[i] for i in _iter_bits(intent)], ctx.n):
                return False
        return True

    def visit(self, extent: int, intent: int) -> None:
        self.explored += 1
        prod = extent.bit_count() * intent.bit_count()
        if prod == 0 or prod < self.best:
            return
        if not self.feasible(extent, intent):
            return
        if prod > self.best:
            self.best = prod
            self.hits = []
        self.hits.append((extent, intent))

    def bound(self, extent: int, intent: int, y: int) -> int:
        """Upper bound on |A'||B'| over strict descendants of a node.

        A descendant keeps B' inside ``intent`` and only adds objects x > y,
        each of which must see all of B'; so with d_x = |N(x) & intent| the
        product is at most max_r (|A| + r) * d_(r) over the sorted d.
        """
        ctx = self.ctx
        rows = ctx.rows
        core = 0
        if self.nontrivial:
            # the core only shrinks through added objects, so if it has >= 2
            # points some added x must miss part of it, and B' lies in N(x)
            core = full_mask(ctx.n)
            for i in _iter_bits(extent):
                core &= ctx.objs[i]
            for i in _iter_bits(intent):
                core &= ctx.attrs[i]
            if core.bit_count() < 2:
                core = 0
        degs = []
        cap = 0
        for x in range(y + 1, len(rows)):
            if extent >> x & 1:
                continue
            d = (rows[x] & intent).bit_count()
            if d:
                degs.append(d)
                if core and ctx.objs[x] & core != core and d > cap:
                    cap = d
        if not degs or (core and not cap):
            return 0
        degs.sort(reverse=True)
        a = extent.bit_count()
        if core:
            return max((a + r) * min(d, cap) for r, d in enumerate(degs, start=1))
        return max((a + r) * d for r, d in enumerate(degs, start=1))

    def run_subtree(self, extent: int, intent: int, y: int) -> None:
        stack = [(extent, intent, y)]
        while stack:
            extent, intent, y = stack.pop()
            self.visit(extent, intent)
            if self.prune and self.bound(extent, intent, y) < self.best:
                self.pruned += 1
                continue
            stack.extend(_children(self.ctx, extent, intent, y))


def _run_tasks(args) -> tuple[int, list[tuple[int, int]], int, int]:
    params, swap, nontrivial, compressed, prune, floor, anchored, tasks = args
    w = _Worker(params, swap, nontrivial, compressed, prune, floor, anchored)
    best = floor
    hits: list[tuple[int, int]] = []
    explored = pruned = 0
    # every task starts from the same floor so counters do not depend on --jobs
    for extent, intent, y in tasks:
        w.best, w.hits, w.explored, w.pruned = floor, [], 0, 0
        w.run_subtree(extent, intent, y)
        explored += w.explored
        pruned += w.pruned
        if w.hits:
            if w.best > best:
                best, hits = w.best, list(w.hits)
            elif w.best == best:
                hits.extend(w.hits)
    return best, hits, explored, pruned


def seed_lower_bound(params: CrossParams, nontrivial: bool = False, compressed: bool = False) -> int:
    """Best product over closures of single sets and pairs of sets.

    Cheap and deterministic; used as the common pruning floor for all tasks.
    """
    swap = binomial(params.n, params.l) < binomial(params.n, params.k)
    w = _Worker(params, swap, nontrivial, compressed, False, 0)
    ctx = w.ctx
    m = len(ctx.objs)
    seen: set[int] = set()
    best = 0
    for x in range(m):
        bx = ctx.rows[x]
        for y in range(x, m):
            b = bx & ctx.rows[y]
            if not b or b in seen:
                continue
            seen.add(b)
            a = ctx.alpha_bits(b)
            prod = a.bit_count() * b.bit_count()
            if prod > best and w.feasible(a, b):
                best = prod
    return best


def max_product(cfg: SearchConfig) -> SearchResult:
    params = cfg.params
    check_scale(params, cfg.max_level)
    t0 = time.perf_counter()
    swap = binomial(params.n, params.l) < binomial(params.n, params.k)
    w = _Worker(params, swap, cfg.nontrivial_only, cfg.use_compression_reduction, cfg.prune,
                cfg.product_floor, cfg.use_symmetry_reduction)
    floor = cfg.product_floor
    if cfg.prune:
        floor = max(floor, seed_lower_bound(params, cfg.nontrivial_only,
                                            cfg.use_compression_reduction))

    ctx = w.ctx
    extent, intent = _root(ctx, w.universe())
    w.best = floor
    w.visit(extent, intent)
    explored, pruned = w.explored, 0
    best, hits = w.best, list(w.hits)
    tasks = _children(ctx, extent, intent, -1)
    if cfg.prune and w.bound(extent, intent, -1) < floor:
        tasks, pruned = [], 1

    base = (params, swap, cfg.nontrivial_only, cfg.use_compression_reduction, cfg.prune, floor,
            cfg.use_symmetry_reduction)
    if cfg.jobs == 1 or len(tasks) < 2:
        parts = [_run_tasks(base + (tasks,))]
    else:
        chunks = [tasks[i::cfg.jobs] for i in range(cfg.jobs)]
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            parts = list(ex.map(_run_tasks, [base + (c,) for c in chunks if c]))
    for pb, ph, pe, pp in parts:
        explored += pe
        pruned += pp
        if not ph:
            continue
        if pb > best:
            best, hits = pb, list(ph)
        elif pb == best:
            hits.extend(ph)

    witnesses = sorted({_to_pair(params, ctx, swap, e, i) for e, i in hits},
                       key=lambda p: (p.A.sets, p.B.sets))
    max_prod = witnesses[0].product if witnesses else 0
    elapsed = int((time.perf_counter() - t0) * 1000)
    return SearchResult(max_prod, witnesses, explored, pruned, elapsed)


def _to_pair(params: CrossParams, ctx: Context, swap: bool, extent: int, intent: int) -> ClosedPair:
    objs, attrs = ctx.objs_family(extent), ctx.attrs_family(intent)
    if swap:
        objs, attrs = attrs, objs
    return ClosedPair(params, objs, attrs)
