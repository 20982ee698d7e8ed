import json

import pytest

from crossint.constructions import FamilySpec, best_candidates, build
from crossint.core import binomial
from crossint.relation import CrossParams, alpha, beta, is_cross_t
from crossint.search import (
    ScaleGuardError,
    SearchConfig,
    enumerate_concepts,
    iter_concept_bits,
    max_product,
)
from crossint.relation import get_context

from oracles import concepts_by_closure, small_instances


def run(n, k, l, t=2, **kw):
    return max_product(SearchConfig(CrossParams(n, k, l, t), **kw))


def test_diagonal_relation():
    pairs = list(enumerate_concepts(CrossParams(4, 2, 2, 2)))
    singles = [p for p in pairs if len(p.A) == 1]
    assert len(singles) == 6 and all(p.A == p.B for p in singles)
    assert run(4, 2, 2).max_product == 1


def test_contains_closed_example():
    pairs = list(enumerate_concepts(CrossParams(5, 3, 3, 2)))
    hit = [p for p in pairs if p.A.as_lists() == [[1, 2, 3]]]
    assert len(hit) == 1 and len(hit[0].B) == 7


def test_cross_intersecting_small():
    assert run(4, 2, 2, t=1).max_product == 9


def test_concept_soundness_and_order():
    params = CrossParams(6, 2, 3, 2)
    seen = []
    for p in enumerate_concepts(params):
        assert beta(p.A, 3, 2) == p.B and alpha(p.B, 2, 2) == p.A
        assert is_cross_t(p.A, p.B, 2)
        seen.append(p.A.sets)
    assert len(set(seen)) == len(seen)


def test_lectic_order():
    ctx = get_context(5, 2, 2, 1)
    extents = [e for e, _ in iter_concept_bits(ctx)]
    m = len(ctx.objs)

    def key(e):
        # lectic: compare characteristic vectors at the smallest differing index
        return [(e >> j) & 1 for j in range(m)]

    assert extents == sorted(extents, key=key)


def test_theorem_example_11_2_3():
    res = run(11, 2, 3)
    assert res.max_product == 9 and len(res.witnesses) == 55
    for w in res.witnesses:
        (T,) = w.A.sets
        assert all(b & T == T for b in w.B.sets) and len(w.B) == 9


def test_below_threshold_against_candidates():
    res = run(9, 3, 3)
    star = binomial(7, 1) ** 2
    lower = max(star, best_candidates(9, 3, 3)[0])
    assert res.max_product >= lower
    assert all(w.product == res.max_product for w in res.witnesses)


@pytest.mark.parametrize("n,k,l,t", [x for x in small_instances(15) if x[0] >= 3])
def test_pruning_and_reductions(n, k, l, t):
    base = run(n, k, l, t, prune=False)
    pruned = run(n, k, l, t)
    assert pruned.max_product == base.max_product
    assert {(w.A, w.B) for w in pruned.witnesses} == {(w.A, w.B) for w in base.witnesses}
    assert run(n, k, l, t, use_compression_reduction=True).max_product == base.max_product
    assert run(n, k, l, t, use_symmetry_reduction=True).max_product == base.max_product


def test_concepts_match_closure_oracle_small():
    for n, k, l, t in small_instances(10):
        ctx = get_context(n, k, l, t)
        got = set(iter_concept_bits(ctx))
        assert got == concepts_by_closure(n, k, l, t), (n, k, l, t)


def test_nontrivial_excludes_stars():
    res = run(12, 3, 3, nontrivial_only=True, use_symmetry_reduction=True)
    assert res.max_product == 28
    for w in res.witnesses:
        core = 0xFFF
        for m in w.A.sets + w.B.sets:
            core &= m
        assert core.bit_count() < 2


def test_nontrivial_symmetry_agrees_with_full():
    full = run(10, 3, 3, nontrivial_only=True)
    sym = run(10, 3, 3, nontrivial_only=True, use_symmetry_reduction=True)
    assert full.max_product == sym.max_product
    assert set((w.A, w.B) for w in sym.witnesses) <= set((w.A, w.B) for w in full.witnesses)


def test_jobs_do_not_change_output():
    a = run(11, 2, 3).to_json(with_timing=False)
    b = run(11, 2, 3, jobs=3).to_json(with_timing=False)
    assert json.dumps(a) == json.dumps(b)


def test_scale_guard():
    with pytest.raises(ScaleGuardError, match="C\\(20,5\\)"):
        run(20, 5, 5)
    with pytest.raises(ScaleGuardError):
        list(enumerate_concepts(CrossParams(20, 5, 5, 2)))


def test_floor_above_optimum_finds_nothing():
    # the floor is a promise that some pair reaches it; a false promise prunes everything
    res = run(5, 2, 3, t=2, product_floor=10 ** 6)
    assert res.max_product == 0 and res.witnesses == []


def test_json_shape():
    out = run(7, 2, 2).to_json()
    assert out["max_product"] == "1"
    assert set(out) == {"max_product", "witnesses", "explored", "pruned", "wall_time_ms"}
    assert out["witnesses"][0] == [[[1, 2]], [[1, 2]]]
