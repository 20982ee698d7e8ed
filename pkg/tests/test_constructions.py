import pytest

from crossint.constructions import (
    FamilySpec,
    best_candidates,
    build,
    displayed_h,
    h_formula_diagnostic,
    nontrivial_candidates,
    product_f,
    product_h,
    same_shape,
    size_formula,
    size_I,
)
from crossint.core import DomainError, UniformFamily, common_core_mask
from crossint.relation import is_cross_t

from oracles import comb_oracle, level


def oracle_members(spec):
    """Membership straight from the definitions, over frozensets."""
    n, k, s = spec.n, spec.k, spec.s
    head = set(range(1, s + 1))
    out = []
    for A in level(n, k):
        if spec.kind == "star":
            ok = set(spec.T) <= A
        elif spec.kind == "frankl":
            ok = len(A & set(range(1, spec.t + 2 * spec.r + 1))) >= spec.t + spec.r
        elif spec.kind == "A":
            ok = head <= A
        elif spec.kind == "B":
            ok = len(A & head) >= 2
        elif spec.kind == "H":
            ok = {1, 2} <= A or len(A & head) >= s - 1
        else:
            ok = {1, 2} <= A and len(A & head) >= 3
        if ok:
            out.append(sorted(A))
    return out


@pytest.mark.parametrize("spec,size", [
    (FamilySpec("star", 10, 4), 28),
    (FamilySpec("frankl", 10, 4, r=1), 25),
    (FamilySpec("H", 8, 4, s=3), 35),
    (FamilySpec("star", 11, 3), 9),
    (FamilySpec("I", 11, 3, s=3), 1),
])
def test_size_examples(spec, size):
    assert size_formula(spec) == size == len(build(spec))


def test_I_is_single_set():
    assert build(FamilySpec("I", 11, 3, s=3)).as_lists() == [[1, 2, 3]]
    assert size_I(11, 3, 3) == comb_oracle(9, 1) - comb_oracle(8, 1)


def test_products():
    assert product_h(11, 3, 3, 3) == size_formula(FamilySpec("B", 11, 3, s=3)) * 1
    assert product_f(11, 3, 3, 0) == 81
    assert product_f(10, 4, 4, 1) == 625
    assert product_f(12, 3, 4, 1) == len(build(FamilySpec("frankl", 12, 3, r=1))) * len(
        build(FamilySpec("frankl", 12, 4, r=1)))
    assert product_h(20, 5, 6, 3) == size_formula(FamilySpec("H", 20, 5, s=3)) * size_formula(
        FamilySpec("I", 20, 6, s=3))


def test_spec_validation():
    with pytest.raises(DomainError):
        FamilySpec("star", 5, 3, T=(2, 2))
    with pytest.raises(DomainError):
        FamilySpec("H", 5, 3, s=2)
    with pytest.raises(DomainError):
        FamilySpec("frankl", 5, 3, r=2)
    with pytest.raises(DomainError):
        FamilySpec("nope", 5, 3)


@pytest.mark.parametrize("n", range(4, 11))
def test_build_matches_definition(n):
    for k in range(2, min(n, 5) + 1):
        specs = [FamilySpec("star", n, k, T=(2, n))]
        specs += [FamilySpec("frankl", n, k, r=r) for r in range(0, (n - 2) // 2 + 1)]
        specs += [FamilySpec(kind, n, k, s=s) for kind in "ABHI" for s in range(3, n + 1)]
        for spec in specs:
            assert build(spec).as_lists() == sorted(oracle_members(spec), key=lambda s: sum(1 << (e - 1) for e in s))


def test_h_diagnostic_flags_unbound_coefficient():
    d = h_formula_diagnostic(14, 3, 4, 3)
    assert not d.consistent
    assert "2" in d.matching
    assert any("INCONSISTENT" in line for line in d.lines())
    d = h_formula_diagnostic(20, 5, 6, 4)
    assert d.tried["2"] == d.exact == displayed_h(20, 5, 6, 4, 2)
    assert not d.consistent


@pytest.mark.parametrize("n,k,l", [(12, 3, 3), (12, 3, 4), (11, 4, 3), (12, 4, 4)])
def test_candidates_are_nontrivial_cross(n, k, l):
    for c in nontrivial_candidates(n, k, l):
        A, B = build(c.spec_A), build(c.spec_B)
        assert is_cross_t(A, B, 2), c.name
        assert common_core_mask(list(A.sets) + list(B.sets), n).bit_count() < 2, c.name


def test_best_candidates_hand_values():
    assert best_candidates(12, 3, 3)[0] == 28
    best, winners = best_candidates(14, 3, 4)
    assert best == 374 and [c.name for c in winners] == ["h(s=3)"]


def test_same_shape_relabelled():
    spec_A, spec_B = FamilySpec("H", 9, 3, s=3), FamilySpec("I", 9, 4, s=3)
    A, B = build(spec_A), build(spec_B)
    perm = {1: 5, 2: 9, 3: 1, 4: 2, 5: 3, 6: 4, 7: 6, 8: 7, 9: 8}
    relabel = lambda F: UniformFamily.from_sets(F.n, F.k, [[perm[e] for e in s] for s in F.as_lists()])
    assert same_shape(relabel(A), relabel(B), A, B)
    F3 = build(FamilySpec("frankl", 9, 3, r=1))
    F4 = build(FamilySpec("frankl", 9, 4, r=1))
    assert not same_shape(F3, F4, A, B)
