import pytest
from hypothesis import given, strategies as st

from crossint.compression import (
    compress_family,
    compress_pair,
    is_left_compressed,
    potential,
    shift_family,
    shift_pairs,
    shift_set,
)
from crossint.constructions import FamilySpec, build
from crossint.core import DomainError, Subset, UniformFamily, enumerate_ksubsets
from crossint.relation import beta, is_cross_t

from oracles import shift_oracle


def fam(n, k, sets):
    return UniformFamily.from_sets(n, k, sets)


def test_shift_set_examples():
    assert list(shift_set(Subset.of([2, 3], 3), 1, 2, fam(3, 2, [[2, 3]]))) == [1, 3]
    assert list(shift_set(Subset.of([2, 3], 3), 1, 2, fam(3, 2, [[1, 3], [2, 3]]))) == [2, 3]
    assert list(shift_set(Subset.of([1, 3], 3), 1, 2, fam(3, 2, [[1, 3]]))) == [1, 3]
    with pytest.raises(DomainError):
        shift_set(Subset.of([1, 2], 3), 1, 2, fam(3, 2, [[1, 3]]))


def test_shift_family_examples():
    F = fam(3, 2, [[2, 3], [1, 3]])
    assert shift_family(F, 1, 2) == F
    assert shift_family(fam(3, 2, [[2, 3]]), 1, 3).as_lists() == [[1, 2]]
    star = build(FamilySpec("star", 6, 3))
    for i, j in shift_pairs(6):
        assert len(shift_family(star, i, j)) == len(star)
        if i >= 3:
            assert shift_family(star, i, j) == star


def test_left_compressed_examples():
    assert is_left_compressed(build(FamilySpec("star", 6, 3)))
    assert not is_left_compressed(fam(3, 2, [[2, 3]]))
    assert is_left_compressed(build(FamilySpec("frankl", 8, 4, r=1)))


def test_compress_pair_examples():
    A, B = compress_pair(fam(4, 2, [[2, 3]]), fam(4, 3, [[2, 3, 4]]))
    assert A.as_lists() == [[1, 2]] and B.as_lists() == [[1, 2, 3]]
    s3, s4 = build(FamilySpec("star", 7, 3)), build(FamilySpec("star", 7, 4))
    assert compress_pair(s3, s4) == (s3, s4)
    B = fam(5, 3, [[3, 4, 5]])
    assert compress_pair(UniformFamily(5, 2, ()), B) == (UniformFamily(5, 2, ()), compress_family(B))


@st.composite
def cross_pair(draw):
    n = draw(st.integers(3, 9))
    k = draw(st.integers(2, min(4, n)))
    l = draw(st.integers(2, min(4, n)))
    t = draw(st.integers(1, 2))
    A = UniformFamily.from_masks(n, k, draw(st.sets(st.sampled_from(enumerate_ksubsets(n, k).sets),
                                                     min_size=1, max_size=5)))
    B = beta(A, l, t)
    return n, t, A, B


@given(cross_pair(), st.data())
def test_shift_preserves_size_and_cross(args, data):
    n, t, A, B = args
    i, j = data.draw(st.sampled_from(list(shift_pairs(n))))
    A1, B1 = shift_family(A, i, j), shift_family(B, i, j)
    assert len(A1) == len(A) and len(B1) == len(B)
    assert {frozenset(s) for s in A1.as_lists()} == shift_oracle(
        {frozenset(s) for s in A.as_lists()}, i, j)
    assert is_cross_t(A1, B1, t)
    if A1 != A:
        assert potential(A1) < potential(A)


@given(cross_pair())
def test_compress_pair_fixpoint(args):
    n, t, A, B = args
    A1, B1 = compress_pair(A, B)
    assert is_left_compressed(A1) and is_left_compressed(B1)
    assert len(A1) == len(A) and len(B1) == len(B)
    assert is_cross_t(A1, B1, t)
