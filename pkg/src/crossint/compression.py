"""The shift operator s_ij and left-compression."""

from __future__ import annotations

from .core import DomainError, Subset, UniformFamily


def _check_shift(i: int, j: int, n: int) -> None:
    if not 1 <= i < j <= n:
        raise DomainError(f"shift index needs 1 <= i < j <= n, got i={i} j={j} n={n}")


def _shift_mask(a: int, i: int, j: int, present: frozenset[int] | set[int]) -> int:
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    if a & bj and not a & bi:
        moved = a ^ bj ^ bi
        if moved not in present:
            return moved
    return a


def shift_set(A: Subset, i: int, j: int, context: UniformFamily) -> Subset:
    """s_ij applied to one member of ``context``."""
    _check_shift(i, j, context.n)
    if A.n != context.n or A.bits not in context:
        raise DomainError(f"{A} is not a member of the context family")
    return Subset(_shift_mask(A.bits, i, j, context.maskset), A.n)


def shift_family(F: UniformFamily, i: int, j: int) -> UniformFamily:
    _check_shift(i, j, F.n)
    present = F.maskset
    return UniformFamily.from_masks(F.n, F.k, (_shift_mask(a, i, j, present) for a in F.sets))


def shift_pairs(n: int):
    """Shift indices in sweep order: i ascending, then j."""
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            yield i, j


def is_left_compressed(F: UniformFamily) -> bool:
    present = F.maskset
    # s_ij(F) = F iff every movable member's image is already present
    for a in F.sets:
        for i, j in shift_pairs(F.n):
            bi, bj = 1 << (i - 1), 1 << (j - 1)
            if a & bj and not a & bi and (a ^ bj ^ bi) not in present:
                return False
    return True


def potential(F: UniformFamily) -> int:
    """Sum of all elements over all members; strictly drops on a real shift."""
    return sum(sum(e for e in range(1, F.n + 1) if m >> (e - 1) & 1) for m in F.sets)


def compress_family(F: UniformFamily) -> UniformFamily:
    while True:
        for i, j in shift_pairs(F.n):
            G = shift_family(F, i, j)
            if G != F:
                F = G
                break
        else:
            return F


def compress_pair(A: UniformFamily, B: UniformFamily) -> tuple[UniformFamily, UniformFamily]:
    """Apply the same s_ij to both families until neither moves.

    Sweeps (i, j) lexicographically and restarts after any change.
    """
    if A.n != B.n:
        raise DomainError(f"ground sizes differ: {A.n} vs {B.n}")
    while True:
        for i, j in shift_pairs(A.n):
            A2, B2 = shift_family(A, i, j), shift_family(B, i, j)
            if A2 != A or B2 != B:
                A, B = A2, B2
                break
        else:
            return A, B
