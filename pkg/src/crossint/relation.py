"""Cross-t-intersection and the Galois maps between k-families and l-families.

``beta`` sends a k-family to every l-set meeting all its members in at least
t points; ``alpha`` is the dual map.  Closed pairs (A, B) with A = alpha(B)
and B = beta(A) are exactly the maximal cross-t-intersecting pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    DomainError,
    UniformFamily,
    check_ground,
    common_core,
    level_masks,
)


@dataclass(frozen=True)
class CrossParams:
    n: int
    k: int
    l: int
    t: int

    def __post_init__(self) -> None:
        check_ground(self.n)
        if self.t < 1:
            raise DomainError(f"t={self.t} must be >= 1")
        if not self.t <= min(self.k, self.l) <= max(self.k, self.l) <= self.n:
            raise DomainError(
                f"need t <= min(k, l) <= max(k, l) <= n, got n={self.n} k={self.k} l={self.l} t={self.t}"
            )

    def swapped(self) -> "CrossParams":
        return CrossParams(self.n, self.l, self.k, self.t)


@dataclass(frozen=True)
class ClosedPair:
    params: CrossParams
    A: UniformFamily
    B: UniformFamily

    @property
    def product(self) -> int:
        return len(self.A) * len(self.B)


class Context:
    """Bitset form of the relation |X & Y| >= t between two levels.

    ``rows[x]`` is the set of l-level indices related to k-level index x and
    ``cols[y]`` the set of k-level indices related to l-level index y.
    """

    def __init__(self, n: int, k: int, l: int, t: int):
        self.n, self.k, self.l, self.t = n, k, l, t
        self.objs = level_masks(n, k)
        self.attrs = level_masks(n, l)
        self.obj_index = {m: i for i, m in enumerate(self.objs)}
        self.attr_index = {m: i for i, m in enumerate(self.attrs)}
        self.full_objs = (1 << len(self.objs)) - 1
        self.full_attrs = (1 << len(self.attrs)) - 1
        rows = [0] * len(self.objs)
        cols = [0] * len(self.attrs)
        for i, a in enumerate(self.objs):
            r = 0
            for j, b in enumerate(self.attrs):
                if (a & b).bit_count() >= t:
                    r |= 1 << j
                    cols[j] |= 1 << i
            rows[i] = r
        self.rows = tuple(rows)
        self.cols = tuple(cols)

    def beta_bits(self, objset: int) -> int:
        out = self.full_attrs
        rows = self.rows
        while objset and out:
            low = objset & -objset
            out &= rows[low.bit_length() - 1]
            objset ^= low
        return out

    def alpha_bits(self, attrset: int) -> int:
        out = self.full_objs
        cols = self.cols
        while attrset and out:
            low = attrset & -attrset
            out &= cols[low.bit_length() - 1]
            attrset ^= low
        return out

    def objs_to_bits(self, fam: UniformFamily) -> int:
        idx = self.obj_index
        return sum(1 << idx[m] for m in fam.sets)

    def attrs_to_bits(self, fam: UniformFamily) -> int:
        idx = self.attr_index
        return sum(1 << idx[m] for m in fam.sets)

    def objs_family(self, bits: int) -> UniformFamily:
        return UniformFamily(self.n, self.k, _pick(self.objs, bits))

    def attrs_family(self, bits: int) -> UniformFamily:
        return UniformFamily(self.n, self.l, _pick(self.attrs, bits))


def _pick(level: tuple[int, ...], bits: int) -> tuple[int, ...]:
    # level is sorted, so ascending indices give ascending masks
    out = []
    while bits:
        low = bits & -bits
        out.append(level[low.bit_length() - 1])
        bits ^= low
    return tuple(out)


@lru_cache(maxsize=64)
def get_context(n: int, k: int, l: int, t: int) -> Context:
    return Context(n, k, l, t)


def is_cross_t(A: UniformFamily, B: UniformFamily, t: int) -> bool:
    if t < 0:
        raise DomainError(f"t={t} must be nonnegative")
    if A.n != B.n:
        raise DomainError(f"ground sizes differ: {A.n} vs {B.n}")
    return all((a & b).bit_count() >= t for a in A.sets for b in B.sets)


def beta(A: UniformFamily, l: int, t: int) -> UniformFamily:
    """All l-sets meeting every member of A in at least t points."""
    ctx = get_context(A.n, A.k, l, t)
    return ctx.attrs_family(ctx.beta_bits(ctx.objs_to_bits(A)))


def alpha(B: UniformFamily, k: int, t: int) -> UniformFamily:
    """All k-sets meeting every member of B in at least t points."""
    ctx = get_context(B.n, k, B.k, t)
    return ctx.objs_family(ctx.alpha_bits(ctx.attrs_to_bits(B)))


def close_pair(A0: UniformFamily, params: CrossParams) -> ClosedPair:
    if A0.n != params.n or A0.k != params.k:
        raise DomainError("seed family does not match params (n, k)")
    B = beta(A0, params.l, params.t)
    A = alpha(B, params.k, params.t)
    return ClosedPair(params, A, B)


def is_closed(A: UniformFamily, B: UniformFamily, t: int) -> bool:
    return beta(A, B.k, t) == B and alpha(B, A.k, t) == A


def is_trivial_pair(p: ClosedPair) -> bool:
    """True when all members of both sides share at least 2 elements."""
    if not len(p.A) or not len(p.B):
        raise DomainError("is_trivial_pair needs both sides nonempty")
    return len(common_core([p.A, p.B])) >= 2
