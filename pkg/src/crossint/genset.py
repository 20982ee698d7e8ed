"""Generating sets of uniform families.

For a k-family A the canonical generating upset is
``U(A) = {E : every k-superset of E lies in A}``; its minimal elements form an
antichain whose D-blocks partition A when A is left-compressed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .core import (
    DomainError,
    Subset,
    UniformFamily,
    binomial,
    elements_of,
    full_mask,
    level_masks,
    top_element,
)
from .relation import is_cross_t


@dataclass(frozen=True)
class GeneratorAntichain:
    n: int
    k: int
    gens: tuple[int, ...]
    source: UniformFamily

    def __len__(self) -> int:
        return len(self.gens)

    def as_lists(self) -> list[list[int]]:
        return [elements_of(g) for g in self.gens]


@dataclass(frozen=True)
class SliceView:
    s_plus: int
    slices: dict[int, tuple[int, ...]]

    def get(self, i: int) -> tuple[int, ...]:
        return self.slices.get(i, ())


def _gen_key(m: int) -> tuple[int, int]:
    return (m.bit_count(), m)


def _submasks(m: int):
    sub = m
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & m


def canonical_generators(A: UniformFamily) -> GeneratorAntichain:
    """Minimal elements of the maximal generating upset of A."""
    if not len(A):
        raise DomainError("canonical_generators needs a nonempty family")
    n, k = A.n, A.k
    ground = full_mask(n)
    by_size: dict[int, set[int]] = {}
    for a in A.sets:
        for sub in _submasks(a):
            by_size.setdefault(sub.bit_count(), set()).add(sub)
    # E (|E| < k) is in U(A) iff E + x is in U(A) for every x outside E;
    # candidates not contained in a member of A can never qualify.
    in_upset: dict[int, set[int]] = {k: set(A.sets)}
    for size in range(k - 1, -1, -1):
        above = in_upset[size + 1]
        good = set()
        for e in by_size.get(size, ()):
            rest = ground & ~e
            ok = bool(rest)
            while rest:
                low = rest & -rest
                if e | low not in above:
                    ok = False
                    break
                rest ^= low
            if ok:
                good.add(e)
        in_upset[size] = good
    gens = []
    for size in range(0, k + 1):
        for e in in_upset[size]:
            # minimal iff no (size - 1)-subset lies in the upset
            if size == 0 or not any(e & ~(1 << (x - 1)) in in_upset[size - 1] for x in elements_of(e)):
                gens.append(e)
    gens.sort(key=_gen_key)
    return GeneratorAntichain(n, k, tuple(gens), A)


def expand_generators(gens: Sequence[int], n: int, k: int) -> UniformFamily:
    """The k-level of the upset generated by ``gens``."""
    return UniformFamily.from_masks(
        n, k, (m for m in level_masks(n, k) if any(m & g == g for g in gens))
    )


def is_antichain(gens: Sequence[int]) -> bool:
    return not any(a != b and a & b == a for a in gens for b in gens)


def s_plus(E: Subset | GeneratorAntichain | int | Sequence[int]) -> int:
    """Largest element of a set, or the max over a collection of sets."""
    if isinstance(E, Subset):
        masks: Sequence[int] = (E.bits,)
    elif isinstance(E, GeneratorAntichain):
        masks = E.gens
    elif isinstance(E, int):
        masks = (E,)
    else:
        masks = tuple(E)
    if not masks or not any(masks):
        raise DomainError("s_plus of an empty set")
    return max(top_element(m) for m in masks)


def slice_view(g: GeneratorAntichain, s: int | None = None, t: int = 1) -> SliceView:
    """Generators containing s (default s+ of g), grouped by size t..s."""
    if s is None:
        s = s_plus(g)
    bit = 1 << (s - 1)
    slices: dict[int, list[int]] = {}
    for E in g.gens:
        if E & bit and t <= E.bit_count() <= s:
            slices.setdefault(E.bit_count(), []).append(E)
    return SliceView(s, {i: tuple(sorted(v)) for i, v in sorted(slices.items())})


def expand_D(E: int | Subset, n: int, k: int) -> UniformFamily:
    """k-sets whose trace on [s+(E)] is exactly E."""
    e = E.bits if isinstance(E, Subset) else E
    if e.bit_count() > k:
        raise DomainError(f"|E|={e.bit_count()} exceeds k={k}")
    top = top_element(e)
    if top > n:
        raise DomainError(f"s+(E)={top} exceeds n={n}")
    rest = [1 << x for x in range(top, n)]
    r = k - e.bit_count()
    return UniformFamily.from_masks(n, k, (e | sum(c) for c in combinations(rest, r)))


def d_block_size(E: int, n: int, k: int) -> int:
    return binomial(n - top_element(E), k - E.bit_count())


def verify_decomposition(A: UniformFamily, g: GeneratorAntichain) -> bool:
    """D(E) blocks over the generators are disjoint and cover A exactly."""
    seen: set[int] = set()
    for E in g.gens:
        block = expand_D(E, A.n, A.k).sets
        for b in block:
            if b in seen:
                return False
            seen.add(b)
    return seen == set(A.sets)


def _union_D(masks: Sequence[int], n: int, k: int) -> set[int]:
    out: set[int] = set()
    for E in masks:
        out.update(expand_D(E, n, k).sets)
    return out


@dataclass(frozen=True)
class PushResult:
    A1: UniformFamily
    B1: UniformFamily
    size_A1: int
    size_B1: int
    s: int
    slice_A: tuple[int, ...]
    slice_B: tuple[int, ...]

    @property
    def sizes_match(self) -> bool:
        return len(self.A1) == self.size_A1 and len(self.B1) == self.size_B1


def push_transforms(A: UniformFamily, B: UniformFamily, i: int, t: int) -> PushResult:
    """Grow A by the primed i-slice, shrink B by its (s+t-i)-slice.

    ``A1 = A | D(g*_i(A)')`` and ``B1 = B - D(g*_{s+t-i}(B))`` with s the larger
    of the two top elements.  Sizes are returned from the closed formulas;
    the families themselves are built by enumeration.
    """
    if A.n != B.n:
        raise DomainError("ground sizes differ")
    n, k, l = A.n, A.k, B.k
    gA, gB = canonical_generators(A), canonical_generators(B)
    s = max(s_plus(gA), s_plus(gB))
    slice_A = slice_view(gA, s).get(i)
    if not slice_A:
        raise DomainError(f"g*_{i}(A) is empty; push transform undefined")
    slice_B = slice_view(gB, s).get(s + t - i)
    drop = 1 << (s - 1)
    primed = sorted({E & ~drop for E in slice_A})
    A1 = UniformFamily.from_masks(n, k, set(A.sets) | _union_D(primed, n, k))
    B1 = UniformFamily.from_masks(n, l, set(B.sets) - _union_D(slice_B, n, l))
    size_A1 = len(A) + len(slice_A) * binomial(n - s, k - i + 1)
    size_B1 = len(B) - len(slice_B) * binomial(n - s, l + i - s - t)
    return PushResult(A1, B1, size_A1, size_B1, s, slice_A, slice_B)


def push_preserves_cross(res: PushResult, t: int) -> bool:
    return is_cross_t(res.A1, res.B1, t)


def slice_duality(A: UniformFamily, B: UniformFamily, t: int) -> list[int]:
    """Sizes i in [t, k] where g*_i(A) is nonempty but g*_{s+t-i}(B) is empty.

    An empty list means the duality holds on this pair.
    """
    gA, gB = canonical_generators(A), canonical_generators(B)
    s = max(s_plus(gA), s_plus(gB))
    vA, vB = slice_view(gA, s), slice_view(gB, s)
    return [i for i in range(t, A.k + 1) if vA.get(i) and not vB.get(s + t - i)]


def upper_shadow(gslice: Sequence[int], ground: int) -> set[int]:
    """Sets one element larger, inside [ground], containing a member of gslice."""
    out = set()
    for e in gslice:
        for x in range(ground):
            bit = 1 << x
            if not e & bit:
                out.add(e | bit)
    return out


def sperner_shadow_ratio(gslice: Sequence[int], s: int, i: int) -> Fraction:
    """|upper shadow of gslice in binom([s-1], i)| / |gslice|.

    Raises if the local LYM bound C(s-1, i)/C(s-1, i-1) is violated.
    """
    if not gslice:
        raise DomainError("empty slice")
    limit = full_mask(s - 1)
    for e in gslice:
        if e & ~limit or e.bit_count() != i - 1:
            raise DomainError(f"{elements_of(e)} is not an ({i - 1})-subset of [{s - 1}]")
    ratio = Fraction(len(upper_shadow(set(gslice), s - 1)), len(set(gslice)))
    bound = Fraction(binomial(s - 1, i), binomial(s - 1, i - 1))
    if ratio < bound:
        raise AssertionError(f"shadow ratio {ratio} below {bound}")
    return ratio
