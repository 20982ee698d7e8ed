"""Ground-set arithmetic: subsets as bitmasks, uniform families, binomials.

Element ``e`` of ``[n] = {1, ..., n}`` lives at bit ``e - 1``. Sorting masks
numerically gives the canonical (colex) order used everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_N = 64


class DomainError(ValueError):
    """Arguments outside an operation's mathematical domain."""


class FamilyParseError(DomainError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


def check_ground(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise DomainError(f"ground size n={n} outside 1..{MAX_N}")


def binomial(n: int, k: int) -> int:
    """C(n, k) with C(n, k) = 0 whenever k < 0 or k > n."""
    if n < 0:
        raise DomainError(f"binomial: negative n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        if e < 1:
            raise DomainError(f"element {e} is not in [n] (1-based)")
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


def full_mask(n: int) -> int:
    return (1 << n) - 1


def top_element(mask: int) -> int:
    """Largest element of a nonempty mask (0 for the empty set)."""
    return mask.bit_length()


@dataclass(frozen=True)
class Subset:
    bits: int
    n: int

    def __post_init__(self) -> None:
        check_ground(self.n)
        if self.bits < 0 or self.bits >> self.n:
            raise DomainError(f"bits {self.bits:#x} exceed ground size {self.n}")

    @classmethod
    def of(cls, elements: Iterable[int], n: int) -> "Subset":
        return cls(mask_of(elements), n)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(elements_of(self.bits))

    def __contains__(self, e: object) -> bool:
        return isinstance(e, int) and 1 <= e <= self.n and bool(self.bits >> (e - 1) & 1)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


@dataclass(frozen=True)
class UniformFamily:
    """A k-uniform family over [n], stored as strictly increasing masks."""

    n: int
    k: int
    sets: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        check_ground(self.n)
        if not 0 <= self.k <= self.n:
            raise DomainError(f"k={self.k} outside 0..{self.n}")
        prev = -1
        limit = 1 << self.n
        for m in self.sets:
            if m <= prev:
                raise DomainError("family masks must be strictly increasing")
            if m >= limit:
                raise DomainError(f"set {elements_of(m)} exceeds ground size {self.n}")
            if m.bit_count() != self.k:
                raise DomainError(f"set {elements_of(m)} is not {self.k}-uniform")
            prev = m

    @classmethod
    def from_masks(cls, n: int, k: int, masks: Iterable[int]) -> "UniformFamily":
        return cls(n, k, tuple(sorted(set(masks))))

    @classmethod
    def from_sets(cls, n: int, k: int, sets: Iterable[Iterable[int]]) -> "UniformFamily":
        return cls.from_masks(n, k, (mask_of(s) for s in sets))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sets)

    def __contains__(self, mask: object) -> bool:
        return mask in self.maskset

    @property
    def maskset(self) -> frozenset[int]:
        # cached lazily on the frozen instance
        try:
            return self.__dict__["_maskset"]
        except KeyError:
            s = frozenset(self.sets)
            object.__setattr__(self, "_maskset", s)
            return s

    def subsets(self) -> list[Subset]:
        return [Subset(m, self.n) for m in self.sets]

    def as_lists(self) -> list[list[int]]:
        return [elements_of(m) for m in self.sets]

    def __str__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.as_lists())
        return f"UniformFamily(n={self.n}, k={self.k}, [{body}])"


@lru_cache(maxsize=256)
def level_masks(n: int, k: int) -> tuple[int, ...]:
    """All k-subsets of [n] as masks, in increasing numeric order."""
    check_ground(n)
    if not 0 <= k <= n:
        raise DomainError(f"k={k} outside 0..{n}")
    masks = [sum(1 << i for i in c) for c in combinations(range(n), k)]
    masks.sort()
    return tuple(masks)


def enumerate_ksubsets(n: int, k: int) -> UniformFamily:
    return UniformFamily(n, k, level_masks(n, k))


def intersection_size(a: Subset, b: Subset) -> int:
    if a.n != b.n:
        raise DomainError(f"ground sizes differ: {a.n} vs {b.n}")
    return (a.bits & b.bits).bit_count()


def common_core(fams: Sequence[UniformFamily]) -> Subset:
    """Intersection of every member of every family."""
    if not fams:
        raise DomainError("common_core needs at least one family")
    n = fams[0].n
    if any(f.n != n for f in fams):
        raise DomainError("families live on different ground sets")
    core = full_mask(n)
    seen = False
    for f in fams:
        for m in f.sets:
            core &= m
            seen = True
    if not seen:
        raise DomainError("common_core of empty families is undefined")
    return Subset(core, n)


def common_core_mask(masks: Iterable[int], n: int) -> int:
    core = full_mask(n)
    for m in masks:
        core &= m
    return core


# --- family text format ---------------------------------------------------


def format_family(fam: UniformFamily) -> str:
    lines = [f"n={fam.n} k={fam.k}"]
    # the empty set (k = 0) would be a blank line, which the parser skips
    lines.extend(",".join(map(str, s)) or "{}" for s in fam.as_lists())
    return "\n".join(lines) + "\n"


def parse_family(text: str) -> UniformFamily:
    header: tuple[int, int] | None = None
    masks: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            header = _parse_header(line, lineno)
            continue
        n, k = header
        if line == "{}":
            if k:
                raise FamilyParseError(f"empty set in a family with k={k}", lineno)
            masks.append(0)
            continue
        try:
            elems = [int(tok) for tok in line.split(",")]
        except ValueError:
            raise FamilyParseError(f"not a comma-separated integer list: {line!r}", lineno) from None
        if elems != sorted(set(elems)):
            raise FamilyParseError("elements must be strictly ascending", lineno)
        if elems and (elems[0] < 1 or elems[-1] > n):
            raise FamilyParseError(f"element outside [1, {n}]", lineno)
        if len(elems) != k:
            raise FamilyParseError(f"set has {len(elems)} elements, expected k={k}", lineno)
        masks.append(mask_of(elems))
    if header is None:
        raise FamilyParseError("missing header line 'n=<n> k=<k>'")
    n, k = header
    return UniformFamily.from_masks(n, k, masks)


def _parse_header(line: str, lineno: int) -> tuple[int, int]:
    fields = {}
    for tok in line.split():
        key, sep, val = tok.partition("=")
        if not sep:
            raise FamilyParseError(f"bad header token {tok!r}", lineno)
        try:
            fields[key] = int(val)
        except ValueError:
            raise FamilyParseError(f"bad header value {tok!r}", lineno) from None
    if set(fields) != {"n", "k"}:
        raise FamilyParseError("header must be exactly 'n=<n> k=<k>'", lineno)
    n, k = fields["n"], fields["k"]
    if not 1 <= n <= MAX_N or not 0 <= k <= n:
        raise FamilyParseError(f"header out of range: n={n} k={k}", lineno)
    return n, k
