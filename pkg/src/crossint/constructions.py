"""Named extremal families for cross-2-intersection and their exact sizes.

Kinds (all k-uniform on [n]):

- ``star``: members containing a fixed 2-set T
- ``frankl``: members meeting [t + 2r] in at least t + r points
- ``A``: members containing [s]
- ``B``: members meeting [s] in at least 2 points
- ``H``: members containing [2], or meeting [s] in at least s - 1 points
- ``I``: members containing [2] and meeting [s] in at least 3 points
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable

from .core import (
    DomainError,
    UniformFamily,
    binomial,
    check_ground,
    full_mask,
    level_masks,
    mask_of,
)

KINDS = ("star", "frankl", "A", "B", "H", "I")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    k: int
    T: tuple[int, int] = (1, 2)
    t: int = 2
    r: int = 0
    s: int = 3

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise DomainError(f"unknown family kind {self.kind!r}; choose from {KINDS}")
        if self.n < 1 or not 0 <= self.k <= self.n:
            raise DomainError(f"need 0 <= k <= n, got n={self.n} k={self.k}")
        if self.kind == "star":
            a, b = self.T
            if not 1 <= a < b <= self.n:
                raise DomainError(f"star needs a 2-set T inside [n], got {self.T}")
        elif self.kind == "frankl":
            if self.r < 0 or self.t < 1 or self.t + 2 * self.r > self.n:
                raise DomainError(f"frankl needs r >= 0, t >= 1, t + 2r <= n (t={self.t}, r={self.r})")
        elif not 3 <= self.s <= self.n:
            raise DomainError(f"{self.kind} needs 3 <= s <= n, got s={self.s}")


def predicate(spec: FamilySpec) -> Callable[[int], bool]:
    """Membership test on masks."""
    kind, s = spec.kind, spec.s
    head2 = full_mask(2)
    if kind == "star":
        T = mask_of(spec.T)
        return lambda m: m & T == T
    if kind == "frankl":
        head, need = full_mask(spec.t + 2 * spec.r), spec.t + spec.r
        return lambda m: (m & head).bit_count() >= need
    head = full_mask(s)
    if kind == "A":
        return lambda m: m & head == head
    if kind == "B":
        return lambda m: (m & head).bit_count() >= 2
    if kind == "H":
        return lambda m: m & head2 == head2 or (m & head).bit_count() >= s - 1
    return lambda m: m & head2 == head2 and (m & head).bit_count() >= 3


def build(spec: FamilySpec) -> UniformFamily:
    check_ground(spec.n)
    keep = predicate(spec)
    return UniformFamily(spec.n, spec.k, tuple(m for m in level_masks(spec.n, spec.k) if keep(m)))


def size_formula(spec: FamilySpec) -> int:
    n, k, s = spec.n, spec.k, spec.s
    if spec.kind == "star":
        return binomial(n - 2, k - 2)
    if spec.kind == "frankl":
        w = spec.t + 2 * spec.r
        return sum(binomial(w, j) * binomial(n - w, k - j) for j in range(spec.t + spec.r, min(k, w) + 1))
    if spec.kind == "A":
        return binomial(n - s, k - s)
    if spec.kind == "B":
        return sum(binomial(s, j) * binomial(n - s, k - j) for j in range(2, min(k, s) + 1))
    if spec.kind == "H":
        # star over [2], plus the sets missing exactly one of 1, 2 but all of [3..s]
        return binomial(n - 2, k - 2) + 2 * binomial(n - s, k - s + 1)
    # I: contain [2], minus those with no further point of [s]
    return binomial(n - 2, k - 2) - binomial(n - s, k - 2)


def size_H(n: int, k: int, s: int) -> int:
    return size_formula(FamilySpec("H", n, k, s=s))


def size_I(n: int, l: int, s: int) -> int:
    return size_formula(FamilySpec("I", n, l, s=s))


def size_frankl(n: int, k: int, r: int, t: int = 2) -> int:
    return size_formula(FamilySpec("frankl", n, k, t=t, r=r))


def product_h(n: int, k: int, l: int, s: int) -> int:
    """|H_{n,k,s}| * |I_{n,l,s}| from the membership definitions."""
    return size_H(n, k, s) * size_I(n, l, s)


def product_f(n: int, k: int, l: int, r: int) -> int:
    if r < 0:
        raise DomainError("r must be >= 0")
    return size_frankl(n, k, r) * size_frankl(n, l, r)


def displayed_h(n: int, k: int, l: int, s: int, t: int) -> int:
    """Closed-form product with an unbound coefficient t in the first factor."""
    return (binomial(n - 2, k - 2) + t * binomial(n - s, k - s + 1)) * (
        binomial(n - 2, l - 2) - binomial(n - s, l - 2)
    )


@dataclass(frozen=True)
class HFormulaDiagnostic:
    n: int
    k: int
    l: int
    s: int
    exact: int
    tried: dict[str, int]
    matching: tuple[str, ...]

    @property
    def consistent(self) -> bool:
        # the closed form is usable only if every reading of t agrees
        return len(set(self.tried.values())) == 1 and bool(self.matching)

    def lines(self) -> list[str]:
        out = [f"h-formula check n={self.n} k={self.k} l={self.l} s={self.s}: exact product {self.exact}"]
        for name, val in self.tried.items():
            tag = "matches" if name in self.matching else "differs"
            out.append(f"  t := {name:<6} -> {val} ({tag})")
        if self.consistent:
            out.append("  all readings of t agree")
        else:
            out.append("  INCONSISTENT: coefficient t is unbound; readings disagree"
                       + (f"; exact size matches t := {', '.join(self.matching)}" if self.matching else ""))
        return out


def h_formula_diagnostic(n: int, k: int, l: int, s: int) -> HFormulaDiagnostic:
    exact = product_h(n, k, l, s)
    readings = {"2": 2, "s-1": s - 1, "s-2": s - 2}
    tried = {name: displayed_h(n, k, l, s, t) for name, t in readings.items()}
    matching = tuple(name for name, v in tried.items() if v == exact)
    return HFormulaDiagnostic(n, k, l, s, exact, tried, matching)


# --- nontrivial candidate pairs ---------------------------------------------


@dataclass(frozen=True)
class Candidate:
    name: str
    spec_A: FamilySpec
    spec_B: FamilySpec

    @property
    def product(self) -> int:
        return size_formula(self.spec_A) * size_formula(self.spec_B)


def nontrivial_candidates(n: int, k: int, l: int) -> list[Candidate]:
    """(H, I) with s = 3, (H, I) with s = k + 1, and the r = 1 Frankl pair."""
    out = []
    if 3 <= min(k, l) and n >= 3:
        out.append(Candidate("h(s=3)", FamilySpec("H", n, k, s=3), FamilySpec("I", n, l, s=3)))
    if l >= 3 and k + 1 <= n and k + 1 > 3:
        out.append(Candidate(f"h(s={k + 1})", FamilySpec("H", n, k, s=k + 1),
                             FamilySpec("I", n, l, s=k + 1)))
    if n >= 4:
        out.append(Candidate("f(r=1)", FamilySpec("frankl", n, k, r=1), FamilySpec("frankl", n, l, r=1)))
    return out


def best_candidates(n: int, k: int, l: int) -> tuple[int, list[Candidate]]:
    cands = nontrivial_candidates(n, k, l)
    best = max(c.product for c in cands)
    return best, [c for c in cands if c.product == best]


# --- structural comparison ----------------------------------------------------


def _signature(A: UniformFamily, B: UniformFamily) -> list[tuple[int, int]]:
    sig = []
    for e in range(A.n):
        bit = 1 << e
        sig.append((sum(1 for m in A.sets if m & bit), sum(1 for m in B.sets if m & bit)))
    return sig


def _relabel(masks, perm: list[int]) -> set[int]:
    out = set()
    for m in masks:
        r = 0
        for e in range(len(perm)):
            if m >> e & 1:
                r |= 1 << perm[e]
        out.add(r)
    return out


def same_shape(A: UniformFamily, B: UniformFamily, cA: UniformFamily, cB: UniformFamily) -> bool:
    """Whether (A, B) is a relabelling of (cA, cB).

    Elements are matched by their (degree in A, degree in B) profile.  This is
    exact provided each profile class of the candidate is an orbit of its
    automorphism group, which holds for every family kind in this module;
    classes of size at most 3 are additionally searched exhaustively.
    """
    if (A.n, A.k, B.k) != (cA.n, cA.k, cB.k) or len(A) != len(cA) or len(B) != len(cB):
        return False
    sw, sc = _signature(A, B), _signature(cA, cB)
    if sorted(sw) != sorted(sc):
        return False
    classes: dict[tuple[int, int], tuple[list[int], list[int]]] = {}
    for e, sig in enumerate(sw):
        classes.setdefault(sig, ([], []))[0].append(e)
    for e, sig in enumerate(sc):
        classes[sig][1].append(e)
    target_A, target_B = set(cA.sets), set(cB.sets)
    small = [key for key, (src, _) in classes.items() if 1 < len(src) <= 3]
    base = [0] * A.n
    for src, dst in classes.values():
        for a, b in zip(src, dst):
            base[a] = b

    def attempt(perm: list[int]) -> bool:
        return _relabel(A.sets, perm) == target_A and _relabel(B.sets, perm) == target_B

    if attempt(base):
        return True
    if not small:
        return False
    # fall back to permuting small classes jointly
    options = [list(permutations(classes[key][1])) for key in small]

    def rec(idx: int, perm: list[int]) -> bool:
        if idx == len(small):
            return attempt(perm)
        src = classes[small[idx]][0]
        for choice in options[idx]:
            for a, b in zip(src, choice):
                perm[a] = b
            if rec(idx + 1, perm):
                return True
        return False

    return rec(0, list(base))
