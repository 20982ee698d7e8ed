"""Univariate polynomials in n with exact rational coefficients.

Coefficient lists run from the constant term upward.  Only what the tail
certificates need: ring operations, Taylor shift and a positivity check on
an integer half-line.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Sequence, Union

Number = Union[int, Fraction]
Poly = tuple[Fraction, ...]

N: Poly = (Fraction(0), Fraction(1))

# explicit scan limit before a tail certificate gives up
MAX_SCAN = 200_000


def const(c: Number) -> Poly:
    return (Fraction(c),)


def lin(a: Number, b: Number) -> Poly:
    """a*n + b."""
    return (Fraction(b), Fraction(a))


def _trim(p: Sequence[Fraction]) -> Poly:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p) if p else (Fraction(0),)


def _lift(x: Poly | Number) -> Poly:
    return x if isinstance(x, tuple) else const(x)


def add(*ps: Poly | Number) -> Poly:
    out: list[Fraction] = []
    for p in map(_lift, ps):
        if len(p) > len(out):
            out.extend([Fraction(0)] * (len(p) - len(out)))
        for i, c in enumerate(p):
            out[i] += c
    return _trim(out)


def neg(p: Poly | Number) -> Poly:
    return tuple(-c for c in _lift(p))


def sub(p: Poly | Number, q: Poly | Number) -> Poly:
    return add(p, neg(q))


def mul(*ps: Poly | Number) -> Poly:
    out: Poly = const(1)
    for p in map(_lift, ps):
        res = [Fraction(0)] * (len(out) + len(p) - 1)
        for i, a in enumerate(out):
            if a:
                for j, b in enumerate(p):
                    res[i + j] += a * b
        out = _trim(res)
    return out


def evaluate(p: Poly, x: Number) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def degree(p: Poly) -> int:
    return len(_trim(p)) - 1


def taylor_shift(p: Poly, c: Number) -> Poly:
    """Coefficients of q(x) = p(x + c)."""
    q = list(p)
    d = len(q)
    for i in range(d):
        for j in range(d - 2, i - 1, -1):
            q[j] += c * q[j + 1]
    return _trim(q)


@dataclass(frozen=True)
class TailCertificate:
    """Outcome of certifying p(n) > 0 for every integer n >= start."""

    start: int
    ok: bool
    method: str
    scanned_to: int | None = None
    witness: int | None = None
    leading: Fraction | None = None


def certify_positive(p: Poly, start: int) -> TailCertificate:
    """Prove p(n) > 0 for all integers n >= start, or produce a witness n.

    Shift to q(x) = p(start + x).  Nonnegative coefficients with a positive
    constant settle it at once.  Otherwise a positive leading coefficient and
    the Cauchy root bound R give positivity beyond start + R, and the finitely
    many integers below are checked one by one.
    """
    p = _trim(p)
    q = taylor_shift(p, start)
    lead = q[-1]
    if q[0] > 0 and all(c >= 0 for c in q):
        return TailCertificate(start, True, "nonnegative-shift", leading=lead)
    if q[0] <= 0:
        return TailCertificate(start, False, "fails-at-start", witness=start, leading=lead)
    if lead <= 0:
        return TailCertificate(start, False, "nonpositive-leading", leading=lead)
    bound = 1 + max(abs(c / lead) for c in q[:-1])
    top = ceil(bound)
    if top > MAX_SCAN:
        return TailCertificate(start, False, "root-bound-too-large", scanned_to=start + top, leading=lead)
    for x in range(top + 1):
        if evaluate(q, x) <= 0:
            return TailCertificate(start, False, "scan", scanned_to=start + top, witness=start + x,
                                   leading=lead)
    return TailCertificate(start, True, "cauchy-scan", scanned_to=start + top, leading=lead)
