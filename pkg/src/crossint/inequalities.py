"""Exact evaluation and grid sweeps of the ratio inequalities.

All comparisons use ``Fraction``; decimal constants such as 3.38 or 0.38 are
entered as exact decimals.  ``n`` ranges over integers from
``ceil(3.38 * max(k, l))`` upward.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Callable, Iterable

from . import poly as P
from .core import DomainError, binomial

RATIO = Fraction("3.38")
EXCEPTIONS = frozenset({(4, 3), (5, 3), (5, 4), (6, 4)})


def n_min(*sizes: int) -> int:
    """Smallest integer n with n >= 3.38 * max(sizes)."""
    return ceil(RATIO * max(sizes))


# --- f ---------------------------------------------------------------------


def f_binomial(n: int, k: int, s: int, i: int) -> Fraction:
    num = binomial(s - 1, i - 1) * binomial(n - s, k - i) + binomial(s - 1, i) * binomial(n - s + 1, k - i)
    den = binomial(s - 1, i - 1) * binomial(n - s + 1, k - i + 1) + binomial(s - 1, i) * binomial(n - s + 1, k - i)
    if den == 0:
        raise DomainError(f"f_binomial: zero denominator at n={n} k={k} s={s} i={i}")
    return Fraction(num, den)


def f_closed_parts(k: int, s: int, i: int) -> tuple[P.Poly, P.Poly, P.Poly]:
    """Numerator and the two denominator factors of f as polynomials in n."""
    num = P.mul(k - i + 1, P.sub(P.mul(s, P.lin(1, 1 - s)), i * (k - i)))
    d1 = P.lin(1, 1 - s)
    d2 = P.add(P.mul(i, P.lin(1, 2 * i - 2 * k - 2 * s)), s * (k + 1))
    return num, d1, d2


def f_value(n: int, k: int, s: int, i: int) -> Fraction:
    """Closed form (k-i+1)(s(n-s+1) - i(k-i)) / ((n-s+1)(i(n+2i-2k-2s) + s(k+1)))."""
    if i < 1 or s < 1:
        raise DomainError(f"f_value: need i, s >= 1 (got s={s}, i={i})")
    first = n - s + 1
    second = i * (n + 2 * i - 2 * k - 2 * s) + s * (k + 1)
    if first == 0:
        raise DomainError(f"f_value: factor (n-s+1) vanishes at n={n} s={s}")
    if second == 0:
        raise DomainError(f"f_value: factor i(n+2i-2k-2s)+s(k+1) vanishes at n={n} k={k} s={s} i={i}")
    return Fraction((k - i + 1) * (s * (n - s + 1) - i * (k - i)), first * second)


def f_admissible(n: int, k: int, s: int, i: int) -> bool:
    return max(s + 2 - k, 3) <= i <= min(s - 1, k) and n >= n_min(k)


# --- f against the ratio constant ------------------------------------------


def eq1_poly(k: int, s: int, i: int) -> P.Poly:
    """(n-s+1)(s-i)(n-2k-s+2i-1) - i(n-s-k+i+1)(k-i+1) as a polynomial in n."""
    return P.sub(
        P.mul(P.lin(1, 1 - s), s - i, P.lin(1, -2 * k - s + 2 * i - 1)),
        P.mul(i, P.lin(1, -s - k + i + 1), k - i + 1),
    )


@dataclass(frozen=True)
class FCheckResult:
    n: int
    k: int
    s: int
    i: int
    f: Fraction
    ratio: Fraction
    direct: bool
    via_eq1: bool

    @property
    def holds(self) -> bool:
        return self.direct and self.via_eq1

    @property
    def slack(self) -> Fraction:
        return self.f - self.ratio


def lemma31_check(n: int, k: int, s: int, i: int) -> FCheckResult:
    """f(n,k,s,i) > C(n-s,k-i)/C(n-s,k-i+1), by direct comparison and via eq1.

    Raises ``AssertionError`` if the two routes disagree.
    """
    if s < k + 1 or not f_admissible(n, k, s, i):
        raise DomainError(f"inadmissible point n={n} k={k} s={s} i={i}")
    f = f_value(n, k, s, i)
    den = binomial(n - s, k - i + 1)
    if den == 0:
        raise DomainError(f"C(n-s, k-i+1) vanishes at n={n} k={k} s={s} i={i}")
    ratio = Fraction(binomial(n - s, k - i), den)
    direct = f > ratio
    via = P.evaluate(eq1_poly(k, s, i), n) > 0
    if direct != via:
        raise AssertionError(f"routes disagree at n={n} k={k} s={s} i={i}: direct={direct} eq1={via}")
    return FCheckResult(n, k, s, i, f, ratio, direct, via)


# --- T and the product inequality ---------------------------------------------


def T_factors(s: int, k: int, l: int, i: int) -> tuple[dict[str, P.Poly], dict[str, P.Poly]]:
    """Named numerator and denominator factors of T as polynomials in n."""
    sn = P.mul(s, P.lin(1, 1 - s))  # s(n-s+1)
    num = {
        "s(n-s+1)-i(k-i)": P.sub(sn, i * (k - i)),
        "s(n-s+1)-(s-i+2)(l+i-s-2)": P.sub(sn, (s - i + 2) * (l + i - s - 2)),
        "n-s-k+i": P.lin(1, -s - k + i),
        "n-l-i+2": P.lin(1, -l - i + 2),
    }
    den = {
        "i(n-2k-s+2i)+s(k-i+1)": P.add(P.mul(i, P.lin(1, -2 * k - s + 2 * i)), s * (k - i + 1)),
        "(s-i+2)(n-2l-2i+s+4)+s(l+i-s-1)": P.add(
            P.mul(s - i + 2, P.lin(1, -2 * l - 2 * i + s + 4)), s * (l + i - s - 1)
        ),
        "n-s+1": P.lin(1, 1 - s),
        "n-s+1 (second)": P.lin(1, 1 - s),
    }
    return num, den


def T_value(n: int, s: int, k: int, l: int, i: int) -> Fraction:
    num, den = T_factors(s, k, l, i)
    top = Fraction(1)
    for p in num.values():
        top *= P.evaluate(p, n)
    bottom = Fraction(1)
    for name, p in den.items():
        v = P.evaluate(p, n)
        if v <= 0:
            raise DomainError(f"T_value: denominator factor {name} = {v} is not positive at "
                              f"n={n} s={s} k={k} l={l} i={i}")
        bottom *= v
    return top / bottom


def lemma32_admissible(n: int, k: int, l: int, s: int, i: int) -> bool:
    return (
        n >= n_min(k, l)
        and s <= k + l - 2
        and max(s + 2 - l, 3) <= i <= min(k, s - 1)
    )


def lemma32_sides(n: int, k: int, l: int, s: int, i: int) -> tuple[Fraction, Fraction]:
    """Both sides of f(n,k,s,i) f(n,l,s,s+2-i) > ratio of binomials."""
    lhs = f_value(n, k, s, i) * f_value(n, l, s, s + 2 - i)
    den = binomial(n - s, k - i + 1) * binomial(n - s, l + i - s - 1)
    if den == 0:
        raise DomainError(f"binomial denominator vanishes at n={n} k={k} l={l} s={s} i={i}")
    rhs = Fraction(binomial(n - s, k - i) * binomial(n - s, l + i - s - 2), den)
    return lhs, rhs


def lemma32_tail_polys(k: int, l: int, s: int, i: int) -> dict[str, P.Poly]:
    """Polynomials whose positivity for n >= n0 gives T > 1 on the whole tail."""
    num, den = T_factors(s, k, l, i)
    out = {f"num:{k_}": p for k_, p in num.items()}
    out.update({f"den:{k_}": p for k_, p in den.items() if k_ != "n-s+1 (second)"})
    out["T-1 numerator"] = P.sub(P.mul(*num.values()), P.mul(*den.values()))
    return out


# --- reports -------------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    label: str
    n: int
    k: int
    l: int | None
    s: int | None
    i: int | None
    value: Fraction
    passed: bool

    def csv_fields(self) -> list[str]:
        def opt(x):
            return "" if x is None else str(x)

        return [opt(self.n), opt(self.k), opt(self.l), opt(self.s), opt(self.i),
                str(self.value.numerator), str(self.value.denominator),
                "1" if self.passed else "0", self.label]


CSV_HEADER = ["n", "k", "l", "s", "i", "value_num", "value_den", "pass", "label"]


@dataclass
class SweepReport:
    name: str
    bounds: dict[str, int]
    rows: list[SweepRow] = field(default_factory=list)
    certificates: list[tuple[str, P.TailCertificate]] = field(default_factory=list)
    recorded: list[SweepRow] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def failures(self) -> list[SweepRow]:
        return [r for r in self.rows if not r.passed]

    @property
    def failed_certificates(self) -> list[tuple[str, P.TailCertificate]]:
        return [(name, c) for name, c in self.certificates if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.failures and not self.failed_certificates

    def summary(self) -> list[str]:
        b = " ".join(f"{k}={v}" for k, v in self.bounds.items())
        out = [
            f"{self.name} [{b}]: {len(self.rows)} points, {len(self.failures)} failures, "
            f"{len(self.certificates)} tail certificates, {len(self.failed_certificates)} failed",
        ]
        out.extend(self.notes)
        out.append("PASS" if self.ok else "FAIL")
        return out

    def csv_lines(self, include_recorded: bool = True) -> list[str]:
        rows = self.rows + (self.recorded if include_recorded else [])
        return [",".join(CSV_HEADER)] + [",".join(r.csv_fields()) for r in rows]


def lemma31_sweep(kmax: int = 12, nwindow: int = 20, kmin: int = 3) -> SweepReport:
    rep = SweepReport("lemma31", {"kmin": kmin, "kmax": kmax, "nwindow": nwindow})
    min_slack: tuple[Fraction, tuple[int, int, int, int]] | None = None
    for k in range(kmin, kmax + 1):
        n0 = n_min(k)
        for s in range(k + 1, 2 * k):
            for i in range(max(s + 2 - k, 3), min(s - 1, k) + 1):
                for n in range(n0, n0 + nwindow + 1):
                    res = lemma31_check(n, k, s, i)
                    rep.rows.append(SweepRow("lemma31", n, k, None, s, i, res.f, res.holds))
                    if min_slack is None or res.slack < min_slack[0]:
                        min_slack = (res.slack, (n, k, s, i))
                tag = f"k={k} s={s} i={i}"
                rep.certificates.append((f"eq1 {tag}", P.certify_positive(eq1_poly(k, s, i), n0)))
                num, d1, d2 = f_closed_parts(k, s, i)
                # f > (k-i+1)/(n-s-k+i)  <=>  num*(n-s-k+i) - (k-i+1)*d1*d2 > 0
                direct = P.sub(P.mul(num, P.lin(1, -s - k + i)), P.mul(k - i + 1, d1, d2))
                rep.certificates.append((f"direct {tag}", P.certify_positive(direct, n0)))
                rep.certificates.append((f"den {tag}", P.certify_positive(P.mul(d1, d2), n0)))
                rep.certificates.append((f"n-s-k+i {tag}", P.certify_positive(P.lin(1, -s - k + i), n0)))
    if min_slack is not None:
        v, (n, k, s, i) = min_slack
        rep.notes.append(f"minimum slack f - ratio = {v} (~{float(v):.6g}) at n={n} k={k} s={s} i={i}")
    return rep


def lemma32_points(kmax: int, lmax: int, nwindow: int, kmin: int = 3, lmin: int = 3):
    for k in range(kmin, kmax + 1):
        for l in range(lmin, lmax + 1):
            n0 = n_min(k, l)
            for s in range(4, k + l - 1):
                for i in range(max(s + 2 - l, 3), min(k, s - 1) + 1):
                    yield k, l, s, i, n0, range(n0, n0 + nwindow + 1)


def lemma32_sweep(kmax: int = 10, lmax: int = 10, nwindow: int = 20) -> SweepReport:
    """Product inequality over the grid; exception (s, i) points are only recorded."""
    rep = SweepReport("lemma32", {"kmax": kmax, "lmax": lmax, "nwindow": nwindow})
    hunt: dict[tuple[int, int], list[int]] = {e: [0, 0] for e in sorted(EXCEPTIONS)}
    for k, l, s, i, n0, ns in lemma32_points(kmax, lmax, nwindow):
        excepted = (s, i) in EXCEPTIONS
        for n in ns:
            lhs, rhs = lemma32_sides(n, k, l, s, i)
            holds = lhs > rhs
            ratio = lhs / rhs if rhs else lhs
            try:
                T = T_value(n, s, k, l, i)
            except DomainError:
                T = None
            if T is not None and T != ratio:
                raise AssertionError(f"T differs from the side ratio at n={n} k={k} l={l} s={s} i={i}")
            row = SweepRow("lemma32-exception" if excepted else "lemma32", n, k, l, s, i, ratio, holds)
            if excepted:
                rep.recorded.append(row)
                hunt[(s, i)][0 if holds else 1] += 1
            else:
                rep.rows.append(row)
        if not excepted:
            for name, p in lemma32_tail_polys(k, l, s, i).items():
                rep.certificates.append((f"{name} k={k} l={l} s={s} i={i}", P.certify_positive(p, n0)))
    for (s, i), (good, bad) in hunt.items():
        rep.notes.append(f"exception (s,i)=({s},{i}): {good} points hold, {bad} points violate")
    return rep


# --- ratio constants -----------------------------------------------------------


@dataclass(frozen=True)
class RatioConstant:
    name: str
    bound: Fraction
    exact: Callable[[int, int], Fraction]
    poly_parts: Callable[[int], tuple[P.Poly, P.Poly]]  # numerator, denominator in n


def _ratio(a: tuple[int, int], b: tuple[int, int]) -> Fraction:
    return Fraction(binomial(*a), binomial(*b))


RATIO_CONSTANTS = (
    RatioConstant(
        "C(n-3,k-3)/C(n-2,k-2) < 3/10", Fraction(3, 10),
        lambda n, k: _ratio((n - 3, k - 3), (n - 2, k - 2)),
        lambda k: (P.const(k - 2), P.lin(1, -2)),
    ),
    RatioConstant(
        "C(n-4,k-3)/C(n-2,k-2) < 21/100", Fraction(21, 100),
        lambda n, k: _ratio((n - 4, k - 3), (n - 2, k - 2)),
        lambda k: (P.mul(k - 2, P.lin(1, -k)), P.mul(P.lin(1, -2), P.lin(1, -3))),
    ),
    RatioConstant(
        "C(n-4,l-4)/C(n-2,l-2) < 9/100", Fraction(9, 100),
        lambda n, l: _ratio((n - 4, l - 4), (n - 2, l - 2)),
        lambda l: (P.const((l - 2) * (l - 3)), P.mul(P.lin(1, -2), P.lin(1, -3))),
    ),
    RatioConstant(
        "C(n-5,l-4)/C(n-2,l-2) < 63/1000", Fraction(63, 1000),
        lambda n, l: _ratio((n - 5, l - 4), (n - 2, l - 2)),
        lambda l: (P.mul((l - 2) * (l - 3), P.lin(1, -l)),
                   P.mul(P.lin(1, -2), P.lin(1, -3), P.lin(1, -4))),
    ),
)


def ratio_constants_check(kmax: int = 60, lmax: int | None = None, nwindow: int = 20) -> SweepReport:
    """Each bound at the smallest admissible n, plus monotonicity and a tail proof.

    The first two ratios depend on k only, the last two on l only; for a
    fixed size the smallest admissible n is ceil(3.38 * size), attained when
    the other size is not larger.
    """
    if lmax is None:
        lmax = kmax
    if kmax < 2 or lmax < 2:
        raise DomainError("bounds must be >= 2")
    rep = SweepReport("ratios", {"kmax": kmax, "lmax": lmax, "nwindow": nwindow})
    for idx, rc in enumerate(RATIO_CONSTANTS):
        top = kmax if idx < 2 else lmax
        for size in range(2, top + 1):
            n0 = n_min(size)
            v = rc.exact(n0, size)
            is_k = idx < 2
            rep.rows.append(SweepRow(rc.name, n0, size if is_k else 0, None if is_k else size, None, None,
                                     v, v < rc.bound))
            prev = v
            mono = True
            for n in range(n0 + 1, n0 + nwindow + 1):
                cur = rc.exact(n, size)
                if cur > prev:
                    mono = False
                prev = cur
            rep.rows.append(SweepRow(f"monotone: {rc.name}", n0, size if is_k else 0,
                                     None if is_k else size, None, None, v, mono))
            num, den = rc.poly_parts(size)
            rep.certificates.append((f"{rc.name} size={size}",
                                     P.certify_positive(P.sub(P.mul(rc.bound, den), num), n0)))
            rep.certificates.append((f"denominator size={size}", P.certify_positive(den, n0)))
            # closed form must agree with the binomial ratio on the window
            for n in (n0, n0 + nwindow):
                if Fraction(*_eval_pair(num, den, n)) != rc.exact(n, size):
                    raise AssertionError(f"closed form mismatch for {rc.name} at n={n} size={size}")
    return rep


def _eval_pair(num: P.Poly, den: P.Poly, n: int) -> tuple[int, int]:
    a, b = P.evaluate(num, n), P.evaluate(den, n)
    q = a / b
    return q.numerator, q.denominator


# --- auxiliary polynomials of the case analysis ---------------------------------

D = Fraction


def _g(n, s, k, l, i):
    return (n - s - k + i) * (s * (n - s + 1) - (s - i + 2) * (l + i - s - 2)) - (n - s + 1) * (
        i * (n - 2 * k - s + 2 * i) + s * (k - i + 1))


def _h(n, s, k, l, i):
    return (n - l - i + 2) * (s * (n - s + 1) - i * (k - i)) - (n - s + 1) * (
        (s - i + 2) * (n - 2 * l - 2 * i + s + 4) + s * (l + i - s - 1))


def _p2(n, s, k, l):
    return (s * (n - s + 1) - (s - 2) * (l - s + 2)) * (n - s - k + 4) - (
        4 * (n - 2 * k - s + 8) + s * (k - 3) + D("0.38") * l) * (n - s + 1)


def _q2(n, s, k, l):
    return (s * (n - s + 1) - 4 * (k - 4)) * (n - l - 2) - (
        (s - 2) * (n - 2 * l + s - 4) + s * (l - s + 3) - D("0.38") * l) * (n - s + 1)


def _s2(n, s, k, l):
    return (s * (n - s + 1) - (s - 2) * (l - s + 2)) * (n - s - k + 4 - D("0.1") * k) - (
        4 * (n - 2 * k - s + 8) + s * (k - 3)) * (n - s + 1)


def _t2(n, s, k, l):
    return (s * (n - s + 1) - 4 * (k - 4)) * (n - l - 2 + D("0.1") * k) - (
        (s - 2) * (n - 2 * l + s - 4) + s * (l - s + 3)) * (n - s + 1)


def _gap2_lk(n, s, k, l):
    return ((s - 2) * (n - 2 * l + s - 4) + s * (l - s + 3)) - D("0.38") * l - (
        4 * (n - 2 * k - s + 8) + s * (k - 3))


def _gap2_kl(n, s, k, l):
    return (n - l - 2) + D("0.1") * k - (n - s - k + 4)


def _p3a(n, s, k, l):
    return (s * (n - s + 1) - 3 * (k - 3)) * (n - l - 1) - (
        (s - 1) * (n - 2 * l + s - 2) + s * (l - s + 2)) * (n - s + 1 - D("0.27") * l)


def _q3a(n, s, k, l):
    return (s * (n - s + 1) - (s - 1) * (l - s + 1)) * (n - s - k + 3) - (
        3 * (n - 2 * k - s + 6) + s * (k - 2)) * (n - s + 1 + D("0.31") * l)


def _gap3a(n, s, k, l):
    return (n - s + 1 - D("0.27") * l) * (n - s + 1 + D("0.31") * l) - (n - s + 1) ** 2


def _p3b(n, s, k, l):
    return (s * (n - s + 1) - 3 * (k - 3)) * (n - l - 1 + D("0.12") * k) - (
        (s - 1) * (n - 2 * l + s - 2) + s * (l - s + 2)) * (n - s + 1)


def _q3b(n, s, k, l):
    return (s * (n - s + 1) - (s - 1) * (l - s + 1)) * (n - s - k + 3 - D("0.12") * k) - (
        3 * (n - 2 * k - s + 6) + s * (k - 2)) * (n - s + 1)


def _gap3b(n, s, k, l):
    return (n - l - 1) + D("0.12") * k - (n - s - k + 3)


def _six_first(n, k, l, c):
    return (n - k - 3) * (6 * (n - 5) - 5 * (l - 5)) - (n - 5) * (3 * (n - 2 * k) + 6 * (k - 2) + D("0.619") * c)


def _six_second(n, k, l, c):
    return (n - l - 1) * (6 * (n - 5) - 3 * (k - 3)) - (n - 5) * (
        5 * (n - 2 * l + 4) + 6 * (l - 4) - D("0.733") * c)


def _six_gap(n, k, l, c):
    d1 = 3 * (n - 2 * k) + 6 * (k - 2)
    d2 = 5 * (n - 2 * l + 4) + 6 * (l - 4)
    return (d1 + D("0.619") * c) * (d2 - D("0.733") * c) - d1 * d2


@dataclass(frozen=True)
class SignClaim:
    name: str
    region: Callable[[int, int, int, int], bool]  # (k, l, s, i)
    value: Callable[[int, int, int, int, int], Fraction]  # (n, k, l, s, i)


SIGN_CLAIMS: tuple[SignClaim, ...] = (
    SignClaim("case1 g", lambda k, l, s, i: 5 <= i <= s - 3, lambda n, k, l, s, i: _g(n, s, k, l, i)),
    SignClaim("case1 h", lambda k, l, s, i: 5 <= i <= s - 3, lambda n, k, l, s, i: _h(n, s, k, l, i)),
    SignClaim("case2 gap (l>=k)", lambda k, l, s, i: i == 4 and s >= 7 and l >= k,
              lambda n, k, l, s, i: _gap2_lk(n, s, k, l)),
    SignClaim("case2 p (l>=k)", lambda k, l, s, i: i == 4 and s >= 7 and l >= k,
              lambda n, k, l, s, i: _p2(n, s, k, l)),
    SignClaim("case2 q (l>=k)", lambda k, l, s, i: i == 4 and s >= 7 and l >= k,
              lambda n, k, l, s, i: _q2(n, s, k, l)),
    SignClaim("case2 gap (k>=l)", lambda k, l, s, i: i == 4 and s >= 7 and k >= l,
              lambda n, k, l, s, i: _gap2_kl(n, s, k, l)),
    SignClaim("case2 s (k>=l)", lambda k, l, s, i: i == 4 and s >= 7 and k >= l,
              lambda n, k, l, s, i: _s2(n, s, k, l)),
    SignClaim("case2 t (k>=l)", lambda k, l, s, i: i == 4 and s >= 7 and k >= l,
              lambda n, k, l, s, i: _t2(n, s, k, l)),
    SignClaim("case3 gap (l>=k)", lambda k, l, s, i: i == 3 and s >= 7 and l >= k,
              lambda n, k, l, s, i: _gap3a(n, s, k, l)),
    SignClaim("case3 p (l>=k)", lambda k, l, s, i: i == 3 and s >= 7 and l >= k,
              lambda n, k, l, s, i: _p3a(n, s, k, l)),
    SignClaim("case3 q (l>=k)", lambda k, l, s, i: i == 3 and s >= 7 and l >= k,
              lambda n, k, l, s, i: _q3a(n, s, k, l)),
    SignClaim("case3 gap (k>l)", lambda k, l, s, i: i == 3 and s >= 7 and k > l,
              lambda n, k, l, s, i: _gap3b(n, s, k, l)),
    SignClaim("case3 p (k>l)", lambda k, l, s, i: i == 3 and s >= 7 and k > l,
              lambda n, k, l, s, i: _p3b(n, s, k, l)),
    SignClaim("case3 q (k>l)", lambda k, l, s, i: i == 3 and s >= 7 and k > l,
              lambda n, k, l, s, i: _q3b(n, s, k, l)),
    SignClaim("case3 s=6 gap (l>=k)", lambda k, l, s, i: i == 3 and s == 6 and l >= k,
              lambda n, k, l, s, i: _six_gap(n, k, l, k)),
    SignClaim("case3 s=6 first (l>=k)", lambda k, l, s, i: i == 3 and s == 6 and l >= k,
              lambda n, k, l, s, i: _six_first(n, k, l, k)),
    SignClaim("case3 s=6 second (l>=k)", lambda k, l, s, i: i == 3 and s == 6 and l >= k,
              lambda n, k, l, s, i: _six_second(n, k, l, k)),
    SignClaim("case3 s=6 gap (k>l)", lambda k, l, s, i: i == 3 and s == 6 and k > l,
              lambda n, k, l, s, i: _six_gap(n, k, l, l)),
    SignClaim("case3 s=6 first (k>l)", lambda k, l, s, i: i == 3 and s == 6 and k > l,
              lambda n, k, l, s, i: _six_first(n, k, l, l)),
    SignClaim("case3 s=6 second (k>l)", lambda k, l, s, i: i == 3 and s == 6 and k > l,
              lambda n, k, l, s, i: _six_second(n, k, l, l)),
)


def claim_value(name: str, n: int, k: int, l: int, s: int, i: int) -> Fraction:
    for c in SIGN_CLAIMS:
        if c.name == name:
            return Fraction(c.value(n, k, l, s, i))
    raise KeyError(name)


def proof_polynomial_signs(kmax: int = 10, lmax: int = 10, nwindow: int = 20,
                           claims: Iterable[SignClaim] = SIGN_CLAIMS) -> SweepReport:
    """Each auxiliary claim at the admissible integer points of its case region."""
    claims = tuple(claims)
    rep = SweepReport("polys", {"kmax": kmax, "lmax": lmax, "nwindow": nwindow})
    for k, l, s, i, n0, ns in lemma32_points(kmax, lmax, nwindow):
        for c in claims:
            if not c.region(k, l, s, i):
                continue
            for n in ns:
                v = Fraction(c.value(n, k, l, s, i))
                rep.rows.append(SweepRow(c.name, n, k, l, s, i, v, v > 0))
    counts: dict[str, list[int]] = {}
    for r in rep.rows:
        counts.setdefault(r.label, [0, 0])[0 if r.passed else 1] += 1
    for name, (good, bad) in counts.items():
        rep.notes.append(f"{name}: {good} positive, {bad} not positive")
    return rep
