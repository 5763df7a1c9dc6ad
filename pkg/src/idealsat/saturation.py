"""Saturation numbers: colon-maximal chains, graded quotient profiles,
power tables with exact quasi-linear fits, associated primes, and the
multiplicative scaling law check.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import limits, polymatroid
from .core import MonomialIdeal
from .errors import LimitError


@dataclass(frozen=True)
class SaturationResult:
    """Colon-maximal chain of an ideal, stopped at the first repetition."""

    saturated: MonomialIdeal
    sat_number: int
    chain: tuple[MonomialIdeal, ...]


def saturate(I: MonomialIdeal) -> SaturationResult:
    """Iterate colon by the maximal ideal until the chain stabilizes.

    The saturation number is the first index whose entry equals its
    successor; the unit and zero ideals are degenerate fixpoints with a
    single-entry chain.
    """
    if I.is_zero or I.is_unit:
        return SaturationResult(I, 0, (I,))
    chain = [I]
    current = I
    while True:
        nxt = current.colon_maximal()
        chain.append(nxt)
        if nxt == current:
            break
        current = nxt
    return SaturationResult(chain[-1], len(chain) - 2, tuple(chain))


@dataclass(frozen=True)
class GradedQuotientProfile:
    """Degreewise data of the finite-length quotient (saturation / ideal).

    alpha and beta bound the nonzero degrees, sigma is their span
    beta - alpha + 1, gamma is the saturation number, length the total
    dimension. A saturated input gives the empty profile: sigma = 0,
    gamma = 0, no per-degree entries.
    """

    alpha: Optional[int]
    beta: Optional[int]
    sigma: int
    gamma: int
    length: int
    per_degree: tuple[tuple[int, int], ...]

    @property
    def is_empty(self) -> bool:
        return self.length == 0


EMPTY_PROFILE = GradedQuotientProfile(None, None, 0, 0, 0, ())


def quotient_profile(I: MonomialIdeal) -> GradedQuotientProfile:
    """Dimension of (saturation / ideal) in every degree where it is nonzero.

    Degrees above max generator degree of the saturation plus sat - 1
    cannot contribute: multiplying the saturation by that power of the
    maximal ideal lands inside the ideal.
    """
    res = saturate(I)
    if res.sat_number == 0:
        return EMPTY_PROFILE
    sat = res.saturated
    lo = sat.alpha()
    hi = sat.max_gen_degree() + res.sat_number - 1
    per = []
    for d in range(lo, hi + 1):
        diff = sat.count_in_degree(d) - I.count_in_degree(d)
        if diff:
            per.append((d, diff))
    if not per:
        raise AssertionError("nonzero quotient produced an empty profile")  # unreachable
    alpha = per[0][0]
    beta = per[-1][0]
    return GradedQuotientProfile(
        alpha=alpha,
        beta=beta,
        sigma=beta - alpha + 1,
        gamma=res.sat_number,
        length=sum(c for _, c in per),
        per_degree=tuple(per),
    )


def sat_of_truncation(saturated: MonomialIdeal, d: int) -> int:
    """Saturation number of (saturated ideal) meet (maximal ideal)^d, in closed form.

    Zero when d is at most the least generator degree, the difference
    otherwise. The input must be a colon-maximal fixpoint.
    """
    if saturated.is_zero:
        raise ValueError("saturated input must be nonzero")
    if saturated.colon_maximal() != saturated:
        raise ValueError("input is not saturated")
    return max(0, d - saturated.alpha())


@dataclass(frozen=True)
class SatTable:
    """Saturation numbers of the powers of a base ideal, k = 1..K."""

    ideal: MonomialIdeal
    rows: tuple[tuple[int, int], ...]

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.rows)

    def to_csv(self) -> str:
        lines = ["k,sat"]
        lines.extend(f"{k},{s}" for k, s in self.rows)
        return "\n".join(lines) + "\n"


def sat_table(I: MonomialIdeal, K: int) -> SatTable:
    """Saturation numbers of I^1 through I^K, powers built incrementally."""
    if K < 1:
        raise ValueError(f"table length must be >= 1, got {K}")
    if K > limits.max_table_k():
        raise LimitError(f"table length {K} exceeds cap {limits.max_table_k()} (IDEALSAT_MAX_K)")
    rows = []
    power = I
    for k in range(1, K + 1):
        rows.append((k, saturate(power).sat_number))
        if k < K:
            power = power * I
    return SatTable(I, tuple(rows))


@dataclass(frozen=True)
class QuasiLinearFit:
    """Exact eventually-periodic linear fit of an integer sequence.

    lines[i] holds the rational (slope, intercept) used for arguments
    congruent to i modulo the period; the fit is exact from onset on.
    """

    period: int
    lines: tuple[tuple[Fraction, Fraction], ...]
    onset: int

    def predict(self, k: int) -> Fraction:
        a, b = self.lines[k % self.period]
        return a * k + b

    def describe(self) -> str:
        parts = []
        for i, (a, b) in enumerate(self.lines):
            term = f"{a}*k" if a else ""
            if b or not term:
                sep = " + " if term and b > 0 else (" - " if term and b < 0 else "")
                term = f"{term}{sep}{abs(b) if term else b}"
            parts.append(f"f_{i}(k) = {term}")
        return f"period {self.period}, exact from k = {self.onset}: " + "; ".join(parts)


def quasilinear_fit(table: SatTable) -> Optional[QuasiLinearFit]:
    """Smallest-period exact piecewise-linear fit of a saturation table.

    Onsets are scanned outward-first so a long verified tail beats a
    degenerate two-point fit; for each onset, periods are tried smallest
    first and every residue class must contribute at least two points and
    interpolate exactly. Returns None when no period up to K/3 fits,
    which is expected for tables that stabilize late.
    """
    K = len(table.rows)
    values = {k: s for k, s in table.rows}
    for onset in range(1, K + 1):
        for period in range(1, K // 3 + 1):
            if K - onset + 1 < 2 * period:
                break
            lines = _fit_window(values, onset, K, period)
            if lines is not None:
                return QuasiLinearFit(period, lines, onset)
    return None


def _fit_window(values, onset, K, period):
    lines: list[Optional[tuple[Fraction, Fraction]]] = [None] * period
    for residue in range(period):
        ks = [k for k in range(onset, K + 1) if k % period == residue]
        if len(ks) < 2:
            return None
        k1, k2 = ks[0], ks[1]
        a = Fraction(values[k2] - values[k1], k2 - k1)
        b = values[k1] - a * k1
        for k in ks:
            if a * k + b != values[k]:
                return None
        lines[residue] = (a, b)
    return tuple(lines)


def associated_primes(I: MonomialIdeal) -> set[frozenset[int]]:
    """Variable subsets F with P_F = I : w for some monomial witness w.

    Witness exponents range over the componentwise maximum of the
    generator exponents; each hit is confirmed by checking the colon is
    literally a prime with exponent-one generators.
    """
    if not I.is_proper:
        raise ValueError("associated primes need a proper nonzero ideal")
    mat = I.exponent_matrix
    bounds = mat.max(axis=0)
    box = int(np.prod(bounds + 1))
    if box > limits.max_witnesses():
        raise LimitError(
            f"witness box has {box} monomials, cap is {limits.max_witnesses()} "
            "(IDEALSAT_MAX_WITNESSES)")
    found: set[frozenset[int]] = set()
    for w in np.ndindex(*(int(b) + 1 for b in bounds)):
        reduced = np.maximum(mat - np.asarray(w, dtype=np.int64), 0)
        colon = MonomialIdeal(I.n, reduced)
        cm = colon.exponent_matrix
        if cm.shape[0] and bool((cm.sum(axis=1) == 1).all()):
            found.add(frozenset(int(j) + 1 for j in np.nonzero(cm)[1]))
    return found


@dataclass(frozen=True)
class ScalingRow:
    k: int
    sat: int
    expected: int
    primes_stable: bool

    @property
    def ok(self) -> bool:
        return self.sat == self.expected and self.primes_stable


@dataclass(frozen=True)
class ScalingReport:
    """Outcome of checking sat(I^k) = k * sat(I) with stable associated primes."""

    base_sat: int
    base_primes: frozenset[frozenset[int]]
    rows: tuple[ScalingRow, ...]
    polymatroidal: Optional[bool]
    precondition: str

    @property
    def holds(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def first_violation(self) -> Optional[int]:
        for r in self.rows:
            if not r.ok:
                return r.k
        return None

    def describe(self) -> str:
        lines = [f"precondition: {self.precondition}", f"sat(I) = {self.base_sat}"]
        for r in self.rows:
            verdict = "ok" if r.ok else "VIOLATED"
            lines.append(
                f"k={r.k}: sat={r.sat} expected={r.expected} "
                f"primes_stable={'yes' if r.primes_stable else 'no'} {verdict}")
        lines.append("law holds" if self.holds else f"law fails first at k={self.first_violation}")
        return "\n".join(lines)


def check_scaling_law(I: MonomialIdeal, K: int,
                      assume_intersection_type: bool = False) -> ScalingReport:
    """Empirical check of the multiplicative law over k = 1..K.

    The law is only promised for intersection-type ideals with stable
    associated primes; a failed precondition is recorded in the report,
    not raised, and the powers are checked anyway.
    """
    if K < 1:
        raise ValueError(f"need K >= 1, got {K}")
    if K > limits.max_table_k():
        raise LimitError(f"K {K} exceeds cap {limits.max_table_k()} (IDEALSAT_MAX_K)")
    if assume_intersection_type:
        poly = None
        precondition = "caller asserts intersection type"
    else:
        chk = polymatroid.is_polymatroidal(I)
        poly = bool(chk)
        precondition = "polymatroidal" if poly else \
            f"not polymatroidal ({chk.reason or 'exchange fails'})"
    base_sat = saturate(I).sat_number
    base_primes = frozenset(associated_primes(I))
    rows = []
    power = I
    for k in range(1, K + 1):
        sat_k = saturate(power).sat_number
        primes_k = frozenset(associated_primes(power))
        rows.append(ScalingRow(k, sat_k, k * base_sat, primes_k == base_primes))
        if k < K:
            power = power * I
    return ScalingReport(base_sat, base_primes, tuple(rows), poly, precondition)
