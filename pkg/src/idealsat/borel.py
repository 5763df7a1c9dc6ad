"""Bounded strongly-stable (Borel) machinery.

Implements exponent-bounded stability checks, smallest stable closures
of generator sets, the componentwise order on index multisets, the
extremal bounded monomials, the socle identity check, squarefree
Veronese ideals and their closed-form saturation numbers, and the
prime-power intersection template for powers of principal closures.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from itertools import combinations

from .core import (
    Monomial,
    MonomialIdeal,
    minimalize,
    prime_power,
    unit_ideal,
)


@dataclass(frozen=True)
class BorelSpec:
    """Closure input: a bound k and equal-degree generators, all k-bounded."""

    bound: int
    generators: tuple[Monomial, ...]
    n: int

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError(f"bound must be >= 1, got {self.bound}")
        if not self.generators:
            raise ValueError("closure needs at least one generator")
        degs = {g.degree for g in self.generators}
        if len(degs) != 1:
            raise ValueError(f"generators must share one degree, got degrees {sorted(degs)}")
        for g in self.generators:
            if g.n != self.n:
                raise ValueError(f"generator {g} does not live in {self.n} variables")
            if not g.bounded_by(self.bound):
                raise ValueError(f"generator {g} exceeds the bound {self.bound}")


def restrict_bounded(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """Subideal generated by the k-bounded minimal generators."""
    return I.restricted_to_bound(k)


def is_squarefree(I: MonomialIdeal) -> bool:
    """True iff the ideal equals its 1-bounded restriction."""
    return I == restrict_bounded(I, 1)


@dataclass(frozen=True)
class StableCheck:
    ok: bool
    # First failing move (generator, i, j), 1-based, when a move lands outside.
    witness: Optional[tuple[Monomial, int, int]] = None
    # Set instead of witness when a generator violates the exponent bound.
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def is_k_strongly_stable(I: MonomialIdeal, k: int) -> StableCheck:
    """Check closure under the bounded index-lowering moves.

    An ideal passes when every minimal generator is k-bounded and, for
    every generator u and indices i < j with x_j | u and deg_{x_i}(u) <= k-1,
    the swapped monomial x_i * u / x_j lies in the ideal.
    """
    if k < 1:
        raise ValueError(f"bound must be >= 1, got {k}")
    for g in I.gens:
        if not g.bounded_by(k):
            return StableCheck(False, reason=f"generator {g} has an exponent above {k}")
    n = I.n
    for g in I.gens:
        exps = g.exps
        for i in range(1, n + 1):
            if exps[i - 1] > k - 1:
                continue
            for j in range(i + 1, n + 1):
                if exps[j - 1] == 0:
                    continue
                moved = list(exps)
                moved[j - 1] -= 1
                moved[i - 1] += 1
                if not I.contains(Monomial(tuple(moved))):
                    return StableCheck(False, witness=(g, i, j))
    return StableCheck(True)


def borel_closure(spec: BorelSpec) -> MonomialIdeal:
    """Smallest bound-stable ideal containing the generators.

    Worklist closure with a visited set under the moves x_i * u / x_j
    (i < j, x_j | u, deg_{x_i}(u) <= bound - 1). Each move lowers the
    index multiset, so the walk terminates; all reached monomials share
    the generator degree.
    """
    k, n = spec.bound, spec.n
    seen = {g.exps for g in spec.generators}
    frontier = list(seen)
    while frontier:
        exps = frontier.pop()
        for j_col in range(n):
            if exps[j_col] == 0:
                continue
            for i_col in range(j_col):
                if exps[i_col] > k - 1:
                    continue
                moved = list(exps)
                moved[j_col] -= 1
                moved[i_col] += 1
                t = tuple(moved)
                if t not in seen:
                    seen.add(t)
                    frontier.append(t)
    return minimalize([Monomial(t) for t in seen], n)


def borel_closure_of(u: Monomial, bound: int | None = None) -> MonomialIdeal:
    """Closure of a single monomial; bound defaults to deg(u), the unbounded case."""
    if bound is None:
        bound = max(u.degree, 1)
    return borel_closure(BorelSpec(bound, (u,), u.n))


def precedes(v: Monomial, u: Monomial, k: int) -> bool:
    """Componentwise order on sorted index multisets of equal-degree k-bounded monomials.

    v precedes u exactly when v lies in the bound-k closure of u.
    """
    if v.n != u.n:
        raise ValueError(f"monomials live in {v.n} and {u.n} variables")
    if v.degree != u.degree:
        raise ValueError(f"degrees differ: {v.degree} vs {u.degree}")
    if not (v.bounded_by(k) and u.bounded_by(k)):
        raise ValueError(f"both monomials must be {k}-bounded")
    return all(a <= b for a, b in zip(v.index_tuple(), u.index_tuple()))


@dataclass(frozen=True)
class ExtremalMonomial:
    """The largest k-bounded degree-d monomial under the componentwise order."""

    k: int
    d: int
    n: int
    q: int
    r: int
    monomial: Monomial


def extremal_monomial(k: int, d: int, n: int) -> Optional[ExtremalMonomial]:
    """Greedy top block x_n^k x_{n-1}^k ... with remainder; None when it does not fit.

    With d = q*k + r (0 <= r < k), the monomial exists iff q <= n when
    r = 0, and q < n when r > 0.
    """
    if k < 1 or d < 1 or n < 1:
        raise ValueError("k, d, n must all be >= 1")
    q, r = divmod(d, k)
    if (r == 0 and q > n) or (r != 0 and q >= n):
        return None
    exps = [0] * n
    for t in range(q):
        exps[n - 1 - t] = k
    if r:
        exps[n - 1 - q] = r
    return ExtremalMonomial(k, d, n, q, r, Monomial(tuple(exps)))


@dataclass(frozen=True)
class SocleCheck:
    """Both sides of the colon-by-maximal identity for an extremal closure."""

    k: int
    d: int
    n: int
    ok: bool
    lhs: MonomialIdeal
    rhs: MonomialIdeal
    # True when the lower extremal monomial exists and contributes its closure.
    lowered: bool


def verify_borel_socle(k: int, d: int, n: int) -> SocleCheck:
    """Check colon-by-maximal of the extremal closure against its predicted form.

    The predicted form adds the closure of the (k-1)-bounded extremal
    monomial of degree d-1 when that monomial exists; otherwise the colon
    must return the ideal unchanged. Degree d-1 = 0 contributes the unit
    ideal (the whole ring).
    """
    ext = extremal_monomial(k, d, n)
    if ext is None:
        raise ValueError(f"no {k}-bounded extremal monomial of degree {d} in {n} variables")
    closure = borel_closure(BorelSpec(k, (ext.monomial,), n))
    lhs = closure.colon_maximal()
    if d == 1:
        rhs = unit_ideal(n)
        lowered = True
    elif k == 1:
        # A 0-bounded monomial of positive degree never exists.
        rhs = closure
        lowered = False
    else:
        prev = extremal_monomial(k - 1, d - 1, n)
        if prev is None:
            rhs = closure
            lowered = False
        else:
            rhs = borel_closure(BorelSpec(k - 1, (prev.monomial,), n)) + closure
            lowered = True
    return SocleCheck(k, d, n, lhs == rhs, lhs, rhs, lowered)


def veronese(d: int, n: int) -> MonomialIdeal:
    """Ideal of all squarefree degree-d monomials in n variables."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    gens = [Monomial.from_indices(c, n) for c in combinations(range(1, n + 1), d)]
    return minimalize(gens, n)


def veronese_sat(d: int, n: int, k: int) -> int:
    """Closed-form saturation number of the k-th power of the squarefree Veronese ideal.

    Largest l in 0..k with k*d - l <= n*(k - l); the inequality is kept in
    cross-multiplied form so the l = k boundary (admissible only for d = 1)
    needs no division.
    """
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    for l in range(k, -1, -1):
        if k * d - l <= n * (k - l):
            return l
    raise AssertionError("l = 0 always satisfies the inequality")  # unreachable


@dataclass(frozen=True)
class PowerPresentationTemplate:
    """Prime-power intersection template for powers of a principal closure.

    For u = x_{i_1} ... x_{i_d} (indices ascending, i_d = n) the k-th power
    of the closure of u equals the intersection of P_{1..i_j}^(k*j) over
    j < d together with the k*d-th power of the maximal ideal.
    """

    n: int
    index_seq: tuple[int, ...]

    def components_at(self, k: int) -> tuple[tuple[frozenset[int], int], ...]:
        """(subset, exponent) pairs at power k; repeated subsets keep the top exponent."""
        if k < 1:
            raise ValueError(f"power must be >= 1, got {k}")
        d = len(self.index_seq)
        exps: dict[frozenset[int], int] = {}
        for j, top in enumerate(self.index_seq[:-1], start=1):
            F = frozenset(range(1, top + 1))
            exps[F] = max(exps.get(F, 0), k * j)
        full = frozenset(range(1, self.n + 1))
        exps[full] = max(exps.get(full, 0), k * d)
        return tuple(sorted(exps.items(), key=lambda fa: (len(fa[0]), sorted(fa[0]))))

    def instantiate(self, k: int) -> MonomialIdeal:
        result = unit_ideal(self.n)
        for F, a in self.components_at(k):
            result = result.intersect(prime_power(F, a, self.n))
        return result


def principal_borel_power_presentation(u: Monomial) -> PowerPresentationTemplate:
    """Template for the powers of the unbounded closure of u; needs x_n | u."""
    n = u.n
    if u.deg(n) == 0:
        raise ValueError(f"last variable x{n} must divide {u}")
    return PowerPresentationTemplate(n, u.index_tuple())
