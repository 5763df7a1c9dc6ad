"""Polymatroidal ideals: exchange check, rank functions, intersection presentations.

An equigenerated monomial ideal is polymatroidal when its exponent
vectors satisfy the symmetric exchange axiom. Such an ideal is an
intersection of powers of monomial primes; the components are read off
the complementary rank function and the reconstruction is verified
before the presentation is returned.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import limits
from .core import Monomial, MonomialIdeal, intersect_all, prime_power
from .errors import LimitError, ReconstructionError


@dataclass(frozen=True)
class ExchangeCheck:
    ok: bool
    # First violating (u, v, i): deg_{x_i}(u) > deg_{x_i}(v) with no valid swap target.
    witness: Optional[tuple[Monomial, Monomial, int]] = None
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def is_polymatroidal(I: MonomialIdeal) -> ExchangeCheck:
    """Symmetric exchange axiom over all ordered generator pairs."""
    if I.is_zero:
        return ExchangeCheck(False, reason="zero ideal")
    mat = I.exponent_matrix
    degs = mat.sum(axis=1)
    if int(degs.max()) != int(degs.min()):
        return ExchangeCheck(False, reason="generators span more than one degree")
    gens = I.gens
    gen_set = {g.exps for g in gens}
    n = I.n
    for u in gens:
        for v in gens:
            if u is v:
                continue
            for i in range(n):
                if u.exps[i] <= v.exps[i]:
                    continue
                found = False
                for j in range(n):
                    if v.exps[j] <= u.exps[j]:
                        continue
                    moved = list(u.exps)
                    moved[i] -= 1
                    moved[j] += 1
                    # Equigenerated, so membership is membership in the generator set.
                    if tuple(moved) in gen_set:
                        found = True
                        break
                if not found:
                    return ExchangeCheck(False, witness=(u, v, i + 1))
    return ExchangeCheck(True)


class PolymatroidRank:
    """Rank table of the polymatroid spanned by the generator exponent vectors.

    rho(A) is the largest coordinate sum over A among generators; the
    complementary rank is tau(F) = d - rho(complement of F). Subsets are
    1-based index sets; the full table over all 2^n subsets is materialized.
    """

    __slots__ = ("n", "degree", "_rho")

    def __init__(self, n: int, degree: int, rho: np.ndarray):
        self.n = n
        self.degree = degree
        self._rho = rho

    def _mask(self, F: Iterable[int]) -> int:
        mask = 0
        for i in F:
            if not 1 <= i <= self.n:
                raise ValueError(f"variable index {i} outside 1..{self.n}")
            mask |= 1 << (i - 1)
        return mask

    def rho(self, F: Iterable[int]) -> int:
        return int(self._rho[self._mask(F)])

    def tau(self, F: Iterable[int]) -> int:
        full = (1 << self.n) - 1
        return self.degree - int(self._rho[full & ~self._mask(F)])

    def _tau_mask(self, mask: int) -> int:
        full = (1 << self.n) - 1
        return self.degree - int(self._rho[full & ~mask])

    def subsets(self) -> Iterable[frozenset[int]]:
        """All nonempty subsets, smallest first, deterministic order."""
        masks = sorted(range(1, 1 << self.n), key=lambda m: (bin(m).count("1"), m))
        for mask in masks:
            yield frozenset(i + 1 for i in range(self.n) if mask >> i & 1)


def rank_function(I: MonomialIdeal) -> PolymatroidRank:
    """Full rank table; requires a polymatroidal input and verifies the table."""
    chk = is_polymatroidal(I)
    if not chk:
        detail = chk.reason or f"exchange fails at {chk.witness}"
        raise ValueError(f"input is not polymatroidal: {detail}")
    n = I.n
    if n > limits.MAX_SUBSET_VARS:
        raise LimitError(f"rank tables need 2^n entries; n={n} exceeds {limits.MAX_SUBSET_VARS}")
    mat = I.exponent_matrix
    m = mat.shape[0]
    sums = np.zeros((1 << n, m), dtype=np.int64)
    for mask in range(1, 1 << n):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + mat[:, low.bit_length() - 1]
    rho = sums.max(axis=1)
    rho[0] = 0
    rank = PolymatroidRank(n, int(rho[-1]), rho)
    _verify_rank_table(rank)
    return rank


def _verify_rank_table(rank: PolymatroidRank) -> None:
    """Monotonicity on covers always; submodularity exhaustively for n <= 6, sampled above."""
    n, rho = rank.n, rank._rho
    size = 1 << n
    for mask in range(1, size):
        for i in range(n):
            if mask >> i & 1 and rho[mask] < rho[mask ^ (1 << i)]:
                raise ReconstructionError(f"rank table not monotone at mask {mask:b}")
    if n <= 6:
        pairs = ((a, b) for a in range(size) for b in range(size))
    else:
        rng = random.Random(20240211)
        pairs = ((rng.randrange(size), rng.randrange(size)) for _ in range(2000))
    for a, b in pairs:
        if rho[a | b] + rho[a & b] > rho[a] + rho[b]:
            raise ReconstructionError(f"rank table not submodular at masks {a:b}, {b:b}")


def tau_closed(rank: PolymatroidRank, F: Iterable[int]) -> bool:
    """True when the complementary rank strictly drops on every proper nonempty subset."""
    mask = rank._mask(F)
    if mask == 0:
        raise ValueError("subset must be nonempty")
    t = rank._tau_mask(mask)
    sub = (mask - 1) & mask
    while sub:
        if rank._tau_mask(sub) >= t:
            return False
        sub = (sub - 1) & mask
    return True


def tau_inseparable(rank: PolymatroidRank, F: Iterable[int]) -> bool:
    """True when no two-block partition of F splits the complementary rank additively."""
    mask = rank._mask(F)
    if mask == 0:
        raise ValueError("subset must be nonempty")
    t = rank._tau_mask(mask)
    low = mask & -mask
    sub = (mask - 1) & mask
    while sub:
        if sub & low:  # visit each unordered partition once
            other = mask ^ sub
            if other and rank._tau_mask(sub) + rank._tau_mask(other) == t:
                return False
        sub = (sub - 1) & mask
    return True


@dataclass(frozen=True)
class IntersectionPresentation:
    """An intersection of prime powers P_F^a, possibly including the full set."""

    n: int
    components: tuple[tuple[frozenset[int], int], ...]

    def __post_init__(self):
        seen = set()
        for F, a in self.components:
            if not F:
                raise ValueError("components must use nonempty subsets")
            if F in seen:
                raise ValueError(f"duplicate component subset {sorted(F)}")
            if a < 1:
                raise ValueError(f"component exponent must be >= 1, got {a}")
            seen.add(F)

    @property
    def maximal_power(self) -> Optional[int]:
        """Exponent on the full variable set, None when absent."""
        full = frozenset(range(1, self.n + 1))
        for F, a in self.components:
            if F == full:
                return a
        return None

    @property
    def proper_components(self) -> tuple[tuple[frozenset[int], int], ...]:
        full = frozenset(range(1, self.n + 1))
        return tuple((F, a) for F, a in self.components if F != full)

    def instantiate(self) -> MonomialIdeal:
        return intersect_all([prime_power(F, a, self.n) for F, a in self.components], self.n)

    def render(self) -> str:
        lines = []
        for F, a in self.components:
            members = ",".join(str(i) for i in sorted(F))
            lines.append(f"F = {{{members}}} ^ {a}")
        return "\n".join(lines)


def intersection_presentation(I: MonomialIdeal) -> IntersectionPresentation:
    """Presentation over the tau-closed, tau-inseparable subsets of positive tau.

    The instantiated intersection is compared against the input before
    returning; a mismatch raises ReconstructionError since it would mean
    the table or the filter is wrong, never a property of valid input.
    """
    rank = rank_function(I)
    comps = []
    for F in rank.subsets():
        t = rank.tau(F)
        if t >= 1 and tau_closed(rank, F) and tau_inseparable(rank, F):
            comps.append((F, t))
    comps.sort(key=lambda fa: (len(fa[0]), sorted(fa[0])))
    pres = IntersectionPresentation(I.n, tuple(comps))
    if pres.instantiate() != I:
        raise ReconstructionError("presentation does not reconstruct the ideal")
    return pres


def sat_from_presentation(p: IntersectionPresentation) -> int:
    """Saturation number read off a presentation.

    The part over proper subsets is saturated, so the answer is the
    full-set exponent minus the least degree in that part, clamped at 0;
    a presentation without a full-set component is already saturated.
    """
    d = p.maximal_power
    if d is None:
        return 0
    saturated_part = intersect_all(
        [prime_power(F, a, p.n) for F, a in p.proper_components], p.n)
    return max(0, d - saturated_part.alpha())
