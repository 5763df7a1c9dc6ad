"""Exact arithmetic on monomials and monomial ideals.

A monomial is an exponent vector over a fixed ambient variable count n;
an ideal is its unique minimal generating set, held as a canonically
sorted int64 matrix (one generator per row). Every operation returns a
new canonical value, so ideal equality is matrix equality. All values
are immutable and safe to share across threads.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from . import limits
from .backend import get_kernels
from .errors import DimensionError, LimitError

# Row budget per pairwise block in products and intersections.
_PAIR_BUDGET = 1 << 20


@dataclass(frozen=True)
class Monomial:
    """An exponent vector; the all-zeros vector is the unit monomial 1."""

    exps: tuple[int, ...]

    def __post_init__(self):
        if len(self.exps) == 0:
            raise ValueError("monomial needs at least one variable slot")
        if any(e < 0 for e in self.exps):
            raise ValueError(f"negative exponent in {self.exps}")

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def variable(cls, i: int, n: int) -> Monomial:
        """The monomial x_i (1-based) in n variables."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside 1..{n}")
        return cls(tuple(1 if j == i - 1 else 0 for j in range(n)))

    @classmethod
    def from_indices(cls, indices: Iterable[int], n: int) -> Monomial:
        """Build from a multiset of 1-based variable indices."""
        exps = [0] * n
        for i in indices:
            if not 1 <= i <= n:
                raise ValueError(f"variable index {i} outside 1..{n}")
            exps[i - 1] += 1
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def deg(self, i: int) -> int:
        """Exponent of x_i (1-based)."""
        return self.exps[i - 1]

    @property
    def support(self) -> frozenset[int]:
        """1-based indices of the variables that occur."""
        return frozenset(i + 1 for i, e in enumerate(self.exps) if e > 0)

    @property
    def is_one(self) -> bool:
        return all(e == 0 for e in self.exps)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def bounded_by(self, k: int) -> bool:
        return all(e <= k for e in self.exps)

    def divides(self, other: Monomial) -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def gcd(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def __mul__(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __truediv__(self, other: Monomial) -> Monomial:
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def index_tuple(self) -> tuple[int, ...]:
        """Sorted multiset of 1-based variable indices, one per degree unit."""
        out = []
        for i, e in enumerate(self.exps):
            out.extend([i + 1] * e)
        return tuple(out)

    def sort_key(self) -> tuple:
        """Key matching the canonical generator order: degree, then x1-major."""
        return (self.degree, tuple(-e for e in self.exps))

    def _check(self, other: Monomial) -> None:
        if len(self.exps) != len(other.exps):
            raise DimensionError(
                f"monomials live in {len(self.exps)} and {len(other.exps)} variables")

    def __str__(self) -> str:
        if self.is_one:
            return "1"
        parts = []
        for i, e in enumerate(self.exps):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return str(self)


def _unique_rows(mat: np.ndarray) -> np.ndarray:
    """Distinct rows in unspecified order; packs rows into int64 keys when they fit."""
    if mat.shape[0] <= 1:
        return mat
    n = mat.shape[1]
    maxv = int(mat.max()) if mat.size else 0
    bits = max(1, maxv.bit_length())
    if n * bits <= 62:
        key = np.zeros(mat.shape[0], dtype=np.int64)
        for j in range(n):
            key = (key << bits) | mat[:, j]
        _, idx = np.unique(key, return_index=True)
        return mat[idx]
    return np.unique(mat, axis=0)


def _canonical_matrix(mat: np.ndarray, n: int) -> np.ndarray:
    """Dedupe, enforce guardrails, sort by (degree, lex), drop non-minimal rows."""
    mat = np.ascontiguousarray(mat, dtype=np.int64).reshape(-1, n)
    if mat.size:
        if mat.min() < 0:
            raise ValueError("negative exponent in generator")
        mat = _unique_rows(mat)
        degs = mat.sum(axis=1)
        top = int(degs.max())
        if top > limits.max_degree():
            raise LimitError(
                f"generator degree {top} exceeds cap {limits.max_degree()} "
                "(IDEALSAT_MAX_DEGREE)")
        # Degree ascending, ties broken x1-major (descending lex on exponents).
        order = np.lexsort(tuple(-mat[:, j] for j in range(n - 1, -1, -1)) + (degs,))
        mat = np.ascontiguousarray(mat[order])
        keep = get_kernels().minimal_rows_mask(mat)
        mat = np.ascontiguousarray(mat[keep])
    mat.setflags(write=False)
    return mat


class MonomialIdeal:
    """A monomial ideal in canonical form: minimal generators, fixed order.

    The zero ideal has no generators; the unit ideal is generated by 1.
    Construct through minimalize() / from_monomials() unless the rows are
    already known to be canonical.
    """

    __slots__ = ("n", "_mat", "_hash")

    def __init__(self, n: int, mat: np.ndarray):
        if n < 1:
            raise ValueError(f"ambient variable count must be >= 1, got {n}")
        if n > limits.max_n():
            raise LimitError(
                f"ambient variable count {n} exceeds cap {limits.max_n()} (IDEALSAT_MAX_N)")
        self.n = n
        self._mat = _canonical_matrix(mat, n)
        self._hash = None

    @classmethod
    def from_monomials(cls, monomials: Iterable[Monomial | Sequence[int]], n: int) -> MonomialIdeal:
        rows = []
        for m in monomials:
            exps = m.exps if isinstance(m, Monomial) else tuple(m)
            if len(exps) != n:
                raise DimensionError(f"generator has {len(exps)} exponents, ambient n is {n}")
            rows.append(exps)
        mat = np.array(rows, dtype=np.int64).reshape(-1, n)
        return cls(n, mat)

    # -- basic views ---------------------------------------------------

    @property
    def gens(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(tuple(int(e) for e in row)) for row in self._mat)

    @property
    def num_gens(self) -> int:
        return self._mat.shape[0]

    @property
    def exponent_matrix(self) -> np.ndarray:
        """Read-only (num_gens, n) int64 matrix of generator exponents."""
        return self._mat

    @property
    def is_zero(self) -> bool:
        return self._mat.shape[0] == 0

    @property
    def is_unit(self) -> bool:
        return self._mat.shape[0] == 1 and not self._mat.any()

    @property
    def is_proper(self) -> bool:
        return not (self.is_zero or self.is_unit)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self._mat.shape == other._mat.shape \
            and bool(np.array_equal(self._mat, other._mat))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self._mat.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(str(g) for g in self.gens)
        if self.is_zero:
            body = ""
        return f"n={self.n}; ({body})"

    def _check_same_ring(self, other: MonomialIdeal) -> None:
        if self.n != other.n:
            raise DimensionError(f"ideals live in {self.n} and {other.n} variables")

    def _check_monomial(self, w: Monomial) -> None:
        if w.n != self.n:
            raise DimensionError(f"monomial has {w.n} exponents, ambient n is {self.n}")

    # -- membership and arithmetic -------------------------------------

    def contains(self, w: Monomial) -> bool:
        """True iff some minimal generator divides w."""
        self._check_monomial(w)
        return bool(get_kernels().divides_any(self._mat, np.asarray(w.exps, dtype=np.int64)))

    def __contains__(self, w: Monomial) -> bool:
        return self.contains(w)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._check_same_ring(other)
        return MonomialIdeal(self.n, np.vstack((self._mat, other._mat)))

    def _pairwise(self, other: MonomialIdeal, op) -> MonomialIdeal:
        a, b = self._mat, other._mat
        if a.shape[0] == 0 or b.shape[0] == 0:
            return zero_ideal(self.n)
        if a.shape[0] < b.shape[0]:
            a, b = b, a
        step = max(1, _PAIR_BUDGET // b.shape[0])
        blocks = []
        for s in range(0, a.shape[0], step):
            blocks.append(_unique_rows(op(np.ascontiguousarray(a[s:s + step]), b)))
        return MonomialIdeal(self.n, np.vstack(blocks))

    def __mul__(self, other: MonomialIdeal | Monomial) -> MonomialIdeal:
        if isinstance(other, Monomial):
            self._check_monomial(other)
            if self.is_zero:
                return self
            return MonomialIdeal(self.n, self._mat + np.asarray(other.exps, dtype=np.int64))
        self._check_same_ring(other)
        return self._pairwise(other, get_kernels().pairwise_product)

    def __pow__(self, k: int) -> MonomialIdeal:
        if k < 0:
            raise ValueError(f"ideal power must be >= 0, got {k}")
        if k == 0:
            return unit_ideal(self.n)
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        self._check_same_ring(other)
        return self._pairwise(other, get_kernels().pairwise_lcm)

    def colon(self, other: Monomial | MonomialIdeal) -> MonomialIdeal:
        """Colon ideal self : other, computed generator-wise."""
        if isinstance(other, Monomial):
            self._check_monomial(other)
            if self.is_zero:
                return self
            reduced = self._mat - np.asarray(other.exps, dtype=np.int64)
            return MonomialIdeal(self.n, np.maximum(reduced, 0))
        self._check_same_ring(other)
        if other.is_zero:
            raise ValueError("colon by the zero ideal is undefined")
        result = None
        for u in other.gens:
            part = self.colon(u)
            result = part if result is None else result.intersect(part)
        return result

    def colon_maximal(self) -> MonomialIdeal:
        """Colon by the maximal ideal (x1, ..., xn)."""
        return self.colon(maximal_ideal(self.n))

    # -- degree data ----------------------------------------------------

    def alpha(self) -> int:
        """Least generator degree."""
        if self.is_zero:
            raise ValueError("alpha of the zero ideal is undefined")
        return int(self._mat[0].sum())

    def max_gen_degree(self) -> int:
        if self.is_zero:
            raise ValueError("max_gen_degree of the zero ideal is undefined")
        return int(self._mat[-1].sum())

    def count_in_degree(self, d: int) -> int:
        """Number of degree-d monomials lying in the ideal."""
        if d < 0 or self.is_zero:
            return 0
        degs = self._mat.sum(axis=1)
        relevant = np.ascontiguousarray(self._mat[degs <= d])
        if relevant.shape[0] == 0:
            return 0
        queries = monomials_of_degree(self.n, d)
        return int(get_kernels().membership_mask(relevant, queries).sum())

    def restricted_to_bound(self, k: int) -> MonomialIdeal:
        """Subideal generated by the generators with all exponents <= k."""
        if k < 1:
            raise ValueError(f"bound must be >= 1, got {k}")
        if self.is_zero:
            return self
        keep = (self._mat <= k).all(axis=1)
        return MonomialIdeal(self.n, self._mat[keep])


def minimalize(monomials: Iterable[Monomial | Sequence[int]], n: int) -> MonomialIdeal:
    """Ideal generated by the given monomials, reduced to minimal canonical form."""
    return MonomialIdeal.from_monomials(monomials, n)


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal.from_monomials([], n)


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal.from_monomials([Monomial.one(n)], n)


def maximal_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal.from_monomials([Monomial.variable(i, n) for i in range(1, n + 1)], n)


def monomials_of_degree(n: int, d: int) -> np.ndarray:
    """All exponent vectors of total degree d in n variables, as a read-only matrix."""
    if d < 0:
        raise ValueError(f"degree must be >= 0, got {d}")
    count = math.comb(d + n - 1, n - 1)
    if count > limits.max_enumeration():
        raise LimitError(
            f"degree-{d} enumeration in {n} variables needs {count} rows, "
            f"cap is {limits.max_enumeration()} (IDEALSAT_MAX_ENUMERATION)")
    mat = _compositions(n, d)
    mat.setflags(write=False)
    return mat


def _compositions(n: int, d: int) -> np.ndarray:
    if n == 1:
        return np.array([[d]], dtype=np.int64)
    blocks = []
    for e in range(d + 1):
        rest = _compositions(n - 1, d - e)
        left = np.full((rest.shape[0], 1), e, dtype=np.int64)
        blocks.append(np.hstack((left, rest)))
    return np.vstack(blocks)


def prime_power(members: Iterable[int], a: int, n: int) -> MonomialIdeal:
    """The ideal P_F^a where P_F = (x_i : i in F), F given as 1-based indices."""
    F = sorted(set(members))
    if not F:
        raise ValueError("prime ideal needs a nonempty variable subset")
    if F[0] < 1 or F[-1] > n:
        raise ValueError(f"variable subset {F} outside 1..{n}")
    if a < 0:
        raise ValueError(f"exponent must be >= 0, got {a}")
    if a == 0:
        return unit_ideal(n)
    local = monomials_of_degree(len(F), a)
    mat = np.zeros((local.shape[0], n), dtype=np.int64)
    for col, i in enumerate(F):
        mat[:, i - 1] = local[:, col]
    return MonomialIdeal(n, mat)


def intersect_all(ideals: Sequence[MonomialIdeal], n: int) -> MonomialIdeal:
    """Intersection of the given ideals; the empty intersection is the unit ideal."""
    return reduce(lambda a, b: a.intersect(b), ideals, unit_ideal(n))
