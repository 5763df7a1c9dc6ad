"""Shared generators and brute-force oracles for the test suite."""
import random

import idealsat as s


def P(text):
    return s.parse_ideal(text)


TRIANGLE = "n=3; (x1*x2, x1*x3, x2*x3)"
CYCLE5 = "n=5; (x1*x2, x2*x3, x3*x4, x4*x5, x5*x1^2)"


def random_monomial(rng: random.Random, n: int, max_deg: int, min_deg: int = 0) -> s.Monomial:
    d = rng.randint(min_deg, max_deg)
    exps = [0] * n
    for _ in range(d):
        exps[rng.randrange(n)] += 1
    return s.Monomial(tuple(exps))


def random_ideal(rng: random.Random, max_n: int = 4, max_gens: int = 6,
                 max_deg: int = 5, n: int | None = None) -> s.MonomialIdeal:
    """Proper nonzero ideal: every generator has degree >= 1."""
    if n is None:
        n = rng.randint(1, max_n)
    count = rng.randint(1, max_gens)
    gens = [random_monomial(rng, n, max_deg, min_deg=1) for _ in range(count)]
    return s.minimalize(gens, n)


def random_saturated_prime_intersection(rng: random.Random):
    """Intersection of powers of proper monomial primes; saturated by construction."""
    n = rng.randint(2, 4)
    parts = []
    for _ in range(rng.randint(1, 3)):
        size = rng.randint(1, n - 1)
        F = rng.sample(range(1, n + 1), size)
        parts.append(s.prime_power(F, rng.randint(1, 3), n))
    return s.intersect_all(parts, n), n


def compositions(n: int, d: int):
    """All exponent tuples of total degree d in n slots, pure python."""
    if n == 1:
        yield (d,)
        return
    for e in range(d + 1):
        for rest in compositions(n - 1, d - e):
            yield (e,) + rest


def count_in_degree_oracle(I: s.MonomialIdeal, d: int) -> int:
    """Membership count by direct enumeration, independent of the kernels."""
    gens = [g.exps for g in I.gens]
    total = 0
    for w in compositions(I.n, d):
        if any(all(ge <= we for ge, we in zip(g, w)) for g in gens):
            total += 1
    return total


def bounded_monomials(n: int, d: int, k: int):
    """All k-bounded degree-d monomials in n variables."""
    return [s.Monomial(t) for t in compositions(n, d) if max(t) <= k]
