"""Exchange axiom, rank tables, tau predicates, intersection presentations."""
import pytest

import idealsat as s
from idealsat import verify
from idealsat.errors import LimitError
from idealsat.polymatroid import IntersectionPresentation

from helpers import P


def test_is_polymatroidal_positives():
    for n in range(1, 5):
        for d in range(1, n + 1):
            assert s.is_polymatroidal(s.veronese(d, n)).ok
    assert s.is_polymatroidal(s.borel_closure_of(s.Monomial.from_indices((2, 3), 3))).ok
    assert s.is_polymatroidal(s.maximal_ideal(4) ** 3).ok
    assert s.is_polymatroidal(s.unit_ideal(2)).ok


def test_is_polymatroidal_negatives():
    chk = s.is_polymatroidal(P("n=2; (x1^2, x2^2)"))
    assert not chk.ok
    assert chk.witness == (s.Monomial((2, 0)), s.Monomial((0, 2)), 1)
    mixed = s.is_polymatroidal(P("n=2; (x1, x2^2)"))
    assert not mixed.ok and "degree" in mixed.reason
    assert not s.is_polymatroidal(s.zero_ideal(2)).ok
    assert bool(chk) is False


def test_rank_function_capped_degree_ideal():
    for n in (3, 4):
        rank = s.rank_function(verify.capped_degree_ideal(3, 2, n))
        assert rank.degree == 3
        assert rank.rho(()) == 0
        for i in range(1, n + 1):
            assert rank.rho((i,)) == 2
        assert rank.rho((1, 2)) == 3
        assert rank.rho(range(1, n + 1)) == 3
        subsets = list(rank.subsets())
        for F in subsets:
            size = len(F)
            if size <= n - 2:
                assert rank.tau(F) == 0
            elif size == n - 1:
                assert rank.tau(F) == 1
            else:
                assert rank.tau(F) == 3


def test_rank_function_triangle():
    rank = s.rank_function(P("n=3; (x1*x2, x1*x3, x2*x3)"))
    assert rank.degree == 2
    for i in (1, 2, 3):
        assert rank.tau((i,)) == 0
    for pair in [(1, 2), (1, 3), (2, 3)]:
        assert rank.tau(pair) == 1
    assert rank.tau((1, 2, 3)) == 2


def test_rank_function_maximal():
    n = 4
    rank = s.rank_function(s.maximal_ideal(n))
    for F in rank.subsets():
        assert rank.rho(F) == 1
        assert rank.tau(F) == (1 if len(F) == n else 0)


def test_rank_function_preconditions(monkeypatch):
    with pytest.raises(ValueError):
        s.rank_function(P("n=2; (x1^2, x2^2)"))
    monkeypatch.setenv("IDEALSAT_MAX_N", "20")
    with pytest.raises(LimitError):
        s.rank_function(s.maximal_ideal(17))


def test_tau_predicates_triangle():
    rank = s.rank_function(P("n=3; (x1*x2, x1*x3, x2*x3)"))
    assert s.tau_closed(rank, (1, 2))
    assert s.tau_inseparable(rank, (1, 2))
    assert s.tau_closed(rank, (1, 2, 3))
    assert s.tau_inseparable(rank, (1, 2, 3))
    # singletons have no nonempty proper subsets, so they are closed vacuously
    assert s.tau_closed(rank, (1,))
    assert s.tau_inseparable(rank, (1,))
    with pytest.raises(ValueError):
        s.tau_closed(rank, ())
    with pytest.raises(ValueError):
        s.tau_inseparable(rank, ())


def test_tau_separable_case():
    # transversal product: tau is additive across the two factor supports
    n = 4
    I = s.prime_power((1, 2), 1, n) * s.prime_power((3, 4), 1, n)
    rank = s.rank_function(I)
    assert rank.tau((1, 2)) == 1 and rank.tau((3, 4)) == 1
    assert rank.tau((1, 2, 3, 4)) == 2
    assert not s.tau_inseparable(rank, (1, 2, 3, 4))


def test_intersection_presentation_examples():
    tri = P("n=3; (x1*x2, x1*x3, x2*x3)")
    pres = s.intersection_presentation(tri)
    assert pres.components == (
        (frozenset({1, 2}), 1), (frozenset({1, 3}), 1), (frozenset({2, 3}), 1),
        (frozenset({1, 2, 3}), 2))
    closure = s.borel_closure_of(s.Monomial.from_indices((2, 3), 3))
    pres2 = s.intersection_presentation(closure)
    assert pres2.components == ((frozenset({1, 2}), 1), (frozenset({1, 2, 3}), 2))
    for n in (3, 4):
        capped = verify.capped_degree_ideal(3, 2, n)
        pres3 = s.intersection_presentation(capped)
        full = frozenset(range(1, n + 1))
        assert (full, 3) in pres3.components
        proper = pres3.proper_components
        assert all(len(F) == n - 1 and a == 1 for F, a in proper)
        assert len(proper) == n
        assert pres3.instantiate() == capped


def test_presentation_roundtrip_battery():
    for name, ideal in verify.presentation_battery():
        pres = s.intersection_presentation(ideal)
        assert pres.instantiate() == ideal, name
        # the closed-form saturation number agrees with the colon chain
        assert s.sat_from_presentation(pres) == s.saturate(ideal).sat_number, name


def test_presentation_renders():
    pres = s.intersection_presentation(P("n=3; (x1*x2, x1*x3, x2*x3)"))
    lines = pres.render().splitlines()
    assert lines[0] == "F = {1,2} ^ 1"
    assert lines[-1] == "F = {1,2,3} ^ 2"


def test_presentation_validation():
    with pytest.raises(ValueError):
        IntersectionPresentation(3, ((frozenset(), 1),))
    with pytest.raises(ValueError):
        IntersectionPresentation(3, ((frozenset({1}), 0),))
    with pytest.raises(ValueError):
        IntersectionPresentation(3, ((frozenset({1}), 1), (frozenset({1}), 2)))


def test_sat_from_presentation():
    n = 4
    four_primes = tuple((frozenset(F), 1) for F in [(1, 2), (2, 3), (2, 4), (3, 4)])
    pres = IntersectionPresentation(n, four_primes + ((frozenset(range(1, n + 1)), 5),))
    assert s.sat_from_presentation(pres) == 3
    assert s.saturate(pres.instantiate()).sat_number == 3
    # no maximal component: already saturated
    assert s.sat_from_presentation(IntersectionPresentation(n, four_primes)) == 0
    for n2 in (3, 4):
        pres2 = s.intersection_presentation(verify.capped_degree_ideal(3, 2, n2))
        assert s.sat_from_presentation(pres2) == 1
    # pure maximal power
    pres3 = s.intersection_presentation(s.maximal_ideal(3) ** 2)
    assert s.sat_from_presentation(pres3) == 2


def test_sat_from_presentation_small_cap():
    # cap below the least degree of the saturated part clamps to zero
    n = 3
    pres = IntersectionPresentation(
        n, ((frozenset({1, 2}), 2), (frozenset(range(1, n + 1)), 1)))
    assert s.sat_from_presentation(pres) == 0
    assert s.saturate(pres.instantiate()).sat_number == 0


def test_power_and_bound_preservation():
    closure = s.borel_closure_of(s.Monomial.from_indices((2, 3), 3))
    samples = [P("n=3; (x1*x2, x1*x3, x2*x3)"), closure, s.veronese(2, 4)]
    for I in samples:
        for k in (2, 3):
            assert s.is_polymatroidal(I ** k).ok
        for k in (1, 2, 3):
            restricted = s.restrict_bounded(I, k)
            if not restricted.is_zero:
                assert s.is_polymatroidal(restricted).ok
