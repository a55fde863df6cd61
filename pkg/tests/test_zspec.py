import itertools
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from spectra.errors import EmptyFamily, InvalidParameter, MixedSpectra, NotOpen
from spectra.poset import FLAT, PATCH, ZARISKI, TopologyView
from spectra.zspec import (
    chain_height,
    complement,
    condition_vi_symbolic,
    intersection,
    is_monic_irreducible,
    is_subset,
    poly_over,
    sym_closure,
    sym_finite_subcover,
    sym_irreducible_components,
    sym_is_closed,
    sym_is_open,
    sym_noetherian,
    integers,
    union,
    zariski_open_intersection,
)

Z = integers()
PRIMES = list(sympy.primerange(2, 60))


def random_set(rng, spectrum=Z):
    pts = rng.sample(PRIMES[:8], rng.randint(0, 3))
    return spectrum.fin(pts, rng.random() < 0.5) if rng.random() < 0.5 else spectrum.cofin(pts, rng.random() < 0.5)


def window(S, bound=60):
    """Membership on every closed point below ``bound`` plus the generic point."""
    return frozenset(q for q in PRIMES if q < bound and q in S) | ({"g"} if S.generic else set())


symsets = st.builds(lambda seed: random_set(random.Random(seed)), st.integers(0, 10**9))


def test_set_algebra_examples():
    S = Z.fin([2, 3])
    C = complement(S)
    assert C.cofinite and C.generic and C.points == (2, 3)
    assert union(Z.fin([2]), Z.fin([3])) == Z.fin([2, 3])
    assert intersection(Z.cofin([2]), Z.cofin([3])) == Z.cofin([2, 3])
    with pytest.raises(InvalidParameter):
        Z.fin([4])
    with pytest.raises(MixedSpectra):
        union(Z.fin([2]), poly_over(2).fin([2]))


@settings(max_examples=200, deadline=None)
@given(symsets, symsets)
def test_set_algebra_pointwise(S, T):
    assert window(union(S, T)) == window(S) | window(T)
    assert window(intersection(S, T)) == window(S) & window(T)
    assert window(complement(S)) | window(S) == window(Z.whole())
    assert not window(complement(S)) & window(S)
    assert is_subset(S, T) == (window(S) <= window(T))


def test_closedness_examples():
    S = Z.fin([2, 3])
    assert sym_is_closed(ZARISKI, S) and not sym_is_closed(FLAT, S)
    assert sym_is_closed(FLAT, Z.fin([7], generic=True))
    assert sym_is_closed(FLAT, Z.cofin([2]))
    for view in TopologyView:
        assert sym_is_closed(view, Z.whole()) and sym_is_closed(view, Z.empty())


def test_closure_examples():
    assert sym_closure(FLAT, Z.fin([2, 3])) == Z.fin([2, 3], generic=True)
    assert sym_closure(ZARISKI, Z.fin([], generic=True)) == Z.whole()
    assert sym_closure(PATCH, Z.cofin([], generic=False)) == Z.whole()


@settings(max_examples=200, deadline=None)
@given(symsets, st.lists(symsets, min_size=5, max_size=12))
def test_closure_is_least_closed_superset(S, others):
    for view in TopologyView:
        c = sym_closure(view, S)
        assert sym_is_closed(view, c) and is_subset(S, c)
        for T in others + [Z.whole()]:
            if sym_is_closed(view, T) and is_subset(S, T):
                assert is_subset(c, T)


@settings(max_examples=200, deadline=None)
@given(symsets, symsets)
def test_closed_sets_form_topology(S, T):
    for view in TopologyView:
        if sym_is_closed(view, S) and sym_is_closed(view, T):
            assert sym_is_closed(view, union(S, T))
            assert sym_is_closed(view, intersection(S, T))
        assert sym_is_open(view, S) == sym_is_closed(view, complement(S))


@settings(max_examples=200, deadline=None)
@given(symsets)
def test_flat_and_zariski_refine_to_patch(S):
    # closed in flat or Zariski implies patch closed; flat closed iff patch closed and contains (0) or empty
    if sym_is_closed(FLAT, S) or sym_is_closed(ZARISKI, S):
        assert sym_is_closed(PATCH, S)
    assert sym_is_closed(FLAT, S) == (sym_is_closed(PATCH, S) and (S.generic or S.is_empty))


def test_components():
    flat = sym_irreducible_components(Z, FLAT)
    assert flat.infinite
    assert flat.materialize(3) == [Z.fin([q], generic=True) for q in (2, 3, 5)]
    assert sym_irreducible_components(Z, ZARISKI).materialize(3) == [Z.whole()]
    F2 = poly_over(2)
    comps = sym_irreducible_components(F2, FLAT).materialize(2)
    assert [c.describe() for c in comps] == ["{x}+generic", "{x+1}+generic"]
    assert flat.generic_point(Z.fin([5], generic=True)) == Z.closed(5)


def test_condition_vi():
    res = condition_vi_symbolic(Z.cofin([], generic=False), Z.generic)
    assert not res.holds and res.witness
    assert condition_vi_symbolic(Z.fin([2, 3]), Z.closed(2)).holds
    assert condition_vi_symbolic(Z.fin([3]), Z.closed(2)).holds
    with pytest.raises(EmptyFamily):
        condition_vi_symbolic(Z.empty(), Z.closed(2))


def test_noetherian():
    assert sym_noetherian(Z) == {"flat": False, "zariski": True, "theorem_4_5_consistent": True}
    assert sym_noetherian(poly_over(3))["flat"] is False
    assert chain_height(Z) == 2
    assert zariski_open_intersection(Z, [[2], [3, 5]]) == Z.cofin([2, 3, 5])
    assert zariski_open_intersection(Z, [], all_points=True) is None


def test_finite_subcover():
    assert sym_finite_subcover([Z.whole()]) == ([Z.whole()], None)
    assert sym_finite_subcover([Z.fin([2]), Z.fin([3, 5])]) == (None, Z.generic)
    assert sym_finite_subcover([Z.whole(), Z.fin([2])]) == ([Z.whole()], None)
    with pytest.raises(NotOpen):
        sym_finite_subcover([Z.fin([], generic=True)])


@pytest.mark.parametrize("p,max_deg", [(2, 6), (3, 4), (5, 3)])
def test_irreducibility_against_sympy(p, max_deg):
    x = sympy.Symbol("x")
    for d in range(1, max_deg + 1):
        for low in itertools.product(range(p), repeat=d):
            digits = list(low) + [1]
            poly = sympy.Poly(list(reversed(digits)), x, modulus=p)
            assert is_monic_irreducible(digits, p) == poly.is_irreducible, digits


def test_closed_points_enumeration():
    assert Z.closed_points(5) == [2, 3, 5, 7, 11]
    F2 = poly_over(2)
    assert [F2.format_point(q) for q in F2.closed_points(5)] == ["x", "x+1", "x^2+x+1", "x^3+x+1", "x^3+x^2+1"]


@pytest.mark.parametrize("spectrum", [integers(), poly_over(2), poly_over(5)], ids=lambda s: s.name)
def test_open_intersections_track_prime_intersections(spectrum):
    # finitely many excluded points: the intersection stays open, and the
    # matching finite prime families satisfy the intersection condition
    pts = spectrum.closed_points(4)
    families = [pts[:1], pts[1:3], pts[:4]]
    assert zariski_open_intersection(spectrum, families) == spectrum.cofin(pts)
    for fam in families:
        for q in pts:
            assert condition_vi_symbolic(spectrum.fin(fam), spectrum.closed(q)).holds
    # all closed points excluded: not open, and the infinite family is the witness
    assert zariski_open_intersection(spectrum, [], all_points=True) is None
    assert not condition_vi_symbolic(spectrum.cofin([], generic=False), spectrum.generic).holds
