import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from spectra.errors import AxiomViolation, EmptyFamily, InvalidParameter, MixedRings, NotIdempotent, SizeBound
from spectra.rings import (
    D,
    IdempotentLocalization,
    PolyQuotient,
    Product,
    QuotientBy,
    Table,
    V,
    ZMod,
    check_condition_vi,
    check_ring_axioms,
    condition_vi_finite,
    enumerate_primes,
    ideal_generated,
    ideal_intersection,
    ideal_lattice,
    ideal_product,
    ideal_sum,
    idempotents,
    induced_spec_map,
    is_prime_ideal,
    make_ring,
    quotient_ring,
    radical,
    spec_poset,
    zero_ideal,
)

SMALL = [ZMod(n) for n in (2, 4, 6, 8, 9, 12, 18, 30)] + [
    Product([ZMod(2), ZMod(2)]),
    Product([ZMod(2), ZMod(4)]),
    Product([ZMod(3), ZMod(4)]),
    PolyQuotient(2, [0, 0, 1]),
    PolyQuotient(2, [1, 1, 1]),
    PolyQuotient(3, [0, 1, 1]),
    PolyQuotient(2, [1, 0, 1, 1]),
]


def members(I):
    return set(I.members)


# -- presentations ---------------------------------------------------------


def test_zmod_carrier():
    R = ZMod(6)
    assert R.size == 6 and list(R.elements()) == list(range(6))
    assert int(R.mul(4, 5)) == 2 and int(R.neg(1)) == 5


@pytest.mark.parametrize("bad", [0, 1, -3, True, 2.5])
def test_zmod_rejects(bad):
    with pytest.raises(InvalidParameter):
        ZMod(bad)


def test_polyquotient_arithmetic():
    # F_2[x]/(x^2+x+1): x * x = x + 1
    F4 = PolyQuotient(2, [1, 1, 1])
    x = 2
    assert int(F4.mul(x, x)) == 3
    assert F4.format_element(3) == "x+1"
    # F_3[x]/(x^2): x^2 = 0, (1+x)(1+2x) = 1 + 3x = 1
    R = PolyQuotient(3, [0, 0, 1])
    assert int(R.mul(3, 3)) == 0
    assert int(R.mul(1 + 3, 1 + 6)) == 1


def test_polyquotient_normalises_leading_coefficient():
    assert PolyQuotient(3, [1, 0, 2]).size == 9
    with pytest.raises(InvalidParameter):
        PolyQuotient(4, [1, 1])
    with pytest.raises(InvalidParameter):
        PolyQuotient(2, [1, 0, 0])


@pytest.mark.parametrize("R", SMALL, ids=lambda R: R.describe())
def test_axioms_hold(R):
    check_ring_axioms(R)


def test_noncommutative_table_rejected():
    # 2x2 matrices are too big; a commutative + with a lopsided * suffices
    add = [[(a + b) % 3 for b in range(3)] for a in range(3)]
    mul = [[(a * b) % 3 for b in range(3)] for a in range(3)]
    mul[1][2] = 0
    with pytest.raises(AxiomViolation) as exc:
        Table(add, mul, 0, 1)
    assert exc.value.witness


def test_table_roundtrip():
    R = ZMod(6)
    add, mul = oracles.tables(R)
    T = Table(add, mul, 0, 1)
    again = Table.from_dict(json.loads(json.dumps(T.to_dict())))
    assert again == T
    assert [int(e) for e in idempotents(T)] == [0, 1, 3, 4]


def test_product_of_coprime_cyclics_is_cyclic():
    P = Product([ZMod(2), ZMod(3)])
    assert P.size == 6
    assert oracles.isomorphic(oracles.tables(P), oracles.tables(ZMod(6)), P.one, 1) is not None
    Q = Product([ZMod(2), ZMod(2)])
    assert oracles.isomorphic(oracles.tables(Q), oracles.tables(ZMod(4)), Q.one, 1) is None


def test_make_ring():
    assert make_ring("zmod", 6) == ZMod(6)
    assert make_ring("product", ZMod(2), ZMod(3)) == Product([ZMod(2), ZMod(3)])
    with pytest.raises(InvalidParameter):
        make_ring("matrix", 2)


def test_tabulated_and_direct_arithmetic_agree():
    R = Product([ZMod(6), PolyQuotient(2, [1, 1, 1])])
    assert R._tables is not None
    e = R.elements()
    assert np.array_equal(R.add(e[:, None], e[None, :]), R._add(e[:, None], e[None, :]))
    assert np.array_equal(R.mul(e[:, None], e[None, :]), R._mul(e[:, None], e[None, :]))


# -- ideals ----------------------------------------------------------------


def test_generated_examples():
    R = ZMod(6)
    assert members(ideal_generated(R, [3])) == {0, 3}
    assert members(ideal_generated(R, [])) == {0}
    assert members(ideal_generated(R, [4])) == {0, 2, 4}


@pytest.mark.parametrize("R", SMALL, ids=lambda R: R.describe())
def test_lattice_matches_fixpoint_oracle(R):
    add, mul = oracles.tables(R)
    expected = oracles.all_ideals(add, mul)
    got = {frozenset(int(x) for x in I.members) for I in ideal_lattice(R)}
    assert got == expected
    for I in ideal_lattice(R)[:6]:
        assert members(ideal_generated(R, I.minimal_generators)) == members(I)


@pytest.mark.parametrize("R", SMALL, ids=lambda R: R.describe())
def test_primes_match_pair_scan(R):
    add, mul = oracles.tables(R)
    expected = oracles.primes(add, mul, R.one)
    assert {frozenset(P.members) for P in enumerate_primes(R)} == expected
    for I in ideal_lattice(R):
        assert is_prime_ideal(R, I) == (frozenset(I.members) in expected)


def test_prime_examples():
    R = ZMod(6)
    assert is_prime_ideal(R, ideal_generated(R, [3]))
    assert not is_prime_ideal(R, zero_ideal(R))
    assert not is_prime_ideal(R, ideal_generated(R, [1]))
    assert {frozenset(P.members) for P in enumerate_primes(R)} == {frozenset({0, 2, 4}), frozenset({0, 3})}
    assert [set(P.members) for P in enumerate_primes(ZMod(4))] == [{0, 2}]
    F = PolyQuotient(2, [1, 1, 1])
    assert [set(P.members) for P in enumerate_primes(F)] == [{0}]


def test_ideal_operations():
    R = ZMod(12)
    I, J = ideal_generated(R, [4]), ideal_generated(R, [6])
    assert members(ideal_sum(I, J)) == {0, 2, 4, 6, 8, 10}
    assert members(ideal_product(I, J)) == {0}
    assert members(ideal_intersection(I, J)) == {0}
    assert members(radical(I)) == {0, 2, 4, 6, 8, 10}
    assert members(ideal_sum(I, zero_ideal(R))) == members(I)
    with pytest.raises(MixedRings):
        ideal_sum(I, zero_ideal(ZMod(6)))


@pytest.mark.parametrize("R", SMALL, ids=lambda R: R.describe())
def test_radical_is_intersection_of_primes(R):
    primes = [members(P) for P in enumerate_primes(R)]
    for I in ideal_lattice(R):
        above = [P for P in primes if members(I) <= P]
        expected = set.intersection(*above) if above else set(range(R.size))
        assert members(radical(I)) == expected


def test_quotient_ring():
    R = ZMod(6)
    Q = quotient_ring(R, ideal_generated(R, [3]))
    assert Q.size == 3
    check_ring_axioms(Q)
    Q2 = quotient_ring(R, ideal_generated(R, [2]))
    assert Q2.size == 2 and [int(e) for e in idempotents(Q2)] == [0, 1]
    T = Q.to_table()
    assert oracles.isomorphic(oracles.tables(T), oracles.tables(ZMod(3)), T.one, 1) is not None


# -- idempotents and spectra ------------------------------------------------


def test_idempotent_examples():
    assert idempotents(ZMod(6)) == [0, 1, 3, 4]
    assert idempotents(ZMod(4)) == [0, 1]
    assert idempotents(ZMod(30)) == [0, 1, 6, 10, 15, 16, 21, 25]


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 400))
def test_idempotents_against_scan(n):
    assert idempotents(ZMod(n)) == [e for e in range(n) if e * e % n == e]


def test_spec_poset_shapes():
    X = spec_poset(ZMod(6))
    assert X.size == 2 and not X.relation()
    assert spec_poset(PolyQuotient(2, [1, 1, 1])).size == 1
    X30 = spec_poset(ZMod(30))
    assert X30.size == 3 and not X30.relation()
    assert sorted(X30.labels) == ["(2)", "(3)", "(5)"]


def test_V_and_D():
    R = ZMod(6)
    X = spec_poset(R)
    assert V(R, 3).labels == ["(3)"]
    assert D(R, 4).labels == ["(3)"]
    assert (V(R, 0).mask, D(R, 1).mask) == (X.full, X.full)


def test_induced_maps():
    R = ZMod(6)
    m = induced_spec_map(R, QuotientBy(ideal_generated(R, [3])))
    assert m.image.labels == ["(3)"]
    assert m.image.mask == V(R, 3).mask
    ident = induced_spec_map(R, QuotientBy(zero_ideal(R)))
    assert ident.image.mask == spec_poset(R).full
    loc = induced_spec_map(R, IdempotentLocalization(4))
    assert loc.image.labels == ["(3)"] and loc.image.mask == D(R, 4).mask
    assert all(loc.closed.values())
    with pytest.raises(NotIdempotent):
        induced_spec_map(R, IdempotentLocalization(2))


def test_condition_vi_finite():
    R = ZMod(6)
    p2, p3 = ideal_generated(R, [2]), ideal_generated(R, [3])
    assert condition_vi_finite(R, [p2, p3], p2)
    assert condition_vi_finite(R, [p3], p2)
    assert condition_vi_finite(R, [p2], p2)
    with pytest.raises(EmptyFamily):
        condition_vi_finite(R, [], p2)
    for n in (6, 30, 210, 12):
        assert check_condition_vi(ZMod(n)) == (True, None)


def test_size_bounds():
    with pytest.raises(SizeBound):
        enumerate_primes(ZMod(5000))
