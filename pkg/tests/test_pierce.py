import pytest

import oracles
from spectra.errors import NotIdempotent, NotProper, NotRegular
from spectra.pierce import (
    clopen_bijection,
    clopen_from_idempotent,
    component_partitions,
    components_via_pierce,
    idempotent_algebra,
    is_max_regular,
    is_regular,
    max_regular_ideals,
    max_regular_oracle,
    pierce_spectrum,
    psi,
    psi_fibers,
    psi_preimage_check,
    regular_ideal_generated,
    regular_ideals_oracle,
)
from spectra.poset import clopen_sets, connected_components
from spectra.rings import PolyQuotient, Product, ZMod, ideal_generated, ideal_lattice, spec_poset, zero_ideal

RINGS = [ZMod(n) for n in (2, 4, 6, 12, 30, 36, 60, 210)] + [
    Product([ZMod(4), ZMod(6)]),
    Product([ZMod(2), ZMod(2), ZMod(2)]),
    PolyQuotient(2, [0, 1, 1]),
    PolyQuotient(3, [2, 0, 1]),
]


def mem(I):
    return set(int(x) for x in I.members)


def labels(ps):
    return sorted(ps.labels)


def test_boolean_operations():
    alg = idempotent_algebra(ZMod(6))
    assert alg.join(3, 4) == 1 and alg.meet(3, 4) == 0
    assert alg.complement(0) == 1
    alg30 = idempotent_algebra(ZMod(30))
    assert alg30.complement(16) == 15
    assert sorted(alg30.atoms()) == [6, 10, 15]


def test_regular_generated():
    R = ZMod(30)
    J = regular_ideal_generated(R, [6, 10])
    assert mem(J) == set(range(0, 30, 2))
    assert mem(regular_ideal_generated(R, [0])) == {0}
    assert mem(regular_ideal_generated(ZMod(6), [3, 4])) == set(range(6))
    with pytest.raises(NotIdempotent):
        regular_ideal_generated(R, [2])


def test_max_regular_examples():
    R6 = ZMod(6)
    assert is_max_regular(R6, ideal_generated(R6, [3]))
    assert not is_max_regular(R6, zero_ideal(R6))
    assert is_max_regular(ZMod(4), zero_ideal(ZMod(4)))
    with pytest.raises(NotProper):
        is_max_regular(R6, ideal_generated(R6, [1]))
    with pytest.raises(NotRegular):
        is_max_regular(ZMod(4), ideal_generated(ZMod(4), [2]))
    assert sorted(sorted(mem(J)) for J in max_regular_ideals(R6)) == [[0, 2, 4], [0, 3]]
    assert [mem(J) for J in max_regular_ideals(ZMod(4))] == [{0}]
    labels30 = sorted(J.label for J in max_regular_ideals(ZMod(30)))
    assert labels30 == ["(16)", "(21)", "(25)"]


def test_pierce_space_examples():
    S = pierce_spectrum(ZMod(30))
    assert len(S.points) == 3
    assert sorted(S.points[i].label for i in range(3) if (S.U(16) >> i) & 1) == ["(21)", "(25)"]
    S4 = pierce_spectrum(ZMod(4))
    assert len(S4.points) == 1 and S4.U(0) == 0 and S4.U(1) == 1
    S6 = pierce_spectrum(ZMod(6))
    (i,) = [k for k in range(2) if (S6.U(3) >> k) & 1]
    assert mem(S6.points[i]) == {0, 2, 4}


def test_psi_examples():
    R6 = ZMod(6)
    assert mem(psi(R6, ideal_generated(R6, [2]))) == {0, 2, 4}
    R4 = ZMod(4)
    assert mem(psi(R4, ideal_generated(R4, [2]))) == {0}
    R30 = ZMod(30)
    assert psi(R30, ideal_generated(R30, [3])).label == "(21)"


def test_components_via_pierce_examples():
    assert sorted(labels(b) for b in components_via_pierce(ZMod(6))) == [["(2)"], ["(3)"]]
    (block,) = components_via_pierce(ZMod(4))
    assert block.mask == spec_poset(ZMod(4)).full
    assert sorted(len(b) for b in components_via_pierce(ZMod(30))) == [1, 1, 1]


def test_clopen_examples():
    R = ZMod(6)
    X = spec_poset(R)
    assert clopen_from_idempotent(R, 0).mask == X.full
    assert clopen_from_idempotent(R, 1).mask == 0
    assert clopen_from_idempotent(R, 3).labels == ["(3)"]
    assert len(set(clopen_bijection(R).values())) == 4 == len(clopen_sets(X))


@pytest.mark.parametrize("R", RINGS, ids=lambda R: R.describe())
def test_regular_lattice_against_fixpoint(R):
    add, mul = oracles.tables(R)
    es = oracles.idempotents(mul)
    expected = oracles.all_ideals(add, mul, es)
    assert {frozenset(I.members) for I in regular_ideals_oracle(R)} == expected
    for I in ideal_lattice(R):
        assert is_regular(R, I) == (frozenset(I.members) in expected)


@pytest.mark.parametrize("R", RINGS, ids=lambda R: R.describe())
def test_structure_agrees(R):
    parts = component_partitions(R)
    assert parts["connected"] == parts["psi_fibers"] == parts["max_regular"]
    assert sorted(J.mask for J in max_regular_ideals(R)) == max_regular_oracle(R)
    assert psi_preimage_check(R) is None
    X = spec_poset(R)
    assert sorted(clopen_bijection(R).values()) == sorted(c.mask for c in clopen_sets(X))
    assert len(psi_fibers(R)) == len(connected_components(X))
