"""Idempotents, regular ideals and the Pierce spectrum.

Naming of the Boolean operations on idempotents:

* ``meet(e, f) = e*f``
* ``join(e, f) = e + f - e*f``
* ``complement(e) = 1 - e``

Some texts write ``e + f - e*f`` with a wedge symbol; here it is ``join``,
and the cover identity reads ``U_e | U_f == U_join(e, f)``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from . import bits
from .errors import NotIdempotent, NotProper, NotRegular, SizeBound
from .poset import connected_components
from .rings import (
    FiniteRing,
    Ideal,
    PrimeIdeal,
    QuotientRing,
    _as_mask,
    ideal_generated,
    ideal_sum,
    idempotents,
    spec_poset,
    vanishing_set,
)

REGULAR_ORACLE_BOUND = 256
AXIOM_TRIPLE_BOUND = 128


@dataclass(frozen=True)
class IdempotentAlgebra:
    ring: FiniteRing
    elements: tuple

    def meet(self, e, f):
        return int(self.ring.mul(e, f))

    def join(self, e, f):
        r = self.ring
        return int(r.sub(r.add(e, f), r.mul(e, f)))

    def complement(self, e):
        return int(self.ring.sub(self.ring.one, e))

    def leq(self, e, f):
        return self.meet(e, f) == e

    @property
    def bottom(self):
        return self.ring.zero

    @property
    def top(self):
        return self.ring.one

    def atoms(self):
        """Minimal non-zero idempotents."""
        nonzero = [e for e in self.elements if e != self.bottom]
        return [a for a in nonzero
                if not any(b != a and self.leq(b, a) for b in nonzero)]

    def join_all(self, es):
        return functools.reduce(self.join, es, self.bottom)

    def meet_all(self, es):
        return functools.reduce(self.meet, es, self.top)


def _check_boolean_axioms(alg: IdempotentAlgebra):
    r = alg.ring
    E = np.array(alg.elements, dtype=np.int64)
    member = np.zeros(r.size, dtype=bool)
    member[E] = True
    a, b = E[:, None], E[None, :]
    meet = r.mul(a, b)
    join = r.sub(r.add(a, b), meet)
    comp = r.sub(r.one, E)
    assert member[meet].all() and member[join].all() and member[comp].all(), "not closed"
    assert (r.mul(E, comp) == r.zero).all(), "e meet (1-e) != 0"
    assert (r.sub(r.add(E, comp), r.mul(E, comp)) == r.one).all(), "e join (1-e) != 1"
    # absorption: a meet (a join b) = a, a join (a meet b) = a
    assert (r.mul(a, join) == a).all(), "absorption (meet over join)"
    assert (r.sub(r.add(a, meet), r.mul(a, meet)) == a).all(), "absorption (join over meet)"
    if len(E) <= AXIOM_TRIPLE_BOUND:
        x, y, z = E[:, None, None], E[None, :, None], E[None, None, :]
        yz_join = r.sub(r.add(y, z), r.mul(y, z))
        left = r.mul(x, yz_join)
        xy, xz = r.mul(x, y), r.mul(x, z)
        right = r.sub(r.add(xy, xz), r.mul(xy, xz))
        assert (left == right).all(), "distributivity"


@functools.lru_cache(maxsize=4096)
def idempotent_algebra(ring: FiniteRing) -> IdempotentAlgebra:
    """Boolean algebra on the idempotents, axioms checked on construction
    (distributivity exhaustively up to ``AXIOM_TRIPLE_BOUND`` elements)."""
    alg = IdempotentAlgebra(ring, tuple(idempotents(ring)))
    _check_boolean_axioms(alg)
    return alg


def _require_idempotents(ring, es):
    es = [ring._check_element(e) for e in es]
    for e in es:
        if int(ring.mul(e, e)) != e:
            raise NotIdempotent(f"{ring.format_element(e)} is not idempotent")
    return es


def regular_ideal_generated(ring: FiniteRing, generators) -> Ideal:
    """Ideal generated by idempotents; it is principal, generated by their join."""
    es = _require_idempotents(ring, generators)
    I = ideal_generated(ring, es)
    alg = IdempotentAlgebra(ring, ())
    j = alg.join_all(es)
    assert ideal_generated(ring, [j]).mask == I.mask, "regular ideal not principal on the join"
    return Ideal(ring, I.mask, tuple(es), regular=True)


def _idempotents_in(ring, mask):
    return [e for e in idempotents(ring) if (mask >> e) & 1]


def is_regular(ring, ideal) -> bool:
    mask = _as_mask(ring, ideal)
    return ideal_generated(ring, _idempotents_in(ring, mask)).mask == mask


def is_max_regular(ring: FiniteRing, J) -> bool:
    """A proper regular ideal is max-regular iff R/J has only 0 and 1 as
    idempotents."""
    mask = _as_mask(ring, J)
    ideal = J.ideal if isinstance(J, PrimeIdeal) else J
    if (mask >> ring.one) & 1:
        raise NotProper(f"{ideal.label} is the whole ring")
    if not is_regular(ring, ideal):
        raise NotRegular(f"{ideal.label} is not generated by idempotents")
    return len(idempotents(QuotientRing(ideal))) == 2


@dataclass(frozen=True)
class MaxRegularIdeal:
    ideal: Ideal
    generating_idempotents: tuple

    @property
    def mask(self):
        return self.ideal.mask

    @property
    def members(self):
        return self.ideal.members

    @property
    def label(self):
        ring = self.ideal.ring
        return "(" + ",".join(ring.format_element(e) for e in self.generating_idempotents) + ")"

    def __contains__(self, x):
        return x in self.ideal


@functools.lru_cache(maxsize=4096)
def _max_regular(ring):
    alg = idempotent_algebra(ring)
    out = []
    for a in alg.atoms():
        g = alg.complement(a)
        J = regular_ideal_generated(ring, [g])
        assert is_max_regular(ring, J), f"atom complement {g} not max-regular"
        out.append(MaxRegularIdeal(J, (g,)))
    out.sort(key=lambda J: J.mask)
    return tuple(out)


def max_regular_ideals(ring: FiniteRing):
    """One max-regular ideal ``((1 - a))`` per atom ``a``, sorted by members."""
    return list(_max_regular(ring))


def regular_ideals_oracle(ring: FiniteRing, bound=REGULAR_ORACLE_BOUND):
    """All regular ideals by brute force: the closure of ``{(e)}`` under sums."""
    if ring.size > bound:
        raise SizeBound("regular ideal enumeration", ring.size, bound)
    principal = {ideal_generated(ring, [e]).mask for e in idempotents(ring)}
    found = set(principal)
    queue = list(found)
    while queue:
        m = queue.pop()
        for p in principal:
            s = ideal_sum(Ideal(ring, m), Ideal(ring, p)).mask
            if s not in found:
                found.add(s)
                queue.append(s)
    return [Ideal(ring, m, regular=True) for m in sorted(found)]


def max_regular_oracle(ring: FiniteRing, bound=REGULAR_ORACLE_BOUND):
    """Masks of the maximal proper regular ideals, by inclusion scan."""
    one = 1 << ring.one
    proper = [I.mask for I in regular_ideals_oracle(ring, bound) if not I.mask & one]
    return sorted(m for m in proper if not any(o != m and m & ~o == 0 for o in proper))


@dataclass(frozen=True)
class PierceSpace:
    ring: FiniteRing
    points: tuple
    basis: dict  # idempotent -> mask over points of U_e = {J : e not in J}

    def U(self, e):
        return self.basis[int(e)]


def pierce_spectrum(ring: FiniteRing) -> PierceSpace:
    points = tuple(max_regular_ideals(ring))
    alg = idempotent_algebra(ring)
    basis = {e: bits.mask_of(i for i, J in enumerate(points) if e not in J) for e in alg.elements}
    every = bits.full(len(points))
    assert basis[ring.one] == every
    assert len({J.mask for J in points}) == len(points)
    E = np.array(alg.elements, dtype=np.int64)
    U = np.zeros(ring.size, dtype=object)
    for e, m in basis.items():
        U[e] = m
    meet = ring.mul(E[:, None], E[None, :])
    join = ring.sub(ring.add(E[:, None], E[None, :]), meet)
    Ue = U[E]
    assert (U[ring.sub(ring.one, E)] == (every & ~Ue)).all()
    assert (U[meet] == (Ue[:, None] & Ue[None, :])).all()
    assert (U[join] == (Ue[:, None] | Ue[None, :])).all()
    return PierceSpace(ring, points, basis)


def psi(ring: FiniteRing, prime) -> MaxRegularIdeal:
    """The regular ideal generated by the idempotents inside ``prime``."""
    mask = _as_mask(ring, prime)
    inside = _idempotents_in(ring, mask)
    J = ideal_generated(ring, inside)
    for point in _max_regular(ring):
        if point.mask == J.mask:
            return point
    raise AssertionError(f"image of {prime!r} is not max-regular")


def psi_fibers(ring: FiniteRing):
    """Point sets of spec_poset(ring), one per Pierce point (in point order)."""
    X = spec_poset(ring)
    points = _max_regular(ring)
    where = {J.mask: k for k, J in enumerate(points)}
    fibers = [0] * len(points)
    for i, P in enumerate(X.points):
        fibers[where[psi(ring, P).mask]] |= 1 << i
    return [X.subset(m) for m in fibers]


def psi_preimage_check(ring: FiniteRing):
    """psi^-1(U_e) == D(e) == V(1-e) for every idempotent; first failure or None."""
    X = spec_poset(ring)
    space = pierce_spectrum(ring)
    images = [space.points.index(psi(ring, P)) for P in X.points]
    alg = idempotent_algebra(ring)
    for e in alg.elements:
        pre = bits.mask_of(i for i, k in enumerate(images) if (space.U(e) >> k) & 1)
        d = bits.mask_of(i for i, P in enumerate(X.points) if e not in P)
        v = vanishing_set(ring, ideal_generated(ring, [alg.complement(e)])).mask
        if not pre == d == v:
            return e
    return None


def components_via_pierce(ring: FiniteRing):
    """V(J) for each max-regular J, ordered by least member."""
    blocks = [vanishing_set(ring, J.ideal) for J in _max_regular(ring)]
    return sorted(blocks, key=lambda s: (s.mask & -s.mask, s.mask))


def component_partitions(ring: FiniteRing):
    """The three partitions of Spec(R): poset components, psi-fibers, and
    {V(J)}; each as a sorted list of masks."""
    X = spec_poset(ring)
    return {
        "connected": sorted(c.mask for c in connected_components(X)),
        "psi_fibers": sorted(f.mask for f in psi_fibers(ring)),
        "max_regular": sorted(b.mask for b in components_via_pierce(ring)),
    }


def clopen_from_idempotent(ring: FiniteRing, e):
    (e,) = _require_idempotents(ring, [e])
    return vanishing_set(ring, ideal_generated(ring, [e]))


def clopen_bijection(ring: FiniteRing):
    """``{e: V(e) mask}`` over all idempotents."""
    return {e: clopen_from_idempotent(ring, e).mask for e in idempotents(ring)}

