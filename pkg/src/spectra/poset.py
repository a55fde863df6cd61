"""Finite spectral spaces as finite posets under specialization.

A point ``a`` lies below ``b`` (``a <= b``) when ``b`` is in the Zariski
closure of ``a``; for a ring spectrum this is inclusion of primes.

On a finite spectral space the patch topology is Hausdorff, hence
discrete.  A set is flat closed iff it is patch closed and stable under
generalization, and Zariski closed iff it is patch closed and stable under
specialization.  So here:

* flat closed    <=> down-set
* Zariski closed <=> up-set
* patch closed   <=> any subset

Subsets are int bit masks; listings are ordered by mask value.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field

from . import bits
from .errors import CycleDetected, InvalidParameter, NotClosed, SizeBound

CLOPEN_COMPONENT_BOUND = 20


class TopologyView(enum.Enum):
    ZARISKI = "zariski"
    FLAT = "flat"
    PATCH = "patch"

    @classmethod
    def parse(cls, text):
        try:
            return cls(str(text).strip().lower())
        except ValueError:
            raise InvalidParameter(f"unknown topology {text!r}") from None


ZARISKI, FLAT, PATCH = TopologyView.ZARISKI, TopologyView.FLAT, TopologyView.PATCH


@dataclass(frozen=True)
class SpectralPoset:
    size: int
    up: tuple  # up[a]: mask of all b with a <= b
    labels: tuple
    points: tuple = field(default=None, compare=False, repr=False)

    @functools.cached_property
    def down(self):
        down = [0] * self.size
        for a, m in enumerate(self.up):
            for b in bits.iter_bits(m):
                down[b] |= 1 << a
        return tuple(down)

    @property
    def full(self):
        return bits.full(self.size)

    def leq(self, a, b):
        return bool((self.up[a] >> b) & 1)

    def relation(self):
        """Strict pairs ``(a, b)`` with ``a < b``, sorted."""
        return [(a, b) for a in range(self.size) for b in bits.iter_bits(self.up[a]) if a != b]

    def covers(self):
        """Hasse diagram edges: ``a < b`` with nothing strictly between."""
        out = []
        for a, b in self.relation():
            between = self.up[a] & self.down[b] & ~((1 << a) | (1 << b))
            if not between:
                out.append((a, b))
        return out

    def maximal(self):
        return [a for a in range(self.size) if self.up[a] == 1 << a]

    def minimal(self):
        return [a for a in range(self.size) if self.down[a] == 1 << a]

    def index(self, item):
        if type(item) is int and 0 <= item < self.size:
            return item
        if isinstance(item, str):
            try:
                return self.labels.index(item)
            except ValueError:
                raise InvalidParameter(f"no point labelled {item!r}") from None
        i = int(item)
        if not 0 <= i < self.size:
            raise InvalidParameter(f"point {i} outside poset of size {self.size}")
        return i

    def pointset(self, items=()) -> "PointSet":
        return PointSet(self, bits.mask_of(self.index(i) for i in items))

    def subset(self, mask) -> "PointSet":
        if mask & ~self.full:
            raise InvalidParameter("mask has bits outside the poset")
        return PointSet(self, mask)

    def __repr__(self):
        rel = ", ".join(f"{self.labels[a]}<{self.labels[b]}" for a, b in self.covers())
        return f"SpectralPoset(size={self.size}, covers=[{rel}])"


@dataclass(frozen=True)
class PointSet:
    poset: SpectralPoset = field(repr=False)
    mask: int

    @property
    def members(self):
        return bits.members(self.mask)

    @property
    def labels(self):
        return [self.poset.labels[i] for i in self.members]

    def __iter__(self):
        return bits.iter_bits(self.mask)

    def __len__(self):
        return bits.popcount(self.mask)

    def __contains__(self, i):
        return bool((self.mask >> int(i)) & 1)

    def complement(self):
        return PointSet(self.poset, self.poset.full & ~self.mask)

    def __or__(self, other):
        return PointSet(self.poset, self.mask | other.mask)

    def __and__(self, other):
        return PointSet(self.poset, self.mask & other.mask)

    def __le__(self, other):
        return self.mask & ~other.mask == 0


def make_poset(size, relation=(), labels=None, points=None) -> SpectralPoset:
    """Build a poset from covering or full relation pairs ``(a, b)`` meaning
    ``a <= b``.  Reflexive-transitive closure is taken; a cycle raises
    ``CycleDetected``."""
    size = int(size)
    if size < 0:
        raise InvalidParameter("size must be non-negative")
    up = [1 << a for a in range(size)]
    for a, b in relation:
        a, b = int(a), int(b)
        if not (0 <= a < size and 0 <= b < size):
            raise InvalidParameter(f"relation pair ({a}, {b}) out of range for size {size}")
        up[a] |= 1 << b
    for k in range(size):
        for a in range(size):
            if (up[a] >> k) & 1:
                up[a] |= up[k]
    for a in range(size):
        for b in bits.iter_bits(up[a]):
            if b != a and (up[b] >> a) & 1:
                raise CycleDetected(f"points {a} and {b} lie below each other", cycle=(a, b))
    if labels is None:
        labels = [str(i) for i in range(size)]
    labels = tuple(str(x) for x in labels)
    if len(labels) != size:
        raise InvalidParameter("one label per point required")
    if len(set(labels)) != size:
        raise InvalidParameter("labels must be distinct")
    return SpectralPoset(size, tuple(up), labels, None if points is None else tuple(points))


def chain(n):
    return make_poset(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n):
    return make_poset(n)


# --------------------------------------------------------------------------
# closures


def _union_of(table, mask):
    out = 0
    while mask:
        low = mask & -mask
        out |= table[low.bit_length() - 1]
        mask ^= low
    return out


def down_closure(X: SpectralPoset, mask: int) -> int:
    return _union_of(X.down, mask)


def up_closure(X: SpectralPoset, mask: int) -> int:
    return _union_of(X.up, mask)


def _closure_mask(view, X, mask):
    if view is FLAT:
        return down_closure(X, mask)
    if view is ZARISKI:
        return up_closure(X, mask)
    return mask


def is_closed(view: TopologyView, E: PointSet) -> bool:
    return _closure_mask(view, E.poset, E.mask) == E.mask


def is_open(view: TopologyView, E: PointSet) -> bool:
    return is_closed(view, E.complement())


def closure(view: TopologyView, E: PointSet) -> PointSet:
    return PointSet(E.poset, _closure_mask(view, E.poset, E.mask))


def interior(view: TopologyView, E: PointSet) -> PointSet:
    return closure(view, E.complement()).complement()


def flat_closure_point(X: SpectralPoset, p) -> PointSet:
    """Flat closure of one point: everything below it."""
    return PointSet(X, X.down[X.index(p)])


def zariski_closure_point(X: SpectralPoset, p) -> PointSet:
    return PointSet(X, X.up[X.index(p)])


def _require_nontrivial(view):
    if view is PATCH:
        raise InvalidParameter("only the Zariski and flat views have non-trivial irreducibles")


def irreducible_closed_sets(view: TopologyView, X: SpectralPoset):
    """Principal down-sets (flat) or up-sets (Zariski), one per point."""
    _require_nontrivial(view)
    table = X.down if view is FLAT else X.up
    return [PointSet(X, m) for m in sorted(table)]


def generic_point(view: TopologyView, E: PointSet):
    """The unique point whose closure is ``E``, or ``None`` if ``E`` is
    reducible (or empty)."""
    _require_nontrivial(view)
    if not is_closed(view, E):
        raise NotClosed(f"{E.labels} is not {view.value} closed")
    table = E.poset.down if view is FLAT else E.poset.up
    for p in bits.iter_bits(E.mask):
        if table[p] == E.mask:
            return p
    return None


def irreducible_components(view: TopologyView, X: SpectralPoset):
    _require_nontrivial(view)
    if view is FLAT:
        masks = [X.down[p] for p in X.maximal()]
    else:
        masks = [X.up[p] for p in X.minimal()]
    return [PointSet(X, m) for m in sorted(masks)]


def connected_components(X: SpectralPoset):
    """Components of the comparability graph, ordered by least member.

    The flat and Zariski topologies share these components.
    """
    seen = 0
    out = []
    for start in range(X.size):
        if (seen >> start) & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            grown = 0
            for i in bits.iter_bits(frontier):
                grown |= X.up[i] | X.down[i]
            frontier = grown & ~comp
            comp |= grown
        seen |= comp
        out.append(PointSet(X, comp))
    return out


def clopen_sets(X: SpectralPoset, max_components=CLOPEN_COMPONENT_BOUND):
    """All unions of connected components, ordered by mask."""
    comps = [c.mask for c in connected_components(X)]
    if len(comps) > max_components:
        raise SizeBound("clopen enumeration (components)", len(comps), max_components)
    masks = []
    for choice in range(1 << len(comps)):
        m = 0
        for i in bits.iter_bits(choice):
            m |= comps[i]
        masks.append(m)
    return [PointSet(X, m) for m in sorted(masks)]


def hochster_dual(X: SpectralPoset) -> SpectralPoset:
    """Same points, reversed order."""
    return SpectralPoset(X.size, X.down, X.labels, X.points)


def closed_sets(view: TopologyView, X: SpectralPoset, max_size=16):
    """All closed sets of ``view``, by scanning every subset."""
    if X.size > max_size:
        raise SizeBound("closed-set enumeration", X.size, max_size)
    return [PointSet(X, m) for m in range(1 << X.size) if _closure_mask(view, X, m) == m]
