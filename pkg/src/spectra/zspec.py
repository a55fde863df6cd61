"""Exact topology on symbolic one-dimensional spectra.

``Spec(Z)`` and ``Spec(F_p[x])`` have one generic point ``(0)`` lying under
infinitely many closed points.  Subsets are kept as finite-or-cofinite sets
of closed points plus a flag for the generic point; this algebra is closed
under complement, finite union and intersection, and every topology
question below is decided exactly on it.

Closed points of ``F_p[x]`` are monic irreducible polynomials, encoded as
``sum(c[i] * p**i)`` over their coefficients (constant term first).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import sympy

from .errors import EmptyFamily, InvalidParameter, MixedSpectra, NotOpen
from .poset import FLAT, PATCH, ZARISKI, TopologyView
from .rings import format_poly

POLY_DEGREE_BOUND = 12


@dataclass(frozen=True)
class SymbolicSpectrum:
    kind: str  # "integers" | "poly"
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("integers", "poly"):
            raise InvalidParameter(f"unknown symbolic spectrum {self.kind!r}")
        if self.kind == "poly" and not sympy.isprime(self.p):
            raise InvalidParameter(f"{self.p} is not prime")

    @property
    def name(self):
        return "Spec(Z)" if self.kind == "integers" else f"Spec(F_{self.p}[x])"

    def is_closed_point(self, q) -> bool:
        q = int(q)
        if self.kind == "integers":
            return bool(sympy.isprime(q))
        return is_monic_irreducible(poly_digits(q, self.p), self.p)

    def closed_points(self, k):
        """The first ``k`` closed points in increasing order."""
        if self.kind == "integers":
            return list(itertools.islice(sympy.primerange(2, sympy.oo), k)) if k else []
        out = []
        q = self.p
        while len(out) < k:
            if self.is_closed_point(q):
                out.append(q)
            q += 1
        return out

    def format_point(self, q) -> str:
        if self.kind == "integers":
            return str(int(q))
        return format_poly(poly_digits(int(q), self.p))

    def point_label(self, point: "SymPoint") -> str:
        return "(0)" if point.is_generic else f"({self.format_point(point.index)})"

    def whole(self):
        return SymSet(self, True, (), True)

    def empty(self):
        return SymSet(self, False, (), False)

    def fin(self, points=(), generic=False):
        return SymSet(self, False, tuple(points), generic)

    def cofin(self, excluded=(), generic=True):
        return SymSet(self, True, tuple(excluded), generic)

    def closed(self, q):
        return SymPoint(int(q), self)

    @property
    def generic(self):
        return SymPoint(None, self)


def integers():
    return SymbolicSpectrum("integers")


def poly_over(p):
    return SymbolicSpectrum("poly", int(p))


def poly_digits(code, p):
    if code < 0:
        raise InvalidParameter("negative polynomial code")
    out = []
    while code:
        code, c = divmod(code, p)
        out.append(c)
    return out


def poly_code(digits, p):
    return sum(int(c) % p * p**i for i, c in enumerate(digits))


def _poly_mod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def is_monic_irreducible(digits, p) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(digits) - 1
    if deg < 1 or digits[-1] != 1:
        return False
    if deg > POLY_DEGREE_BOUND:
        raise InvalidParameter(f"degree {deg} above irreducibility bound {POLY_DEGREE_BOUND}")
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(digits, list(low) + [1], p):
                return False
    return True


@dataclass(frozen=True)
class SymPoint:
    index: int | None
    spectrum: SymbolicSpectrum

    def __post_init__(self):
        if self.index is not None and not self.spectrum.is_closed_point(self.index):
            raise InvalidParameter(f"{self.index} is not a closed point of {self.spectrum.name}")

    @property
    def is_generic(self):
        return self.index is None

    def __str__(self):
        return self.spectrum.point_label(self)


@dataclass(frozen=True)
class SymSet:
    """``cofinite=False``: exactly ``points``; ``cofinite=True``: every closed
    point except ``points``.  ``generic`` says whether (0) belongs."""

    spectrum: SymbolicSpectrum
    cofinite: bool
    points: tuple
    generic: bool

    def __post_init__(self):
        pts = tuple(sorted({int(q) for q in self.points}))
        for q in pts:
            if not self.spectrum.is_closed_point(q):
                raise InvalidParameter(f"{q} is not a closed point of {self.spectrum.name}")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "generic", bool(self.generic))

    @property
    def is_whole(self):
        return self.cofinite and not self.points and self.generic

    @property
    def is_empty(self):
        return not self.cofinite and not self.points and not self.generic

    @property
    def finite(self):
        return not self.cofinite

    def __contains__(self, point):
        if not isinstance(point, SymPoint):
            point = SymPoint(int(point), self.spectrum)
        if point.is_generic:
            return self.generic
        return (point.index in self.points) != self.cofinite

    def describe(self):
        pts = ",".join(self.spectrum.format_point(q) for q in self.points)
        head = f"cofin{{{pts}}}" if self.cofinite else f"{{{pts}}}"
        return head + ("+generic" if self.generic else "")

    def __str__(self):
        return self.describe()


def _same(S, T):
    if S.spectrum != T.spectrum:
        raise MixedSpectra(f"{S.spectrum.name} vs {T.spectrum.name}")


def complement(S: SymSet) -> SymSet:
    return SymSet(S.spectrum, not S.cofinite, S.points, not S.generic)


def union(S: SymSet, T: SymSet) -> SymSet:
    _same(S, T)
    a, b = set(S.points), set(T.points)
    g = S.generic or T.generic
    if S.cofinite and T.cofinite:
        return SymSet(S.spectrum, True, a & b, g)
    if S.cofinite:
        return SymSet(S.spectrum, True, a - b, g)
    if T.cofinite:
        return SymSet(S.spectrum, True, b - a, g)
    return SymSet(S.spectrum, False, a | b, g)


def intersection(S: SymSet, T: SymSet) -> SymSet:
    return complement(union(complement(S), complement(T)))


def contains(S: SymSet, point) -> bool:
    return point in S


def is_subset(S: SymSet, T: SymSet) -> bool:
    _same(S, T)
    return intersection(S, complement(T)).is_empty


# --------------------------------------------------------------------------
# topologies


def _patch_closed(S):
    return S.generic or S.finite


def sym_is_closed(view: TopologyView, S: SymSet) -> bool:
    """Flat: empty or contains (0).  Zariski: whole, empty, or a finite set
    of closed points.  Patch: a finite set of closed points, or contains (0)."""
    if view is FLAT:
        return S.is_empty or S.generic
    if view is ZARISKI:
        return S.is_whole or (S.finite and not S.generic)
    return _patch_closed(S)


def sym_is_open(view: TopologyView, S: SymSet) -> bool:
    return sym_is_closed(view, complement(S))


def sym_closure(view: TopologyView, S: SymSet) -> SymSet:
    if view is FLAT:
        if S.is_empty:
            return S
        return SymSet(S.spectrum, S.cofinite, S.points, True)
    if S.finite and not S.generic:
        return S
    if view is ZARISKI:
        return S.spectrum.whole()
    return SymSet(S.spectrum, S.cofinite, S.points, True)


def stable_under_generalization(S: SymSet) -> bool:
    return S.is_empty or S.generic


def stable_under_specialization(S: SymSet) -> bool:
    return not S.generic or (S.cofinite and not S.points)


def closed_by_characterization(view: TopologyView, S: SymSet) -> bool:
    """Closedness recomputed as patch closed plus stability (generalization
    for flat, specialization for Zariski)."""
    if view is PATCH:
        return _patch_closed(S)
    stable = stable_under_generalization if view is FLAT else stable_under_specialization
    return _patch_closed(S) and stable(S)


def dual_is_closed(view: TopologyView, S: SymSet) -> bool:
    """Closedness in the order-reversed model (closed points below the
    generic one).  Same patch topology; flat there means stable under
    specialization here, and vice versa."""
    if view is PATCH:
        return _patch_closed(S)
    stable = stable_under_specialization if view is FLAT else stable_under_generalization
    return _patch_closed(S) and stable(S)


@dataclass(frozen=True)
class ComponentFamily:
    """Irreducible components: ``{(0), q}`` for every closed point q (flat) or
    the single whole space (Zariski)."""

    spectrum: SymbolicSpectrum
    view: TopologyView

    @property
    def infinite(self):
        return self.view is FLAT

    def describe(self):
        if self.view is FLAT:
            return "{(0), q} for every closed point q"
        return "the whole space"

    def materialize(self, limit):
        if self.view is ZARISKI:
            return [self.spectrum.whole()]
        return [self.spectrum.fin([q], generic=True) for q in self.spectrum.closed_points(limit)]

    def generic_point(self, component: SymSet) -> SymPoint:
        if self.view is ZARISKI:
            return self.spectrum.generic
        (q,) = component.points
        return self.spectrum.closed(q)


def sym_irreducible_components(spectrum: SymbolicSpectrum, view: TopologyView) -> ComponentFamily:
    if view is PATCH:
        raise InvalidParameter("patch topology is Hausdorff; components are points")
    return ComponentFamily(spectrum, view)


# --------------------------------------------------------------------------
# noetherian conditions


@dataclass(frozen=True)
class ConditionResult:
    holds: bool
    witness: str | None = None

    def __bool__(self):
        return self.holds


def _intersection_is_zero(family: SymSet):
    return family.generic or family.cofinite


def condition_vi_symbolic(family: SymSet, p: SymPoint) -> ConditionResult:
    """If the primes in ``family`` intersect inside ``p``, one of them lies in p.

    The intersection of infinitely many maximal primes (or of any family
    containing (0)) is zero; finitely many closed points intersect in the
    ideal of their product, which lies in ``(q)`` iff q is one of them.
    """
    if family.is_empty:
        raise EmptyFamily("condition needs a non-empty family of primes")
    if p.spectrum != family.spectrum:
        raise MixedSpectra("family and point live on different spectra")
    zero = _intersection_is_zero(family)
    if p.is_generic:
        hypothesis = zero
        conclusion = family.generic
    else:
        hypothesis = zero or p in family
        conclusion = family.generic or p in family
    if not hypothesis or conclusion:
        return ConditionResult(True)
    lab = family.spectrum.point_label
    return ConditionResult(
        False,
        f"intersection of {family.describe()} is (0), contained in {lab(p)}, "
        f"but no member is contained in {lab(p)}",
    )


def all_closed_points(spectrum):
    return spectrum.cofin((), generic=False)


def zariski_open_intersection(spectrum, excluded_sets, all_points=False) -> SymSet | None:
    """Intersection of the Zariski opens ``X - F`` (``F`` finite sets of closed
    points).  With ``all_points`` the family runs over every ``X - {q}``.
    Returns the intersection when it is Zariski open, else ``None``."""
    if all_points:
        inter = spectrum.fin((), generic=True)
    else:
        inter = spectrum.whole()
        for F in excluded_sets:
            inter = intersection(inter, complement(spectrum.fin(F)))
    return inter if sym_is_open(ZARISKI, inter) else None


def sym_noetherian(spectrum: SymbolicSpectrum) -> dict:
    """Flat: fails via the family of all closed points against (0).
    Zariski: closed sets below the whole space are finite, so descending
    chains stop."""
    witness = condition_vi_symbolic(all_closed_points(spectrum), spectrum.generic)
    flat = witness.holds
    zariski = True
    infinite = len(spectrum.closed_points(3)) == 3
    consistent = not (zariski and flat and infinite)
    return {"flat": flat, "zariski": zariski, "theorem_4_5_consistent": consistent}


def chain_height(spectrum: SymbolicSpectrum) -> int:
    """Longest chain of primes: (0) below a closed point."""
    return 2


def sym_finite_subcover(cover):
    """Finite subcover of a cover by flat opens, or ``(None, witness)``.

    A flat open containing (0) is the whole space, so a cover exists only
    through a whole-space member.
    """
    cover = list(cover)
    for S in cover:
        if not sym_is_open(FLAT, S):
            raise NotOpen(f"{S.describe()} is not flat open")
    if not cover:
        raise InvalidParameter("empty cover")
    spectrum = cover[0].spectrum
    for S in cover:
        _same(S, cover[0])
    for S in cover:
        if S.is_whole:
            return [S], None
    union_all = cover[0]
    for S in cover[1:]:
        union_all = union(union_all, S)
    missing = complement(union_all)
    if missing.generic:
        return None, spectrum.generic
    # unreachable for flat opens: without (0) the union cannot be whole
    raise AssertionError("flat open cover without a whole-space member")
