"""Concretely presented finite commutative rings, their ideals and spectra.

Elements are canonical indices ``0..size-1``.  Every arithmetic method
broadcasts over numpy integer arrays, so the exhaustive scans used for
ideal enumeration and primality stay vectorized.

Encodings:

* ``ZMod(n)``: the residue itself.
* ``PolyQuotient(p, f)``: coefficient vector ``c`` in base ``p``,
  index ``sum(c[i] * p**i)``.
* ``Product(R1, ..., Rk)``: mixed radix, last factor varies fastest.
* ``Table``: the row index of the supplied tables.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import sympy

from . import bits
from .errors import (
    AxiomViolation,
    EmptyFamily,
    InvalidIdeal,
    InvalidParameter,
    MixedRings,
    NotIdempotent,
    SizeBound,
)

PRIME_BOUND = 4096
IDEMPOTENT_BOUND = 10**6
ZMOD_MAX = 2**31
TABLE_CACHE_BOUND = 256


def _check_bound(what, size, bound):
    if size > bound:
        raise SizeBound(what, size, bound)


class FiniteRing:
    """Base class.  Subclasses set ``size``, ``zero``, ``one`` and implement
    ``add``/``neg``/``mul`` on (broadcastable) integer arrays."""

    kind = "abstract"
    size: int
    zero: int
    one: int

    _tables = None

    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def elements(self):
        return np.arange(self.size, dtype=np.int64)

    def format_element(self, x) -> str:
        return str(int(x))

    def describe(self) -> str:
        raise NotImplementedError

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        try:
            return self._hash
        except AttributeError:
            self._hash = hash((type(self).__name__, self._key()))
            return self._hash

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"<{type(self).__name__} {self.describe()!r}>"

    def _tabulate(self):
        """Cache operation tables for small rings; ``add``/``mul``/``neg``
        then become lookups."""
        self._tables = None
        if self.size <= TABLE_CACHE_BOUND:
            e = self.elements()
            self._tables = (
                np.asarray(self._add(e[:, None], e[None, :])),
                np.asarray(self._mul(e[:, None], e[None, :])),
                np.asarray(self._neg(e)),
            )

    def add(self, a, b):
        t = self._tables
        return t[0][a, b] if t is not None else self._add(a, b)

    def mul(self, a, b):
        t = self._tables
        return t[1][a, b] if t is not None else self._mul(a, b)

    def neg(self, a):
        t = self._tables
        return t[2][a] if t is not None else self._neg(a)

    def _check_element(self, x):
        x = int(x)
        if not 0 <= x < self.size:
            raise InvalidParameter(f"element {x} outside carrier of size {self.size}")
        return x


class ZMod(FiniteRing):
    kind = "zmod"

    def __init__(self, n: int):
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
            raise InvalidParameter(f"modulus must be an integer, got {n!r}")
        n = int(n)
        if n < 2:
            raise InvalidParameter(f"modulus must be >= 2 (zero ring rejected), got {n}")
        if n > ZMOD_MAX:
            raise InvalidParameter(f"modulus {n} too large")
        self.n = n
        self.size = n
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (np.asarray(a, dtype=np.int64) + b) % self.n

    def neg(self, a):
        return (-np.asarray(a, dtype=np.int64)) % self.n

    def mul(self, a, b):
        return (np.asarray(a, dtype=np.int64) * b) % self.n

    def describe(self):
        return f"zmod {self.n}"

    def _key(self):
        return self.n


class PolyQuotient(FiniteRing):
    """F_p[x]/(f).  ``coeffs`` lists f from the constant term upwards."""

    kind = "polyquot"

    def __init__(self, p: int, coeffs):
        p = int(p)
        if not sympy.isprime(p):
            raise InvalidParameter(f"characteristic {p} is not prime")
        cs = [int(c) % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if len(cs) < 2:
            raise InvalidParameter("modulus polynomial must have degree >= 1")
        self.p = p
        self.coeffs = tuple(cs)
        self.degree = len(cs) - 1
        self.size = p**self.degree
        if self.size > ZMOD_MAX:
            raise InvalidParameter(f"quotient of size {self.size} too large")
        inv = pow(cs[-1], -1, p)
        self._monic = np.array([c * inv % p for c in cs], dtype=np.int64)
        self._powers = p ** np.arange(self.degree, dtype=np.int64)
        self.zero = 0
        self.one = 1
        self._tabulate()

    def digits(self, x):
        x = np.asarray(x, dtype=np.int64)
        return (x[..., None] // self._powers) % self.p

    def encode(self, digits):
        return (np.asarray(digits, dtype=np.int64) * self._powers).sum(axis=-1)

    def _add(self, a, b):
        return self.encode((self.digits(a) + self.digits(b)) % self.p)

    def _neg(self, a):
        return self.encode((-self.digits(a)) % self.p)

    def _mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        d, p = self.degree, self.p
        da, db = self.digits(a), self.digits(b)
        shape = np.broadcast_shapes(a.shape, b.shape)
        out = np.zeros(shape + (2 * d - 1,), dtype=np.int64)
        for i in range(d):
            out[..., i:i + d] += da[..., i:i + 1] * db
        out %= p
        for k in range(2 * d - 2, d - 1, -1):
            c = out[..., k:k + 1]
            out[..., k - d:k + 1] -= c * self._monic
            out %= p
        return self.encode(out[..., :d])

    def format_element(self, x):
        return format_poly(self.digits(int(x)).tolist())

    def describe(self):
        return f"polyquot {self.p} [{','.join(map(str, self.coeffs))}]"

    def _key(self):
        return (self.p, self.coeffs)


def format_poly(coeffs, var="x") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = int(coeffs[i])
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = var if i == 1 else f"{var}^{i}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


class Product(FiniteRing):
    kind = "product"

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise InvalidParameter("product needs at least one factor")
        for f in factors:
            if not isinstance(f, FiniteRing):
                raise InvalidParameter(f"product factor {f!r} is not a ring")
        self.factors = factors
        sizes = [f.size for f in factors]
        strides = []
        s = 1
        for size in reversed(sizes):
            strides.append(s)
            s *= size
        self.strides = tuple(reversed(strides))
        self.size = s
        if self.size > ZMOD_MAX:
            raise InvalidParameter(f"product of size {self.size} too large")
        self.zero = self.encode([f.zero for f in factors])
        self.one = self.encode([f.one for f in factors])
        self._tabulate()

    def split(self, x):
        x = np.asarray(x, dtype=np.int64)
        return [(x // st) % f.size for f, st in zip(self.factors, self.strides)]

    def encode(self, parts):
        total = 0
        for part, st in zip(parts, self.strides):
            total = total + np.asarray(part, dtype=np.int64) * st
        return total if isinstance(total, np.ndarray) and total.ndim else int(total)

    def _lift(self, op, *args):
        split = [self.split(a) for a in args]
        parts = [getattr(f, op)(*(s[i] for s in split)) for i, f in enumerate(self.factors)]
        return self.encode(parts)

    def _add(self, a, b):
        return self._lift("add", a, b)

    def _neg(self, a):
        return self._lift("neg", a)

    def _mul(self, a, b):
        return self._lift("mul", a, b)

    def format_element(self, x):
        parts = self.split(int(x))
        return "(" + ",".join(f.format_element(int(c)) for f, c in zip(self.factors, parts)) + ")"

    def describe(self):
        inner = []
        for f in self.factors:
            d = f.describe()
            inner.append(f"({d})" if isinstance(f, Product) else d)
        return "product " + "; ".join(inner)

    def _key(self):
        return self.factors


class Table(FiniteRing):
    """Ring given by explicit addition and multiplication tables.

    Construction checks every ring axiom exhaustively.
    """

    kind = "table"

    def __init__(self, add, mul, zero, one, source=None, check=True):
        a = np.asarray(add, dtype=np.int64)
        m = np.asarray(mul, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or m.shape != a.shape:
            raise InvalidParameter("addition and multiplication tables must be square and of equal size")
        n = a.shape[0]
        if n < 2:
            raise InvalidParameter("table ring must have at least two elements (zero ring rejected)")
        if not (0 <= int(zero) < n and 0 <= int(one) < n):
            raise InvalidParameter("zero/one index out of range")
        if a.min() < 0 or a.max() >= n or m.min() < 0 or m.max() >= n:
            raise AxiomViolation("table entry outside the carrier")
        self.size = n
        self.zero = int(zero)
        self.one = int(one)
        self.add_table = a
        self.mul_table = m
        self.add_table.setflags(write=False)
        self.mul_table.setflags(write=False)
        self.source = source
        if check:
            check_ring_axioms(self, tables=(a, m))
        self.neg_table = np.argmax(a == self.zero, axis=1)

    @classmethod
    def from_json(cls, path):
        path = Path(path)
        obj = json.loads(path.read_text())
        return cls.from_dict(obj, source=str(path))

    @classmethod
    def from_dict(cls, obj, source=None):
        try:
            ring = cls(obj["add"], obj["mul"], obj["zero"], obj["one"], source=source)
        except KeyError as exc:
            raise InvalidParameter(f"table description lacks field {exc}") from None
        if int(obj.get("size", ring.size)) != ring.size:
            raise InvalidParameter(f"declared size {obj['size']} does not match tables ({ring.size})")
        return ring

    def to_dict(self):
        return {
            "size": self.size,
            "add": self.add_table.tolist(),
            "mul": self.mul_table.tolist(),
            "zero": self.zero,
            "one": self.one,
        }

    def add(self, a, b):
        return self.add_table[a, b]

    def neg(self, a):
        return self.neg_table[a]

    def mul(self, a, b):
        return self.mul_table[a, b]

    def describe(self):
        if self.source is not None:
            return f"table {self.source}"
        return "table " + json.dumps(self.to_dict(), separators=(",", ":"))

    def _key(self):
        return (self.zero, self.one, self.add_table.tobytes(), self.mul_table.tobytes())


class QuotientRing(FiniteRing):
    """R/I on cosets, numbered in order of their least representative.

    ``projection[x]`` is the coset of ``x``; ``representatives[c]`` the least
    element of coset ``c``.  ``to_table()`` materializes a ``Table`` ring.
    """

    kind = "quotient"

    def __init__(self, ideal: "Ideal"):
        self.parent = ideal.ring
        self.ideal = ideal
        labels, reps = _cosets(self.parent, ideal.mask)
        self.projection = labels
        self.representatives = reps
        self.size = len(reps)
        self.zero = int(labels[self.parent.zero])
        self.one = int(labels[self.parent.one])

    def add(self, a, b):
        return self.projection[self.parent.add(self.representatives[a], self.representatives[b])]

    def neg(self, a):
        return self.projection[self.parent.neg(self.representatives[a])]

    def mul(self, a, b):
        return self.projection[self.parent.mul(self.representatives[a], self.representatives[b])]

    def format_element(self, x):
        return "[" + self.parent.format_element(int(self.representatives[int(x)])) + "]"

    def to_table(self):
        e = self.elements()
        return Table(self.add(e[:, None], e[None, :]), self.mul(e[:, None], e[None, :]),
                     self.zero, self.one, check=False)

    def describe(self):
        return f"quotient of ({self.parent.describe()}) by {self.ideal.label}"

    def _key(self):
        return (self.parent, self.ideal.mask)


def make_ring(kind: str, *params) -> FiniteRing:
    """``make_ring("zmod", 6)``, ``make_ring("polyquot", 2, [1, 1, 1])``,
    ``make_ring("product", r1, r2)``, ``make_ring("table", add, mul, zero, one)``."""
    kinds = {"zmod": ZMod, "polyquot": PolyQuotient, "table": Table}
    if kind == "product":
        if len(params) == 1 and not isinstance(params[0], FiniteRing):
            return Product(params[0])
        return Product(params)
    if kind not in kinds:
        raise InvalidParameter(f"unknown presentation {kind!r}")
    return kinds[kind](*params)


def check_ring_axioms(ring: FiniteRing, tables=None, chunk_cells=1 << 22):
    """Exhaustive check of the commutative unital ring axioms.

    Raises ``AxiomViolation`` naming the first failing law and a witness.
    """
    n = ring.size
    if tables is None:
        e = ring.elements()
        A = np.asarray(ring.add(e[:, None], e[None, :]))
        M = np.asarray(ring.mul(e[:, None], e[None, :]))
    else:
        A, M = tables
    idx = np.arange(n)
    z, o = ring.zero, ring.one

    def fail(law, where):
        raise AxiomViolation(f"{law} fails", witness=tuple(int(v) for v in where))

    if z == o:
        fail("zero != one", (z,))
    for name, T in (("commutativity of +", A), ("commutativity of *", M)):
        bad = np.argwhere(T != T.T)
        if bad.size:
            fail(name, bad[0])
    bad = np.flatnonzero(A[z] != idx)
    if bad.size:
        fail("additive identity", (bad[0],))
    bad = np.flatnonzero(M[o] != idx)
    if bad.size:
        fail("multiplicative identity", (bad[0],))
    bad = np.flatnonzero(~(A == z).any(axis=1))
    if bad.size:
        fail("additive inverse", (bad[0],))
    step = max(1, chunk_cells // max(1, n * n))
    for start in range(0, n, step):
        rows = idx[start:start + step]
        for name, T in (("associativity of +", A), ("associativity of *", M)):
            left = T[T[rows]]  # (a+b)+c indexed [a, b, c]
            right = np.take(T[rows], T, axis=1)  # a+(b+c)
            bad = np.argwhere(left != right)
            if bad.size:
                a, b, c = bad[0]
                fail(name, (rows[a], b, c))
        left = np.take(M[rows], A, axis=1)  # a*(b+c)
        right = A[M[rows][:, :, None], M[rows][:, None, :]]
        bad = np.argwhere(left != right)
        if bad.size:
            a, b, c = bad[0]
            fail("distributivity", (rows[a], b, c))


# --------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class Ideal:
    ring: FiniteRing
    mask: int
    generators: tuple = field(default=(), compare=False)
    regular: bool = field(default=False, compare=False)

    @property
    def members(self):
        return bits.members(self.mask)

    def __contains__(self, x):
        return bool((self.mask >> int(x)) & 1)

    def __len__(self):
        return bits.popcount(self.mask)

    @property
    def is_proper(self):
        return self.ring.one not in self

    def issubset(self, other: "Ideal"):
        _same_ring(self, other)
        return self.mask & ~other.mask == 0

    __le__ = issubset

    @functools.cached_property
    def minimal_generators(self):
        """Greedy generating set: scan members in order, keep each one not
        already in the ideal spanned so far."""
        ring = self.ring
        cur = 1 << ring.zero
        gens = []
        for x in self.members:
            if not (cur >> x) & 1:
                gens.append(x)
                cur = _sum_masks(ring, cur, _principal_mask(ring, x))
        return tuple(gens)

    @property
    def label(self):
        gens = self.minimal_generators or (self.ring.zero,)
        return "(" + ",".join(self.ring.format_element(g) for g in gens) + ")"

    def __repr__(self):
        return f"Ideal{self.label} of {self.ring.describe()!r}"


@dataclass(frozen=True)
class PrimeIdeal:
    ideal: Ideal
    certified: bool = True

    @property
    def ring(self):
        return self.ideal.ring

    @property
    def mask(self):
        return self.ideal.mask

    @property
    def members(self):
        return self.ideal.members

    @property
    def label(self):
        return self.ideal.label

    def __contains__(self, x):
        return x in self.ideal

    def __repr__(self):
        return f"PrimeIdeal{self.label}"


def _same_ring(I, J):
    if I.ring != J.ring:
        raise MixedRings("ideals live in different rings")


def _as_mask(ring, ideal):
    if isinstance(ideal, PrimeIdeal):
        ideal = ideal.ideal
    if not isinstance(ideal, Ideal):
        raise InvalidIdeal(f"{ideal!r} is not an ideal")
    if ideal.ring != ring:
        raise MixedRings("ideal belongs to a different ring")
    return ideal.mask


def _principal_mask(ring, g):
    return bits.mask_from_indices(ring.mul(ring.elements(), int(g)), ring.size)


def _sum_masks(ring, m1, m2):
    """Mask of I + J: all sums at once when small, else a union of cosets
    of the larger summand."""
    if m2 & ~m1 == 0:
        return m1
    if m1 & ~m2 == 0:
        return m2
    n = ring.size
    if bits.popcount(m1) < bits.popcount(m2):
        m1, m2 = m2, m1
    base = np.flatnonzero(bits.bools_from_mask(m1, n))
    other = np.flatnonzero(bits.bools_from_mask(m2, n))
    if len(base) * len(other) <= 4 * n:
        return bits.mask_from_indices(ring.add(base[:, None], other[None, :]).ravel(), n)
    result = bits.bools_from_mask(m1, n)
    for b in other:
        if not result[b]:
            result[ring.add(base, b)] = True
    return bits.mask_from_bools(result)


def _cosets(ring, mask):
    """Coset labels (numbered by least element) and least representatives."""
    n = ring.size
    base = np.flatnonzero(bits.bools_from_mask(mask, n))
    labels = np.full(n, -1, dtype=np.int64)
    reps = []
    x = 0
    while x < n:
        if labels[x] < 0:
            labels[ring.add(base, x)] = len(reps)
            reps.append(x)
        x += 1
    return labels, np.array(reps, dtype=np.int64)


def ideal_generated(ring: FiniteRing, generators) -> Ideal:
    """Smallest ideal containing ``generators``: the fixpoint of adding
    principal ideals ``R*g`` to the running additive span, starting from (0)."""
    gens = tuple(ring._check_element(g) for g in generators)
    mask = 1 << ring.zero
    for g in gens:
        mask = _sum_masks(ring, mask, _principal_mask(ring, g))
    return Ideal(ring, mask, gens)


def zero_ideal(ring):
    return Ideal(ring, 1 << ring.zero, ())


def unit_ideal(ring):
    return Ideal(ring, bits.full(ring.size), (ring.one,))


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, _sum_masks(I.ring, I.mask, J.mask), I.generators + J.generators)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    ring = I.ring
    gens = sorted({int(ring.mul(a, b)) for a in I.minimal_generators for b in J.minimal_generators})
    return ideal_generated(ring, gens)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, I.mask & J.mask)


def radical(I: Ideal) -> Ideal:
    """{a : a**k in I for some k <= |R|}.

    Membership is monotone in k, so one power ``a**(2**t)`` with
    ``2**t >= |R|`` decides it.
    """
    ring = I.ring
    x = ring.elements()
    t = max(1, (ring.size - 1).bit_length())
    for _ in range(t):
        x = ring.mul(x, x)
    inside = bits.bools_from_mask(I.mask, ring.size)[np.asarray(x)]
    return Ideal(ring, bits.mask_from_bools(inside))


def quotient_ring(ring: FiniteRing, I: Ideal) -> QuotientRing:
    _as_mask(ring, I)
    return QuotientRing(I)


def is_prime_ideal(ring: FiniteRing, I) -> bool:
    """Proper, and ab in I forces a in I or b in I.

    The pair scan runs over coset representatives: whether ab lies in I only
    depends on the cosets of a and b.
    """
    mask = _as_mask(ring, I)
    if (mask >> ring.one) & 1:
        return False
    labels, reps = _cosets(ring, mask)
    zl = labels[ring.zero]
    nz = reps[labels[reps] != zl]
    step = max(1, (1 << 20) // max(1, len(nz)))
    for start in range(0, len(nz), step):
        prod = ring.mul(nz[start:start + step, None], nz[None, :])
        if (labels[prod] == zl).any():
            return False
    return True


@functools.lru_cache(maxsize=4096)
def _lattice(ring):
    _check_bound("ideal lattice enumeration", ring.size, PRIME_BOUND)
    principal = {}
    n = ring.size
    e = ring.elements()
    step = max(1, (1 << 22) // n)
    for start in range(0, n, step):
        rows = np.asarray(ring.mul(e[start:start + step, None], e[None, :]))
        flags = np.zeros((len(rows), n), dtype=bool)
        np.put_along_axis(flags, rows, True, axis=1)
        for k, row in enumerate(flags):
            principal.setdefault(bits.mask_from_bools(row), start + k)
    found = {m: (g,) for m, g in principal.items()}
    gens = {m: np.flatnonzero(bits.bools_from_mask(m, n)) for m in principal}
    queue = list(found)
    while queue:
        m = queue.pop()
        labels, reps = _cosets(ring, m)
        for pm, g in principal.items():
            if pm & ~m == 0:
                continue
            # I + J is the union of the cosets of I that meet J
            hit = np.zeros(len(reps), dtype=bool)
            hit[labels[gens[pm]]] = True
            s = bits.mask_from_bools(hit[labels])
            if s not in found:
                found[s] = found[m] + (g,)
                queue.append(s)
    return tuple(Ideal(ring, m, gens) for m, gens in sorted(found.items()))


def ideal_lattice(ring: FiniteRing):
    """All ideals, sorted by member-subset encoding."""
    return list(_lattice(ring))


@functools.lru_cache(maxsize=4096)
def _primes(ring):
    return tuple(PrimeIdeal(I) for I in _lattice(ring) if is_prime_ideal(ring, I))


def enumerate_primes(ring: FiniteRing):
    return list(_primes(ring))


@functools.lru_cache(maxsize=4096)
def _idempotents(ring):
    _check_bound("idempotent scan", ring.size, IDEMPOTENT_BOUND)
    e = ring.elements()
    return tuple(int(x) for x in np.flatnonzero(ring.mul(e, e) == e))


def idempotents(ring: FiniteRing):
    return list(_idempotents(ring))


def is_idempotent(ring, e):
    e = ring._check_element(e)
    return int(ring.mul(e, e)) == e


@functools.lru_cache(maxsize=4096)
def spec_poset(ring: FiniteRing):
    """Spec(R) ordered by inclusion (a <= b iff a is contained in b)."""
    from .poset import make_poset

    primes = _primes(ring)
    pairs = [(i, j) for i, P in enumerate(primes) for j, Q in enumerate(primes)
             if i != j and P.mask & ~Q.mask == 0]
    return make_poset(len(primes), pairs, labels=[P.label for P in primes], points=primes)


def vanishing_set(ring, ideal):
    """V(I) as a point set of ``spec_poset(ring)``."""
    mask = _as_mask(ring, ideal)
    X = spec_poset(ring)
    return X.pointset(i for i, P in enumerate(X.points) if mask & ~P.mask == 0)


def V(ring, element):
    """V(f): primes containing the element ``f``."""
    f = ring._check_element(element)
    X = spec_poset(ring)
    return X.pointset(i for i, P in enumerate(X.points) if f in P)


def D(ring, element):
    """D(f): primes not containing ``f``."""
    f = ring._check_element(element)
    X = spec_poset(ring)
    return X.pointset(i for i, P in enumerate(X.points) if f not in P)


# --------------------------------------------------------------------------
# induced maps


@dataclass(frozen=True)
class QuotientBy:
    ideal: Ideal


@dataclass(frozen=True)
class IdempotentLocalization:
    e: int


@dataclass
class SpecMap:
    """Spec(target) -> Spec(ring) induced by R -> target."""

    ring: FiniteRing
    target: FiniteRing
    source_primes: list
    images: tuple  # index into spec_poset(ring).points per source prime
    image: object  # PointSet
    closed: dict

    def __call__(self, i):
        return self.images[i]


def induced_spec_map(ring: FiniteRing, kind) -> SpecMap:
    """Point map on spectra for R -> R/I, or R -> R_e realized as R/(1-e)."""
    from .poset import TopologyView, is_closed

    if isinstance(kind, IdempotentLocalization):
        e = ring._check_element(kind.e)
        if not is_idempotent(ring, e):
            raise NotIdempotent(f"{ring.format_element(e)} is not idempotent")
        ideal = ideal_generated(ring, [int(ring.sub(ring.one, e))])
    elif isinstance(kind, QuotientBy):
        ideal = kind.ideal
        if not isinstance(ideal, Ideal):
            raise InvalidIdeal(f"{ideal!r} is not an ideal")
        if ideal.ring != ring:
            raise InvalidIdeal("ideal belongs to a different ring")
    else:
        raise InvalidParameter(f"unknown ring map kind {kind!r}")

    Q = QuotientRing(ideal)
    X = spec_poset(ring)
    where = {P.mask: i for i, P in enumerate(X.points)}
    source = enumerate_primes(Q) if Q.size > 1 else []
    images = []
    for P in source:
        pre = bits.bools_from_mask(P.mask, Q.size)[Q.projection]
        images.append(where[bits.mask_from_bools(pre)])
    image = X.pointset(images)
    closed = {view.value: is_closed(view, image) for view in TopologyView}
    return SpecMap(ring, Q, source, tuple(images), image, closed)


# --------------------------------------------------------------------------
# noetherian condition on finite spectra


def condition_vi_finite(ring: FiniteRing, family, p) -> bool:
    """If the intersection of ``family`` lies in ``p`` then some member does."""
    family = list(family)
    if not family:
        raise EmptyFamily("condition needs a non-empty family of primes")
    pm = _as_mask(ring, p)
    masks = [_as_mask(ring, q) for q in family]
    inter = functools.reduce(lambda a, b: a & b, masks)
    if inter & ~pm:
        return True
    return any(m & ~pm == 0 for m in masks)


def check_condition_vi(ring: FiniteRing, max_primes=12):
    """Exhaustive over all non-empty families of primes and all primes.

    Returns ``(True, None)`` or ``(False, (family, p))``.
    """
    primes = enumerate_primes(ring)
    k = len(primes)
    _check_bound("prime-intersection condition family enumeration", k, max_primes)
    for fam in range(1, 1 << k):
        members = [primes[i] for i in bits.iter_bits(fam)]
        for p in primes:
            if not condition_vi_finite(ring, members, p):
                return False, (members, p)
    return True, None
