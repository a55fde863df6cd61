"""Ring corpora used by the cross-checks and the acceptance suite.

Products of up to three cyclic factors are taken exhaustively while the
product has at most ``PRODUCT_EXHAUSTIVE`` elements; beyond that a fixed
list of larger products (up to the prime-enumeration bound) stands in.
"""

from __future__ import annotations

import itertools

import sympy

from .rings import PRIME_BOUND, PolyQuotient, Product, Table, ZMod
from .zspec import poly_digits

ZMOD_RANGE = range(2, 211)
PRODUCT_EXHAUSTIVE = 256
POLY_BOUND = 64

LARGE_PRODUCTS = (
    (210, 6),
    (210, 19),
    (36, 100),
    (128, 32),
    (210, 2, 9),
    (12, 12, 12),
    (7, 11, 13),
    (8, 9, 25),
    (2, 3, 210),
)


def zmod_rings():
    return [ZMod(n) for n in ZMOD_RANGE]


def small_products(bound=PRODUCT_EXHAUSTIVE):
    """Every product ZMod(a) x ZMod(b) [x ZMod(c)] with a <= b <= c and at
    most ``bound`` elements."""
    out = []
    for k in (2, 3):
        for ns in itertools.combinations_with_replacement(ZMOD_RANGE, k):
            size = 1
            for n in ns:
                size *= n
            if size <= bound:
                out.append(Product([ZMod(n) for n in ns]))
    out.sort(key=lambda R: (R.size, R.describe()))
    return out


def large_products():
    out = []
    for ns in LARGE_PRODUCTS:
        R = Product([ZMod(n) for n in ns])
        assert R.size <= PRIME_BOUND
        out.append(R)
    return out


def poly_quotients(bound=POLY_BOUND):
    """F_p[x]/(f) for every monic f with p**deg(f) <= bound."""
    out = []
    for p in map(int, sympy.primerange(2, bound + 1)):
        d = 1
        while p**d <= bound:
            for code in range(p**d):
                low = poly_digits(code, p)
                out.append(PolyQuotient(p, low + [0] * (d - len(low)) + [1]))
            d += 1
    return out


def table_rings():
    """A few rings given by explicit tables (copies of structured ones)."""
    sources = [ZMod(4), Product([ZMod(2), ZMod(2)]), PolyQuotient(2, [1, 1, 1]),
               PolyQuotient(2, [0, 0, 1]), Product([ZMod(2), ZMod(6)])]
    out = []
    for R in sources:
        e = R.elements()
        out.append(Table(R.add(e[:, None], e[None, :]).tolist(),
                         R.mul(e[:, None], e[None, :]).tolist(), R.zero, R.one))
    return out


def corpus(include_large=True):
    rings = zmod_rings() + small_products() + poly_quotients() + table_rings()
    if include_large:
        rings += large_products()
    return rings
