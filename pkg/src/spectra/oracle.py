"""Exhaustive verification of the poset topology layer.

Every subset of a poset (at most ``EXHAUSTIVE_BOUND`` points) is scanned.
The reference families are built straight from the order pairs, never via
the closure helpers in :mod:`spectra.poset`, and then compared with them.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from . import bits
from .errors import SizeBound
from .poset import (
    FLAT,
    PATCH,
    ZARISKI,
    SpectralPoset,
    clopen_sets,
    closure,
    flat_closure_point,
    generic_point,
    hochster_dual,
    irreducible_closed_sets,
    is_closed,
    make_poset,
    zariski_closure_point,
)

EXHAUSTIVE_BOUND = 12
HARD_BOUND = 16


@dataclass
class Check:
    name: str
    passed: bool
    counterexample: object = None

    def as_dict(self):
        d = {"name": self.name, "passed": self.passed}
        if not self.passed:
            d["counterexample"] = self.counterexample
        return d


@dataclass
class OracleReport:
    size: int
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def add(self, name, counterexample=None, passed=None):
        if passed is None:
            passed = counterexample is None
        self.checks.append(Check(name, bool(passed), counterexample))

    def as_dict(self):
        return {
            "size": self.size,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }


def _membership_bits(n):
    subsets = np.arange(1 << n, dtype=np.int64)
    return subsets, ((subsets[:, None] >> np.arange(n)) & 1).astype(bool)


def _stable(pairs, membership, downward):
    """Subsets stable under generalization (``downward``) or specialization."""
    ok = np.ones(membership.shape[0], dtype=bool)
    for a, b in pairs:  # a < b
        lo, hi = membership[:, a], membership[:, b]
        ok &= ~(hi & ~lo) if downward else ~(lo & ~hi)
    return ok


def _union_closure(generators):
    fam = np.array([0], dtype=np.int64)
    gens = np.asarray(generators, dtype=np.int64)
    while True:
        grown = np.unique(np.concatenate([fam, (fam[:, None] | gens[None, :]).ravel()]))
        if len(grown) == len(fam):
            return grown
        fam = grown


def _row_chunks(rows, cols, cells=1 << 22):
    step = max(1, cells // max(1, cols))
    for start in range(0, rows, step):
        yield slice(start, start + step)


def _topology_violation(family, n):
    """First axiom a family of closed sets violates, or ``None``."""
    full = (1 << n) - 1
    member = np.zeros(1 << n, dtype=bool)
    member[family] = True
    if not member[0]:
        return ("missing empty set", 0)
    if not member[full]:
        return ("missing whole space", full)
    for name, op in (("union", np.bitwise_or), ("intersection", np.bitwise_and)):
        for rows in _row_chunks(len(family), len(family)):
            combined = op.outer(family[rows], family)
            bad = np.argwhere(~member[combined])
            if bad.size:
                i, j = bad[0]
                return (f"not closed under {name}", [int(family[rows][i]), int(family[j])])
    return None


def _smallest_superset(family, subsets, full):
    """For each subset, the intersection of all family members containing it."""
    out = np.empty(len(subsets), dtype=np.int64)
    for rows in _row_chunks(len(subsets), len(family)):
        sub = subsets[rows, None]
        contains = (family[None, :] & sub) == sub
        out[rows] = np.bitwise_and.reduce(np.where(contains, family[None, :], full), axis=1)
    return out


def _irreducible_members(family):
    """Non-empty members that are not a union of proper members below them.

    In a finite space, a closed set splits as two proper closed pieces iff it
    is the union of all its proper closed subsets.
    """
    below = np.empty(len(family), dtype=np.int64)
    for rows in _row_chunks(len(family), len(family)):
        top = family[rows, None]
        inside = ((family[None, :] & ~top) == 0) & (family[None, :] != top)
        below[rows] = np.bitwise_or.reduce(np.where(inside, family[None, :], 0), axis=1)
    return family[(family != 0) & (below != family)]


def _first(mask_array):
    idx = np.flatnonzero(mask_array)
    return None if not idx.size else int(idx[0])


def _families(X: SpectralPoset):
    n = X.size
    subsets, membership = _membership_bits(n)
    pairs = X.relation()
    flat = subsets[_stable(pairs, membership, downward=True)]
    zar = subsets[_stable(pairs, membership, downward=False)]
    return subsets, flat, zar


def brute_force_oracle(X: SpectralPoset, max_size=EXHAUSTIVE_BOUND) -> OracleReport:
    """Scan all ``2**size`` subsets and cross-check the topology layer.

    Each check records the first offending subset mask (or pair) on failure.
    """
    max_size = min(int(max_size), HARD_BOUND)
    n = X.size
    if n > max_size:
        raise SizeBound("exhaustive poset oracle", n, max_size)
    full = (1 << n) - 1
    rep = OracleReport(n)
    subsets, flat, zar = _families(X)

    # (a), (b): families equal the generated ones and are topologies
    flat_gen = _union_closure([X.down[p] for p in range(n)]) if n else np.array([0])
    zar_gen = _union_closure([X.up[p] for p in range(n)]) if n else np.array([0])
    for view, fam, gen in (("flat", flat, flat_gen), ("zariski", zar, zar_gen)):
        diff = np.setxor1d(fam, gen)
        rep.add(f"{view} closed sets are unions of principal {'down' if view == 'flat' else 'up'}-sets",
                None if not diff.size else int(diff[0]))
        rep.add(f"{view} closed sets form a topology", _topology_violation(fam, n))

    # patch: topology generated by Zariski opens and Zariski closed sets is discrete
    singletons = [int(X.up[p] & X.down[p]) for p in range(n)]
    bad = [p for p, s in enumerate(singletons) if s != 1 << p]
    rep.add("patch topology is discrete", bad[0] if bad else None)

    # (c) is_closed agrees with the scanned families
    flat_flag = np.zeros(1 << n, dtype=bool)
    flat_flag[flat] = True
    zar_flag = np.zeros(1 << n, dtype=bool)
    zar_flag[zar] = True
    mism = {"flat": None, "zariski": None, "patch": None}
    cl_flat = np.empty(1 << n, dtype=np.int64)
    cl_zar = np.empty(1 << n, dtype=np.int64)
    pointwise_flat = np.empty(1 << n, dtype=np.int64)
    pointwise_zar = np.empty(1 << n, dtype=np.int64)
    pointwise_flat[0] = pointwise_zar[0] = 0
    for m in range(1 << n):
        E = X.subset(m)
        cf = closure(FLAT, E).mask
        cz = closure(ZARISKI, E).mask
        cl_flat[m] = cf
        cl_zar[m] = cz
        if mism["flat"] is None and is_closed(FLAT, E) != flat_flag[m]:
            mism["flat"] = m
        if mism["zariski"] is None and is_closed(ZARISKI, E) != zar_flag[m]:
            mism["zariski"] = m
        if mism["patch"] is None and not is_closed(PATCH, E):
            mism["patch"] = m
        if m:
            low = (m & -m).bit_length() - 1
            rest = m & (m - 1)
            pointwise_flat[m] = pointwise_flat[rest] | flat_closure_point(X, low).mask
            pointwise_zar[m] = pointwise_zar[rest] | zariski_closure_point(X, low).mask
    for view, bad_m in mism.items():
        rep.add(f"is_closed({view}) matches scanned family", bad_m)

    # (d), (e): closures are smallest closed supersets and pointwise unions
    ref_flat = _smallest_superset(flat, subsets, full)
    ref_zar = _smallest_superset(zar, subsets, full)
    rep.add("flat closure is smallest flat-closed superset", _first(ref_flat != cl_flat))
    rep.add("flat closure is union of point closures", _first(pointwise_flat != cl_flat))
    rep.add("zariski closure is smallest zariski-closed superset", _first(ref_zar != cl_zar))
    rep.add("zariski closure is union of point closures", _first(pointwise_zar != cl_zar))

    # (f) clopens agree across views and with clopen_sets
    flat_clopen = {int(m) for m in flat if flat_flag[full & ~int(m)]}
    zar_clopen = {int(m) for m in zar if zar_flag[full & ~int(m)]}
    listed = {c.mask for c in clopen_sets(X)}
    diff = sorted(flat_clopen ^ zar_clopen)
    rep.add("flat clopens equal zariski clopens", diff[0] if diff else None)
    diff = sorted(flat_clopen ^ listed)
    rep.add("clopen_sets lists exactly the clopens", diff[0] if diff else None)

    # (g) irreducible closed sets <-> points, with unique generic points
    for view, fam, table in ((FLAT, flat, X.down), (ZARISKI, zar, X.up)):
        irr = set(int(m) for m in _irreducible_members(fam))
        listed = [s.mask for s in irreducible_closed_sets(view, X)]
        bad = None
        if set(listed) != irr:
            bad = sorted(set(listed) ^ irr)[0]
        elif len(set(table)) != n:
            bad = "point closures not injective"
        rep.add(f"{view.value} irreducible closed sets biject with points", bad)
        bad = None
        for m in fam:
            m = int(m)
            g = generic_point(view, X.subset(m))
            if m in irr:
                if g is None or table[g] != m:
                    bad = m
                    break
            elif g is not None:
                bad = m
                break
        rep.add(f"{view.value} generic points are unique", bad)

    # (h) duality
    Y = hochster_dual(X)
    rep.add("dual is an involution", None if hochster_dual(Y) == X else "order changed")
    _, yflat, yzar = _families(Y)
    d1 = np.setxor1d(flat, yzar)
    d2 = np.setxor1d(zar, yflat)
    rep.add("flat closed sets of X are zariski closed sets of the dual",
            None if not d1.size else int(d1[0]))
    rep.add("zariski closed sets of X are flat closed sets of the dual",
            None if not d2.size else int(d2[0]))
    return rep


def sampled_oracle(X: SpectralPoset, samples=2000, seed=0) -> OracleReport:
    """Randomized closure checks for posets too large to scan exhaustively."""
    rng = random.Random(seed)
    rep = OracleReport(X.size)
    pairs = X.relation()
    Y = hochster_dual(X)

    def stable(m, downward):
        for a, b in pairs:
            lo, hi = (m >> a) & 1, (m >> b) & 1
            if (hi and not lo) if downward else (lo and not hi):
                return False
        return True

    found = {"closed": None, "extensive": None, "idempotent": None, "dual": None}
    for _ in range(samples):
        m = rng.getrandbits(X.size) if X.size else 0
        E = X.subset(m)
        for view, downward in ((FLAT, True), (ZARISKI, False)):
            if found["closed"] is None and is_closed(view, E) != stable(m, downward):
                found["closed"] = m
            c = closure(view, E)
            if found["extensive"] is None and m & ~c.mask:
                found["extensive"] = m
            if found["idempotent"] is None and closure(view, c) != c:
                found["idempotent"] = m
        if found["dual"] is None and is_closed(FLAT, E) != is_closed(ZARISKI, Y.subset(m)):
            found["dual"] = m
    for name, bad in found.items():
        rep.add(f"sampled {name}", bad)
    return rep


# --------------------------------------------------------------------------
# poset corpora


def all_posets(n):
    """Every labelled partial order on ``n`` points (strict relation scan)."""
    offdiag = [(a, b) for a in range(n) for b in range(n) if a != b]
    out = []
    for choice in range(1 << len(offdiag)):
        rel = {offdiag[i] for i in bits.iter_bits(choice)}
        if any((b, a) in rel for a, b in rel):
            continue
        if any((a, c) not in rel for a, b in rel for b2, c in rel if b == b2 and a != c):
            continue
        out.append(make_poset(n, sorted(rel)))
    return out


def random_poset(n, rng: random.Random, density=None):
    """Random order: a random DAG on a shuffled labelling, closed transitively."""
    if density is None:
        density = rng.uniform(0.05, 0.6)
    perm = list(range(n))
    rng.shuffle(perm)
    rel = [(perm[i], perm[j]) for i, j in itertools.combinations(range(n), 2) if rng.random() < density]
    return make_poset(n, rel)
