"""Slow reference computations used to freeze expected values.

Everything here works on plain Python tables and sets; none of it calls
the ideal, spectrum or topology code under test.
"""

import itertools


def tables(ring):
    n = ring.size
    add = [[int(ring.add(a, b)) for b in range(n)] for a in range(n)]
    mul = [[int(ring.mul(a, b)) for b in range(n)] for a in range(n)]
    return add, mul


def ideal_closure(add, mul, gens, start=()):
    """Smallest set containing 0, ``start`` and ``gens`` closed under + and R*."""
    n = len(add)
    out = {0, *start, *gens}
    frontier = list(out)
    while frontier:
        x = frontier.pop()
        new = {mul[r][x] for r in range(n)} | {add[x][y] for y in out}
        new -= out
        out |= new
        frontier.extend(new)
    return frozenset(out)


def all_ideals(add, mul, candidates=None):
    """Every ideal generated by a subset of ``candidates`` (default: all
    elements), grown one generator at a time from (0)."""
    n = len(add)
    candidates = range(n) if candidates is None else candidates
    seen = {ideal_closure(add, mul, ())}
    queue = list(seen)
    while queue:
        I = queue.pop()
        for x in candidates:
            if x not in I:
                J = ideal_closure(add, mul, (x,), I)
                if J not in seen:
                    seen.add(J)
                    queue.append(J)
    return seen


def is_prime(mul, I, one=1):
    n = len(mul)
    if one in I:
        return False
    return all(a in I or b in I for a in range(n) for b in range(n) if mul[a][b] in I)


def primes(add, mul, one=1):
    return {I for I in all_ideals(add, mul) if is_prime(mul, I, one)}


def idempotents(mul):
    return [e for e in range(len(mul)) if mul[e][e] == e]


def omega(n):
    """Number of distinct prime factors, by trial division."""
    count, d = 0, 2
    while d * d <= n:
        if n % d == 0:
            count += 1
            while n % d == 0:
                n //= d
        d += 1
    return count + (n > 1)


def isomorphic(t1, t2, one1=1, one2=1):
    """Exhaustive search for a bijection respecting + and *."""
    (a1, m1), (a2, m2) = t1, t2
    n = len(a1)
    if n != len(a2):
        return None
    for perm in itertools.permutations(range(n)):
        if perm[0] != 0 or perm[one1] != one2:
            continue
        if all(perm[a1[x][y]] == a2[perm[x]][perm[y]] and perm[m1[x][y]] == m2[perm[x]][perm[y]]
               for x in range(n) for y in range(n)):
            return perm
    return None


def down_sets(n, pairs):
    """All subsets closed downward under the raw relation pairs (a < b)."""
    return {S for S in range(1 << n) if all(not (S >> b) & 1 or (S >> a) & 1 for a, b in pairs)}


def up_sets(n, pairs):
    return down_sets(n, [(b, a) for a, b in pairs])


def random_relation(n, rng, density=0.3):
    """Pairs a < b for a random order extension of a random DAG."""
    order = list(range(n))
    rng.shuffle(order)
    return [(order[i], order[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
