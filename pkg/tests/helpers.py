"""Brute-force enumerations shared by the test modules."""

import random
from itertools import combinations

from canmma.model import FactorData, Flag, GroupSequence
from canmma.poly import Poly


def all_flags(n):
    """Every flag in {1..n}, including the empty one."""
    proper = [frozenset(s) for k in range(1, n) for s in combinations(range(1, n + 1), k)]

    def grow(chain):
        yield Flag(tuple(chain))
        last = chain[-1] if chain else frozenset()
        for s in proper:
            if last < s:
                yield from grow(chain + [s])

    yield from grow([])


def compositions_upto(total):
    """All multiplicity vectors a with 1 <= sum(a) <= total."""
    def comps(n):
        if n == 0:
            yield ()
            return
        for first in range(1, n + 1):
            for rest in comps(n - first):
                yield (first,) + rest

    for n in range(1, total + 1):
        yield from comps(n)


def random_picture(rng: random.Random, max_n=8):
    """A random picture (groups of class counts) with its multiplicities."""
    t = rng.randint(1, 4)
    a = [rng.randint(1, 3) for _ in range(t)]
    while sum(a) > max_n:
        a[a.index(max(a))] -= 1
        a = [k for k in a if k] or [1]
    letters = [c for c, k in enumerate(a) for _ in range(k)]
    rng.shuffle(letters)
    ngroups = rng.randint(1, len(letters))
    cuts = sorted(rng.sample(range(1, len(letters)), ngroups - 1))
    groups = []
    for lo, hi in zip([0] + cuts, cuts + [len(letters)]):
        g = [0] * len(a)
        for c in letters[lo:hi]:
            g[c] += 1
        groups.append(tuple(g))
    return tuple(a), GroupSequence(tuple(groups))


def random_J(rng: random.Random, m):
    k = rng.randint(1, m)
    return set(rng.sample(range(1, m + 1), k))


def random_poly_in_m(rng: random.Random, max_deg=3, max_terms=4):
    """Random nonzero polynomial in x, y without constant term."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            d = rng.randint(1, max_deg)
            i = rng.randint(0, d)
            terms[(i, d - i)] = rng.randint(-3, 3)
        p = Poly(terms, 2)
        if not p.is_zero():
            return p


def random_factor_data(rng: random.Random, max_n=5):
    n = rng.randint(1, max_n)
    t = rng.randint(1, n)
    class_of = list(range(1, t + 1)) + [rng.randint(1, t) for _ in range(n - t)]
    rng.shuffle(class_of)
    reps = [random_poly_in_m(rng) for _ in range(t)]
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return FactorData.from_classes(class_of, reps)
