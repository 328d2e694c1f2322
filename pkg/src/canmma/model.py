"""Singularity data: prime factors, flags, pictures and divisor classes.

The singularity is R = k[[x,y,u,v]]/(f1...fn - uv).  Prime factors are
indexed 1..n in the given order; ``class_of[i-1]`` says which ideal class
(1..t) the factor f_i belongs to.  A flag I1 < ... < Im of subsets of
{1..n} picks out the modifying generator R + (u, f_I1) + ... + (u, f_Im).
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import InvalidFactorData, InvalidFlag, InvalidWord
from .poly import Poly, is_unit_multiple, product

ClassVector = Tuple[int, ...]
CountVector = Tuple[int, ...]
Word = Tuple[int, ...]


@dataclass(frozen=True)
class FactorData:
    class_of: Tuple[int, ...]
    a: Tuple[int, ...]
    reps: Optional[Tuple[Poly, ...]] = None

    @classmethod
    def from_classes(
        cls, class_of: Sequence[int], reps: Optional[Sequence[Poly]] = None, t: Optional[int] = None
    ) -> "FactorData":
        class_of = tuple(int(c) for c in class_of)
        if t is None:
            t = max(class_of, default=0)
        a = tuple(class_of.count(c) for c in range(1, t + 1))
        fd = cls(class_of, a, tuple(reps) if reps is not None else None)
        validate(fd)
        return fd

    @classmethod
    def from_multiplicities(cls, a: Sequence[int], reps: Optional[Sequence[Poly]] = None) -> "FactorData":
        """Grouped form f = f1^a1 ... ft^at, factors listed class by class."""
        class_of = [c for c, k in enumerate(a, start=1) for _ in range(k)]
        return cls.from_classes(class_of, reps)

    @classmethod
    def distinct(cls, n: int, reps: Optional[Sequence[Poly]] = None) -> "FactorData":
        return cls.from_classes(range(1, n + 1), reps)

    @property
    def n(self) -> int:
        return len(self.class_of)

    @property
    def t(self) -> int:
        return len(self.a)

    @property
    def has_reps(self) -> bool:
        return self.reps is not None

    @cached_property
    def labels(self) -> Tuple[int, ...]:
        """Display label of each class: the index of its first prime factor.

        This is how words like ``1114`` or ``11333`` name the classes.
        """
        first = {}
        for i, c in enumerate(self.class_of, start=1):
            first.setdefault(c, i)
        return tuple(first[c] for c in range(1, self.t + 1))

    @cached_property
    def label_strings(self) -> Tuple[str, ...]:
        return tuple(map(str, self.labels))

    @cached_property
    def label_sep(self) -> str:
        """Words are comma-separated once some label has two digits."""
        return "" if all(lab < 10 for lab in self.labels) else ","

    def primes_of_class(self, c: int) -> List[int]:
        return [i for i, ci in enumerate(self.class_of, start=1) if ci == c]

    def rep_of_prime(self, i: int) -> Poly:
        return self.reps[self.class_of[i - 1] - 1]

    def f_of(self, subset: Iterable[int]) -> Poly:
        """Product of the representatives f_i over ``subset``."""
        return product((self.rep_of_prime(i) for i in sorted(subset)), 2)

    def f(self) -> Poly:
        return self.f_of(range(1, self.n + 1))


def validate(fd: FactorData) -> List[str]:
    """Check the invariants of ``fd``; return a list of warnings.

    Hard violations raise :class:`InvalidFactorData`.  Representatives of
    distinct classes that are scalar multiples of each other only produce a
    warning since the declared classes are authoritative.
    """
    if not fd.class_of:
        raise InvalidFactorData("need at least one prime factor")
    t = len(fd.a)
    for i, c in enumerate(fd.class_of, start=1):
        if not 1 <= c <= t:
            raise InvalidFactorData(f"factor {i} has class {c} outside 1..{t}")
    counts = Counter(fd.class_of)
    for c in range(1, t + 1):
        if counts[c] == 0:
            raise InvalidFactorData(f"class {c} has no prime factor")
        if counts[c] != fd.a[c - 1]:
            raise InvalidFactorData(
                f"multiplicity mismatch for class {c}: a[{c}]={fd.a[c - 1]} but {counts[c]} factors"
            )
    out = []
    if fd.reps is not None:
        if len(fd.reps) != t:
            raise InvalidFactorData(f"expected {t} representatives, got {len(fd.reps)}")
        for c, p in enumerate(fd.reps, start=1):
            if p.nvars != 2:
                raise InvalidFactorData(f"representative of class {c} must be in x, y")
            if p.is_zero():
                raise InvalidFactorData(f"representative of class {c} is zero")
            if p.constant_term():
                raise InvalidFactorData(f"representative of class {c} has nonzero constant term")
        for c in range(t):
            for d in range(c + 1, t):
                if is_unit_multiple(fd.reps[c], fd.reps[d]):
                    msg = f"classes {c + 1} and {d + 1} have scalar-multiple representatives"
                    warnings.warn(msg, stacklevel=2)
                    out.append(msg)
    return out


@dataclass(frozen=True)
class Flag:
    """Strict chain of subsets; the empty chain gives T = R."""

    chain: Tuple[FrozenSet[int], ...]

    @classmethod
    def of(cls, sets: Iterable[Iterable[int]]) -> "Flag":
        return cls(tuple(frozenset(int(i) for i in s) for s in sets))

    @property
    def m(self) -> int:
        return len(self.chain)

    def check(self, n: int) -> None:
        prev: FrozenSet[int] = frozenset()
        full = frozenset(range(1, n + 1))
        for j, s in enumerate(self.chain, start=1):
            bad = [i for i in s if not 1 <= i <= n]
            if bad:
                raise InvalidFlag(f"I_{j} contains indices {sorted(bad)} outside 1..{n}")
            if not prev < s:
                raise InvalidFlag(f"I_{j} = {sorted(s)} does not strictly contain I_{j - 1} = {sorted(prev)}")
            prev = s
        if self.chain and not prev < full:
            raise InvalidFlag(f"I_{self.m} must be a proper subset of 1..{n}")

    def is_maximal(self, n: int) -> bool:
        return self.m == n - 1

    def steps(self, n: int) -> List[List[int]]:
        """The differences I_j minus I_{j-1} for j = 1..m+1, each sorted."""
        sets = [frozenset()] + list(self.chain) + [frozenset(range(1, n + 1))]
        return [sorted(sets[j] - sets[j - 1]) for j in range(1, len(sets))]

    def to_lists(self) -> List[List[int]]:
        return [sorted(s) for s in self.chain]

    def __str__(self):
        return "(" + ", ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in self.chain) + ")"


@dataclass(frozen=True)
class GroupSequence:
    """Picture of a flag: the ordered groups g_1, ..., g_{m+1} as count vectors."""

    groups: Tuple[CountVector, ...]

    @property
    def m(self) -> int:
        return len(self.groups) - 1

    def total(self) -> CountVector:
        return tuple(map(sum, zip(*self.groups)))

    def check(self, a: Sequence[int] | None = None) -> None:
        if not self.groups:
            raise InvalidFlag("picture needs at least one group")
        t = len(self.groups[0])
        for j, g in enumerate(self.groups, start=1):
            if len(g) != t or any(c < 0 for c in g):
                raise InvalidFlag(f"group {j} is not a count vector of length {t}")
            if not any(g):
                raise InvalidFlag(f"group {j} is empty")
        if a is not None and self.total() != tuple(a):
            raise InvalidFlag(f"groups sum to {self.total()}, expected {tuple(a)}")

    def describe(self, labels: Sequence[int]) -> str:
        """Render as ``f2f3 | f1 | f4f5f6`` style text."""
        parts = []
        for g in self.groups:
            mono = "".join(
                f"f{labels[c]}" + (f"^{k}" if k > 1 else "") for c, k in enumerate(g) if k
            )
            parts.append(mono)
        return " | ".join(parts)


def _counts(fd: FactorData, idx: Iterable[int]) -> CountVector:
    v = [0] * fd.t
    for i in idx:
        if not 1 <= i <= fd.n:
            raise InvalidFlag(f"index {i} outside 1..{fd.n}")
        v[fd.class_of[i - 1] - 1] += 1
    return tuple(v)


def picture_of_flag(fd: FactorData, F: Flag) -> GroupSequence:
    F.check(fd.n)
    return GroupSequence(tuple(_counts(fd, step) for step in F.steps(fd.n)))


def flag_of_picture(fd: FactorData, P: GroupSequence) -> Flag:
    """A flag whose picture is ``P``: primes of each class are used in index order."""
    P.check(fd.a)
    pools = {c: fd.primes_of_class(c) for c in range(1, fd.t + 1)}
    used = {c: 0 for c in pools}
    chain = []
    current: set = set()
    for g in P.groups[:-1]:
        for c, k in enumerate(g, start=1):
            current.update(pools[c][used[c]:used[c] + k])
            used[c] += k
        chain.append(frozenset(current))
    return Flag(tuple(chain))


def word_of_maximal_flag(fd: FactorData, F: Flag) -> Word:
    F.check(fd.n)
    if not F.is_maximal(fd.n):
        raise InvalidFlag(f"flag has {F.m} members, a maximal flag needs {fd.n - 1}")
    return tuple(fd.class_of[step[0] - 1] for step in F.steps(fd.n))


def check_word(fd: FactorData, w: Sequence[int]) -> Word:
    w = tuple(int(c) for c in w)
    counts = tuple(w.count(c) for c in range(1, fd.t + 1))
    if len(w) != fd.n or counts != fd.a or any(not 1 <= c <= fd.t for c in w):
        raise InvalidWord(f"word {w} does not have letter counts {fd.a}")
    return w


def flag_of_word(fd: FactorData, w: Sequence[int]) -> Flag:
    w = check_word(fd, w)
    return flag_of_picture(fd, picture_of_word(fd, w))


def picture_of_word(fd: FactorData, w: Sequence[int]) -> GroupSequence:
    w = check_word(fd, w)
    groups = []
    for c in w:
        g = [0] * fd.t
        g[c - 1] = 1
        groups.append(tuple(g))
    return GroupSequence(tuple(groups))


def word_of_picture(P: GroupSequence) -> Word:
    """Inverse of :func:`picture_of_word` on pictures with singleton groups."""
    w = []
    for g in P.groups:
        if sum(g) != 1:
            raise InvalidWord("picture has a group with more than one prime")
        w.append(g.index(1) + 1)
    return tuple(w)


def word_key(fd: FactorData, w: Sequence[int]) -> str:
    """Print a word with class display labels, e.g. ``(1,1,2,2) -> '1133'``."""
    table = fd.label_strings
    return fd.label_sep.join([table[c - 1] for c in w])


def parse_word(fd: FactorData, text: str) -> Word:
    """Inverse of :func:`word_key`; accepts digit strings or comma lists."""
    text = text.strip()
    tokens = text.split(",") if "," in text else list(text)
    try:
        labels = [int(tok) for tok in tokens]
    except ValueError:
        raise InvalidWord(f"cannot read word {text!r}") from None
    inv = {lab: c for c, lab in enumerate(fd.labels, start=1)}
    try:
        w = [inv[lab] for lab in labels]
    except KeyError as exc:
        raise InvalidWord(f"{exc.args[0]} is not a class label; labels are {list(fd.labels)}") from None
    return check_word(fd, w)


# divisor class group Z^t / <a>

def class_normal_form(a: Sequence[int], v: Sequence[int]) -> ClassVector:
    """Representative of v modulo Z*a with first coordinate in [0, a1)."""
    if len(v) != len(a):
        raise InvalidFactorData(f"class vector has length {len(v)}, expected {len(a)}")
    k = v[0] // a[0]
    return tuple(x - k * y for x, y in zip(v, a))


def class_of_subset(fd: FactorData, I: Iterable[int]) -> ClassVector:
    """Class of (u, f_I) in Cl(R)."""
    return class_normal_form(fd.a, _counts(fd, I))


def class_group_structure(a: Sequence[int]) -> Tuple[int, int]:
    """(free rank, torsion order) of Z^t/<a>; torsion order 1 means none."""
    from math import gcd

    d = 0
    for x in a:
        d = gcd(d, x)
    return len(a) - 1, d


def iso_class(fd: FactorData, F: Flag) -> Tuple[ClassVector, ...]:
    """Sorted classes of the non-free summands (u, f_Ij); decides T^F = T^G."""
    F.check(fd.n)
    return tuple(sorted(class_of_subset(fd, I) for I in F.chain))
