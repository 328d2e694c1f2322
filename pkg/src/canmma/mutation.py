"""Mutation of modifying generators as reflection of pictures.

Mutating T^F at the summands indexed by J reverses, for every maximal run
[l, u] of consecutive members of J, the block of groups g_l, ..., g_{u+1}.
Reflection is an involution, so the left and right mutations coincide on
pictures; ``mu_plus`` is kept as a named alias of ``mu_minus``.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

from .errors import InvalidSummandSet
from .model import GroupSequence, Word

Interval = Tuple[int, int]


def connected_components(J: Iterable[int], m: int) -> List[Interval]:
    """Maximal runs of consecutive integers in ``J``, as (low, high) pairs."""
    J = sorted(set(int(j) for j in J))
    if not J:
        raise InvalidSummandSet("J must be nonempty")
    if J[0] < 1 or J[-1] > m:
        raise InvalidSummandSet(f"J = {J} is not contained in 1..{m}")
    runs = []
    lo = prev = J[0]
    for j in J[1:]:
        if j != prev + 1:
            runs.append((lo, prev))
            lo = j
        prev = j
    runs.append((lo, prev))
    return runs


def reflect(P: GroupSequence, J: Iterable[int]) -> GroupSequence:
    groups = list(P.groups)
    for lo, hi in connected_components(J, P.m):
        # groups at 1-based positions lo..hi+1
        groups[lo - 1:hi + 1] = groups[lo - 1:hi + 1][::-1]
    return GroupSequence(tuple(groups))


def mu_minus(P: GroupSequence, J: Iterable[int]) -> GroupSequence:
    return reflect(P, J)


mu_plus = mu_minus


def is_fixed(P: GroupSequence, J: Iterable[int]) -> bool:
    """True iff J is componentwise symmetric for ``P``."""
    return reflect(P, J) == P


def mu_adjacent(w: Sequence[int], i: int) -> Word:
    """Mutation of T^w at its i-th summand: swap the letters at i, i+1."""
    w = tuple(w)
    if not 1 <= i <= len(w) - 1:
        raise InvalidSummandSet(f"position {i} outside 1..{len(w) - 1}")
    return w[:i - 1] + (w[i], w[i - 1]) + w[i + 1:]
