"""Classification predicates, reductions, quivers and matrix factorizations.

Everything here is computed from a flag F and its picture g_1 | ... | g_{m+1}:

* the CY reduction of T^F splits into the residual singularities
  uv = g_j, one per group;
* T^F is MM iff F is maximal, CT iff additionally no f_i lies in m^2;
* the quiver of End(T^F) is the doubled (m+1)-cycle plus loops read off
  from linear parts of neighbouring groups.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import InvalidFlag, MissingReps
from .graphs import multinomial, multiset_permutations
from .model import (
    ClassVector,
    FactorData,
    Flag,
    Word,
    class_normal_form,
    picture_of_flag,
)
from .poly import Mat2, Poly, linear_part, span_dim, verify_mf


def _require_reps(fd: FactorData, what: str) -> None:
    if not fd.has_reps:
        raise MissingReps(f"{what} needs polynomial representatives for every prime")


# CY reduction

@dataclass(frozen=True)
class ReductionResult:
    pieces: Tuple[FactorData, ...]
    primes: Tuple[Tuple[int, ...], ...]

    def multiplicities(self) -> Tuple[int, ...]:
        return tuple(k for p in self.pieces for k in p.a)


def cy_reduce(fd: FactorData, F: Flag) -> ReductionResult:
    """One residual singularity per group of the picture of ``F``."""
    F.check(fd.n)
    pieces, primes = [], []
    for step in F.steps(fd.n):
        classes = [fd.class_of[i - 1] for i in step]
        renumber = {c: k for k, c in enumerate(dict.fromkeys(classes), start=1)}
        reps = [fd.reps[c - 1] for c in renumber] if fd.has_reps else None
        pieces.append(FactorData.from_classes([renumber[c] for c in classes], reps))
        primes.append(tuple(step))
    return ReductionResult(tuple(pieces), tuple(primes))


# classification

def is_modifying(fd: FactorData, F: Flag) -> bool:
    F.check(fd.n)
    return True


def is_MM(fd: FactorData, F: Flag) -> bool:
    F.check(fd.n)
    return F.is_maximal(fd.n)


def is_CT(fd: FactorData, F: Flag) -> bool:
    _require_reps(fd, "is_CT")
    F.check(fd.n)
    return F.is_maximal(fd.n) and all(not linear_part(p).is_zero() for p in fd.reps)


def count_MM(fd: FactorData) -> int:
    return multinomial(fd.a)


def morita_class_count(fd: FactorData) -> int:
    # End((I (x) T^w)**) = End(T^w): one Morita class per word
    return count_MM(fd)


@dataclass(frozen=True, order=True)
class MMParam:
    word: Word
    twist: ClassVector


def mm_params(fd: FactorData, class_group_sample: Iterable[Sequence[int]]) -> List[MMParam]:
    """Pairs (w, I) standing for the MM module (I (x) T^w)**, deduplicated."""
    twists = sorted({class_normal_form(fd.a, v) for v in class_group_sample})
    return sorted({MMParam(w, t) for w, t in cartesian(multiset_permutations(fd.a), twists)})


# quivers

@dataclass(frozen=True)
class Arrow:
    source: str
    target: str
    label: str
    poly: Optional[str] = None


@dataclass(frozen=True)
class Quiver:
    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]

    def loops(self) -> Dict[str, Tuple[str, ...]]:
        out = {v: [] for v in self.vertices}
        for a in self.arrows:
            if a.source == a.target:
                out[a.source].append(a.label)
        return {v: tuple(ls) for v, ls in out.items()}

    def cycle_arrows(self) -> List[Arrow]:
        return [a for a in self.arrows if a.source != a.target]

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [
                {"source": a.source, "target": a.target, "label": a.label, "poly": a.poly}
                for a in self.arrows
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Quiver":
        return cls(
            tuple(data["vertices"]),
            tuple(Arrow(d["source"], d["target"], d["label"], d.get("poly")) for d in data["arrows"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_dot(self) -> str:
        lines = ["digraph Q {"]
        lines.extend(f'  "{v}";' for v in self.vertices)
        for a in self.arrows:
            text = a.label if a.poly is None or a.poly == a.label else f"{a.label}={a.poly}"
            lines.append(f'  "{a.source}" -> "{a.target}" [label="{text}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _vertex_name(I) -> str:
    return "T{" + ",".join(map(str, sorted(I))) + "}"


def loop_labels(g: Poly, h: Poly) -> Tuple[str, ...]:
    """Loops at a vertex whose neighbouring groups are g and h.

    (g, h) = m exactly when their linear parts span m/m^2; otherwise add the
    first of x, y outside the span, or both when the span is zero.
    """
    lg, lh = linear_part(g), linear_part(h)
    d = span_dim(lg, lh)
    if d == 2:
        return ()
    if d == 0:
        return ("x", "y")
    ref = lg if not lg.is_zero() else lh
    # x lies in the span of ref iff ref is a multiple of (1, 0)
    return ("x",) if ref.cy else ("y",)


def build_quiver(fd: FactorData, F: Flag) -> Quiver:
    _require_reps(fd, "build_quiver")
    F.check(fd.n)
    steps = F.steps(fd.n)
    g = [fd.f_of(step) for step in steps]          # g[0..m] = g_1..g_{m+1}
    m = F.m
    names = ["R"] + [_vertex_name(I) for I in F.chain]
    arrows: List[Arrow] = []

    def poly_arrow(src, dst, j):
        arrows.append(Arrow(src, dst, f"g{j}", str(g[j - 1])))

    if m == 1:
        poly_arrow("R", names[1], 1)
        arrows.append(Arrow("R", names[1], "u"))
        arrows.append(Arrow(names[1], "R", "g2/u", f"({g[1]})/u"))
        arrows.append(Arrow(names[1], "R", "inc"))
    elif m >= 2:
        poly_arrow("R", names[1], 1)
        arrows.append(Arrow(names[1], "R", "inc"))
        for i in range(1, m):
            poly_arrow(names[i], names[i + 1], i + 1)
            arrows.append(Arrow(names[i + 1], names[i], "inc"))
        arrows.append(Arrow(names[m], "R", f"g{m + 1}/u", f"({g[m]})/u"))
        arrows.append(Arrow("R", names[m], "u"))

    loops = {"R": loop_labels(g[0], g[m])}
    for i in range(1, m + 1):
        loops[names[i]] = loop_labels(g[i - 1], g[i])
    for v in names:
        arrows.extend(Arrow(v, v, lab) for lab in loops[v])
    return Quiver(tuple(names), tuple(arrows))


# matrix factorizations

def mf_pair(fd: FactorData, I: Iterable[int]) -> Tuple[Mat2, Mat2]:
    """Matrix factorization of f - uv presenting (u, f_I)."""
    _require_reps(fd, "mf_pair")
    I = set(I)
    bad = [i for i in I if not 1 <= i <= fd.n]
    if bad:
        raise InvalidFlag(f"indices {sorted(bad)} outside 1..{fd.n}")
    fI = fd.f_of(I).lift(4)
    fJ = fd.f_of(set(range(1, fd.n + 1)) - I).lift(4)
    u, v = Poly.var("u", 4), Poly.var("v", 4)
    A = Mat2([[fI, u], [v, fJ]])
    B = Mat2([[fJ, -u], [-v, fI]])
    return A, B


def verify_all_mf(fd: FactorData) -> Dict[Tuple[int, ...], bool]:
    """verify_mf for every subset of 1..n."""
    f = fd.f()
    out = {}
    for mask in range(1 << fd.n):
        I = tuple(i + 1 for i in range(fd.n) if mask >> i & 1)
        A, B = mf_pair(fd, I)
        out[I] = verify_mf(A, B, f)
    return out


# derived equivalence of partial resolutions

def singularity_multiset(fd: FactorData, F: Flag) -> Counter:
    return Counter(picture_of_flag(fd, F).groups)


@dataclass
class DerivedEquivReport:
    curves: Tuple[int, int]
    only_first: List[Tuple[int, ...]] = field(default_factory=list)
    only_second: List[Tuple[int, ...]] = field(default_factory=list)

    @property
    def sufficient(self) -> bool:
        return self.curves[0] == self.curves[1] and not self.only_first and not self.only_second


def derived_equiv_report(fd: FactorData, F: Flag, G: Flag) -> DerivedEquivReport:
    """Compare the residual singularities of X^F and X^G as multisets."""
    a, b = singularity_multiset(fd, F), singularity_multiset(fd, G)
    return DerivedEquivReport(
        (F.m, G.m),
        sorted((a - b).elements()),
        sorted((b - a).elements()),
    )


def derived_equiv_sufficient(fd: FactorData, F: Flag, G: Flag) -> bool:
    """True when X^F and X^G are known to be derived equivalent.

    Same number of curves and the same singularities up to permutation.
    False means only that this criterion does not apply.
    """
    return derived_equiv_report(fd, F, G).sufficient
