"""Exchange graphs of MM generators and the weak order on S_n.

Vertices of the exchange graph are the distinct words with letter counts
``a`` (the MM generators T^w); position i of word w is either a loop
(``w[i] == w[i+1]``, mutation fixes T^w) or an edge to w with letters i and
i+1 swapped.
"""

from __future__ import annotations

import json
import os
from collections import Counter, deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import InvalidWord
from .model import FactorData, Word, check_word, word_key
from .mutation import mu_adjacent

Edge = Tuple[str, str, int]
Loop = Tuple[str, int]


@dataclass(frozen=True)
class LabeledGraph:
    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...] = ()
    loops: Tuple[Loop, ...] = ()
    name: str = field(default="EG", compare=False)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex keys")
        pos = {v: k for k, v in enumerate(self.vertices)}
        for v, w, _ in self.edges:
            pv, pw = pos.get(v), pos.get(w)
            if pv is None or pw is None:
                raise ValueError(f"edge ({v}, {w}) has unknown endpoint")
            if pv > pw:
                raise ValueError(f"edge ({v}, {w}) not in key order")
        for v, _ in self.loops:
            if v not in pos:
                raise ValueError(f"loop at unknown vertex {v}")
        slots = {(v, i) for v, _, i in self.edges}
        slots.update((w, i) for _, w, i in self.edges)
        clash = slots.intersection(self.loops)
        if clash:
            v, i = min(clash)
            raise ValueError(f"vertex {v} has both an edge and a loop labelled {i}")

    def degree_slots(self) -> Dict[str, int]:
        """Edges plus loops at each vertex (n-1 for an exchange graph)."""
        d = Counter()
        for v, w, _ in self.edges:
            d[v] += 1
            d[w] += 1
        for v, _ in self.loops:
            d[v] += 1
        return {v: d[v] for v in self.vertices}

    def loops_at(self) -> Dict[str, Tuple[int, ...]]:
        out: Dict[str, List[int]] = {v: [] for v in self.vertices}
        for v, i in self.loops:
            out[v].append(i)
        return {v: tuple(sorted(ls)) for v, ls in out.items()}

    def neighbours(self, v: str) -> List[str]:
        return sorted(
            [w for a, w, _ in self.edges if a == v] + [a for a, w, _ in self.edges if w == v]
        )

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "loops": [list(lp) for lp in self.loops],
        }

    @classmethod
    def from_dict(cls, data: dict, name: str = "EG") -> "LabeledGraph":
        return cls(
            tuple(data["vertices"]),
            tuple((str(v), str(w), int(i)) for v, w, i in data["edges"]),
            tuple((str(v), int(i)) for v, i in data["loops"]),
            name=name,
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def multinomial(a: Sequence[int]) -> int:
    out = factorial(sum(a))
    for k in a:
        out //= factorial(k)
    return out


def multiset_permutations(a: Sequence[int]) -> Iterator[Word]:
    """All words with ``a[c-1]`` copies of letter c, in lexicographic order."""
    w = [c for c, k in enumerate(a, start=1) for _ in range(k)]
    n = len(w)
    while True:
        yield tuple(w)
        i = n - 2
        while i >= 0 and w[i] >= w[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while w[j] <= w[i]:
            j -= 1
        w[i], w[j] = w[j], w[i]
        w[i + 1:] = reversed(w[i + 1:])


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("CANMMA_THREADS", "1")))
    except ValueError:
        return 1


def _chunk(fd: FactorData, words: Sequence[Word]):
    """Keys, edges and loops for a run of words.

    The edge {w, w s_i} is emitted from its smaller end, which is w exactly
    when w[i-1] < w[i].
    """
    keys, edges, loops = [], [], []
    short = fd.label_sep == ""
    table = fd.label_strings
    add_edge, add_loop = edges.append, loops.append
    for w in words:
        key = "".join([table[c - 1] for c in w]) if short else word_key(fd, w)
        keys.append(key)
        for i, (p, q) in enumerate(zip(w, w[1:]), start=1):
            if p == q:
                add_loop((key, i))
            elif p < q:
                if short:
                    add_edge((key, key[: i - 1] + key[i] + key[i - 1] + key[i + 1:], i))
                else:
                    add_edge((key, word_key(fd, mu_adjacent(w, i)), i))
    return keys, edges, loops


def _assemble(fd: FactorData, words: List[Word], workers: int, name: str) -> LabeledGraph:
    words = sorted(words)
    if workers > 1 and len(words) > 1:
        size = max(1, -(-len(words) // (4 * workers)))
        runs = [words[k:k + size] for k in range(0, len(words), size)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda run: _chunk(fd, run), runs))
    else:
        parts = [_chunk(fd, words)]
    keys, edges, loops = [], [], []
    for ks, es, ls in parts:
        keys.extend(ks)
        edges.extend(es)
        loops.extend(ls)
    return LabeledGraph(tuple(keys), tuple(edges), tuple(loops), name=name)


def build_exchange_graph(fd: FactorData, workers: Optional[int] = None) -> LabeledGraph:
    """Exchange graph of the basic MM generators of R.

    ``workers`` (default: ``$CANMMA_THREADS``) only changes how the work is
    scheduled; the result is identical for every value.
    """
    workers = worker_count() if workers is None else workers
    return _assemble(fd, list(multiset_permutations(fd.a)), workers, "EG")


def bfs_closure(fd: FactorData, start: Sequence[int]) -> LabeledGraph:
    """Component of the exchange graph reachable from ``start`` by mutation."""
    start = check_word(fd, start)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(1, fd.n):
            w2 = mu_adjacent(w, i)
            if w2 not in seen:
                seen.add(w2)
                queue.append(w2)
    return _assemble(fd, list(seen), 1, "EG")


# weak order

def perm_key(w: Sequence[int]) -> str:
    if len(w) < 10:
        return "".join(map(str, w))
    return ",".join(map(str, w))


def _check_perm(w: Sequence[int]) -> Tuple[int, ...]:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise InvalidWord(f"{w} is not a permutation of 1..{len(w)}")
    return w


def inversions(w: Sequence[int]) -> int:
    """Length of ``w`` in S_n, i.e. its number of inversions."""
    w = _check_perm(w)
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def hasse_weak_order(n: int) -> LabeledGraph:
    """Hasse graph of the (right) weak order: w -- w s_i for all w, i."""
    verts = list(permutations(range(1, n + 1)))
    keys = [perm_key(w) for w in verts]
    edges = []
    for w, key in zip(verts, keys):
        for i in range(1, n):
            w2 = mu_adjacent(w, i)
            if w < w2:
                edges.append((key, perm_key(w2), i))
    return LabeledGraph(tuple(keys), tuple(edges), (), name="Hasse")


# isomorphism of loop multigraphs

def _adjacency(g: LabeledGraph):
    idx = {v: k for k, v in enumerate(g.vertices)}
    adj: List[Counter] = [Counter() for _ in g.vertices]
    for v, w, _ in g.edges:
        adj[idx[v]][idx[w]] += 1
        adj[idx[w]][idx[v]] += 1
    loops = Counter(idx[v] for v, _ in g.loops)
    return adj, [loops[k] for k in range(len(g.vertices))]


def _refine(adj, colours):
    """Colour refinement to a stable partition, relabelled canonically."""
    ncl = len(set(colours))
    while True:
        sigs = [
            (colours[v], tuple(sorted((colours[u], mult) for u, mult in adj[v].items())))
            for v in range(len(adj))
        ]
        table = {s: k for k, s in enumerate(sorted(set(sigs)))}
        colours = [table[s] for s in sigs]
        if len(table) == ncl:
            return colours
        ncl = len(table)


def graphs_isomorphic(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    """Isomorphism of the underlying loop multigraphs (labels ignored).

    Joint colour refinement on the disjoint union, then individualisation
    and backtracking on the smallest ambiguous colour class.
    """
    n1, n2 = len(g1.vertices), len(g2.vertices)
    if n1 != n2 or len(g1.edges) != len(g2.edges) or len(g1.loops) != len(g2.loops):
        return False
    adj1, loops1 = _adjacency(g1)
    adj2, loops2 = _adjacency(g2)
    adj = adj1 + [Counter({u + n1: k for u, k in c.items()}) for c in adj2]
    start = [(loops1 + loops2)[v] for v in range(n1 + n2)]
    start = [(lp, sum(adj[v].values())) for v, lp in enumerate(start)]
    table = {s: k for k, s in enumerate(sorted(set(start)))}
    colours = [table[s] for s in start]
    return _search(adj, colours, n1)


def _balanced(colours, n1) -> bool:
    return Counter(colours[:n1]) == Counter(colours[n1:])


def _search(adj, colours, n1) -> bool:
    colours = _refine(adj, colours)
    if not _balanced(colours, n1):
        return False
    classes: Dict[int, List[int]] = {}
    for v, c in enumerate(colours):
        classes.setdefault(c, []).append(v)
    ambiguous = [vs for vs in classes.values() if len(vs) > 2]
    if not ambiguous:
        # discrete: colour c pairs exactly one vertex of each graph
        mapping = {vs[0]: vs[1] - n1 for vs in classes.values()}
        return all(
            Counter({mapping[u]: k for u, k in adj[v].items()})
            == Counter({u - n1: k for u, k in adj[mapping[v] + n1].items()})
            for v in range(n1)
        )
    cell = min(ambiguous, key=len)
    v = cell[0]
    fresh = max(colours) + 1
    for w in (u for u in cell if u >= n1):
        trial = list(colours)
        trial[v] = trial[w] = fresh
        if _search(adj, trial, n1):
            return True
    return False


# DOT output

def _q(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def to_dot(g: LabeledGraph) -> str:
    lines = [f"graph {g.name} {{"]
    lines.extend(f"  {_q(v)};" for v in g.vertices)
    for v, w, i in g.edges:
        lines.append(f'  {_q(v)} -- {_q(w)} [label="{i}"];')
    for v, i in g.loops:
        lines.append(f'  {_q(v)} -- {_q(v)} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
