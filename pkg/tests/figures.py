"""Reference exchange graphs for n=4 and n=5, transcribed by hand from drawings.

Each entry: multiplicities, {vertex: loop labels}, [(v, w, label)].
"""

N4_ALL_EQUAL = (
    (4,),
    {"1111": {1, 2, 3}},
    [],
)

N4_THREE_ONE = (
    (3, 1),
    {"1114": {1, 2}, "1141": {1}, "1411": {3}, "4111": {2, 3}},
    [("1114", "1141", 3), ("1141", "1411", 2), ("1411", "4111", 1)],
)

N4_TWO_TWO = (
    (2, 2),
    {"1133": {1, 3}, "1313": set(), "1331": {2}, "3113": {2}, "3131": set(), "3311": {1, 3}},
    [
        ("1133", "1313", 2),
        ("1313", "1331", 3),
        ("1313", "3113", 1),
        ("1331", "3131", 1),
        ("3113", "3131", 3),
        ("3131", "3311", 2),
    ],
)

N4_TWO_ONE_ONE = (
    (2, 1, 1),
    {
        "3114": {2}, "1314": set(), "3141": set(), "1134": {1}, "1341": set(),
        "3411": {3}, "1143": {1}, "1431": set(), "4311": {3}, "1413": set(),
        "4131": set(), "4113": {2},
    },
    [
        ("3114", "3141", 3), ("1314", "3114", 1), ("1314", "1341", 3),
        ("3141", "3411", 2), ("1134", "1314", 2), ("1134", "1143", 3),
        ("1341", "1431", 2), ("1341", "3141", 1), ("3411", "4311", 1),
        ("1143", "1413", 2), ("1431", "4131", 1), ("1413", "1431", 3),
        ("1413", "4113", 1), ("4131", "4311", 2), ("4113", "4131", 3),
    ],
)

N4_DISTINCT_EDGES = [
    ("3124", "3214", 2), ("3124", "3142", 3), ("3214", "3241", 3),
    ("1324", "3124", 1), ("1324", "1342", 3), ("2314", "3214", 1),
    ("2314", "2341", 3), ("3142", "3412", 2), ("3241", "3421", 2),
    ("1234", "2134", 1), ("1234", "1324", 2), ("1234", "1243", 3),
    ("2134", "2314", 2), ("2134", "2143", 3), ("1342", "1432", 2),
    ("1342", "3142", 1), ("2341", "3241", 1), ("2341", "2431", 2),
    ("3412", "3421", 3), ("3412", "4312", 1), ("3421", "4321", 1),
    ("1243", "2143", 1), ("1243", "1423", 2), ("2143", "2413", 2),
    ("1432", "4132", 1), ("2431", "4231", 1), ("4312", "4321", 3),
    ("1423", "1432", 3), ("1423", "4123", 1), ("2413", "2431", 3),
    ("2413", "4213", 1), ("4132", "4312", 2), ("4231", "4321", 2),
    ("4123", "4132", 3), ("4123", "4213", 2), ("4213", "4231", 3),
]

N4_DISTINCT = (
    (1, 1, 1, 1),
    {v: set() for e in N4_DISTINCT_EDGES for v in e[:2]},
    N4_DISTINCT_EDGES,
)

N5_TWO_THREE = (
    (2, 3),
    {
        "11333": {1, 3, 4}, "31133": {2, 4}, "33113": {1, 3}, "33311": {1, 2, 4},
        "13133": {4}, "31313": set(), "33131": {1}, "13313": {2}, "31331": {3},
        "13331": {2, 3},
    },
    [
        ("11333", "13133", 2), ("31133", "31313", 3), ("33113", "33131", 4),
        ("13133", "31133", 1), ("13133", "13313", 3), ("31313", "33113", 2),
        ("31313", "31331", 4), ("33131", "33311", 3), ("13313", "31313", 1),
        ("13313", "13331", 4), ("31331", "33131", 2), ("13331", "31331", 1),
    ],
)

ALL_FIGURES = {
    "n4 (1)": N4_ALL_EQUAL,
    "n4 (2)": N4_THREE_ONE,
    "n4 (3)": N4_TWO_TWO,
    "n4 (4)": N4_TWO_ONE_ONE,
    "n4 (5)": N4_DISTINCT,
    "n5": N5_TWO_THREE,
}


def figure_sets(fig):
    """(vertex set, loop multiset, undirected labelled edge set) of a figure."""
    _, loops, edges = fig
    verts = set(loops)
    loop_set = {(v, i) for v, ls in loops.items() for i in ls}
    edge_set = {(frozenset((v, w)), i) for v, w, i in edges}
    return verts, loop_set, edge_set


def graph_sets(g):
    return (
        set(g.vertices),
        set(g.loops),
        {(frozenset((v, w)), i) for v, w, i in g.edges},
    )
