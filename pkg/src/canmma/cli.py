"""Command-line front end: ``canmma <subcommand> FILE [options]``.

Exit status is 0 on success, 1 on a domain error (bad file, bad flag, a
failed self-check) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import List, Optional

from .errors import CanmmaError
from .fileio import load_singularity
from .graphs import (
    bfs_closure,
    build_exchange_graph,
    graphs_isomorphic,
    hasse_weak_order,
    multinomial,
    to_dot,
)
from .model import (
    Flag,
    class_group_structure,
    class_normal_form,
    class_of_subset,
    flag_of_picture,
    flag_of_word,
    iso_class,
    parse_word,
    picture_of_flag,
    validate,
)
from .mutation import is_fixed, reflect
from .poly import verify_mf
from .presentation import (
    build_quiver,
    count_MM,
    cy_reduce,
    derived_equiv_report,
    is_CT,
    is_MM,
    is_modifying,
    mf_pair,
    morita_class_count,
)


class DomainFailure(CanmmaError):
    """A self-check reported a mismatch."""


def _flag_arg(text: str) -> Flag:
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        raise argparse.ArgumentTypeError(f"flag must be a JSON array of arrays, got {text!r}")
    if not isinstance(data, list) or not all(
        isinstance(s, list) and all(isinstance(i, int) for i in s) for s in data
    ):
        raise argparse.ArgumentTypeError("flag must look like [[2,3],[1,2,3]]")
    return Flag.of(data)


def _int_list(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(out, payload, fmt: str, text: str, dot: Optional[str] = None) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    elif fmt == "dot":
        if dot is None:
            raise CanmmaError("this subcommand has no DOT output")
        out.write(dot)
    else:
        out.write(text.rstrip("\n") + "\n")


def _resolve_flag(fd, args, opt="flag", word_opt="word") -> Flag:
    F = getattr(args, opt, None)
    w = getattr(args, word_opt, None)
    if F is not None and w is not None:
        raise CanmmaError(f"give either --{opt} or --{word_opt}, not both")
    if w is not None:
        return flag_of_word(fd, parse_word(fd, w))
    if F is None:
        raise CanmmaError(f"--{opt} (or --{word_opt}) is required")
    F.check(fd.n)
    return F


def _graph_text(g) -> str:
    loops = g.loops_at()
    lines = [f"{len(g.vertices)} vertices, {len(g.edges)} edges, {len(g.loops)} loops"]
    for v in g.vertices:
        nbrs = sorted((i, w) for a, w, i in g.edges if a == v) + sorted(
            (i, a) for a, w, i in g.edges if w == v
        )
        nb = ", ".join(f"{i}:{w}" for i, w in sorted(nbrs))
        lp = ",".join(map(str, loops[v]))
        lines.append(f"{v}  edges [{nb}]  loops [{lp}]")
    return "\n".join(lines)


# subcommands

def cmd_validate(args, out):
    fd = load_singularity(args.file)
    warns = validate(fd)
    payload = {"ok": True, "n": fd.n, "t": fd.t, "a": list(fd.a), "warnings": warns,
               "has_reps": fd.has_reps}
    text = f"ok: n={fd.n} t={fd.t} a={list(fd.a)}"
    for w in warns:
        print(f"warning: {w}", file=sys.stderr)
    _emit(out, payload, args.format, text)


def cmd_picture(args, out):
    fd = load_singularity(args.file)
    F = _resolve_flag(fd, args)
    P = picture_of_flag(fd, F)
    text = P.describe(fd.labels)
    _emit(out, {"flag": F.to_lists(), "groups": [list(g) for g in P.groups], "text": text},
          args.format, text)


def cmd_mutate(args, out):
    fd = load_singularity(args.file)
    F = _resolve_flag(fd, args)
    P = picture_of_flag(fd, F)
    Q = reflect(P, args.J)
    G = flag_of_picture(fd, Q)
    payload = {
        "flag": F.to_lists(),
        "J": sorted(set(args.J)),
        "before": [list(g) for g in P.groups],
        "after": [list(g) for g in Q.groups],
        "result_flag": G.to_lists(),
        "fixed": is_fixed(P, args.J),
        "text": Q.describe(fd.labels),
    }
    text = f"{P.describe(fd.labels)}  ->  {Q.describe(fd.labels)}\nresult flag: {G}"
    _emit(out, payload, args.format, text)


def cmd_exchange_graph(args, out):
    fd = load_singularity(args.file)
    g = bfs_closure(fd, parse_word(fd, args.start)) if args.start else build_exchange_graph(fd)
    _emit(out, g.to_dict(), args.format, _graph_text(g), to_dot(g))


def cmd_hasse(args, out):
    if args.n < 1:
        raise CanmmaError("--n must be at least 1")
    g = hasse_weak_order(args.n)
    _emit(out, g.to_dict(), args.format, _graph_text(g), to_dot(g))


def cmd_iso_check(args, out):
    fd = load_singularity(args.file)
    if args.flag is not None or args.flag2 is not None:
        F = _resolve_flag(fd, args, "flag", "word")
        G = _resolve_flag(fd, args, "flag2", "word2")
        c1, c2 = iso_class(fd, F), iso_class(fd, G)
        same = c1 == c2
        payload = {"kind": "module", "isomorphic": same,
                   "classes1": [list(c) for c in c1], "classes2": [list(c) for c in c2]}
        text = f"T^F {'isomorphic' if same else 'not isomorphic'} to T^G"
    else:
        g1 = build_exchange_graph(fd)
        if args.other:
            g2 = build_exchange_graph(load_singularity(args.other))
            what = args.other
        else:
            g2 = hasse_weak_order(fd.n)
            what = f"Hasse graph of weak order on S_{fd.n}"
        same = graphs_isomorphic(g1, g2)
        payload = {"kind": "graph", "isomorphic": same, "against": what}
        text = f"exchange graph {'isomorphic' if same else 'not isomorphic'} to {what}"
    _emit(out, payload, args.format, text)


def cmd_class_group(args, out):
    fd = load_singularity(args.file)
    rank, tors = class_group_structure(fd.a)
    pieces = [f"Z^{rank}"] if rank > 1 else (["Z"] if rank == 1 else [])
    if tors > 1:
        pieces.append(f"Z/{tors}")
    structure = " + ".join(pieces) or "0"
    payload = {"a": list(fd.a), "rank": rank, "torsion": tors, "structure": structure,
               "generators": {str(lab): [int(c == k) for c in range(fd.t)]
                              for k, lab in enumerate(fd.labels)}}
    lines = [f"Cl(R) = Z^{fd.t}/<{tuple(fd.a)}> = {structure}"]
    if args.subset is not None:
        cv = class_of_subset(fd, args.subset)
        payload["subset"] = {"I": sorted(args.subset), "class": list(cv)}
        lines.append(f"[(u, f_I)] for I={sorted(args.subset)}: {cv}")
    if args.vector is not None:
        cv = class_normal_form(fd.a, args.vector)
        payload["vector"] = {"v": args.vector, "class": list(cv)}
        lines.append(f"normal form of {tuple(args.vector)}: {cv}")
    _emit(out, payload, args.format, "\n".join(lines))


def cmd_classify(args, out):
    fd = load_singularity(args.file)
    F = _resolve_flag(fd, args)
    mm = is_MM(fd, F)
    ct = is_CT(fd, F) if fd.has_reps else None
    ct_text = "unknown (no polynomial representatives)" if ct is None else str(ct).lower()
    payload = {"flag": F.to_lists(), "modifying": is_modifying(fd, F), "MM": mm, "CT": ct}
    text = f"modifying: true, MM: {str(mm).lower()}, CT: {ct_text}"
    _emit(out, payload, args.format, text)


def cmd_reduce(args, out):
    fd = load_singularity(args.file)
    F = _resolve_flag(fd, args)
    res = cy_reduce(fd, F)
    payload = {"flag": F.to_lists(), "pieces": []}
    lines = []
    for piece, primes in zip(res.pieces, res.primes):
        entry = {"primes": list(primes), "a": list(piece.a)}
        if piece.has_reps:
            entry["g"] = str(piece.f())
        payload["pieces"].append(entry)
        g = "".join(f"f{i}" for i in primes)
        lines.append(f"uv = {g}" + (f" = {piece.f()}" if piece.has_reps else "") + f"  a={list(piece.a)}")
    _emit(out, payload, args.format, "\n".join(lines))


def cmd_quiver(args, out):
    fd = load_singularity(args.file)
    F = _resolve_flag(fd, args)
    q = build_quiver(fd, F)
    lines = [f"vertices: {', '.join(q.vertices)}"]
    for a in q.arrows:
        lab = a.label if a.poly is None else f"{a.label} = {a.poly}"
        lines.append(f"{a.source} -> {a.target}  {lab}")
    _emit(out, q.to_dict(), args.format, "\n".join(lines), q.to_dot())


def cmd_mf_verify(args, out):
    fd = load_singularity(args.file)
    f = fd.f()
    if args.subset is not None:
        subsets = [tuple(sorted(set(args.subset)))]
    else:
        subsets = [tuple(i + 1 for i in range(fd.n) if mask >> i & 1) for mask in range(1 << fd.n)]
    results = {}
    for I in subsets:
        A, B = mf_pair(fd, I)
        results[I] = verify_mf(A, B, f)
    ok = all(results.values())
    payload = {"f": str(f), "all_ok": ok,
               "results": [{"I": list(I), "ok": r} for I, r in results.items()]}
    lines = [f"f = {f}"] + [f"I={list(I)}: {'ok' if r else 'FAIL'}" for I, r in results.items()]
    _emit(out, payload, args.format, "\n".join(lines))
    if not ok:
        raise DomainFailure("matrix factorization check failed")


def cmd_derived_equiv(args, out):
    fd = load_singularity(args.file)
    F = _resolve_flag(fd, args, "flag", "word")
    G = _resolve_flag(fd, args, "flag2", "word2")
    rep = derived_equiv_report(fd, F, G)
    payload = {"sufficient": rep.sufficient, "curves": list(rep.curves),
               "only_first": [list(g) for g in rep.only_first],
               "only_second": [list(g) for g in rep.only_second]}
    if rep.sufficient:
        text = "derived equivalent: true (same curves, singularities permute)"
    else:
        text = (f"derived equivalent: not established; curves {rep.curves[0]} vs {rep.curves[1]}, "
                f"only in first {rep.only_first}, only in second {rep.only_second}")
    _emit(out, payload, args.format, text)


def cmd_count(args, out):
    fd = load_singularity(args.file)
    formula = multinomial(fd.a)
    enumerated = len(build_exchange_graph(fd).vertices)
    payload = {"a": list(fd.a), "formula": formula, "enumerated": enumerated,
               "count_MM": count_MM(fd), "morita_classes": morita_class_count(fd),
               "agree": formula == enumerated}
    text = (f"multinomial(a={list(fd.a)}) = {formula}\nenumerated MM generators = {enumerated}\n"
            f"Morita classes of MMAs = {morita_class_count(fd)}")
    _emit(out, payload, args.format, text)
    if formula != enumerated:
        raise DomainFailure("formula and enumeration disagree")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="canmma", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, file=True, flag=False, flag2=False):
        sp = sub.add_parser(name, help=help)
        if file:
            sp.add_argument("file", help="singularity description (JSON)")
        sp.add_argument("--format", choices=["text", "json", "dot"], default="text")
        if flag:
            sp.add_argument("--flag", type=_flag_arg, help="JSON flag, e.g. '[[2,3],[1,2,3]]'")
            sp.add_argument("--word", help="maximal flag given as a word, e.g. 1133")
        if flag2:
            sp.add_argument("--flag2", type=_flag_arg)
            sp.add_argument("--word2")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check a singularity file")
    add("picture", cmd_picture, "picture g1 | ... | g_{m+1} of a flag", flag=True)
    sp = add("mutate", cmd_mutate, "mutate T^F at the summands J", flag=True)
    sp.add_argument("--J", type=_int_list, required=True, help="summand indices, e.g. 2,5")
    sp = add("exchange-graph", cmd_exchange_graph, "exchange graph of MM generators")
    sp.add_argument("--start", help="build the component of this word by BFS")
    sp = add("hasse", cmd_hasse, "Hasse graph of the weak order on S_n", file=False)
    sp.add_argument("--n", type=int, required=True)
    sp = add("iso-check", cmd_iso_check, "module or exchange-graph isomorphism", flag=True, flag2=True)
    sp.add_argument("--other", help="compare with the exchange graph of another file")
    sp = add("class-group", cmd_class_group, "divisor class group and classes")
    sp.add_argument("--subset", type=_int_list)
    sp.add_argument("--vector", type=_int_list)
    add("classify", cmd_classify, "modifying / MM / CT status of T^F", flag=True)
    add("reduce", cmd_reduce, "CY reduction into residual singularities", flag=True)
    add("quiver", cmd_quiver, "quiver of End(T^F)", flag=True)
    sp = add("mf-verify", cmd_mf_verify, "verify matrix factorizations of (u, f_I)")
    sp.add_argument("--subset", type=_int_list)
    add("derived-equiv", cmd_derived_equiv, "sufficient derived-equivalence test", flag=True, flag2=True)
    add("count", cmd_count, "count MM generators (formula vs enumeration)")
    return p


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with warnings.catch_warnings():
            # validate reports representative warnings itself
            warnings.simplefilter("ignore")
            args.func(args, out)
    except CanmmaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
