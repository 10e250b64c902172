"""Command line front end.

Exit codes: 0 success, 2 failed precondition, 3 verification failure,
4 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import generators as gen
from .embedding import Embedding, EmbeddingError
from .euler import euler_circuit, euler_circuit_through, interlacing_euler_circuit, random_euler_circuit
from .formats import (ParseError, parse_graph_file, parse_walks_file, write_embedding_text, write_graph_text,
                      write_walks_text)
from .graph import Graph, GraphError, orient_along
from .nonorientable import bieulerian_nonorientable, complete_relative_one_outer, interpolate_faces, \
    one_face_directed
from .obstructions import admissibility, enumerate_2edge_cuts
from .oracle import BudgetExceeded, directed_bieulerian, enumerate_directed_embeddings, enumerate_embeddings
from .oriented import PatternError, SurgeryError, embed_bieulerian_2mod4, embed_bieulerian_pattern, \
    embed_bieulerian_two0mod4, embed_max_genus
from .verify import verify_embedding, verify_files

OK, PRECONDITION, VERIFY_FAILED, BUDGET = 0, 2, 3, 4


class VerificationFailed(Exception):
    pass


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _circuit(G: Graph, spec, seed: int = 0):
    if spec is None or spec == "auto":
        return euler_circuit(G)
    if spec == "random":
        return random_euler_circuit(G, random.Random(seed))
    walks = parse_walks_file(spec, G)
    if len(walks) != 1:
        raise GraphError("euler circuit file must hold exactly one walk")
    if not walks[0].is_euler_circuit(G):
        raise GraphError("supplied walk is not an euler circuit")
    return walks[0]


def _checked(E, circuit=None, bieulerian=False):
    rep = verify_embedding(E, circuit)
    if not rep.ok or (bieulerian and not rep.bieulerian):
        raise VerificationFailed("; ".join(rep.failures) or "result is not bi-eulerian")
    return rep


# -- analyze --------------------------------------------------------------------------


def cmd_analyze(args) -> int:
    G = parse_graph_file(args.graph)
    info = {
        "directed": G.directed,
        "vertices": G.n,
        "edges": G.m,
        "connected": G.is_connected(),
        "eulerian": G.is_eulerian(),
    }
    if info["eulerian"] and info["connected"]:
        rep = admissibility(G)
        name = G.edge_names
        info.update({
            "ell": rep.ell,
            "parity_ok": rep.parity_ok,
            "two_edge_cuts": [[name[c.e >> 1], name[c.f >> 1]] for c in enumerate_2edge_cuts(G)],
            "bad_cuts": [[name[b.cut.e >> 1], name[b.cut.f >> 1]] for b in rep.bad_cuts],
            "configurations": [{"s": w.s, "t": w.t, "forbidden": w.forbidden} for w in rep.witnesses],
            "verdict": rep.verdict,
        })
    if args.json:
        print(json.dumps(info, indent=2))
    else:
        for k, v in info.items():
            print(f"{k}: {v}")
    return OK


# -- embed ------------------------------------------------------------------------------


def _embed_orientable(G: Graph, args):
    T = _circuit(G, args.euler_circuit, args.seed)
    if G.directed:
        D, back = G, None
    else:
        # orient along T, embed the digraph, and read the rotation back
        D, halfmap = orient_along(G, T)
        back = {d: h for h, d in halfmap.items()}
        T = type(T)(tuple(halfmap[g] for g in T.darts), True)
    mode = args.mode
    if mode == "max-genus":
        R = embed_max_genus(D, T)
    elif mode == "bi-eulerian":
        zero = D.zero_mod4_vertices()
        if not zero:
            R = embed_bieulerian_2mod4(D, T)
        elif len(zero) == 2:
            if args.euler_circuit is None:
                T = interlacing_euler_circuit(D, D.labels[zero[0]], D.labels[zero[1]])
            R = embed_bieulerian_two0mod4(D, T)
        else:
            raise PatternError(f"no orientable bi-eulerian construction for {len(zero)} vertices "
                               f"of degree 0 mod 4; try --mode pattern")
    elif mode == "pattern":
        if not args.pattern_host:
            raise GraphError("--mode pattern needs --pattern-host")
        H = parse_graph_file(args.pattern_host)
        ok, EH = directed_bieulerian(H)
        if not ok:
            raise GraphError("pattern host has no bi-eulerian embedding")
        R = embed_bieulerian_pattern(D, T, H, EH)
    else:
        raise GraphError(f"unknown mode {mode!r}")
    E = R.embedding
    if back is not None:
        E = Embedding(G, tuple(tuple(back[h] for h in r) for r in E.rotation), (1,) * G.m)
        T = type(T)(tuple(back[g] for g in T.darts), False)
    return E, T, mode == "bi-eulerian" or mode == "pattern"


def _embed_nonorientable(G: Graph, args):
    if args.decomposition:
        U = G.underlying() if G.directed else G
        walks = parse_walks_file(args.decomposition, U)
        R = complete_relative_one_outer(U, walks)
        if R.exceptional:
            print("note: graph is a tree of cycles decomposed into its cycles; "
                  "the completion is orientable", file=sys.stderr)
        return R.embedding, R.outer[0], False
    if args.faces is not None:
        if not G.directed:
            raise GraphError("--faces needs a digraph")
        E = one_face_directed(G) if args.faces == 1 else interpolate_faces(G, args.faces)
        return E, None, False
    if G.directed and args.euler_circuit is None:
        return one_face_directed(G), None, False
    U = G.underlying() if G.directed else G
    T = _circuit(U, args.euler_circuit, args.seed)
    return bieulerian_nonorientable(U, T), T, True


def cmd_embed(args) -> int:
    G = parse_graph_file(args.graph)
    if args.nonorientable:
        E, T, bi = _embed_nonorientable(G, args)
    else:
        E, T, bi = _embed_orientable(G, args)
    text = write_embedding_text(E)
    rep = _checked(E, T, bi)
    if args.nonorientable and rep.orientable and not G.is_cycle():
        if not args.decomposition:
            raise VerificationFailed("result is orientable")
    _emit(text, args.output)
    print(f"faces: {rep.num_faces}, euler genus: {rep.euler_genus}, "
          f"{'orientable' if rep.orientable else 'nonorientable'}", file=sys.stderr)
    return OK


# -- verify -----------------------------------------------------------------------------


def cmd_verify(args) -> int:
    rep = verify_files(args.embedding, args.graph, args.euler_circuit)
    print("\n".join(rep.lines()))
    return OK if rep.ok else VERIFY_FAILED


# -- enumerate ---------------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    G = parse_graph_file(args.graph)
    if G.directed:
        c = enumerate_directed_embeddings(G, signatures=args.signatures, budget=args.budget)
    else:
        c = enumerate_embeddings(G, orientable_only=args.signatures == "positive", budget=args.budget)
    rows = sorted(c.hist.items())
    if args.json:
        print(json.dumps({
            "mode": c.mode,
            "histogram": [{"faces": f, "orientable": o, "count": k} for (f, o), k in rows],
            "bieulerian_orientable": c.bi_orientable,
            "bieulerian_nonorientable": c.bi_nonorientable,
            "total": c.total,
        }, indent=2))
    else:
        print(f"mode: {c.mode}")
        for (f, o), k in rows:
            print(f"faces {f} {'orientable' if o else 'nonorientable'}: {k}")
        print(f"bi-eulerian: {c.bi_orientable} orientable, {c.bi_nonorientable} nonorientable")
        print(f"total: {c.total}")
    return OK


# -- generate ----------------------------------------------------------------------------


def _int_params(params, k, family):
    if len(params) != k:
        raise GraphError(f"{family} takes {k} integer parameter(s)")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise GraphError(f"{family} parameters must be integers") from None


def cmd_generate(args) -> int:
    fam, p = args.family, args.params
    circuit = None
    if fam == "dip4":
        G = gen.gen_dip4()
    elif fam == "ddc":
        G = gen.gen_ddc(*_int_params(p, 1, fam))
    elif fam == "dp":
        G = gen.gen_dp(*_int_params(p, 1, fam))
    elif fam == "fst":
        G = gen.gen_fst_host(*_int_params(p, 2, fam))
    elif fam == "join-chain":
        G = gen.gen_join_chain(*_int_params(p, 1, fam))
    elif fam == "tree-of-cycles":
        if not p:
            raise GraphError("tree-of-cycles needs cycle lengths")
        G = gen.gen_tree_of_cycles(_int_params(p, len(p), fam))
    elif fam == "unlaced":
        G, names = gen.gen_unlaced()
        circuit = type(euler_circuit(G))(tuple(G.edge_by_name(x) for x in names), True)
    elif fam == "random-2mod4":
        G = gen.random_2mod4_digraph(random.Random(args.seed))
    elif fam == "random":
        G = gen.random_digraph_mixed(random.Random(args.seed))
    else:
        raise GraphError(f"unknown family {fam!r}")
    _emit(write_graph_text(G), args.output)
    if circuit is not None and args.circuit_output:
        Path(args.circuit_output).write_text(write_walks_text(G, [circuit]))
    return OK


# -- euler ------------------------------------------------------------------------------


def cmd_euler(args) -> int:
    G = parse_graph_file(args.graph)
    if args.through and args.interlace:
        raise GraphError("--through and --interlace are exclusive")
    if args.through:
        if not G.directed:
            raise GraphError("--through needs a digraph")
        W = euler_circuit_through(G, args.through.split(","))
    elif args.interlace:
        if not G.directed:
            raise GraphError("--interlace needs a digraph")
        s, t = args.interlace.split(",")
        W = interlacing_euler_circuit(G, s, t)
    elif args.random:
        W = random_euler_circuit(G, random.Random(args.seed))
    else:
        W = euler_circuit(G)
    _emit(write_walks_text(G, [W]), args.output)
    return OK


# -- main -------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="emberlin", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="degree census, 2-edge cuts and admissibility")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("embed", help="build an embedding and verify it")
    p.add_argument("graph")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--orientable", action="store_true")
    kind.add_argument("--nonorientable", action="store_true")
    p.add_argument("--mode", choices=["max-genus", "bi-eulerian", "pattern"], default="max-genus")
    p.add_argument("--euler-circuit", help="walk file, 'auto' or 'random'")
    p.add_argument("--pattern-host", help="graph file of a host digraph for --mode pattern")
    p.add_argument("--decomposition", help="walk file with a circuit decomposition")
    p.add_argument("--faces", type=int, help="number of faces of a directed embedding")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("verify", help="independently re-check an embedding file")
    p.add_argument("embedding")
    p.add_argument("graph")
    p.add_argument("--euler-circuit", help="walk file that should be a face")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="exhaustive census of embeddings")
    p.add_argument("graph")
    p.add_argument("--signatures", choices=["positive", "all"], default="positive")
    p.add_argument("--budget", type=int, help="maximum number of embeddings (default from EMBERLIN_BUDGET)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("generate", help="write an example graph")
    p.add_argument("family", help="dip4, ddc N, dp L, fst S T, join-chain K, tree-of-cycles L..., "
                                  "unlaced, random-2mod4, random")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.add_argument("--circuit-output", help="for unlaced: where to write its euler circuit")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("euler", help="write an euler circuit")
    p.add_argument("graph")
    p.add_argument("--through", help="comma separated vertices to visit in order")
    p.add_argument("--interlace", help="two vertices s,t to visit as s,t,s,t")
    p.add_argument("--random", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_euler)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return BUDGET
    except (VerificationFailed, SurgeryError, EmbeddingError, AssertionError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return VERIFY_FAILED
    except (ParseError, GraphError, PatternError, ValueError, OSError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
