"""Command line front end: JSON in, sorted JSON report out.

Exit status 0 means every check passed, 1 means violations were found (they
are listed in the report), 2 means the input could not be read.

Arguments naming a fixture are resolved in order: a file path, a file in the
corpus directory (``$DENDRO_CORPUS``, default the packaged ``corpus``
directory, with or without ``.json``), then a built-in name.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from . import bicat, dsets, groth, hcnerve, nerve, omega, operads, trees

__all__ = ["run", "main", "InputError", "corpus_dir", "write_corpus"]


class InputError(Exception):
    """Unreadable input; the message carries the location."""


def corpus_dir() -> Path:
    env = os.environ.get("DENDRO_CORPUS")
    return Path(env) if env else Path(__file__).parent / "corpus"


def _jsonable(x):
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k) if not isinstance(k, str) else k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted((_jsonable(v) for v in x), key=repr)
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    return repr(x)


def _dump(report) -> str:
    return json.dumps(_jsonable(report), sort_keys=True, indent=2)


def _read(arg: str):
    """Parsed JSON for ``arg`` if it names a file, else None."""
    cands = [Path(arg), corpus_dir() / arg, corpus_dir() / f"{arg}.json"]
    for p in cands:
        if p.is_file():
            try:
                return json.loads(p.read_text())
            except json.JSONDecodeError as exc:
                raise InputError(f"{p}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
            except OSError as exc:
                raise InputError(f"{p}: {exc}") from None
    return None


def _need(data, key, where):
    if not isinstance(data, dict) or key not in data:
        raise InputError(f"{where}: missing field {key!r}")
    return data[key]


# ---------------------------------------------------------------------------
# loaders

def load_tree(arg) -> trees.Tree:
    if isinstance(arg, dict):
        return trees.Tree.from_json(arg)
    m = re.fullmatch(r"([CL])(\d+)", arg)
    if m:
        n = int(m.group(2))
        return trees.corolla(n) if m.group(1) == "C" else trees.linear(n)
    if arg in ("eta", "unit"):
        return trees.unit_tree()
    if arg == "T3":
        return trees.example_t3()
    if arg.startswith("code:"):
        return trees.tree_from_code(arg[5:])
    data = _read(arg)
    if data is None:
        raise InputError(f"{arg}: not a file, corpus entry or tree name")
    try:
        return trees.Tree.from_json(data)
    except trees.TreeError as exc:
        raise InputError(f"{arg}: {exc}") from None


def load_operad(arg):
    if isinstance(arg, str):
        m = re.fullmatch(r"asA_(\w+)", arg)
        if m:
            return operads.make_asA(m.group(1))
        if arg == "ass":
            return operads.make_ass()
        m = re.fullmatch(r"omega_(\w+)", arg)
        if m:
            return operads.omega_operad(load_tree(m.group(1)))
        data = _read(arg)
        if data is None:
            raise InputError(f"{arg}: not a file, corpus entry or operad name")
        where = arg
    else:
        data, where = arg, "operad"
    kind = data.get("kind") if isinstance(data, dict) else None
    if kind == "asA":
        return operads.make_asA(_need(data, "colours", where))
    if kind == "ass":
        return operads.make_ass()
    if kind == "omega":
        return operads.omega_operad(load_tree(_need(data, "tree", where)))
    if kind == "named":
        return load_operad(_need(data, "name", where))
    try:
        return operads.TableOperad.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{where}: malformed operad ({exc})") from None


def load_dset(arg, D=None, E=None) -> dsets.TruncatedDendroidalSet:
    m = re.fullmatch(r"nerve\((\w+)\)", arg)
    data = _read(arg)
    if data is None and m:
        data = {"kind": "nerve", "operad": m.group(1)}
    if data is None:
        raise InputError(f"{arg}: not a file, corpus entry or presheaf name")
    kind = data.get("kind")
    if kind == "nerve":
        P = load_operad(_need(data, "operad", arg))
        deg = D if D is not None else data.get("degree", dsets.DEFAULT_DEGREE)
        edges = E if E is not None else data.get("max_edges", dsets.DEFAULT_EDGES)
        return nerve.dendroidal_nerve(P, deg, edges)
    if kind == "groth":
        return groth.groth(load_diagram(_need(data, "diagram", arg)))
    try:
        return dsets.TablePresheaf.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{arg}: malformed presheaf ({exc})") from None


def load_diagram(arg) -> groth.Diagram:
    if isinstance(arg, str):
        data = _read(arg)
        if data is None:
            corpus = groth.diagram_corpus()
            if arg in corpus:
                return corpus[arg]
            raise InputError(f"{arg}: not a file, corpus entry or diagram name")
        where = arg
    else:
        data, where = arg, "diagram"
    try:
        S = groth.MeetSemilattice.from_json(_need(data, "semilattice", where))
        dec = {str(s): s for s in S.elements}
        sets = {dec[str(k)]: v for k, v in _need(data, "sets", where).items()}
        funcs = {(dec[str(a)], dec[str(b)]): dict(f) for a, b, f in data.get("maps", [])}
        return groth.asA_diagram(S, sets, funcs, data.get("degree", dsets.DEFAULT_DEGREE),
                                 data.get("max_edges", groth.DEFAULT_GROTH_EDGES), data.get("name", "X"))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{where}: malformed diagram ({exc})") from None


def load_wcat1(arg: str, seed: int) -> hcnerve.WCat1Dendrex:
    m = re.fullmatch(r"fixture(\d+)", arg)
    data = _read(arg)
    if data is None and m:
        fx = hcnerve.degree3_fixtures(int(m.group(1)) + 1, seed)
        return fx[int(m.group(1))]
    if data is None:
        raise InputError(f"{arg}: not a file, corpus entry or fixture name")
    try:
        return hcnerve.WCat1Dendrex.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{arg}: malformed record ({exc})") from None


def load_bicat_object(arg: str):
    data = _read(arg)
    if data is None:
        corpus = bicat.bicat_corpus()
        if arg in corpus:
            return corpus[arg]
        if arg == "pentagon_mutant":
            return bicat.pentagon_mutant()
        raise InputError(f"{arg}: not a file, corpus entry or bicategory name")
    kind = data.get("kind") if isinstance(data, dict) else None
    readers = {
        "classical_bicategory": bicat.ClassicalBicategory.from_json,
        "unbiased_bicategory": bicat.UnbiasedBicategory.from_json,
        "level_record": bicat.LevelRecord.from_json,
        "edge_dendrex": bicat.EdgeDendrex.from_json,
    }
    if kind not in readers:
        raise InputError(f"{arg}: unknown kind {kind!r}")
    try:
        return readers[kind](data)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"{arg}: malformed {kind} ({exc})") from None


def _as_unbiased(B, N):
    if isinstance(B, bicat.ClassicalBicategory):
        return bicat.classical_to_unbiased(B, N)
    if isinstance(B, bicat.UnbiasedBicategory):
        return B
    raise InputError("expected a bicategory")


def _edge(arg: str) -> bicat.EdgeDendrex:
    y = load_bicat_object(arg)
    if not isinstance(y, bicat.EdgeDendrex):
        raise InputError(f"{arg}: expected an edge dendrex")
    return y


# ---------------------------------------------------------------------------
# commands

def _cut(items, args):
    items = list(items)
    return items if args.verbose or len(items) <= args.limit else items[:args.limit] + [f"... {len(items) - args.limit} more"]


def cmd_tree(args):
    if args.action == "canon":
        T = load_tree(args.tree)
        C, iso = trees.canonical_form(T)
        return 0, {"code": trees.canonical_code(T), "canonical": C, "relabelling": dict(sorted(iso.items()))}
    if args.action == "faces":
        T = load_tree(args.tree)
        fs = omega.faces_of(T)
        ds = omega.degeneracies_of(T)
        return 0, {"code": trees.canonical_code(T), "faces": fs, "degeneracies": ds,
                   "face_count": len(fs), "degeneracy_count": len(ds)}
    if args.at is None or args.other is None:
        raise InputError("graft needs --at EDGE and --other TREE")
    S, R = load_tree(args.tree), load_tree(args.other)
    try:
        G = trees.graft(S, args.at, R)
    except trees.TreeError as exc:
        raise InputError(str(exc)) from None
    return 0, {"tree": G, "code": trees.canonical_code(G)}


def cmd_omega(args):
    R, T = load_tree(args.source), load_tree(args.target)
    maps = omega.enumerate_maps(R, T, monos_only=args.monos)
    return 0, {"count": len(maps), "maps": _cut(maps, args)}


def cmd_operad(args):
    if args.action == "validate":
        P = load_operad(args.operad)
        fails = operads.validate_operad(P, args.max_arity)
        return (1 if fails else 0), {"ok": not fails, "violations": _cut(fails, args)}
    if args.action == "nerve":
        P = load_operad(args.operad)
        X = nerve.dendroidal_nerve(P, args.D, args.E)
        out = {"sizes": X.sizes(), "by_degree": X.sizes_by_degree()}
        if args.out:
            Path(args.out).write_text(_dump(X.to_json()))
            out["written"] = args.out
        return 0, out
    A = args.operad
    if args.action == "tensor-asA-c1":
        P = operads.bv_tensor_asA_c1(A)
        sigs = [[list(s[0]), s[1], len(P.ops(*s))] for s in P.signatures(args.max_arity)]
        return 0, {"colours": list(P.colours), "signatures": _cut(sorted(sigs, key=repr), args)}
    P = operads.bv_tensor_asA_c1(A)
    oracle = operads.bv_tensor_oracle(A, args.max_arity, args.depth)
    sigs = {s for n in range(args.max_arity + 1) for s in P.planar_sigs(n)} | set(oracle)
    mismatches = []
    for sig in sorted(sigs, key=repr):
        n = 1 if P.admissible(*sig) else 0
        if n != len(oracle.get(sig, ())):
            mismatches.append({"signature": sig, "table": n, "oracle": len(oracle.get(sig, ()))})
    return (1 if mismatches else 0), {"signatures": len(sigs), "mismatches": _cut(mismatches, args)}


def cmd_dset(args):
    X = load_dset(args.dset, args.D if args.action != "restrict" else None, args.E)
    if args.action == "kan":
        rep = dsets.check_inner_kan(X, args.D, strict=not args.weak)
    elif args.action == "coskeletal":
        rep = dsets.check_coskeletal(X, args.k, args.D)
    else:
        if args.map is None or args.element is None:
            raise InputError("restrict needs --map FILE and --element INDEX")
        data = _read(args.map)
        if data is None:
            raise InputError(f"{args.map}: no such file")
        try:
            alpha = omega.OmegaMap.from_json(data)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"{args.map}: malformed map ({exc})") from None
        code = trees.canonical_code(alpha.target)
        src = trees.canonical_code(alpha.source)
        if code not in X.cells or src not in X.cells:
            raise InputError(f"{args.map}: shape is outside the truncation")
        elems = X.elements(code)
        if not 0 <= args.element < len(elems):
            raise InputError(f"--element {args.element}: out of range (0..{len(elems) - 1})")
        beta = omega.compose(omega.compose(_from_shape(X, code, alpha.target, inverse=True), alpha),
                             _from_shape(X, src, alpha.source))
        y = X.restrict(beta, elems[args.element])
        idx = X.elements(src).index(y)
        return 0, {"shape": src, "index": idx, "element": repr(y)}
    rep = {k: (_cut(v, args) if isinstance(v, list) else v) for k, v in rep.items()}
    return (0 if rep["ok"] else 1), rep


def _from_shape(X, code, T, inverse=False) -> omega.OmegaMap:
    """The isomorphism from the stored shape tree of ``code`` to ``T``."""
    S = X.shapes.tree[code]
    _, cs = trees.canonical_form(S)
    _, ct = trees.canonical_form(T)
    if inverse:
        return omega.OmegaMap(T, S, {ct[e]: cs[e] for e in ct})
    return omega.OmegaMap(S, T, {cs[e]: ct[e] for e in cs})


def cmd_groth(args):
    G = groth.groth(load_diagram(args.diagram))
    if args.action == "build":
        return 0, {"sizes": G.sizes(), "by_degree": G.sizes_by_degree()}
    diag = G.diagram.check()
    closure = G.check_closure()
    kan = dsets.check_inner_kan(G)
    cosk = dsets.check_coskeletal(G, 2, 3)
    chain = groth.uniqueness_chain(G)
    ok = not diag and not closure and kan["ok"] and cosk["ok"] and chain["ok"]
    return (0 if ok else 1), {
        "ok": ok, "diagram": _cut(diag, args), "closure": _cut(closure, args),
        "inner_kan": {k: (_cut(v, args) if isinstance(v, list) else v) for k, v in kan.items()},
        "coskeletal": {k: (_cut(v, args) if isinstance(v, list) else v) for k, v in cosk.items()},
        "uniqueness_chain": chain,
    }


def cmd_wcat1(args):
    d = load_wcat1(args.record, args.seed)
    if args.action == "validate":
        errs = hcnerve.validate_wcat1_dendrex(d)
        return (1 if errs else 0), {"ok": not errs, "case": hcnerve.case_tag(d.tree), "violations": _cut(errs, args)}
    if args.action == "face":
        T = d.tree
        if args.vertex is not None:
            alpha = omega.outer_face(T, args.vertex)
        elif args.edge is not None:
            alpha = omega.inner_face(T, args.edge)
        else:
            raise InputError("face needs --vertex V or --edge E")
        f = hcnerve.face_action(d, alpha)
        errs = hcnerve.validate_wcat1_dendrex(f)
        return (1 if errs else 0), {"face": f, "violations": _cut(errs, args)}
    r = hcnerve.reconstruct_from_2skeleton(d.tree, hcnerve.boundary_family(d))
    same = r is not None and r == d
    return (0 if same else 1), {"reconstructed": r is not None, "equal": same}


def cmd_bicat(args):
    a = args.action
    if a == "validate":
        X = load_bicat_object(args.inputs[0])
        if isinstance(X, bicat.ClassicalBicategory):
            errs = bicat.validate_classical(X)
        elif isinstance(X, bicat.UnbiasedBicategory):
            errs = bicat.validate_unbiased(X)
        else:
            errs = X.validate()
        return (1 if errs else 0), {"ok": not errs, "violations": _cut(errs, args)}
    if a == "unbias":
        B = load_bicat_object(args.inputs[0])
        if not isinstance(B, bicat.ClassicalBicategory):
            raise InputError("unbias expects a classical bicategory")
        errs = bicat.validate_classical(B)
        if errs:
            return 1, {"ok": False, "violations": _cut(errs, args)}
        U = bicat.classical_to_unbiased(B, args.N, check=False)
        errs = bicat.validate_unbiased(U)
        return (1 if errs else 0), {"ok": not errs, "unbiased": U, "violations": _cut(errs, args)}
    if a == "phi":
        B = load_bicat_object(args.inputs[0])
        U = _as_unbiased(B, args.N)
        errs = bicat.validate_unbiased(U)
        if errs:
            return 1, {"ok": False, "violations": _cut(errs, args)}
        x = bicat.phi_object(U, check=False)
        return 0, {"ok": True, "vertex": x}
    if a == "recover":
        y = _edge(args.inputs[0])
        errs = y.validate()
        if errs:
            return 1, {"ok": False, "violations": _cut(errs, args)}
        try:
            H = bicat.recover_hom(y)
        except ValueError as exc:
            return 1, {"ok": False, "violations": [str(exc)]}
        errs = bicat.validate_hom(H)
        return (1 if errs else 0), {"ok": not errs, "hom": H, "violations": _cut(errs, args)}
    if a == "homotopic":
        if len(args.inputs) != 2:
            raise InputError("homotopic needs two edge dendrices")
        y1, y2 = _edge(args.inputs[0]), _edge(args.inputs[1])
        try:
            ok, w = bicat.left_homotopic(y1, y2)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        out = {"homotopic": ok}
        if ok:
            out["witness_degenerate"] = w == y1.record.restrict((0, 1, 1)) if y1 == y2 else False
            out["witness"] = w if args.verbose else {"isomorphisms": len(w.phi), "functors": len(w.psi)}
        return (0 if ok else 1), out
    if len(args.inputs) != 2:
        raise InputError("ho needs two bicategories")
    A = _as_unbiased(load_bicat_object(args.inputs[0]), args.N)
    B = _as_unbiased(load_bicat_object(args.inputs[1]), args.N)
    xA, xB = bicat.phi_object(A), bicat.phi_object(B)
    homs = bicat.enumerate_homs(A, B)
    edges = bicat.enumerate_edge_dendrices(xA, xB)
    verts = [xA] if xA == xB else [xA, xB]
    C, classes = bicat.homotopy_category(verts, [bicat.degenerate_edge(v) for v in verts] + edges)
    src, tgt = 0, len(verts) - 1
    n = sum(1 for m, (s, t) in C.morphisms.items() if s == src and t == tgt)
    return (0 if n == len(homs) else 1), {
        "homs": len(homs), "edges": len(edges), "classes": n,
        "objects": len(C.objects), "morphisms": len(C.morphisms), "bijective": n == len(homs)}


def write_corpus(directory: Path) -> list[str]:
    """Write the JSON fixtures the CLI examples refer to."""
    directory.mkdir(parents=True, exist_ok=True)
    files = {
        "nerve(asA_pq).json": {"kind": "nerve", "operad": "asA_pq", "degree": 3, "max_edges": 6},
        "nerve(ass).json": {"kind": "nerve", "operad": "ass", "degree": 3, "max_edges": 6},
        "T3.json": trees.example_t3().to_json(),
        "C1.json": trees.corolla(1).to_json(),
        "chain3_diagram.json": {
            "kind": "diagram", "semilattice": groth.chain(3).to_json(),
            "sets": {"0": "pq", "1": "pq", "2": "p"},
            "maps": [[0, 1, {"p": "q", "q": "p"}], [1, 2, {"p": "p"}], [0, 2, {"p": "q"}]]},
        "wcat1_fixture0.json": hcnerve.degree3_fixtures(1, 0)[0].to_json(),
    }
    for name, B in bicat.bicat_corpus().items():
        files[f"{name}.json"] = B.to_json()
    files["pentagon_mutant.json"] = bicat.pentagon_mutant().to_json()
    x = bicat.phi_object(bicat.classical_to_unbiased(bicat.bicat_corpus()["chain"], 2))
    files["y.json"] = bicat.degenerate_edge(x).to_json()
    for name, data in files.items():
        (directory / name).write_text(_dump(data) + "\n")
    return sorted(files)


def cmd_corpus(args):
    if args.action == "write":
        return 0, {"written": write_corpus(Path(args.dir) if args.dir else corpus_dir())}
    d = corpus_dir()
    return 0, {"directory": str(d), "files": sorted(p.name for p in d.glob("*.json")) if d.is_dir() else []}


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized fixtures")
    common.add_argument("--verbose", action="store_true", help="do not truncate witness lists")
    common.add_argument("--limit", type=int, default=20, help="witnesses shown when not verbose")
    p = argparse.ArgumentParser(prog="dendro", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tree", parents=[common])
    t.add_argument("action", choices=["canon", "faces", "graft"])
    t.add_argument("tree")
    t.add_argument("--at")
    t.add_argument("--other")
    t.set_defaults(func=cmd_tree)

    o = sub.add_parser("omega", parents=[common])
    o.add_argument("action", choices=["enum"])
    o.add_argument("source")
    o.add_argument("target")
    o.add_argument("--monos", action="store_true")
    o.set_defaults(func=cmd_omega)

    op = sub.add_parser("operad", parents=[common])
    op.add_argument("action", choices=["validate", "nerve", "tensor-asA-c1", "tensor-oracle"])
    op.add_argument("operad", help="operad file or name; colour letters for the tensor commands")
    op.add_argument("--max-arity", type=int, default=3)
    op.add_argument("--depth", type=int, default=4)
    op.add_argument("--D", type=int, default=dsets.DEFAULT_DEGREE)
    op.add_argument("--E", type=int, default=dsets.DEFAULT_EDGES)
    op.add_argument("--out")
    op.set_defaults(func=cmd_operad)

    d = sub.add_parser("dset", parents=[common])
    d.add_argument("action", choices=["kan", "coskeletal", "restrict"])
    d.add_argument("dset")
    d.add_argument("--k", type=int, default=2)
    d.add_argument("--D", type=int)
    d.add_argument("--E", type=int)
    d.add_argument("--weak", action="store_true", help="allow several horn fillers")
    d.add_argument("--map")
    d.add_argument("--element", type=int)
    d.set_defaults(func=cmd_dset)

    g = sub.add_parser("groth", parents=[common])
    g.add_argument("action", choices=["build", "check"])
    g.add_argument("diagram")
    g.set_defaults(func=cmd_groth)

    w = sub.add_parser("wcat1", parents=[common])
    w.add_argument("action", choices=["validate", "face", "reconstruct"])
    w.add_argument("record")
    w.add_argument("--vertex")
    w.add_argument("--edge")
    w.set_defaults(func=cmd_wcat1)

    b = sub.add_parser("bicat", parents=[common])
    b.add_argument("action", choices=["validate", "unbias", "phi", "recover", "homotopic", "ho"])
    b.add_argument("inputs", nargs="+")
    b.add_argument("--N", type=int, default=bicat.DEFAULT_ARITY)
    b.set_defaults(func=cmd_bicat)

    c = sub.add_parser("corpus", parents=[common])
    c.add_argument("action", choices=["list", "write"])
    c.add_argument("dir", nargs="?")
    c.set_defaults(func=cmd_corpus)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        code, report = args.func(args)
    except InputError as exc:
        out.write(_dump({"error": str(exc)}) + "\n")
        return 2
    except (trees.TreeError, omega.OmegaError) as exc:
        out.write(_dump({"error": f"{args.command}: {exc}"}) + "\n")
        return 2
    out.write(_dump(report) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
