"""Dendrices of the homotopy coherent nerve of categories, up to degree 3.

A dendrex of shape T is an enriched operad map ``W(Omega(T)) -> Ctg``.  For
every subtree sigma of T it gives a functor ``x_sigma: H^int(sigma) -> Ctg(sigma)``
and these are compatible with the operad structure.  Because the cube
``H^int(sigma)`` is an indiscrete groupoid, ``x_sigma`` is pinned down by

* its value ``G_sigma`` at the corner ``(0, ..., 0)``,
* one natural isomorphism ``phi[sigma, e]: G_sigma => G_low o_e G_up`` for each
  inner edge ``e`` of sigma (the cube edge leaving the origin in direction e).

The other corners are composites of smaller ``G``'s and the other cube edges
are whiskerings, both forced by compatibility with composition.  For a cube
of dimension 2 the two ways around the square must agree.  That square is
the only coherence condition up to degree 3.

:class:`WCat1Dendrex` stores exactly this data.  ``case_view`` exposes it
with the names ``F1, F2, F3, G, G1, G2, K, phi, phi1, phi2, psi1, psi2``.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Sequence

from .fincat import (
    FinCat,
    MultiFunctor,
    MultiNat,
    enumerate_functors,
    fixture_corpus,
    hypercube,
    interval,
)
from .omega import UNIT, OmegaMap, faces_of
from .trees import Tree, canonical_code, subtrees_at

__all__ = [
    "WOperad",
    "w_operad",
    "w_map",
    "WCat1Dendrex",
    "all_subtrees",
    "planar_leaves",
    "validate_wcat1_dendrex",
    "face_action",
    "boundary_family",
    "reconstruct_from_2skeleton",
    "count_top_extensions",
    "case_view",
    "strict_dendrex",
    "random_dendrex",
    "degree3_fixtures",
    "nat_isos",
]


# ---------------------------------------------------------------------------
# subtrees

def all_subtrees(T: Tree) -> list[frozenset]:
    """Vertex sets of all subtrees with at least one vertex."""
    out = []
    for e in sorted(T.edges):
        out.extend(vs for vs, _ in subtrees_at(T, e))
    return sorted(out, key=lambda vs: (len(vs), sorted(vs)))


def subtree_root(T: Tree, vs: frozenset) -> str:
    inner = {i for v in vs for i in T.ins(v)}
    (r,) = [v for v in vs if v not in inner]
    return r


def planar_leaves(T: Tree, vs: frozenset, root: str | None = None) -> tuple[str, ...]:
    root = subtree_root(T, vs) if root is None else root

    def walk(e):
        if e in vs:
            return tuple(itertools.chain.from_iterable(walk(i) for i in T.ins(e)))
        return (e,)

    return walk(root)


def internal_edges(T: Tree, vs: frozenset) -> list[str]:
    """Edges joining two vertices of the subtree."""
    return sorted(i for v in vs for i in T.ins(v) if i in vs)


def split(T: Tree, vs: frozenset, e: str) -> tuple[frozenset, frozenset]:
    """Lower and upper parts of the subtree cut at its inner edge ``e``."""
    up = set()
    stack = [e]
    while stack:
        x = stack.pop()
        if x in vs:
            up.add(x)
            stack.extend(T.ins(x))
    return vs - up, frozenset(up)


# ---------------------------------------------------------------------------
# the operad W(Omega(T))

class WOperad:
    """``W(Omega(T))``: operations of a signature are the cube ``H^int(sigma)``.

    Signatures are identified with subtrees; a cube object is the frozenset of
    inner edges whose coordinate is 1."""

    def __init__(self, T: Tree):
        self.tree = T
        self.subtrees = all_subtrees(T)
        self._sig = {}
        for vs in self.subtrees:
            self._sig[(planar_leaves(T, vs), subtree_root(T, vs))] = vs

    def signature(self, vs: frozenset) -> tuple:
        return planar_leaves(self.tree, vs), subtree_root(self.tree, vs)

    def subtree_of(self, leaves: Sequence[str], root: str) -> frozenset | None:
        """The subtree with these leaves (in any order) and root, if any."""
        for (lv, r), vs in self._sig.items():
            if r == root and sorted(lv) == sorted(leaves):
                return vs
        return None

    def inner(self, vs: frozenset) -> list[str]:
        return internal_edges(self.tree, vs)

    def category(self, vs: frozenset) -> FinCat:
        """The operation category, objects re-expressed as frozensets."""
        k = len(self.inner(vs))
        return hypercube(k)

    def objects(self, vs: frozenset) -> list[frozenset]:
        inner = self.inner(vs)
        return [frozenset(e for e, b in zip(inner, bits) if b)
                for bits in itertools.product((0, 1), repeat=len(inner))]

    def compose(self, sv: frozenset, x: frozenset, e: str, su: frozenset, y: frozenset) -> tuple:
        """``o_e`` on objects: the grafted subtree and ``x + y + {e: 1}``."""
        if subtree_root(self.tree, su) != e or e not in planar_leaves(self.tree, sv):
            raise ValueError("subtrees are not composable along this edge")
        return sv | su, x | y | {e}

    def check_associativity(self) -> list[str]:
        """Sequential and parallel associativity on every composable triple."""
        errs = []
        T = self.tree
        subs = self.subtrees
        for a in subs:
            la = planar_leaves(T, a)
            for e in la:
                for b in subs:
                    if subtree_root(T, b) != e:
                        continue
                    lb = planar_leaves(T, b)
                    for c in subs:
                        rc = subtree_root(T, c)
                        for x, y, z in itertools.product(self.objects(a), self.objects(b), self.objects(c)):
                            if rc in lb:
                                ab, xy = self.compose(a, x, e, b, y)
                                left = self.compose(ab, xy, rc, c, z)
                                bc, yz = self.compose(b, y, rc, c, z)
                                right = self.compose(a, x, e, bc, yz)
                                if left != right:
                                    errs.append(f"sequential associativity fails at {(a, b, c)}")
                            elif rc in la and rc != e:
                                ab, xy = self.compose(a, x, e, b, y)
                                left = self.compose(ab, xy, rc, c, z)
                                ac, xz = self.compose(a, x, rc, c, z)
                                right = self.compose(ac, xz, e, b, y)
                                if left != right:
                                    errs.append(f"parallel associativity fails at {(a, b, c)}")
        return errs


def w_operad(T: Tree) -> WOperad:
    return WOperad(T)


def image_subtree(alpha: OmegaMap, vs: Iterable[str]) -> frozenset:
    out = set()
    for v in vs:
        img = alpha.vertex_images[v]
        if img is not UNIT:
            out |= img[0]
    return frozenset(out)


def w_map(alpha: OmegaMap, vs: frozenset, x: frozenset) -> tuple[frozenset, frozenset]:
    """The map ``W(Omega(R)) -> W(Omega(T))`` induced by ``alpha`` on an
    operation ``(vs, x)``.

    A new inner edge created by a face gets coordinate 0; edges merged by a
    degeneracy combine with ``v`` (so 1 wins)."""
    T = alpha.target
    img = image_subtree(alpha, vs)
    inner_img = internal_edges(T, img)
    coord = {f: 0 for f in inner_img}
    for f in x:
        g = alpha.edge_map[f]
        if g in coord:
            coord[g] = 1
    return img, frozenset(f for f, b in coord.items() if b)


# ---------------------------------------------------------------------------
# dendrices

class WCat1Dendrex:
    """A dendrex of shape ``tree`` (degree <= 3).

    ``cats``: edge -> FinCat; ``G``: subtree -> MultiFunctor with inputs the
    planar leaves of the subtree; ``phi``: (subtree, inner edge) -> MultiNat
    ``G[subtree] => G[lower] o_e G[upper]``."""

    def __init__(self, tree: Tree, cats: dict, G: dict, phi: dict | None = None):
        self.tree = tree
        self.cats = dict(cats)
        self.G = dict(G)
        self.phi = dict(phi or {})

    @property
    def degree(self):
        return self.tree.degree

    def __eq__(self, other):
        return (isinstance(other, WCat1Dendrex) and self.tree == other.tree
                and self.cats == other.cats and self.G == other.G and self.phi == other.phi)

    def __hash__(self):
        return hash((self.tree, frozenset(self.G.items())))

    def __repr__(self):
        return f"WCat1Dendrex({canonical_code(self.tree)}, {len(self.G)} functors, {len(self.phi)} isos)"

    def input_cats(self, vs: frozenset) -> tuple:
        return tuple(self.cats[l] for l in planar_leaves(self.tree, vs))

    # -- evaluating composites of pieces --------------------------------

    def composite(self, vs: frozenset, cuts: Iterable[str]) -> MultiFunctor:
        """The functor ``G_{p_1} o ... o G_{p_k}`` of the pieces of ``vs`` cut at ``cuts``."""
        cuts = frozenset(cuts)
        T = self.tree
        if not cuts:
            return self.G[vs]
        leaves = planar_leaves(T, vs)
        cats = self.input_cats(vs)
        root = subtree_root(T, vs)
        obj = {}
        for x in itertools.product(*(c.objects for c in cats)):
            obj[x] = self._eval(vs, cuts, dict(zip(leaves, x)), None, None, "obj")
        mor = {}
        for f in itertools.product(*(list(c.morphisms) for c in cats)):
            mor[f] = self._eval(vs, cuts, dict(zip(leaves, f)), None, None, "mor")
        return MultiFunctor(leaves, cats, self.cats[root], obj, mor)

    def _eval(self, vs, cuts, val, nat_piece, nat, mode, obj_val=None):
        """Evaluate the composite of pieces at leaf values ``val``.

        mode "obj": objects; mode "mor": morphisms; mode "nat": the
        component of ``nat`` placed at ``nat_piece`` (with ``obj_val`` the
        leaf objects), identities elsewhere."""
        T = self.tree

        def obj_at(e):
            if e not in vs:
                return obj_val[e]
            piece = _piece(T, vs, cuts, e)
            return self.G[piece].obj[tuple(obj_at(l) for l in planar_leaves(T, piece, e))]

        def at(e):
            if e not in vs:
                if mode == "nat":
                    return self.cats[e].id(obj_val[e])
                return val[e]
            piece = _piece(T, vs, cuts, e)
            ls = planar_leaves(T, piece, e)
            if mode == "obj":
                return self.G[piece].obj[tuple(at(l) for l in ls)]
            if mode == "nat" and piece == nat_piece:
                return nat.comps[tuple(obj_at(l) for l in ls)]
            return self.G[piece].mor[tuple(at(l) for l in ls)]

        return at(subtree_root(T, vs))

    def whiskered(self, vs: frozenset, cuts: Iterable[str], piece: frozenset, e: str) -> MultiNat:
        """The cube edge adding ``e`` to ``cuts``: ``phi[piece, e]`` placed in
        the composite of the other pieces."""
        cuts = frozenset(cuts)
        src = self.composite(vs, cuts)
        tgt = self.composite(vs, cuts | {e})
        nat = self.phi[(piece, e)]
        leaves = planar_leaves(self.tree, vs)
        comps = {}
        for x in itertools.product(*(c.objects for c in self.input_cats(vs))):
            comps[x] = self._eval(vs, cuts, None, piece, nat, "nat", dict(zip(leaves, x)))
        return MultiNat(src, tgt, comps)

    def cube_path(self, vs: frozenset, order: Sequence[str]) -> MultiNat:
        """Composite of cube edges from the origin adding ``order`` one by one."""
        cuts: frozenset = frozenset()
        total = MultiNat.identity(self.G[vs])
        for e in order:
            piece = _piece(self.tree, vs, cuts, e, containing=True)
            step = self.whiskered(vs, cuts, piece, e)
            total = total.then(step)
            cuts = cuts | {e}
        return total

    def boundary(self) -> dict:
        return boundary_family(self)

    def to_json(self) -> dict:
        T = self.tree
        cat_ids: dict = {}
        cats = []
        for e in sorted(T.edges):
            c = self.cats[e]
            key = id(c)
            if key not in cat_ids:
                cat_ids[key] = len(cats)
                cats.append(c.to_json())
        return {
            "shape": T.to_json(),
            "case": case_tag(T),
            "categories": cats,
            "edge_categories": {e: cat_ids[id(self.cats[e])] for e in sorted(T.edges)},
            "functors": [{"subtree": sorted(vs), **self.G[vs].to_json()} for vs in all_subtrees(T)],
            "isos": [{"subtree": sorted(vs), "edge": e, **n.to_json()}
                     for (vs, e), n in sorted(self.phi.items(), key=lambda kv: (sorted(kv[0][0]), kv[0][1]))],
        }

    @classmethod
    def from_json(cls, data) -> "WCat1Dendrex":
        T = Tree.from_json(data["shape"])
        cats_list = [FinCat.from_json(c) for c in data["categories"]]
        cats = {e: cats_list[i] for e, i in data["edge_categories"].items()}
        G = {}
        for f in data["functors"]:
            vs = frozenset(f["subtree"])
            leaves = planar_leaves(T, vs)
            G[vs] = MultiFunctor.from_json(f, [cats[l] for l in leaves], cats[subtree_root(T, vs)])
        d = cls(T, cats, G)
        for n in data["isos"]:
            vs, e = frozenset(n["subtree"]), n["edge"]
            comps = {tuple(_dec(k)): _dec(v) for k, v in n["comps"]}
            d.phi[(vs, e)] = MultiNat(G[vs], d.composite(vs, {e}), comps)
        return d


def _dec(x):
    if isinstance(x, list):
        return tuple(_dec(y) for y in x)
    return x


def _piece(T: Tree, vs: frozenset, cuts: frozenset, e: str, containing: bool = False) -> frozenset:
    """The piece of ``vs`` (cut at ``cuts``) whose root is ``e``; with
    ``containing`` the piece that has ``e`` as an inner edge."""
    if containing:
        for p in _pieces(T, vs, cuts):
            if e in internal_edges(T, p):
                return p
        raise KeyError(e)
    out = {e}
    stack = [i for i in T.ins(e)]
    while stack:
        x = stack.pop()
        if x in vs and x not in cuts:
            out.add(x)
            stack.extend(T.ins(x))
    return frozenset(out)


def _pieces(T: Tree, vs: frozenset, cuts: frozenset) -> list[frozenset]:
    roots = [subtree_root(T, vs)] + sorted(cuts)
    return [_piece(T, vs, cuts, r) for r in roots]


def case_tag(T: Tree) -> str:
    """``1``..``5`` for the unit tree, corollas, two-vertex trees, and the
    chain and branching three-vertex trees."""
    d = T.degree
    if d == 0:
        return "1"
    if d == 1:
        return "2"
    if d == 2:
        return "3"
    if d == 3:
        # chain: some vertex has an inner edge above and below
        for v in T.vertices:
            above = [i for i in T.ins(v) if T.vertex_above(i) is not None]
            if above and v != T.root:
                return "4"
        return "5"
    raise ValueError("records exist only up to degree 3")


# ---------------------------------------------------------------------------
# validation

def validate_wcat1_dendrex(d: WCat1Dendrex) -> list[str]:
    """Typing of every functor and iso, naturality, invertibility, and the
    square for subtrees with two inner edges."""
    T = d.tree
    errs: list[str] = []
    if T.degree > 3:
        return ["records exist only up to degree 3"]
    for e in T.edges:
        if e not in d.cats:
            errs.append(f"no category on edge {e!r}")
    if errs:
        return errs
    for c in {id(c): c for c in d.cats.values()}.values():
        errs += [f"category {c.name}: {m}" for m in c.validate()]
    subs = all_subtrees(T)
    for vs in subs:
        F = d.G.get(vs)
        name = sorted(vs)
        if F is None:
            errs.append(f"missing functor for subtree {name}")
            continue
        if tuple(F.cats) != d.input_cats(vs) or F.target != d.cats[subtree_root(T, vs)]:
            errs.append(f"functor for subtree {name} has the wrong type")
            continue
        errs += [f"functor for subtree {name}: {m}" for m in F.validate()]
    if errs:
        return errs
    for vs in subs:
        for e in internal_edges(T, vs):
            nat = d.phi.get((vs, e))
            name = sorted(vs)
            if nat is None:
                errs.append(f"missing iso for subtree {name} at {e!r}")
                continue
            want = d.composite(vs, {e})
            if nat.F != d.G[vs] or nat.G != want:
                nat = MultiNat(d.G[vs], want, nat.comps)
            errs += [f"iso for subtree {name} at {e!r}: {m}" for m in nat.validate(iso=True)]
    if errs:
        return errs
    for vs in subs:
        inner = internal_edges(T, vs)
        if len(inner) == 2:
            a, b = inner
            p = d.cube_path(vs, (a, b))
            q = d.cube_path(vs, (b, a))
            for x, c in p.comps.items():
                if q.comps[x] != c:
                    errs.append(f"square for subtree {sorted(vs)} fails at object {x!r}")
    return errs


# ---------------------------------------------------------------------------
# restriction

def _reorder_functor(F: MultiFunctor, have: Sequence[str], want: Sequence[str], names: Sequence[str]) -> MultiFunctor:
    """Reorder inputs from ``have`` to ``want`` and rename them ``names``."""
    pos = {e: k for k, e in enumerate(have)}
    return F.permuted([pos[e] for e in want]).renamed(names)


def face_action(d: WCat1Dendrex, alpha: OmegaMap) -> WCat1Dendrex:
    """Restriction along ``alpha: R -> shape`` (faces, degeneracies,
    automorphisms, or any composite of them)."""
    if alpha.target != d.tree:
        raise ValueError("map does not land in the shape of the dendrex")
    R, T = alpha.source, alpha.target
    em = alpha.edge_map
    cats = {e: d.cats[em[e]] for e in R.edges}
    G = {}
    for rho in all_subtrees(R):
        leaves_R = planar_leaves(R, rho)
        img = image_subtree(alpha, rho)
        if not img:
            G[rho] = MultiFunctor.identity(cats[subtree_root(R, rho)], leaves_R[0])
            continue
        have = planar_leaves(T, img)
        G[rho] = _reorder_functor(d.G[img], have, [em[l] for l in leaves_R], leaves_R)
    out = WCat1Dendrex(R, cats, G)
    for rho in all_subtrees(R):
        for f in internal_edges(R, rho):
            lo, up = split(R, rho, f)
            src, tgt = G[rho], out.composite(rho, {f})
            ilo, iup = image_subtree(alpha, lo), image_subtree(alpha, up)
            if not ilo or not iup:
                out.phi[(rho, f)] = MultiNat(src, tgt, {x: tgt.target.id(y) for x, y in src.obj.items()})
                continue
            img = ilo | iup
            nat = d.phi[(img, em[f])]
            have = planar_leaves(T, img)
            pos = {e: k for k, e in enumerate(have)}
            order = [pos[em[l]] for l in planar_leaves(R, rho)]
            comps = {tuple(x[o] for o in order): c for x, c in nat.comps.items()}
            out.phi[(rho, f)] = MultiNat(src, tgt, comps)
    return out


def boundary_family(d: WCat1Dendrex) -> dict:
    """Face -> restricted record, over all faces of the shape."""
    return {f: face_action(d, f) for f in faces_of(d.tree)}


class IncompatibleFamily(ValueError):
    pass


def _merge_face(T: Tree, f: OmegaMap, r: WCat1Dendrex, cats: dict, opd: dict, face: dict):
    """Push the data of ``r`` (shape ``f.source``) forward into ``T``.

    Functors and isos land in ``opd`` when they come from an outer face and in
    ``face`` when they come from an inner face (the cube edges leaving the
    origin of the top cube)."""
    R = f.source
    em = f.edge_map
    for e in R.edges:
        if cats.setdefault(em[e], r.cats[e]) != r.cats[e]:
            raise IncompatibleFamily(f"categories disagree on edge {em[e]!r}")
    for rho in all_subtrees(R):
        img = image_subtree(f, rho)
        have = [em[l] for l in planar_leaves(R, rho)]
        want = planar_leaves(T, img)
        G = _reorder_functor(r.G[rho], have, want, want)
        store = face if img == frozenset(T.vertices) else opd
        if store.setdefault(("G", img), G) != G:
            raise IncompatibleFamily(f"functors disagree on subtree {sorted(img)}")
        for e in internal_edges(R, rho):
            nat = r.phi[(rho, e)]
            pos = {x: k for k, x in enumerate(have)}
            order = [pos[x] for x in want]
            comps = {tuple(x[o] for o in order): c for x, c in nat.comps.items()}
            key = ("phi", img, em[e])
            if store.setdefault(key, comps) != comps:
                raise IncompatibleFamily(f"isos disagree on subtree {sorted(img)} at {em[e]!r}")


def reconstruct_from_2skeleton(T: Tree, family: dict) -> WCat1Dendrex | None:
    """The unique degree-3 dendrex with the given faces, or None when the
    faces are compatible but the square fails.

    ``family`` maps each face of ``T`` to a record of its shape.  Raises
    :class:`IncompatibleFamily` if two faces disagree on shared data."""
    if T.degree != 3:
        raise ValueError("reconstruction is for trees with three vertices")
    faces = faces_of(T)
    if set(family) != set(faces):
        raise IncompatibleFamily("family must have one record per face")
    cats: dict = {}
    opd: dict = {}
    face: dict = {}
    for f in faces:
        _merge_face(T, f, family[f], cats, opd, face)
    top = frozenset(T.vertices)
    G = {key[1]: F for key, F in opd.items() if key[0] == "G"}
    if ("G", top) not in face:
        raise IncompatibleFamily("no inner face supplies the top functor")
    G[top] = face[("G", top)]
    d = WCat1Dendrex(T, cats, G)
    for store in (opd, face):
        for key, comps in store.items():
            if key[0] == "phi":
                _, vs, e = key
                d.phi[(vs, e)] = MultiNat(G[vs], d.composite(vs, {e}), comps)
    missing = [vs for vs in all_subtrees(T) if vs not in d.G]
    missing += [(vs, e) for vs in all_subtrees(T) for e in internal_edges(T, vs) if (vs, e) not in d.phi]
    if missing:
        raise IncompatibleFamily(f"faces do not determine {missing}")
    return None if validate_wcat1_dendrex(d) else d


def nat_isos(F: MultiFunctor, G: MultiFunctor) -> list[MultiNat]:
    """All natural isomorphisms ``F => G`` (brute force per object)."""
    T = F.target
    objs = list(F.domain_objects())
    choices = [[m for m in T.hom(F.obj[x], G.obj[x]) if T.is_iso(m)] for x in objs]
    out = []
    for pick in itertools.product(*choices):
        n = MultiNat(F, G, dict(zip(objs, pick)))
        if not n.validate():
            out.append(n)
    return out


def count_top_extensions(T: Tree, family: dict) -> int:
    """Count functors ``H^2 -> Ctg(top)`` compatible with the faces, searching
    all natural isomorphisms for the four edges of the square.

    The edges at the origin must match the inner faces, the far edges must
    be the whiskerings forced by the operad structure, and the square must
    commute.  For a valid family the answer is 0 or 1."""
    cats: dict = {}
    opd: dict = {}
    face: dict = {}
    for f in faces_of(T):
        _merge_face(T, f, family[f], cats, opd, face)
    top = frozenset(T.vertices)
    G = {key[1]: F for key, F in opd.items() if key[0] == "G"}
    G[top] = face[("G", top)]
    d = WCat1Dendrex(T, cats, G)
    for key, comps in list(opd.items()) + list(face.items()):
        if key[0] == "phi":
            d.phi[(key[1], key[2])] = MultiNat(G[key[1]], d.composite(key[1], {key[2]}), comps)
    a, b = internal_edges(T, top)
    corner = {frozenset(): G[top], frozenset({a}): d.composite(top, {a}),
              frozenset({b}): d.composite(top, {b}), frozenset({a, b}): d.composite(top, {a, b})}
    count = 0
    edges = [(frozenset(), frozenset({a})), (frozenset(), frozenset({b})),
             (frozenset({a}), frozenset({a, b})), (frozenset({b}), frozenset({a, b}))]
    forced = [d.phi[(top, a)].comps, d.phi[(top, b)].comps,
              d.whiskered(top, {a}, _piece(T, top, frozenset({a}), b, containing=True), b).comps,
              d.whiskered(top, {b}, _piece(T, top, frozenset({b}), a, containing=True), a).comps]
    cands = [[n for n in nat_isos(corner[s], corner[t]) if n.comps == want]
             for (s, t), want in zip(edges, forced)]
    for ea, eb, fa, fb in itertools.product(*cands):
        if ea.then(fa).comps == eb.then(fb).comps:
            count += 1
    return count


# ---------------------------------------------------------------------------
# case views

def case_view(d: WCat1Dendrex) -> dict:
    """The record under the names of the explicit case analysis."""
    T = d.tree
    tag = case_tag(T)
    out: dict = {"case": tag}
    if tag == "1":
        out["X"] = d.cats[T.root]
        return out
    root_v = frozenset({T.root})
    if tag == "2":
        out["Xs"] = [d.cats[l] for l in T.ins(T.root)]
        out["X"] = d.cats[T.root]
        out["F"] = d.G[root_v]
        return out
    top = frozenset(T.vertices)
    if tag == "3":
        (e,) = internal_edges(T, top)
        out.update(F1=d.G[root_v], F2=d.G[frozenset({e})], G=d.G[top], phi=d.phi[(top, e)], i=e)
        return out
    if tag == "4":
        # root vertex, middle vertex above edge e, top vertex above edge f
        e = next(x for x in T.ins(T.root) if x in T.vertices)
        f = next(x for x in T.ins(e) if x in T.vertices)
        mid, up = frozenset({e}), frozenset({f})
        out.update(F1=d.G[root_v], F2=d.G[mid], F3=d.G[up],
                   G1=d.G[root_v | mid], phi1=d.phi[(root_v | mid, e)],
                   G2=d.G[mid | up], phi2=d.phi[(mid | up, f)],
                   K=d.G[top], psi1=d.phi[(top, e)], psi2=d.phi[(top, f)], i=e, j=f)
        return out
    # branching: two vertices above the root vertex at edges e < f (planar order)
    e, f = [x for x in T.ins(T.root) if x in T.vertices]
    left, right = frozenset({e}), frozenset({f})
    out.update(F1=d.G[root_v], F2=d.G[left], F3=d.G[right],
               G1=d.G[root_v | left], phi1=d.phi[(root_v | left, e)],
               G2=d.G[root_v | right], phi2=d.phi[(root_v | right, f)],
               K=d.G[top], psi1=d.phi[(top, e)], psi2=d.phi[(top, f)], i=e, j=f)
    return out


# ---------------------------------------------------------------------------
# construction of fixtures

def _strict_composite(T: Tree, vertex_functors: dict, cats: dict, vs: frozenset) -> MultiFunctor:
    tmp = WCat1Dendrex(T, cats, {frozenset({v}): vertex_functors[v] for v in T.vertices})
    return tmp.composite(vs, internal_edges(T, vs))


def strict_dendrex(T: Tree, cats: dict, vertex_functors: dict) -> WCat1Dendrex:
    """Every ``G`` the strict composite and every iso the identity."""
    return random_dendrex(T, cats, vertex_functors, rng=None)


def _conjugate(F: MultiFunctor, rng: random.Random | None) -> tuple[MultiFunctor, dict]:
    """A functor ``G`` isomorphic to ``F`` with the iso ``G => F``: choose
    ``G(x)`` among objects isomorphic to ``F(x)`` and transport morphisms."""
    T = F.target
    comps, gobj = {}, {}
    for x, y in F.obj.items():
        opts = [(a, m) for a in T.objects for m in T.hom(a, y) if T.is_iso(m)]
        a, m = (opts[rng.randrange(len(opts))] if rng is not None and opts else (y, T.id(y)))
        gobj[x], comps[x] = a, m
    gmor = {}
    for f, m in F.mor.items():
        src = tuple(c.src(k) for c, k in zip(F.cats, f))
        tgt = tuple(c.tgt(k) for c, k in zip(F.cats, f))
        gmor[f] = T.compose(T.inverse(comps[tgt]), T.compose(m, comps[src]))
    G = MultiFunctor(F.inputs, F.cats, T, gobj, gmor)
    return G, comps


def random_dendrex(T: Tree, cats: dict, vertex_functors: dict, rng: random.Random | None) -> WCat1Dendrex:
    """A valid dendrex: each ``G_sigma`` is a random conjugate of the strict
    composite with iso ``eta_sigma``, and ``phi = (eta_low o eta_up)^-1 . eta``.

    With ``rng = None`` everything is strict."""
    G, eta = {}, {}
    for vs in all_subtrees(T):
        F = _strict_composite(T, vertex_functors, cats, vs)
        if len(vs) == 1:
            G[vs], eta[vs] = F, {x: F.target.id(y) for x, y in F.obj.items()}
        else:
            G[vs], eta[vs] = _conjugate(F, rng)
    d = WCat1Dendrex(T, cats, G)
    for vs in all_subtrees(T):
        for e in internal_edges(T, vs):
            lo, up = split(T, vs, e)
            # eta_lo o eta_up : G_lo o G_up => F_lo o F_up
            h = _horizontal(T, cats, G, eta, vs, lo, up, e)
            tgt = d.composite(vs, {e})
            Tc = d.cats[subtree_root(T, vs)]
            comps = {x: Tc.compose(Tc.inverse(h[x]), c) for x, c in eta[vs].items()}
            d.phi[(vs, e)] = MultiNat(G[vs], tgt, comps)
    return d


def _horizontal(T, cats, G, eta, vs, lo, up, e):
    """Components of ``eta_lo * eta_up: G_lo o_e G_up => F_lo o_e F_up``."""
    leaves = planar_leaves(T, vs)
    lo_leaves = planar_leaves(T, lo)
    up_leaves = planar_leaves(T, up)
    X = cats[subtree_root(T, vs)]
    out = {}
    for x in itertools.product(*(cats[l] .objects for l in leaves)):
        val = dict(zip(leaves, x))
        ux = tuple(val[l] for l in up_leaves)
        gu = G[up].obj[ux]
        eu = eta[up][ux]
        lo_args_g = tuple(gu if l == e else val[l] for l in lo_leaves)
        # F_lo(eta_up) . eta_lo at G_up(x)
        F_lo_mor_args = tuple(eu if l == e else cats[l].id(val[l]) for l in lo_leaves)
        F_lo = _strict_from_eta(G[lo], eta[lo])
        out[x] = X.compose(F_lo.mor[F_lo_mor_args], eta[lo][lo_args_g])
    return out


def _strict_from_eta(G: MultiFunctor, eta: dict) -> MultiFunctor:
    """Recover ``F`` from ``G`` and ``eta: G => F``."""
    T = G.target
    obj = {x: T.tgt(m) for x, m in eta.items()}
    mor = {}
    for f, m in G.mor.items():
        src = tuple(c.src(k) for c, k in zip(G.cats, f))
        tgt = tuple(c.tgt(k) for c, k in zip(G.cats, f))
        mor[f] = T.compose(eta[tgt], T.compose(m, T.inverse(eta[src])))
    return MultiFunctor(G.inputs, G.cats, T, obj, mor)


def _vertex_functor_options(ins_cats: Sequence[FinCat], out: FinCat, limit: int = 64) -> list[MultiFunctor]:
    """Small menu of functors ``prod ins_cats -> out``: constants and
    projections followed by a unary functor (plus joins into H)."""
    n = len(ins_cats)
    names = tuple(range(n))
    opts = []
    for y in out.objects:
        obj = {x: y for x in itertools.product(*(c.objects for c in ins_cats))}
        mor = {f: out.id(y) for f in itertools.product(*(list(c.morphisms) for c in ins_cats))}
        opts.append(MultiFunctor(names, ins_cats, out, obj, mor))
    for k, C in enumerate(ins_cats):
        for F in enumerate_functors(C, out)[:limit]:
            obj = {x: F.obj[x[k]] for x in itertools.product(*(c.objects for c in ins_cats))}
            mor = {f: F.mor[f[k]] for f in itertools.product(*(list(c.morphisms) for c in ins_cats))}
            opts.append(MultiFunctor(names, ins_cats, out, obj, mor))
    I = interval()
    if n >= 2 and all(c == I.H for c in ins_cats) and out == I.H:
        obj = {x: max(x) for x in itertools.product(*(c.objects for c in ins_cats))}
        mor = {}
        for f in itertools.product(*(list(c.morphisms) for c in ins_cats)):
            a = max(I.H.src(m) for m in f)
            b = max(I.H.tgt(m) for m in f)
            mor[f] = I.H.hom(a, b)[0]
        opts.append(MultiFunctor(names, ins_cats, out, obj, mor))
    return opts


def degree3_shapes() -> list[Tree]:
    """Small three-vertex trees of both kinds (chains and branchings)."""
    L3 = Tree("a", {"a": ["b"], "b": ["c"], "c": ["d"]})
    chain21 = Tree("a", {"a": ["b", "x"], "b": ["c"], "c": ["d"]})
    chain12 = Tree("a", {"a": ["b"], "b": ["c", "y"], "c": ["d"]})
    chain0 = Tree("a", {"a": ["b"], "b": ["c"], "c": []})
    branch = Tree("a", {"a": ["b", "c"], "b": ["d"], "c": ["e"]})
    branch0 = Tree("a", {"a": ["b", "c"], "b": [], "c": ["e"]})
    return [L3, chain21, chain12, chain0, branch, branch0]


def degree3_fixtures(count: int = 24, seed: int = 0) -> list[WCat1Dendrex]:
    """Valid degree-3 records over the fixture categories."""
    rng = random.Random(seed)
    corpus = fixture_corpus()
    palette = [corpus["H"], corpus["groupoid2"], corpus["arrow"], corpus["terminal"], corpus["poset3"]]
    out = []
    shapes_ = degree3_shapes()
    k = 0
    while len(out) < count:
        T = shapes_[k % len(shapes_)]
        k += 1
        # groupoid-heavy palette so the isos are non-trivial
        cats = {}
        for e in sorted(T.edges):
            r = rng.random()
            cats[e] = palette[0] if r < 0.45 else palette[1] if r < 0.75 else palette[rng.randrange(len(palette))]
        # keep functor tables small: at most one groupoid2 among the inputs of a vertex
        vf = {}
        for v in T.vertices:
            opts = _vertex_functor_options([cats[i] for i in T.ins(v)], cats[v])
            vf[v] = opts[rng.randrange(len(opts))]
        d = random_dendrex(T, cats, vf, rng)
        out.append(d)
    return out
