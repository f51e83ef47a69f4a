"""Arrows of the category Omega.

An arrow ``R -> T`` is a map of free operads ``Omega(R) -> Omega(T)``.  It is
stored semantically: an edge map plus, for every vertex of ``R``, its image
operation in ``Omega(T)`` (a subtree with ordered leaves, or the unit).
Because ``Omega(T)`` has at most one operation per signature, the edge map
alone determines the arrow, and equality compares edge maps.
"""

from __future__ import annotations

import itertools

from functools import lru_cache

from .trees import (Tree, TreeError, canonical_code, canonical_form, subtree_vertices,
                    subtrees_at, tree_from_code, unit_tree)

__all__ = [
    "OmegaMap",
    "OmegaError",
    "identity",
    "compose",
    "inner_face",
    "outer_face",
    "edge_inclusion",
    "faces_of",
    "degeneracy",
    "degeneracies_of",
    "enumerate_maps",
    "automorphisms",
    "to_canonical",
    "canonical_faces",
    "subfaces",
    "lift",
    "dendroidal_identity_failures",
]

UNIT = None


class OmegaError(ValueError):
    pass


class OmegaMap:
    """An arrow ``source -> target`` of Omega."""

    __slots__ = ("source", "target", "edge_map", "vertex_images", "_key", "_hash")

    def __init__(self, source: Tree, target: Tree, edge_map: dict):
        self.source = source
        self.target = target
        self.edge_map = dict(edge_map)
        if set(self.edge_map) != set(source.edges):
            raise OmegaError("edge map must be defined on every source edge")
        if not set(self.edge_map.values()) <= target.edges:
            raise OmegaError("edge map leaves the target")
        self.vertex_images = {}
        for v, ins in source.items():
            out = self.edge_map[v]
            leaves = tuple(self.edge_map[e] for e in ins)
            if len(ins) == 1 and leaves[0] == out:
                self.vertex_images[v] = UNIT
                continue
            vs = subtree_vertices(target, out, leaves)
            if not vs:
                raise OmegaError(f"vertex {v!r} has no image operation {leaves} -> {out}")
            self.vertex_images[v] = (vs, leaves)
        self._key = (source, target, frozenset(self.edge_map.items()))
        self._hash = hash(self._key)

    @classmethod
    def _trusted(cls, source, target, edge_map, images):
        m = cls.__new__(cls)
        m.source, m.target, m.edge_map, m.vertex_images = source, target, edge_map, images
        m._key = (source, target, frozenset(edge_map.items()))
        m._hash = hash(m._key)
        return m

    def __eq__(self, other):
        return isinstance(other, OmegaMap) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        pairs = ", ".join(f"{a}->{b}" for a, b in sorted(self.edge_map.items()))
        return f"OmegaMap({canonical_code(self.source)} -> {canonical_code(self.target)}: {pairs})"

    def __call__(self, e: str) -> str:
        return self.edge_map[e]

    def __mul__(self, other: "OmegaMap") -> "OmegaMap":
        return compose(self, other)

    def is_mono(self) -> bool:
        return len(set(self.edge_map.values())) == len(self.edge_map)

    def is_epi(self) -> bool:
        return set(self.edge_map.values()) == set(self.target.edges)

    def is_iso(self) -> bool:
        return self.is_mono() and self.is_epi() and self.source.degree == self.target.degree

    def image_key(self):
        """Identifies a mono up to isomorphism of its source."""
        ops = frozenset((img[0], frozenset(img[1])) for img in self.vertex_images.values()
                        if img is not UNIT)
        return (canonical_code(self.source), frozenset(self.edge_map.values()), ops)

    def kernel_key(self):
        """Identifies an epi up to isomorphism of its target."""
        fibres: dict[str, set] = {}
        for a, b in self.edge_map.items():
            fibres.setdefault(b, set()).add(a)
        return (canonical_code(self.target), frozenset(frozenset(f) for f in fibres.values()))

    def to_json(self) -> dict:
        return {"source": self.source.to_json(), "target": self.target.to_json(),
                "edge_map": dict(sorted(self.edge_map.items()))}

    @classmethod
    def from_json(cls, data) -> "OmegaMap":
        return cls(Tree.from_json(data["source"]), Tree.from_json(data["target"]), data["edge_map"])


def identity(T: Tree) -> OmegaMap:
    return OmegaMap(T, T, {e: e for e in T.edges})


def compose(g: OmegaMap, f: OmegaMap) -> OmegaMap:
    """``g o f``: first ``f``, then ``g``."""
    if f.target != g.source:
        raise OmegaError("maps are not composable")
    return OmegaMap(f.source, g.target, {e: g.edge_map[f.edge_map[e]] for e in f.source.edges})


def try_map(R: Tree, T: Tree, edge_map: dict) -> OmegaMap | None:
    try:
        return OmegaMap(R, T, edge_map)
    except OmegaError:
        return None


def inner_face(T: Tree, e: str) -> OmegaMap:
    """The face ``T/e -> T`` contracting the inner edge ``e``."""
    if e not in T.inner_edges:
        raise OmegaError(f"{e!r} is not an inner edge")
    below = T.vertex_below(e)
    verts = {}
    for o, ins in T.items():
        if o == e:
            continue
        if o == below:
            new = []
            for i in ins:
                new.extend(T.ins(e) if i == e else [i])
            verts[o] = new
        else:
            verts[o] = list(ins)
    labels = {k: v for k, v in T.labels.items() if v != e}
    S = Tree(T.root, verts, labels)
    return OmegaMap(S, T, {x: x for x in S.edges})


def _adjacent_inner(T: Tree, v: str) -> list[str]:
    inner = T.inner_edges
    adj = [i for i in T.ins(v) if i in inner]
    if v in inner:
        adj.append(v)
    return adj


def outer_face(T: Tree, v: str) -> OmegaMap:
    """The face ``T/v -> T`` cutting a vertex with exactly one adjacent inner edge."""
    v = T.vertex(v)
    adj = _adjacent_inner(T, v)
    if len(adj) != 1:
        raise OmegaError(f"vertex {v!r} is adjacent to {len(adj)} inner edges, need exactly 1")
    verts = {o: list(i) for o, i in T.items() if o != v}
    labels = {k: x for k, x in T.labels.items() if x != v}
    if v == T.root:
        S = Tree(adj[0], verts, labels)
    else:
        S = Tree(T.root, verts, labels)
    return OmegaMap(S, T, {x: x for x in S.edges})


def edge_inclusion(T: Tree, e: str) -> OmegaMap:
    return OmegaMap(unit_tree(e), T, {e: e})


def _face_sort_key(f: OmegaMap):
    return (sorted(f.source.edges), canonical_code(f.source))


def faces_of(T: Tree) -> list[OmegaMap]:
    """All faces of ``T`` (monos raising degree by one), sorted."""
    if T.degree == 0:
        raise OmegaError("the tree | has no faces")
    if T.degree == 1:
        return sorted((edge_inclusion(T, e) for e in T.edges), key=_face_sort_key)
    out = [inner_face(T, e) for e in T.inner_edges]
    out += [outer_face(T, v) for v in T.vertices if len(_adjacent_inner(T, v)) == 1]
    return sorted(out, key=_face_sort_key)


def degeneracy(T: Tree, v: str) -> OmegaMap:
    """``T -> T\\v`` deleting the unary vertex ``v``; its input edge is merged
    into its output edge, which keeps its name."""
    v = T.vertex(v)
    ins = T.ins(v)
    if len(ins) != 1:
        raise OmegaError(f"vertex {v!r} has arity {len(ins)}, degeneracies need arity 1")
    x = ins[0]
    verts = {}
    for o, i in T.items():
        if o == v:
            continue
        verts[v if o == x else o] = list(i)
    labels = {k: (v if y == x else y) for k, y in T.labels.items() if y != v}
    S = Tree(T.root, verts, labels)
    return OmegaMap(T, S, {e: (v if e == x else e) for e in T.edges})


def degeneracies_of(T: Tree) -> list[OmegaMap]:
    return [degeneracy(T, v) for v in T.vertices if T.arity(v) == 1]


@lru_cache(maxsize=4096)
def _subtree_index(T: Tree) -> dict:
    subs = {e: {} for e in T.edges}
    for e in T.edges:
        for vs, lv in subtrees_at(T, e):
            subs[e].setdefault(len(lv), []).append((vs, lv))
    return subs


def enumerate_maps(R: Tree, T: Tree, monos_only: bool = False) -> list[OmegaMap]:
    """Every operad map ``Omega(R) -> Omega(T)``, by exhaustive search over
    root colours and, vertex by vertex, over image operations.  With
    ``monos_only`` the search discards edge maps that are not injective."""
    subs = _subtree_index(T)
    if monos_only and len(R.edges) > len(T.edges):
        return []
    order = []
    stack = [R.root]
    while stack:
        e = stack.pop()
        if R.vertex_above(e) is not None:
            order.append(e)
            stack.extend(R.ins(e))
    results = []

    def feasible(i: str, x: str) -> bool:
        if R.vertex_above(i) is None:
            return True
        k = len(R.ins(i))
        return (k == 1 and not monos_only) or bool(subs[x].get(k))

    def assignments(ins, lv):
        # bijections ins -> lv, pruned by what sits above each input
        if not ins:
            yield ()
            return
        for j, x in enumerate(lv):
            if feasible(ins[0], x):
                for rest in assignments(ins[1:], lv[:j] + lv[j + 1:]):
                    yield (x,) + rest

    def go(k: int, f: dict, images: dict):
        if k == len(order):
            results.append(OmegaMap._trusted(R, T, f, images))
            return
        v = order[k]
        ins = R.ins(v)
        out = f[v]
        if len(ins) == 1 and not monos_only:
            go(k + 1, {**f, ins[0]: out}, {**images, v: UNIT})
        used = set(f.values()) if monos_only else ()
        for vs, lv in subs[out].get(len(ins), ()):
            if monos_only and not used.isdisjoint(lv):
                continue
            for perm in assignments(ins, lv):
                g = dict(f)
                g.update(zip(ins, perm))
                go(k + 1, g, {**images, v: (vs, perm)})

    for e in sorted(T.edges):
        go(0, {R.root: e}, {})
    return sorted(results, key=lambda m: sorted(m.edge_map.items()))


def automorphisms(T: Tree) -> list[OmegaMap]:
    return [m for m in enumerate_maps(T, T) if m.is_iso()]


def to_canonical(T: Tree) -> OmegaMap:
    """The isomorphism ``rep -> T`` from the canonical representative."""
    rep, iso = canonical_form(T)
    return OmegaMap(rep, T, iso)


@lru_cache(maxsize=None)
def canonical_faces(code: str) -> tuple[OmegaMap, ...]:
    """Faces of the canonical tree with the given code, each precomposed so
    that its source is a canonical representative."""
    T = tree_from_code(code)
    return tuple(compose(f, to_canonical(f.source)) for f in faces_of(T))


@lru_cache(maxsize=None)
def canonical_degeneracies(code: str) -> tuple[OmegaMap, ...]:
    T = tree_from_code(code)
    out = []
    for s in degeneracies_of(T):
        rep, iso = canonical_form(s.target)
        back = {b: a for a, b in iso.items()}
        out.append(OmegaMap(T, rep, {e: back[s.edge_map[e]] for e in T.edges}))
    return tuple(out)


def subfaces(T: Tree, degree: int) -> list[OmegaMap]:
    """Monos into ``T`` from canonical trees of the given degree, one for
    each image (iterated faces, deduplicated)."""
    if degree > T.degree:
        return []
    level = {identity(T).image_key(): identity(T)}
    for _ in range(T.degree - degree):
        nxt = {}
        for m in level.values():
            if m.source.degree == 0:
                continue
            for f in faces_of(m.source):
                c = compose(m, f)
                nxt.setdefault(c.image_key(), c)
        level = nxt
    out = [compose(m, to_canonical(m.source)) for m in level.values()]
    return sorted(out, key=lambda m: (canonical_code(m.source), sorted(m.edge_map.values())))


def lift(mono: OmegaMap, r: OmegaMap) -> OmegaMap | None:
    """The unique ``b`` with ``mono o b = r``, if it exists."""
    inv = {b: a for a, b in mono.edge_map.items()}
    try:
        return OmegaMap(r.source, mono.source, {e: inv[x] for e, x in r.edge_map.items()})
    except (KeyError, OmegaError, TreeError):
        return None


def dendroidal_identity_failures(T: Tree) -> list[str]:
    """Check the relations among generators that start or end at ``T``.

    * distinct inner faces commute;
    * two faces of faces with the same image and source are equal;
    * a degeneracy after a face contracting one of the merged edges is an
      isomorphism;
    * degeneracies commute with each other and with faces away from them.
    """
    errs = []
    inner = sorted(T.inner_edges)
    for a, b in itertools.combinations(inner, 2):
        fa, fb = inner_face(T, a), inner_face(T, b)
        if compose(fa, inner_face(fa.source, b)) != compose(fb, inner_face(fb.source, a)):
            errs.append(f"inner faces {a!r}, {b!r} do not commute")
    if T.degree >= 2:
        seen: dict = {}
        for f in faces_of(T):
            for g in faces_of(f.source):
                c = compose(f, g)
                key = (c.image_key(), c.source)
                if key in seen and seen[key] != c:
                    errs.append(f"two face chains onto {sorted(c.edge_map.values())} differ")
                seen.setdefault(key, c)
    for v in T.vertices:
        if T.arity(v) != 1:
            continue
        s = degeneracy(T, v)
        x = T.ins(v)[0]
        for e in (x, v):
            if e in T.inner_edges and not compose(s, inner_face(T, e)).is_iso():
                errs.append(f"degeneracy at {v!r} after contracting {e!r} is not invertible")
        for w in T.vertices:
            if w == v or T.arity(w) != 1:
                continue
            t = degeneracy(T, w)
            one = compose(degeneracy(s.target, s.edge_map[w]), s)
            two = compose(degeneracy(t.target, t.edge_map[v]), t)
            if one.kernel_key() != two.kernel_key():
                errs.append(f"degeneracies at {v!r}, {w!r} do not commute")
        for e in inner:
            if e in (x, v):
                continue
            f = inner_face(T, e)
            lhs = compose(s, f)
            rhs = compose(inner_face(s.target, s.edge_map[e]), degeneracy(f.source, v))
            if lhs != rhs:
                errs.append(f"degeneracy at {v!r} and face at {e!r} do not commute")
    return errs
