"""Finite non-planar rooted trees with named edges.

A tree is stored as a root edge plus a mapping from each vertex's output edge
to the tuple of its input edges.  Vertices are identified by their output
edge; optional human labels (``{"v": "a"}``) can be attached.  The stored
input order is only a planar representative: equality and hashing ignore it.

>>> canonical_code(corolla(2))
'(**)'
>>> canonical_code(linear(2))
'((*))'
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Tree",
    "TreeError",
    "corolla",
    "linear",
    "unit_tree",
    "graft",
    "canonical_code",
    "canonical_form",
    "tree_from_code",
    "subtree",
    "subtree_vertices",
    "subtrees_at",
    "trees_up_to",
    "example_t3",
]


class TreeError(ValueError):
    """Raised for malformed trees or invalid tree operations."""


class Tree:
    """Immutable rooted tree.

    Parameters
    ----------
    root : str
        The root edge.
    vertices : mapping
        ``out_edge -> sequence of input edges``.
    labels : mapping, optional
        ``label -> out_edge`` aliases for vertices.
    """

    __slots__ = ("root", "_ins", "labels", "_key", "_hash", "_below", "_edges", "_leaves", "_inner")

    def __init__(self, root: str, vertices: Mapping[str, Sequence[str]] | None = None,
                 labels: Mapping[str, str] | None = None):
        vertices = vertices or {}
        self.root = root
        self._ins = {out: tuple(ins) for out, ins in vertices.items()}
        self.labels = dict(labels or {})
        self._check()
        self._key = (root, frozenset((o, tuple(sorted(i))) for o, i in self._ins.items()))
        self._hash = hash(self._key)
        self._below = {e: out for out, ins in self._ins.items() for e in ins}
        es = {root}
        for out, ins in self._ins.items():
            es.add(out)
            es.update(ins)
        self._edges = frozenset(es)
        self._leaves = frozenset(e for e in es if e not in self._ins)
        self._inner = frozenset(e for e in self._ins if e in self._below)

    def _check(self):
        seen_in = set()
        for out, ins in self._ins.items():
            for e in ins:
                if e in seen_in:
                    raise TreeError(f"edge {e!r} is an input of two vertices")
                seen_in.add(e)
        if self.root in seen_in:
            raise TreeError("root edge cannot be a vertex input")
        for out in self._ins:
            if out != self.root and out not in seen_in:
                raise TreeError(f"vertex {out!r} is disconnected from the root")
        if self._ins and self.root not in self._ins:
            raise TreeError("root edge has no vertex above it")
        # reachability from the root rules out cycles among the outputs
        reached, stack = set(), [self.root]
        while stack:
            e = stack.pop()
            if e in reached:
                raise TreeError("cycle detected")
            reached.add(e)
            stack.extend(self._ins.get(e, ()))
        if set(self._ins) - reached:
            raise TreeError("graph is not connected")
        for label, out in self.labels.items():
            if out not in self._ins:
                raise TreeError(f"label {label!r} points to unknown vertex {out!r}")

    # -- basic structure -------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Tree) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        parts = ", ".join(f"{o}<-{list(i)}" for o, i in sorted(self._ins.items()))
        return f"Tree(root={self.root!r}, {parts})"

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(sorted(self._ins))

    def ins(self, v: str) -> tuple[str, ...]:
        return self._ins[self.vertex(v)]

    def arity(self, v: str) -> int:
        return len(self.ins(v))

    def vertex(self, v: str) -> str:
        """Resolve a label or output edge to the vertex key."""
        if v in self._ins:
            return v
        if v in self.labels:
            return self.labels[v]
        raise TreeError(f"no vertex {v!r}")

    def items(self):
        return self._ins.items()

    @property
    def edges(self) -> frozenset:
        return self._edges

    @property
    def leaves(self) -> frozenset:
        return self._leaves

    @property
    def inner_edges(self) -> frozenset:
        return self._inner

    @property
    def degree(self) -> int:
        return len(self._ins)

    def vertex_above(self, e: str) -> str | None:
        return e if e in self._ins else None

    def vertex_below(self, e: str) -> str | None:
        return self._below.get(e)

    def ordered_leaves(self, top: str | None = None) -> tuple[str, ...]:
        """Leaves in planar left-to-right order below ``top`` (default root)."""
        e = self.root if top is None else top
        if e not in self._ins:
            return (e,)
        out: list[str] = []
        for i in self._ins[e]:
            out.extend(self.ordered_leaves(i))
        return tuple(out)

    def max_arity(self) -> int:
        return max((len(i) for i in self._ins.values()), default=0)

    def relabel(self, mapping: Mapping[str, str]) -> "Tree":
        f = lambda e: mapping.get(e, e)
        return Tree(f(self.root), {f(o): [f(e) for e in ins] for o, ins in self._ins.items()},
                    {k: f(v) for k, v in self.labels.items()})

    # -- JSON ---------------------------------------------------------------
    def to_json(self) -> dict:
        verts = [{"out": o, "in": list(i)} for o, i in sorted(self._ins.items())]
        d = {"root": self.root, "vertices": verts}
        if self.labels:
            d["labels"] = dict(sorted(self.labels.items()))
        return d

    @classmethod
    def from_json(cls, data) -> "Tree":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            verts = {v["out"]: v["in"] for v in data.get("vertices", [])}
            names = {v["name"]: v["out"] for v in data.get("vertices", []) if "name" in v}
            names.update(data.get("labels", {}))
            return cls(data["root"], verts, names)
        except (KeyError, TypeError) as exc:
            raise TreeError(f"malformed tree JSON: {exc}") from exc


def corolla(n: int, root: str = "r", leaves: Sequence[str] | None = None) -> Tree:
    if n < 0:
        raise TreeError("arity must be non-negative")
    leaves = list(leaves) if leaves is not None else [f"l{i}" for i in range(1, n + 1)]
    if len(leaves) != n:
        raise TreeError("wrong number of leaf names")
    return Tree(root, {root: leaves})


def linear(n: int) -> Tree:
    """Chain of ``n`` unary vertices; edges ``e0`` (root) up to ``en`` (leaf)."""
    if n < 0:
        raise TreeError("length must be non-negative")
    return Tree("e0", {f"e{k}": [f"e{k + 1}"] for k in range(n)})


def unit_tree(edge: str = "e0") -> Tree:
    """The tree | with a single edge."""
    return Tree(edge, {})


def example_t3() -> Tree:
    """Root a; v(b, c) -> a; w(d, e, f) -> b; u() -> c."""
    return Tree("a", {"a": ["b", "c"], "b": ["d", "e", "f"], "c": []},
                {"v": "a", "w": "b", "u": "c"})


def _fresh(name: str, taken: set) -> str:
    if name not in taken:
        return name
    k = 1
    while f"{name}#{k}" in taken:
        k += 1
    return f"{name}#{k}"


def graft(S: Tree, at: str, R: Tree) -> Tree:
    """Identify the root of ``R`` with the leaf ``at`` of ``S``."""
    if at not in S.leaves:
        raise TreeError(f"{at!r} is not a leaf of S")
    taken = set(S.edges)
    rename = {R.root: at}
    for e in sorted(R.edges - {R.root}):
        new = _fresh(e, taken)
        taken.add(new)
        rename[e] = new
    verts = {o: list(i) for o, i in S.items()}
    for o, ins in R.items():
        verts[rename[o]] = [rename[e] for e in ins]
    root = S.root
    labels = dict(S.labels)
    for k, v in R.labels.items():
        if k not in labels:
            labels[k] = rename[v]
    return Tree(root, verts, labels)


def _code_at(T: Tree, e: str) -> str:
    if T.vertex_above(e) is None:
        return "*"
    return "(" + "".join(sorted(_code_at(T, i) for i in T.ins(e))) + ")"


def canonical_code(T: Tree) -> str:
    """Isomorphism-invariant string for the tree."""
    return _code_at(T, T.root)


def canonical_form(T: Tree) -> tuple[Tree, dict]:
    """Return ``(rep, iso)`` where ``rep`` is the canonical representative of
    the isomorphism class of ``T`` and ``iso`` maps edges of ``rep`` to edges
    of ``T`` along an isomorphism."""
    counter = itertools.count()
    verts: dict[str, list[str]] = {}
    iso: dict[str, str] = {}

    def walk(e: str) -> str:
        name = f"e{next(counter)}"
        iso[name] = e
        if T.vertex_above(e) is not None:
            kids = sorted(T.ins(e), key=lambda i: _code_at(T, i))
            verts[name] = [walk(i) for i in kids]
        return name

    root = walk(T.root)
    return Tree(root, verts), iso


@lru_cache(maxsize=None)
def tree_from_code(code: str) -> Tree:
    """Canonical representative for a canonical code."""
    pos = 0
    counter = itertools.count()
    verts: dict[str, list[str]] = {}

    def parse() -> str:
        nonlocal pos
        name = f"e{next(counter)}"
        if code[pos] == "*":
            pos += 1
            return name
        if code[pos] != "(":
            raise TreeError(f"bad code at {pos}: {code!r}")
        pos += 1
        kids = []
        while code[pos] != ")":
            kids.append(parse())
        pos += 1
        verts[name] = kids
        return name

    try:
        root = parse()
    except IndexError as exc:
        raise TreeError(f"truncated code {code!r}") from exc
    if pos != len(code):
        raise TreeError(f"trailing characters in code {code!r}")
    return Tree(root, verts)


def subtree_vertices(T: Tree, root: str, leaves: Iterable[str]) -> frozenset | None:
    """Vertex set of the subtree with the given root and leaf multiset.

    Returns ``None`` when there is no such subtree.  An empty set means the
    trivial subtree (``root`` is its own single leaf)."""
    leaves = list(leaves)
    want = set(leaves)
    if len(want) != len(leaves) or root not in T.edges or not want <= T.edges:
        return None
    if want == {root}:
        return frozenset()
    used: set[str] = set()
    verts: set[str] = set()
    stack = [root]
    while stack:
        e = stack.pop()
        if e in want and e != root:
            used.add(e)
            continue
        if T.vertex_above(e) is None:
            return None
        verts.add(e)
        stack.extend(T.ins(e))
    if used != want:
        return None
    return frozenset(verts)


def subtree(T: Tree, root: str, leaves: Iterable[str]) -> Tree | None:
    """The subtree of ``T`` with the given root and leaf multiset, if any."""
    vs = subtree_vertices(T, root, leaves)
    if vs is None:
        return None
    return Tree(root, {v: T.ins(v) for v in vs},
                {k: v for k, v in T.labels.items() if v in vs})


def subtrees_at(T: Tree, root: str) -> list[tuple[frozenset, tuple[str, ...]]]:
    """All subtrees with at least one vertex and the given root edge, as
    ``(vertex set, planar leaf tuple)`` pairs."""
    if T.vertex_above(root) is None:
        return []
    options = []
    for i in T.ins(root):
        opts = [(frozenset(), (i,))]
        opts.extend(subtrees_at(T, i))
        options.append(opts)
    out = []
    for combo in itertools.product(*options):
        vs = frozenset({root}).union(*(c[0] for c in combo))
        lv = tuple(itertools.chain.from_iterable(c[1] for c in combo))
        out.append((vs, lv))
    return out


def _planted(max_vertices: int, max_arity: int) -> dict[int, list[str]]:
    """Codes of planted trees (a root edge) by vertex count."""
    by_n: dict[int, list[str]] = {0: ["*"]}
    for n in range(1, max_vertices + 1):
        codes = set()
        # one vertex at the bottom, children use n-1 vertices in total
        for k in range(0, max_arity + 1):
            for split in _compositions(n - 1, k):
                for kids in itertools.product(*(by_n[s] for s in split)):
                    codes.add("(" + "".join(sorted(kids)) + ")")
        by_n[n] = sorted(codes)
    return by_n


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def trees_up_to(max_degree: int, max_arity: int) -> tuple[Tree, ...]:
    """Canonical representatives of all trees with degree at most
    ``max_degree`` and vertex arity at most ``max_arity``."""
    by_n = _planted(max_degree, max_arity)
    return tuple(tree_from_code(c) for n in range(max_degree + 1) for c in by_n[n])
