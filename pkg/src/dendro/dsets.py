"""Truncated dendroidal sets: finite presheaves on a truncation of Omega.

A truncation :class:`Shapes` keeps the canonical trees with degree at most
``max_degree`` and at most ``max_edges`` edges.  It is a full subcategory of
Omega closed under faces, so boundaries and horns of its trees stay inside.

A presheaf stores its elements per canonical code and a restriction rule
``restrict(alpha, x)`` for any map ``alpha: R -> T`` between canonical
trees.  Every map of Omega factors into faces, degeneracies and
automorphisms, so law checks and serialization only visit those generators.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .fincat import FinCat
from .omega import (
    OmegaMap,
    automorphisms,
    canonical_degeneracies,
    canonical_faces,
    compose,
    enumerate_maps,
    faces_of,
    identity,
    inner_face,
    lift,
    subfaces,
)
from .trees import Tree, canonical_code, linear, tree_from_code, trees_up_to

__all__ = [
    "Shapes",
    "shapes",
    "TruncatedDendroidalSet",
    "TablePresheaf",
    "SubPresheaf",
    "PresheafMap",
    "representable",
    "boundary",
    "inner_horn",
    "families",
    "horn_generators",
    "check_inner_kan",
    "check_coskeletal",
    "coskeleton",
    "coskeleton_unit",
    "skeleton",
    "remove_dendrices",
    "enumerate_presheaf_maps",
    "yoneda_map",
    "TruncatedSimplicialSet",
    "simplicial_restriction",
    "linear_code",
]

DEFAULT_DEGREE = 3
DEFAULT_EDGES = 6


class Shapes:
    """Canonical trees of degree <= ``max_degree`` with <= ``max_edges`` edges."""

    def __init__(self, max_degree: int = DEFAULT_DEGREE, max_edges: int = DEFAULT_EDGES):
        self.max_degree = max_degree
        self.max_edges = max_edges
        found = [T for T in trees_up_to(max_degree, max(1, max_edges - 1)) if len(T.edges) <= max_edges]
        found.sort(key=lambda T: (T.degree, len(T.edges), canonical_code(T)))
        self.codes = tuple(canonical_code(T) for T in found)
        self.tree = {canonical_code(T): T for T in found}
        self._hom: dict = {}
        self._gens = None

    def __repr__(self):
        return f"Shapes(degree<={self.max_degree}, edges<={self.max_edges}: {len(self.codes)} trees)"

    def __contains__(self, code):
        return code in self.tree

    def __eq__(self, other):
        return isinstance(other, Shapes) and self.codes == other.codes

    def __hash__(self):
        return hash(self.codes)

    def degree(self, code) -> int:
        return self.tree[code].degree

    def of_degree(self, d: int) -> list[str]:
        return [c for c in self.codes if self.tree[c].degree == d]

    def hom(self, rc: str, tc: str) -> tuple[OmegaMap, ...]:
        key = (rc, tc)
        if key not in self._hom:
            self._hom[key] = tuple(enumerate_maps(self.tree[rc], self.tree[tc]))
        return self._hom[key]

    def monos(self, rc: str, tc: str) -> tuple[OmegaMap, ...]:
        key = (rc, tc, "mono")
        if key not in self._hom:
            if len(self.tree[rc].edges) > len(self.tree[tc].edges):
                self._hom[key] = ()
            else:
                self._hom[key] = tuple(enumerate_maps(self.tree[rc], self.tree[tc], monos_only=True))
        return self._hom[key]

    def generators(self) -> list[tuple[str, OmegaMap]]:
        """``(kind, map)`` for every face, degeneracy and non-identity
        automorphism between shapes."""
        if self._gens is None:
            out = []
            for c in self.codes:
                T = self.tree[c]
                if T.degree:
                    out += [("face", f) for f in canonical_faces(c)]
                out += [("automorphism", a) for a in automorphisms(T) if a != identity(T)]
                for s in canonical_degeneracies(c):
                    if canonical_code(s.target) in self.tree:
                        out.append(("degeneracy", s))
            self._gens = out
        return self._gens

    def generators_into(self, tc: str) -> list[tuple[str, OmegaMap]]:
        return [(k, g) for k, g in self.generators() if canonical_code(g.target) == tc]


@lru_cache(maxsize=None)
def shapes(max_degree: int = DEFAULT_DEGREE, max_edges: int = DEFAULT_EDGES) -> Shapes:
    return Shapes(max_degree, max_edges)


def linear_code(n: int) -> str:
    return canonical_code(linear(n))


class TruncatedDendroidalSet:
    """A presheaf on a truncation of Omega.

    ``cells`` maps canonical codes to element tuples; ``action(alpha, x)``
    restricts ``x`` along ``alpha: R -> T`` (canonical source and target)."""

    def __init__(self, shp: Shapes, cells: dict, action: Callable, name: str = "X"):
        self.shapes = shp
        self.cells = {c: tuple(cells.get(c, ())) for c in shp.codes}
        self._action = action
        self._memo: dict = {}
        self.name = name

    def __repr__(self):
        return f"{type(self).__name__}({self.name}, {self.shapes})"

    @property
    def max_degree(self):
        return self.shapes.max_degree

    def elements(self, code: str) -> tuple:
        return self.cells.get(code, ())

    def restrict(self, alpha: OmegaMap, x):
        key = (alpha, x)
        y = self._memo.get(key)
        if y is None:
            y = self._action(alpha, x)
            self._memo[key] = y
        return y

    def sizes(self) -> dict[str, int]:
        return {c: len(v) for c, v in self.cells.items()}

    def total(self) -> int:
        return sum(len(v) for v in self.cells.values())

    def sizes_by_degree(self) -> list[int]:
        out = [0] * (self.max_degree + 1)
        for c, v in self.cells.items():
            out[self.shapes.degree(c)] += len(v)
        return out

    def same_cells(self, other: "TruncatedDendroidalSet") -> bool:
        return all(set(self.cells[c]) == set(other.cells.get(c, ())) for c in self.shapes.codes)

    def check_closure(self) -> list[str]:
        """Restrictions along generators stay inside the element sets."""
        errs = []
        sets = {c: set(v) for c, v in self.cells.items()}
        for kind, g in self.shapes.generators():
            src, tgt = canonical_code(g.source), canonical_code(g.target)
            for x in self.cells[tgt]:
                y = self.restrict(g, x)
                if y not in sets[src]:
                    errs.append(f"{kind} {g!r} sends {x!r} outside the presheaf")
        return errs

    def check_functoriality(self) -> list[str]:
        """``(g a)* = a* g*`` for every generator ``g`` and every map ``a``,
        and ``id* = id``.  Generators suffice since they generate Omega."""
        errs = []
        shp = self.shapes
        for c in shp.codes:
            i = identity(shp.tree[c])
            for x in self.cells[c]:
                if self.restrict(i, x) != x:
                    errs.append(f"identity acts nontrivially on {x!r}")
        for kind, g in shp.generators():
            S, T = canonical_code(g.source), canonical_code(g.target)
            for rc in shp.codes:
                for a in shp.hom(rc, S):
                    ga = compose(g, a)
                    for x in self.cells[T]:
                        if self.restrict(ga, x) != self.restrict(a, self.restrict(g, x)):
                            errs.append(f"functoriality fails for {kind} {g!r} after {a!r} at {x!r}")
        for kind, g in shp.generators():
            if kind == "automorphism":
                c = canonical_code(g.target)
                imgs = {self.restrict(g, x) for x in self.cells[c]}
                if len(imgs) != len(self.cells[c]):
                    errs.append(f"automorphism {g!r} does not act bijectively")
        return errs

    def to_json(self) -> dict:
        index = {c: {x: i for i, x in enumerate(v)} for c, v in self.cells.items()}
        actions = []
        for kind, g in self.shapes.generators():
            S, T = canonical_code(g.source), canonical_code(g.target)
            actions.append({
                "from": T,
                "to": S,
                "map": {"kind": kind, "edge_map": dict(sorted(g.edge_map.items()))},
                "table": [index[S][self.restrict(g, x)] for x in self.cells[T]],
            })
        return {
            "name": self.name,
            "degree": self.shapes.max_degree,
            "max_edges": self.shapes.max_edges,
            "cells": {c: [str(i) for i in range(len(v))] for c, v in self.cells.items()},
            "actions": actions,
        }

    def to_table(self) -> "TablePresheaf":
        return TablePresheaf.from_json(self.to_json())


class TablePresheaf(TruncatedDendroidalSet):
    """A presheaf given by action tables on generators; restriction along an
    arbitrary map factors it into generators first."""

    def __init__(self, shp: Shapes, cells: dict, tables: dict, name: str = "X"):
        self.tables = tables      # generator map -> {x: y}
        super().__init__(shp, cells, self._factor_action, name)

    def _factor_action(self, alpha: OmegaMap, x):
        if alpha in self.tables:
            return self.tables[alpha][x]
        R, T = alpha.source, alpha.target
        if all(a == b for a, b in alpha.edge_map.items()) and R == T:
            return x
        if not alpha.is_mono():
            # peel off a degeneracy at a unary vertex that alpha collapses
            for s in canonical_degeneracies(canonical_code(R)):
                fib = {}
                for e, y in s.edge_map.items():
                    fib.setdefault(y, set()).add(alpha.edge_map[e])
                if all(len(v) == 1 for v in fib.values()):
                    beta = OmegaMap(s.target, T, {y: next(iter(v)) for y, v in fib.items()})
                    return self.restrict(s, self.restrict(beta, x))
            raise ValueError(f"cannot factor {alpha!r}")
        if alpha.is_iso():
            return self.tables[alpha][x]
        for f in canonical_faces(canonical_code(T)):
            b = lift(f, alpha)
            if b is not None:
                return self.restrict(b, self.restrict(f, x))
        raise ValueError(f"cannot factor {alpha!r}")

    @classmethod
    def from_json(cls, data) -> "TablePresheaf":
        if isinstance(data, str):
            data = json.loads(data)
        shp = shapes(data["degree"], data["max_edges"])
        cells = {c: tuple(v) for c, v in data["cells"].items()}
        tables = {}
        for act in data["actions"]:
            S, T = shp.tree[act["to"]], shp.tree[act["from"]]
            g = OmegaMap(S, T, act["map"]["edge_map"])
            src = cells[act["from"]]
            dst = cells[act["to"]]
            tables[g] = {x: dst[j] for x, j in zip(src, act["table"])}
        return cls(shp, cells, tables, data.get("name", "X"))


class SubPresheaf(TruncatedDendroidalSet):
    """Selected elements of ``parent``, restricting as the parent does."""

    def __init__(self, parent: TruncatedDendroidalSet, cells: dict, name: str | None = None):
        self.parent = parent
        super().__init__(parent.shapes, cells, parent.restrict, name or f"sub({parent.name})")

    def inclusion(self) -> "PresheafMap":
        return PresheafMap(self, self.parent, {c: {x: x for x in v} for c, v in self.cells.items()})


class PresheafMap:
    """A natural transformation given componentwise."""

    def __init__(self, source: TruncatedDendroidalSet, target: TruncatedDendroidalSet, comps: dict):
        self.source = source
        self.target = target
        self.comps = comps        # code -> {x: y}

    def __call__(self, code: str, x):
        return self.comps[code][x]

    def __eq__(self, other):
        return isinstance(other, PresheafMap) and self.comps == other.comps

    def __hash__(self):
        return hash(tuple((c, frozenset(d.items())) for c, d in sorted(self.comps.items())))

    def naturality_failures(self) -> list[str]:
        errs = []
        X, Y = self.source, self.target
        tgt_sets = {c: set(v) for c, v in Y.cells.items()}
        for c, v in X.cells.items():
            for x in v:
                if self.comps.get(c, {}).get(x) not in tgt_sets[c]:
                    errs.append(f"{x!r} of shape {c} has no image in the target")
        if errs:
            return errs
        for kind, g in X.shapes.generators():
            S, T = canonical_code(g.source), canonical_code(g.target)
            for x in X.cells[T]:
                if self.comps[S][X.restrict(g, x)] != Y.restrict(g, self.comps[T][x]):
                    errs.append(f"naturality fails for {kind} {g!r} at {x!r}")
        return errs

    def is_injective(self) -> bool:
        return all(len(set(d.values())) == len(d) for d in self.comps.values())

    def is_bijective(self) -> bool:
        return self.is_injective() and all(
            set(self.comps[c].values()) == set(self.target.cells[c]) for c in self.target.cells)


# ---------------------------------------------------------------------------
# representables, boundaries, horns

def representable(T: Tree, D: int | None = None, max_edges: int | None = None) -> TruncatedDendroidalSet:
    """``Omega[T]``: maps into ``T`` acted on by precomposition."""
    D = DEFAULT_DEGREE if D is None else D
    E = max(DEFAULT_EDGES, len(T.edges)) if max_edges is None else max_edges
    shp = shapes(D, E)
    cells = {c: shp_maps(shp, c, T) for c in shp.codes}
    return TruncatedDendroidalSet(shp, cells, lambda a, g: compose(g, a), name=f"Omega[{canonical_code(T)}]")


def shp_maps(shp: Shapes, code: str, T: Tree) -> tuple:
    return tuple(sorted(enumerate_maps(shp.tree[code], T), key=lambda m: sorted(m.edge_map.items())))


def _generated(rep: TruncatedDendroidalSet, gens: Sequence[OmegaMap], name: str) -> SubPresheaf:
    cells = {c: tuple(g for g in v if any(lift(m, g) is not None for m in gens))
             for c, v in rep.cells.items()}
    return SubPresheaf(rep, cells, name)


def boundary(T: Tree, D: int | None = None, max_edges: int | None = None) -> tuple[SubPresheaf, PresheafMap]:
    """``dOmega[T]`` and its inclusion into ``Omega[T]``."""
    if T.degree == 0:
        raise ValueError("the unit tree has no boundary")
    rep = representable(T, D, max_edges)
    sub = _generated(rep, faces_of(T), f"dOmega[{canonical_code(T)}]")
    return sub, sub.inclusion()


def inner_horn(T: Tree, e: str, D: int | None = None, max_edges: int | None = None) -> tuple[SubPresheaf, PresheafMap]:
    """``Lambda^e[T]``: generated by every face except the inner face at ``e``."""
    if e not in T.inner_edges:
        raise ValueError(f"{e!r} is not an inner edge")
    rep = representable(T, D, max_edges)
    skip = inner_face(T, e)
    gens = [f for f in faces_of(T) if f != skip]
    sub = _generated(rep, gens, f"Lambda^{e}[{canonical_code(T)}]")
    return sub, sub.inclusion()


# ---------------------------------------------------------------------------
# compatible families: maps out of generated sub-presheaves of Omega[T]

def _pair_constraints(shp: Shapes, gens: Sequence[OmegaMap]) -> dict:
    """For ``i < j``: the pairs ``(b_i, b_j)`` with ``g_i b_i = g_j b_j`` a mono.

    By epi-mono factorization these are the only overlaps to check."""
    srcs = [canonical_code(g.source) for g in gens]
    out: dict = {}
    for i, gi in enumerate(gens):
        for rc in shp.codes:
            for b in shp.monos(rc, srcs[i]):
                gb = compose(gi, b)
                for j in range(i):
                    bj = lift(gens[j], gb)
                    if bj is not None:
                        out.setdefault((j, i), []).append((bj, b))
    return out


def families(X: TruncatedDendroidalSet, gens: Sequence[OmegaMap]) -> list[tuple]:
    """All compatible families ``(x_i in X_{dom g_i})``, i.e. all presheaf
    maps from the sub-presheaf of ``Omega[T]`` generated by the monos
    ``gens`` into ``X``."""
    shp = X.shapes
    cons = _pair_constraints(shp, gens)
    srcs = [canonical_code(g.source) for g in gens]
    # candidates for x_i are indexed by their restrictions along every
    # constraint shared with an earlier generator
    plan = []
    for i in range(len(gens)):
        pairs = [(j, bj, bi) for (j, k), ps in sorted(cons.items(), key=lambda kv: kv[0]) if k == i
                 for bj, bi in ps]
        index: dict = {}
        for x in X.cells[srcs[i]]:
            index.setdefault(tuple(X.restrict(bi, x) for _, _, bi in pairs), []).append(x)
        plan.append(([(j, bj) for j, bj, _ in pairs], index))
    out = []
    chosen: list = []

    def go(i):
        if i == len(gens):
            out.append(tuple(chosen))
            return
        need, index = plan[i]
        for x in index.get(tuple(X.restrict(bj, chosen[j]) for j, bj in need), ()):
            chosen.append(x)
            go(i + 1)
            chosen.pop()

    go(0)
    return out


def _restriction_index(X: TruncatedDendroidalSet, code: str, gens: Sequence[OmegaMap]) -> dict:
    idx: dict = {}
    for y in X.cells[code]:
        idx.setdefault(tuple(X.restrict(g, y) for g in gens), []).append(y)
    return idx


def horn_generators(code: str, e: str) -> list[OmegaMap]:
    """Canonical faces of the canonical tree ``code`` other than the inner face at ``e``."""
    T = tree_from_code(code)
    if e not in T.inner_edges:
        raise ValueError(f"{e!r} is not an inner edge")
    return [f for f in canonical_faces(code) if (T.edges - set(f.edge_map.values())) != {e}]


def check_inner_kan(X: TruncatedDendroidalSet, D: int | None = None, strict: bool = True,
                    min_degree: int = 2) -> dict:
    """Fill every inner horn of every shape of degree ``min_degree..D``.

    The report lists horns without fillers and (when ``strict``) horns with
    several fillers."""
    D = X.max_degree if D is None else D
    rep = {"ok": True, "horns": 0, "families": 0, "unfilled": [], "multiple": []}
    for code in X.shapes.codes:
        T = X.shapes.tree[code]
        if not (min_degree <= T.degree <= D):
            continue
        for e in sorted(T.inner_edges):
            gens = horn_generators(code, e)
            idx = _restriction_index(X, code, gens)
            rep["horns"] += 1
            for fam in families(X, gens):
                rep["families"] += 1
                n = len(idx.get(fam, ()))
                if n == 0:
                    rep["unfilled"].append({"tree": code, "edge": e, "family": fam})
                elif n > 1 and strict:
                    rep["multiple"].append({"tree": code, "edge": e, "family": fam, "fillers": n})
    rep["ok"] = not rep["unfilled"] and not (strict and rep["multiple"])
    return rep


def _sk_gens(code: str, k: int) -> list[OmegaMap]:
    return subfaces(tree_from_code(code), k)


def check_coskeletal(X: TruncatedDendroidalSet, k: int = 2, D: int | None = None) -> dict:
    """Is ``X -> coSk_k X`` a bijection in degrees ``k+1..D``?  Equivalently
    every map ``Sk_k Omega[T] -> X`` has exactly one extension."""
    D = X.max_degree if D is None else D
    rep = {"ok": True, "shapes": 0, "families": 0, "unfilled": [], "multiple": []}
    for code in X.shapes.codes:
        if not (k < X.shapes.degree(code) <= D):
            continue
        gens = _sk_gens(code, k)
        idx = _restriction_index(X, code, gens)
        rep["shapes"] += 1
        for fam in families(X, gens):
            rep["families"] += 1
            n = len(idx.get(fam, ()))
            if n == 0:
                rep["unfilled"].append({"tree": code, "family": fam})
            elif n > 1:
                rep["multiple"].append({"tree": code, "family": fam, "fillers": n})
        # elements whose restriction is not a family cannot occur, but count them
    rep["ok"] = not rep["unfilled"] and not rep["multiple"]
    return rep


class _Coskeleton(TruncatedDendroidalSet):
    def __init__(self, X: TruncatedDendroidalSet, k: int):
        self.base = X
        self.k = k
        self.gens = {c: _sk_gens(c, k) for c in X.shapes.codes if X.shapes.degree(c) > k}
        cells = {}
        for c in X.shapes.codes:
            if X.shapes.degree(c) <= k:
                cells[c] = X.cells[c]
            else:
                cells[c] = tuple(("fam", f) for f in families(X, self.gens[c]))
        super().__init__(X.shapes, cells, self._act, name=f"coSk{k}({X.name})")

    def _value(self, tc: str, x, gamma: OmegaMap):
        """Restriction of ``x`` along ``gamma`` whose source has degree <= k."""
        if self.shapes.degree(tc) <= self.k:
            return self.base.restrict(gamma, x)
        for g, xg in zip(self.gens[tc], x[1]):
            b = lift(g, gamma)
            if b is not None:
                return self.base.restrict(b, xg)
        raise ValueError("map does not factor through the skeleton")

    def _act(self, alpha: OmegaMap, x):
        tc, rc = canonical_code(alpha.target), canonical_code(alpha.source)
        if self.shapes.degree(rc) <= self.k:
            return self._value(tc, x, alpha)
        return ("fam", tuple(self._value(tc, x, compose(alpha, g)) for g in self.gens[rc]))


def coskeleton(X: TruncatedDendroidalSet, k: int = 2) -> TruncatedDendroidalSet:
    """``coSk_k X``: below degree k it agrees with X; above it, elements of
    shape T are compatible families on ``Sk_k Omega[T]``."""
    return _Coskeleton(X, k)


def coskeleton_unit(X: TruncatedDendroidalSet, C: TruncatedDendroidalSet) -> PresheafMap:
    """The canonical map ``X -> coSk_k X``."""
    comps = {}
    for c in X.shapes.codes:
        if X.shapes.degree(c) <= C.k:
            comps[c] = {x: x for x in X.cells[c]}
        else:
            comps[c] = {x: ("fam", tuple(X.restrict(g, x) for g in C.gens[c])) for x in X.cells[c]}
    return PresheafMap(X, C, comps)


def skeleton(X: TruncatedDendroidalSet, k: int) -> SubPresheaf:
    """Sub-presheaf generated by the elements of degree <= k."""
    shp = X.shapes
    low = [c for c in shp.codes if shp.degree(c) <= k]
    cells = {}
    for rc in shp.codes:
        found = set()
        for sc in low:
            for a in shp.hom(rc, sc):
                for z in X.cells[sc]:
                    found.add(X.restrict(a, z))
        cells[rc] = tuple(x for x in X.cells[rc] if x in found)
    return SubPresheaf(X, cells, f"Sk{k}({X.name})")


def remove_dendrices(X: TruncatedDendroidalSet, code: str, drop: Iterable) -> SubPresheaf:
    """Delete elements of shape ``code`` together with everything restricting
    onto them, so the result is again a presheaf."""
    shp = X.shapes
    gone = {c: set() for c in shp.codes}
    gone[code] |= set(drop)
    changed = True
    while changed:
        changed = False
        for kind, g in shp.generators():
            S, T = canonical_code(g.source), canonical_code(g.target)
            for x in X.cells[T]:
                if x not in gone[T] and X.restrict(g, x) in gone[S]:
                    gone[T].add(x)
                    changed = True
    cells = {c: tuple(x for x in X.cells[c] if x not in gone[c]) for c in shp.codes}
    return SubPresheaf(X, cells, f"{X.name} minus {len(gone[code])} at {code}")


# ---------------------------------------------------------------------------
# presheaf maps

def enumerate_presheaf_maps(X: TruncatedDendroidalSet, Y: TruncatedDendroidalSet,
                            limit: int | None = None) -> list[PresheafMap]:
    """All natural transformations ``X -> Y`` by backtracking over elements in
    order of increasing degree, pruned by every generator whose other end is
    already assigned."""
    shp = X.shapes
    if Y.shapes != shp:
        raise ValueError("presheaves live on different truncations")
    slots = [(c, x) for c in shp.codes for x in X.cells[c]]
    into: dict = {c: [] for c in shp.codes}     # generators g: S -> T with T = c
    outof: dict = {c: [] for c in shp.codes}    # generators g: c -> S
    for kind, g in shp.generators():
        S, T = canonical_code(g.source), canonical_code(g.target)
        into[T].append((S, g))
        outof[S].append((T, g))
    pre: dict = {}
    for c in shp.codes:
        for T, g in outof[c]:
            for z in X.cells[T]:
                pre.setdefault((c, X.restrict(g, z)), []).append((T, g, z))
    f: dict = {}
    out = []

    def ok(c, x, y):
        for S, g in into[c]:
            z = X.restrict(g, x)
            if (S, z) in f and f[(S, z)] != Y.restrict(g, y):
                return False
        for T, g, z in pre.get((c, x), ()):
            if (T, z) in f and y != Y.restrict(g, f[(T, z)]):
                return False
        return True

    def go(k):
        if limit is not None and len(out) >= limit:
            return
        if k == len(slots):
            comps = {c: {} for c in shp.codes}
            for (c, x), y in f.items():
                comps[c][x] = y
            out.append(PresheafMap(X, Y, comps))
            return
        c, x = slots[k]
        for y in Y.cells[c]:
            if ok(c, x, y):
                f[(c, x)] = y
                go(k + 1)
                del f[(c, x)]

    go(0)
    return out


def yoneda_map(X: TruncatedDendroidalSet, code: str, x) -> PresheafMap:
    """The map ``Omega[T] -> X`` classifying ``x in X_T``."""
    rep = representable(X.shapes.tree[code], X.shapes.max_degree, X.shapes.max_edges)
    comps = {c: {g: X.restrict(g, x) for g in v} for c, v in rep.cells.items()}
    return PresheafMap(rep, X, comps)


# ---------------------------------------------------------------------------
# simplicial restriction

class TruncatedSimplicialSet:
    """Levels ``0..N`` with face and degeneracy operators."""

    def __init__(self, levels: Sequence[Sequence], face: Callable, degen: Callable, name: str = "S"):
        self.levels = [tuple(l) for l in levels]
        self._face = face
        self._degen = degen
        self.name = name

    @property
    def dim(self):
        return len(self.levels) - 1

    def face(self, n: int, i: int, x):
        """``d_i`` of ``x`` in level ``n``."""
        return self._face(n, i, x)

    def degen(self, n: int, i: int, x):
        return self._degen(n, i, x)

    def sizes(self) -> list[int]:
        return [len(l) for l in self.levels]

    def check_identities(self) -> list[str]:
        errs = []
        N = self.dim
        for n in range(2, N + 1):
            for x in self.levels[n]:
                for i in range(n + 1):
                    for j in range(i + 1, n + 1):
                        if self.face(n - 1, i, self.face(n, j, x)) != self.face(n - 1, j - 1, self.face(n, i, x)):
                            errs.append(f"d{i}d{j} != d{j - 1}d{i} at {x!r}")
        for n in range(0, N):
            for x in self.levels[n]:
                for i in range(n + 1):
                    s = self.degen(n, i, x)
                    if self.face(n + 1, i, s) != x or self.face(n + 1, i + 1, s) != x:
                        errs.append(f"d s{i} != id at {x!r}")
        return errs

    def horns(self, n: int, k: int):
        """Compatible families ``(y_i)_{i != k}`` in level n-1."""
        idx = [i for i in range(n + 1) if i != k]
        out = []

        def go(p, chosen):
            if p == len(idx):
                out.append(tuple(chosen))
                return
            j = idx[p]
            for y in self.levels[n - 1]:
                good = True
                for q in range(p):
                    i = idx[q]
                    if self.face(n - 1, i, y) != self.face(n - 1, j - 1, chosen[q]):
                        good = False
                        break
                if good:
                    go(p + 1, chosen + [y])

        go(0, [])
        return out

    def check_inner_kan(self, strict: bool = True) -> dict:
        rep = {"ok": True, "horns": 0, "unfilled": [], "multiple": []}
        for n in range(2, self.dim + 1):
            for k in range(1, n):
                idx = {}
                for x in self.levels[n]:
                    key = tuple(self.face(n, i, x) for i in range(n + 1) if i != k)
                    idx.setdefault(key, []).append(x)
                for h in self.horns(n, k):
                    rep["horns"] += 1
                    m = len(idx.get(h, ()))
                    if m == 0:
                        rep["unfilled"].append((n, k, h))
                    elif m > 1 and strict:
                        rep["multiple"].append((n, k, h, m))
        rep["ok"] = not rep["unfilled"] and not (strict and rep["multiple"])
        return rep

    def homotopy_category(self) -> tuple[FinCat, dict]:
        """The homotopy category of a (truncated, dim >= 3) quasi-category.

        Edges ``f, g`` are identified when a 2-simplex has boundary
        ``(s0 d0 f, g, f)``; composites come from 2-simplices.  Returns the
        category (morphisms named by integers) and the edge -> morphism map."""
        if self.dim < 2:
            raise ValueError("need simplices up to dimension 2")
        X0, X1, X2 = self.levels[0], self.levels[1], self.levels[2]
        parent = {f: f for f in X1}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for s in X2:
            f, g = self.face(2, 2, s), self.face(2, 1, s)
            if self.face(2, 0, s) == self.degen(0, 0, self.face(1, 0, f)):
                parent[find(g)] = find(f)
        classes = sorted({find(f) for f in X1}, key=X1.index)
        num = {r: i for i, r in enumerate(classes)}
        cls = {f: num[find(f)] for f in X1}
        mors = {cls[f]: (self.face(1, 1, f), self.face(1, 0, f)) for f in X1}
        ids = {a: cls[self.degen(0, 0, a)] for a in X0}
        comp = {}
        for s in X2:
            f, g, h = self.face(2, 2, s), self.face(2, 0, s), self.face(2, 1, s)
            key = (cls[g], cls[f])
            if comp.setdefault(key, cls[h]) != cls[h]:
                raise ValueError("composition is not well defined; not a quasi-category")
        return FinCat(X0, mors, ids, comp, name=f"ho({self.name})"), cls


def _simplicial_maps(n: int):
    """Face and degeneracy maps between canonical linear trees.

    Vertex ``j`` of ``[n]`` is the edge at height ``n - j`` above the root,
    so vertex 0 is the leaf and vertex n the root."""
    def edge(T, n, j):
        e = T.root
        for _ in range(n - j):
            e = T.ins(e)[0]
        return e

    faces = {}
    degens = {}
    for m in range(1, n + 1):
        T, S = tree_from_code(linear_code(m)), tree_from_code(linear_code(m - 1))
        for i in range(m + 1):
            em = {edge(S, m - 1, j): edge(T, m, j if j < i else j + 1) for j in range(m)}
            faces[(m, i)] = OmegaMap(S, T, em)
    for m in range(0, n):
        T, U = tree_from_code(linear_code(m)), tree_from_code(linear_code(m + 1))
        for i in range(m + 1):
            em = {edge(U, m + 1, j): edge(T, m, j if j <= i else j - 1) for j in range(m + 2)}
            degens[(m, i)] = OmegaMap(U, T, em)
    return faces, degens


def simplicial_restriction(X: TruncatedDendroidalSet, N: int | None = None) -> TruncatedSimplicialSet:
    """``i* X``: restriction along ``[n] -> L_n`` for ``n <= N``."""
    N = X.max_degree if N is None else N
    N = min(N, X.max_degree, X.shapes.max_edges - 1)
    faces, degens = _simplicial_maps(N)
    levels = [X.cells[linear_code(n)] for n in range(N + 1)]
    return TruncatedSimplicialSet(
        levels,
        lambda n, i, x: X.restrict(faces[(n, i)], x),
        lambda n, i, x: X.restrict(degens[(n, i)], x),
        name=f"i*{X.name}",
    )
