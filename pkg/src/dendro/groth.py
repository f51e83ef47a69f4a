"""The dendroidal Grothendieck construction over a finite cartesian base.

A finite category with finite products has at most one arrow between any two
objects (otherwise ``hom(A, B^n)`` would grow with n), so the base is a
finite poset with binary meets (the products) and a top element (the empty
product).  :class:`MeetSemilattice` carries the chosen product table.

An element of ``(int_S X)_T`` is a pair ``(t, x)``: ``t`` a dendrex of
``N_d(S)`` and ``x`` a choice of ``x(r) in X(inn(r* t))_R`` for every
``r: R -> T``, subject to ``a*(x(r)) = X(inn a)(x(r a))``.  Degeneracies and
automorphisms have identity ``inn``, so ``x`` is determined by its values on
one mono per image; those are what we store.
"""

from __future__ import annotations

import json
from typing import Callable, Iterable, Sequence

from .dsets import DEFAULT_DEGREE, PresheafMap, TruncatedDendroidalSet
from .fincat import FinCat, poset_category
from .omega import OmegaMap, canonical_faces, compose, lift, subfaces
from .nerve import _restrict, dendroidal_nerve, induced_map
from .operads import FiniteOperad, asA_map, make_asA
from .trees import canonical_code

__all__ = [
    "MeetSemilattice",
    "chain",
    "CartesianOperad",
    "Diagram",
    "asA_diagram",
    "inn_object",
    "inn_map",
    "groth",
    "Grothendieck",
    "diagram_corpus",
    "uniqueness_chain",
    "DEFAULT_GROTH_EDGES",
]

DEFAULT_GROTH_EDGES = 4


class MeetSemilattice:
    """A finite poset with chosen binary meets and a top element."""

    def __init__(self, elements: Sequence, leq: Callable, name: str = "S"):
        self.elements = tuple(elements)
        self._leq = {(a, b): bool(leq(a, b)) for a in self.elements for b in self.elements}
        self.name = name
        self.meet_table = {}
        for a in self.elements:
            for b in self.elements:
                lower = [c for c in self.elements if self.leq(c, a) and self.leq(c, b)]
                best = [c for c in lower if all(self.leq(d, c) for d in lower)]
                if len(best) != 1:
                    raise ValueError(f"{a!r} and {b!r} have no meet")
                self.meet_table[(a, b)] = best[0]
        tops = [c for c in self.elements if all(self.leq(d, c) for d in self.elements)]
        if len(tops) != 1:
            raise ValueError("no top element (empty product)")
        self.top = tops[0]

    def __repr__(self):
        return f"MeetSemilattice({self.name}: {list(self.elements)})"

    def leq(self, a, b) -> bool:
        return self._leq[(a, b)]

    def meet(self, items: Iterable):
        out = self.top
        for c in items:
            out = self.meet_table[(out, c)]
        return out

    def category(self) -> FinCat:
        C = poset_category(list(self.elements), self.leq)
        C.name = self.name
        return C

    def check(self) -> list[str]:
        """Partial order laws and the universal property of the meets."""
        errs = []
        E = self.elements
        for a in E:
            if not self.leq(a, a):
                errs.append(f"not reflexive at {a!r}")
            for b in E:
                if a != b and self.leq(a, b) and self.leq(b, a):
                    errs.append(f"not antisymmetric at {a!r}, {b!r}")
                for c in E:
                    if self.leq(a, b) and self.leq(b, c) and not self.leq(a, c):
                        errs.append(f"not transitive at {a!r}, {b!r}, {c!r}")
        return errs

    def to_json(self) -> dict:
        return {"name": self.name, "elements": list(self.elements),
                "leq": [[a, b] for a in self.elements for b in self.elements if self.leq(a, b)]}

    @classmethod
    def from_json(cls, data) -> "MeetSemilattice":
        if isinstance(data, str):
            data = json.loads(data)
        rel = {tuple(p) for p in data["leq"]}
        return cls(data["elements"], lambda a, b: (a, b) in rel, data.get("name", "S"))


def chain(n: int) -> MeetSemilattice:
    """``0 < 1 < ... < n-1``; meets are minima, the top is ``n-1``."""
    return MeetSemilattice(list(range(n)), lambda a, b: a <= b, name=f"chain{n}")


class CartesianOperad(FiniteOperad):
    """``S`` as an operad through its products: one operation
    ``(s_1, ..., s_n) -> s`` exactly when ``s_1 x ... x s_n <= s``."""

    def __init__(self, S: MeetSemilattice):
        self.S = S
        self.colours = S.elements
        self.name = S.name

    def ops(self, inputs, output):
        return ("*",) if self.S.leq(self.S.meet(inputs), output) else ()

    def unit(self, c):
        return "*"

    def compose(self, sf, f, i, sg, g):
        return "*"

    def act(self, sig, f, tau):
        return "*"


def inn_object(S: MeetSemilattice, t) -> object:
    """The product of the leaf labels of ``t`` (top for no leaves)."""
    return S.meet(t.colour[l] for l in t.tree.leaves)


def inn_map(S: MeetSemilattice, t, alpha: OmegaMap, restricted=None) -> tuple:
    """The arrow ``inn(t) -> inn(alpha* t)`` as a pair of objects.

    Raises if no such arrow exists (it always does for operad maps)."""
    if restricted is None:
        restricted = _restrict(CartesianOperad(S), alpha, t)
    a, b = inn_object(S, t), inn_object(S, restricted)
    if not S.leq(a, b):
        raise ValueError("no arrow between the inner objects")
    return a, b


class Diagram:
    """A contravariant functor ``S -> truncated dendroidal sets``.

    ``values[s]`` is a presheaf and ``maps[(s, s2)]`` for ``s <= s2`` the
    presheaf map ``X(s2) -> X(s)``."""

    def __init__(self, S: MeetSemilattice, values: dict, maps: dict, name: str = "X"):
        self.S = S
        self.values = values
        self.maps = maps
        self.name = name

    def along(self, s, s2):
        """``X(s <= s2)`` as a function on elements of a given shape."""
        if s == s2:
            return lambda code, x: x
        m = self.maps[(s, s2)]
        return lambda code, x: m.comps[code][x]

    def check(self) -> list[str]:
        errs = []
        S = self.S
        for (s, s2), m in self.maps.items():
            errs += [f"X({s}<={s2}): {e}" for e in m.naturality_failures()]
        for a in S.elements:
            for b in S.elements:
                for c in S.elements:
                    if S.leq(a, b) and S.leq(b, c) and a != b and b != c:
                        ab, bc, ac = self.maps[(a, b)], self.maps[(b, c)], self.maps[(a, c)]
                        for code, d in bc.comps.items():
                            for x, y in d.items():
                                if ab.comps[code][y] != ac.comps[code][x]:
                                    errs.append(f"X is not functorial at {a}<={b}<={c}")
                                    break
        return errs


def asA_diagram(S: MeetSemilattice, sets: dict, funcs: dict, D: int = DEFAULT_DEGREE,
                max_edges: int = DEFAULT_GROTH_EDGES, name: str = "N(As)") -> Diagram:
    """``s -> N_d(As_{A_s})`` with ``funcs[(s, s2)]: A_{s2} -> A_s`` for ``s < s2``."""
    values = {s: dendroidal_nerve(make_asA(sets[s]), D, max_edges) for s in S.elements}
    maps = {}
    for (s, s2), f in funcs.items():
        P, Q, colour, op = asA_map(f, sets[s2], sets[s])
        maps[(s, s2)] = induced_map(values[s2], values[s], colour, op)
    return Diagram(S, values, maps, name)


def diagram_corpus(max_edges: int = DEFAULT_GROTH_EDGES) -> dict[str, Diagram]:
    """Terminal, two-element and three-element chains, valued in nerves."""
    out = {}
    S1 = chain(1)
    out["terminal"] = asA_diagram(S1, {0: "pq"}, {}, max_edges=max_edges)
    S2 = chain(2)
    out["chain2"] = asA_diagram(S2, {0: "pq", 1: "p"}, {(0, 1): {"p": "p"}}, max_edges=max_edges)
    S3 = chain(3)
    out["chain3"] = asA_diagram(
        S3, {0: "pq", 1: "pq", 2: "p"},
        {(0, 1): {"p": "q", "q": "p"}, (1, 2): {"p": "p"}, (0, 2): {"p": "q"}},
        max_edges=max_edges)
    return out


class Grothendieck(TruncatedDendroidalSet):
    """``int_S X`` on the common truncation of the values of X."""

    def __init__(self, diagram: Diagram):
        self.diagram = diagram
        S = diagram.S
        some = next(iter(diagram.values.values()))
        shp = some.shapes
        self.base = dendroidal_nerve(CartesianOperad(S), shp.max_degree, shp.max_edges, name=S.name)
        self.subs = {}
        for c in shp.codes:
            T = shp.tree[c]
            self.subs[c] = [m for k in range(T.degree + 1) for m in subfaces(T, k)]
        cells = {c: tuple(self._elements(c)) for c in shp.codes}
        super().__init__(shp, cells, self._act, name=f"int_{S.name} {diagram.name}")

    def inn(self, t):
        return inn_object(self.diagram.S, t)

    def _constraints(self, code):
        """For each stored mono ``mu`` and each face ``d`` of its source:
        the index of ``nu`` and the map ``b`` with ``mu d = nu b``."""
        subs = self.subs[code]
        out = []
        for i, mu in enumerate(subs):
            cons = []
            M = canonical_code(mu.source)
            if mu.source.degree:
                for d in canonical_faces(M):
                    md = compose(mu, d)
                    for j, nu in enumerate(subs):
                        b = lift(nu, md)
                        if b is not None and nu.source.degree == md.source.degree:
                            cons.append((d, j, b))
                            break
            out.append(cons)
        return out

    def _elements(self, code):
        X = self.diagram
        subs = self.subs[code]
        cons = self._constraints(code)
        out = []
        for t in self.base.cells[code]:
            inns = [self.inn(self.base.restrict(mu, t)) for mu in subs]
            chosen: list = []

            def go(i):
                if i == len(subs):
                    out.append((t, tuple(chosen)))
                    return
                mu = subs[i]
                M = canonical_code(mu.source)
                Xi = X.values[inns[i]]
                for x in Xi.cells[M]:
                    good = True
                    for d, j, b in cons[i]:
                        # d*(x_mu) = X(inn d)(b*(x_nu))
                        lhs = Xi.restrict(d, x)
                        y = X.values[inns[j]].restrict(b, chosen[j])
                        if lhs != X.along(inns[i], inns[j])(canonical_code(d.source), y):
                            good = False
                            break
                    if good:
                        chosen.append(x)
                        go(i + 1)
                        chosen.pop()

            go(0)
        return out

    def _act(self, delta: OmegaMap, elem):
        t, xs = elem
        R = canonical_code(delta.source)
        T = canonical_code(delta.target)
        t2 = self.base.restrict(delta, t)
        subsT = self.subs[T]
        new = []
        for mu in self.subs[R]:
            dm = compose(delta, mu)
            for j, nu in enumerate(subsT):
                b = lift(nu, dm)
                if b is not None:
                    s = self.inn(self.base.restrict(nu, t))
                    new.append(self.diagram.values[s].restrict(b, xs[j]))
                    break
            else:
                raise ValueError("no stored mono covers the image")
        return (t2, tuple(new))

    def projection(self) -> PresheafMap:
        """``int_S X -> N_d(S)``."""
        return PresheafMap(self, self.base, {c: {e: e[0] for e in v} for c, v in self.cells.items()})

    def top_component(self, code, elem):
        """``x(id_T)``."""
        subs = self.subs[code]
        T = self.shapes.tree[code]
        for i, mu in enumerate(subs):
            if mu.source.degree == T.degree and all(a == b for a, b in mu.edge_map.items()):
                return elem[1][i]
        raise ValueError("identity not among stored monos")


def groth(diagram: Diagram) -> Grothendieck:
    return Grothendieck(diagram)


def uniqueness_chain(G: Grothendieck, k: int = 2) -> dict:
    """Replay the coskeletality argument: elements with the same restriction
    to ``Sk_k`` have equal ``t`` (coskeletality of ``N_d(S)``) and then equal
    ``x`` (componentwise coskeletality of the values)."""
    report = {"pairs": 0, "t_equal": 0, "x_equal": 0}
    for code in G.shapes.codes:
        if G.shapes.degree(code) <= k:
            continue
        gens = subfaces(G.shapes.tree[code], k)
        groups: dict = {}
        for e in G.cells[code]:
            groups.setdefault(tuple(G.restrict(g, e) for g in gens), []).append(e)
        for els in groups.values():
            for a in els:
                for b in els:
                    report["pairs"] += 1
                    if a[0] == b[0]:
                        report["t_equal"] += 1
                        if a[1] == b[1]:
                            report["x_equal"] += 1
    report["ok"] = report["pairs"] == report["t_equal"] == report["x_equal"]
    return report
