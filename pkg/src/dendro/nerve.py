"""Dendroidal nerves of finite operads.

A dendrex of shape T is an operad map ``Omega(T) -> P``, stored as a
:class:`FreeOperadMap` (edge colours plus one operation per vertex).
Restriction along ``alpha: R -> T`` composes the generator images over the
subtree each vertex of R is sent to.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .dsets import (
    DEFAULT_DEGREE,
    DEFAULT_EDGES,
    PresheafMap,
    TruncatedDendroidalSet,
    shapes,
)
from .fincat import FinCat
from .omega import UNIT, OmegaMap
from .operads import (
    FiniteOperad,
    FreeOperadMap,
    bv_tensor_asA_c1,
    evaluate,
    free_maps,
    tensor_inclusions,
    tensor_projection_asA,
)

__all__ = [
    "dendroidal_nerve",
    "nerve_of_tensor",
    "induced_map",
    "CategoryOperad",
    "category_operad",
    "tensor_projection_map",
    "tensor_inclusion_maps",
]


def _restrict(P: FiniteOperad, alpha: OmegaMap, x: FreeOperadMap) -> FreeOperadMap:
    R, T = alpha.source, alpha.target
    em = alpha.edge_map
    colour = {r: x.colour[em[r]] for r in R.edges}
    gen = {}
    for w, img in alpha.vertex_images.items():
        if img is UNIT:
            gen[w] = P.unit(colour[w])
        else:
            vs, leaves = img
            gen[w] = evaluate(P, T, x.colour, x.gen, vs, em[w], leaves)
    return FreeOperadMap(R, colour, gen)


def dendroidal_nerve(P: FiniteOperad, D: int = DEFAULT_DEGREE, max_edges: int = DEFAULT_EDGES,
                     name: str | None = None) -> TruncatedDendroidalSet:
    """``N_d(P)`` on the truncation (D, max_edges)."""
    shp = shapes(D, max_edges)
    cells = {c: tuple(free_maps(shp.tree[c], P)) for c in shp.codes}
    label = name or getattr(P, "name", None) or type(P).__name__
    X = TruncatedDendroidalSet(shp, cells, lambda a, x: _restrict(P, a, x), name=f"N({label})")
    X.operad = P
    return X


def induced_map(X: TruncatedDendroidalSet, Y: TruncatedDendroidalSet, colour: Callable,
                op: Callable) -> PresheafMap:
    """The presheaf map ``N_d(P) -> N_d(Q)`` of an operad map given by a
    colour function and ``op(signature, operation)``."""
    comps = {}
    for c, v in X.cells.items():
        d = {}
        for x in v:
            T = x.tree
            d[x] = FreeOperadMap(T, {e: colour(k) for e, k in x.colour.items()},
                                 {w: op(x.sig(w), f) for w, f in x.gen.items()})
        comps[c] = d
    return PresheafMap(X, Y, comps)


def nerve_of_tensor(A: Iterable, D: int = DEFAULT_DEGREE, max_edges: int = DEFAULT_EDGES) -> TruncatedDendroidalSet:
    """The nerve of ``As_A (x) Omega(C1)``, which computes
    ``N_d(As_A) (x) Omega[C1]``."""
    P = bv_tensor_asA_c1(A)
    return dendroidal_nerve(P, D, max_edges, name=f"{P.name}")


def tensor_projection_map(A: Iterable, X: TruncatedDendroidalSet | None = None,
                          Y: TruncatedDendroidalSet | None = None) -> PresheafMap:
    """``N_d(As_A (x) Omega(C1)) -> N_d(As_A)``."""
    src, tgt, colour, op = tensor_projection_asA(A)
    X = X or dendroidal_nerve(src)
    Y = Y or dendroidal_nerve(tgt, X.shapes.max_degree, X.shapes.max_edges)
    return induced_map(X, Y, colour, op)


def tensor_inclusion_maps(A: Iterable, X: TruncatedDendroidalSet | None = None) -> list[PresheafMap]:
    """The level inclusions of ``N_d(As_A)`` and the colour inclusions of
    ``Omega[C1] = N_d(Omega(C1))`` into the tensor nerve."""
    out = []
    for src, tgt, colour, op in tensor_inclusions(A):
        Y = X or dendroidal_nerve(tgt)
        S = dendroidal_nerve(src, Y.shapes.max_degree, Y.shapes.max_edges)
        out.append(induced_map(S, Y, colour, op))
    return out


class CategoryOperad(FiniteOperad):
    """A category viewed as an operad with only unary operations."""

    def __init__(self, C: FinCat):
        self.category = C
        self.colours = tuple(C.objects)
        self.name = C.name or "C"

    def ops(self, inputs, output):
        if len(inputs) != 1:
            return ()
        return tuple(self.category.hom(inputs[0], output))

    def unit(self, c):
        return self.category.id(c)

    def compose(self, sf, f, i, sg, g):
        return self.category.compose(f, g)

    def act(self, sig, f, tau):
        return f


def category_operad(C: FinCat) -> CategoryOperad:
    return CategoryOperad(C)
