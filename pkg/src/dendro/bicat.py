"""Finite bicategories, their homomorphisms, and the dendrices they define.

Three layers:

* :class:`ClassicalBicategory` and :class:`ClassicalHom`: binary composition,
  units, associator and unitors, checked against the pentagon, triangle,
  hexagon and unit squares.
* :class:`UnbiasedBicategory` and :class:`UnbiasedHom`: an n-ary composition
  functor for every composable sequence of length ``n <= N``, with
  isomorphisms relating ``Psi_sigma o_i Psi_rho`` and ``Psi_{sigma o_i rho}``.
* :class:`LevelRecord`: a map from the nerve of ``As_A (x) Omega(L_k)`` into
  categories, listed by signature.  Its colours are pairs ``((a, b), l)``
  with a level ``l`` in ``0..k``; an operation exists exactly when the
  pairs chain up and the output level is at most every input level.
  ``k = 0`` gives a :class:`VertexDendrex`, ``k = 1`` the ``y_f`` part of an
  :class:`EdgeDendrex`, and ``k = 2`` a left homotopy witness.

Record isomorphisms point from the composite's functor to the composite of
functors, ``Psi_{sigma o_i rho} => Psi_sigma o_i Psi_rho``; the unbiased
bicategory stores them the other way round.
"""

from __future__ import annotations

import itertools
import json
from typing import Iterable, NamedTuple, Sequence

from .fincat import (
    FinCat,
    MultiFunctor,
    _dec,
    _enc,
    chain_poset,
    discrete,
    enumerate_functors,
    indiscrete,
    monoid_category,
    product_cat,
)

__all__ = [
    "DEFAULT_ARITY",
    "Sig",
    "compose_sig",
    "all_signatures",
    "ClassicalBicategory",
    "ClassicalHom",
    "strict_bicategory",
    "validate_classical",
    "validate_classical_hom",
    "identity_classical_hom",
    "UnbiasedBicategory",
    "UnbiasedHom",
    "classical_to_unbiased",
    "validate_unbiased",
    "validate_hom",
    "identity_hom",
    "compose_homs",
    "enumerate_homs",
    "enumerate_unbiased",
    "LevelRecord",
    "VertexDendrex",
    "EdgeDendrex",
    "phi_object",
    "unbiased_from_vertex",
    "phi_hom",
    "recover_hom",
    "degenerate_edge",
    "enumerate_vertex_dendrices",
    "enumerate_edge_dendrices",
    "left_homotopic",
    "homotopy_category",
    "bicat_corpus",
    "pentagon_mutant",
]

DEFAULT_ARITY = 4


# ---------------------------------------------------------------------------
# signatures

class Sig(NamedTuple):
    """``objs = (a_1, ..., a_{n+1})`` (just ``(a,)`` when nullary), one level
    per input and an output level."""
    objs: tuple
    levels: tuple
    out: int

    @property
    def arity(self) -> int:
        return len(self.levels)

    def colour_in(self, j):
        return ((self.objs[j], self.objs[j + 1]), self.levels[j])

    def colour_out(self):
        return ((self.objs[0], self.objs[-1]), self.out)

    @property
    def is_unit(self) -> bool:
        return self.arity == 1 and self.levels[0] == self.out

    def relabel(self, m) -> "Sig":
        return Sig(self.objs, tuple(m[l] for l in self.levels), m[self.out])

    def along(self, f) -> "Sig":
        return Sig(tuple(f[a] for a in self.objs), self.levels, self.out)


def compose_sig(s: Sig, i: int, r: Sig) -> Sig | None:
    """``s o_i r``, or None when the colours do not match."""
    if r.out != s.levels[i] or r.objs[0] != s.objs[i] or r.objs[-1] != s.objs[i + 1]:
        return None
    if r.arity == 0:
        objs = s.objs[:i + 1] + s.objs[i + 2:]
    else:
        objs = s.objs[:i] + r.objs + s.objs[i + 2:]
    return Sig(objs, s.levels[:i] + r.levels + s.levels[i + 1:], s.out)


def all_signatures(objects: Sequence, top: int, N: int) -> list[Sig]:
    out = []
    for n in range(N + 1):
        for objs in itertools.product(objects, repeat=max(n + 1, 1) if n else 1):
            if n == 0:
                objs = (objs[0],)
            for lo in range(top + 1):
                for levels in itertools.product(range(lo, top + 1), repeat=n):
                    out.append(Sig(tuple(objs), tuple(levels), lo))
    return out


def _composites(sigs: Iterable[Sig], N: int) -> list[tuple]:
    by_ends: dict = {}
    sigs = list(sigs)
    for r in sigs:
        by_ends.setdefault((r.objs[0], r.objs[-1], r.out), []).append(r)
    out = []
    for s in sigs:
        for i in range(s.arity):
            for r in by_ends.get((s.objs[i], s.objs[i + 1], s.levels[i]), ()):
                if s.arity + r.arity - 1 <= N:
                    out.append((s, i, r))
    return out


def _triples(keys: set) -> list[tuple]:
    """Instances of the two degree-3 coherence squares whose four
    isomorphisms are all among ``keys``."""
    by_sigma: dict = {}
    for s, i, r in keys:
        by_sigma.setdefault(s, []).append((i, r))
    out = []
    for s, i, r in keys:
        c = compose_sig(s, i, r)
        for j, t in by_sigma.get(r, ()):
            k1 = (c, i + j, t)
            k2 = (s, i, compose_sig(r, j, t))
            if k1 in keys and k2 in keys:
                out.append(("seq", s, i, r, j, t))
        for j, t in by_sigma.get(s, ()):
            if j <= i:
                continue
            k1 = (c, j + r.arity - 1, t)
            k2 = (compose_sig(s, j, t), i, r)
            if k1 in keys and k2 in keys:
                out.append(("par", s, i, r, j, t))
    return out


def _triple_keys(tr) -> list:
    kind, s, i, r, j, t = tr
    c = compose_sig(s, i, r)
    if kind == "seq":
        return [(s, i, r), (c, i + j, t), (s, i, compose_sig(r, j, t)), (r, j, t)]
    return [(s, i, r), (c, j + r.arity - 1, t), (compose_sig(s, j, t), i, r), (s, j, t)]


# ---------------------------------------------------------------------------
# small helpers on functor tables

def _same(C: FinCat, D: FinCat) -> bool:
    return C is D or C == D


def _ids(cats, xs) -> tuple:
    return tuple(c.id(x) for c, x in zip(cats, xs))


def _cobj(P: MultiFunctor, i: int, Q: MultiFunctor, x: tuple):
    m = Q.arity
    return P.obj[x[:i] + (Q.obj[x[i:i + m]],) + x[i + m:]]


def _cmor(P: MultiFunctor, i: int, Q: MultiFunctor, f: tuple):
    m = Q.arity
    return P.mor[f[:i] + (Q.mor[f[i:i + m]],) + f[i + m:]]


def _functor(cats: Sequence[FinCat], target: FinCat, fobj, fmor) -> MultiFunctor:
    cats = tuple(cats)
    obj = {x: fobj(x) for x in itertools.product(*(c.objects for c in cats))}
    mor = {f: fmor(f) for f in itertools.product(*(list(c.morphisms) for c in cats))}
    return MultiFunctor(tuple(range(len(cats))), cats, target, obj, mor)


def _as_multi(F, cats) -> MultiFunctor:
    return MultiFunctor(tuple(range(len(cats))), cats, F.target, F.obj, F.mor)


def _all_functors(cats: Sequence[FinCat], target: FinCat) -> list[MultiFunctor]:
    cats = tuple(cats)
    return [_as_multi(F, cats) for F in enumerate_functors(product_cat(list(cats)), target)]


def _nat_failures(T: FinCat, F: MultiFunctor, gobj, gmor, comps: dict, iso=True) -> list[str]:
    errs = []
    for x in F.domain_objects():
        m = comps.get(x)
        if m is None or T.morphisms.get(m) != (F.obj[x], gobj(x)):
            errs.append(f"component at {x!r} has wrong type")
        elif iso and not T.is_iso(m):
            errs.append(f"component at {x!r} is not invertible")
    if errs:
        return errs
    for f in F.domain_morphisms():
        src = tuple(c.src(m) for c, m in zip(F.cats, f))
        tgt = tuple(c.tgt(m) for c, m in zip(F.cats, f))
        if T.compose(comps[tgt], F.mor[f]) != T.compose(gmor(f), comps[src]):
            errs.append(f"naturality fails at {f!r}")
    return errs


def _iso_families(F: MultiFunctor, gobj, gmor) -> list[dict]:
    """All natural isomorphisms from F to the functor given by gobj/gmor."""
    T = F.target
    objs = list(F.domain_objects())
    pos = {x: k for k, x in enumerate(objs)}
    checks: list[list] = [[] for _ in objs]
    for f in F.domain_morphisms():
        src = tuple(c.src(m) for c, m in zip(F.cats, f))
        tgt = tuple(c.tgt(m) for c, m in zip(F.cats, f))
        checks[max(pos[src], pos[tgt])].append((f, src, tgt, F.mor[f], gmor(f)))
    choices = [[m for m in T.hom(F.obj[x], gobj(x)) if T.is_iso(m)] for x in objs]
    out = []
    comps: dict = {}

    def go(k):
        if k == len(objs):
            out.append(dict(comps))
            return
        for m in choices[k]:
            comps[objs[k]] = m
            if all(T.compose(comps[t], fm) == T.compose(gm, comps[s]) for _, s, t, fm, gm in checks[k]):
                go(k + 1)
        comps.pop(objs[k], None)

    go(0)
    return out


def _functors_iso_to(P: MultiFunctor) -> list[MultiFunctor]:
    """Every functor naturally isomorphic to P (conjugates of P)."""
    T = P.target
    objs = list(P.domain_objects())
    choices = [[m for m in T.morphisms if T.src(m) == P.obj[x] and T.is_iso(m)] for x in objs]
    seen = {}
    for pick in itertools.product(*choices):
        c = dict(zip(objs, pick))
        obj = {x: T.tgt(c[x]) for x in objs}
        mor = {}
        for f in P.domain_morphisms():
            src = tuple(k.src(m) for k, m in zip(P.cats, f))
            tgt = tuple(k.tgt(m) for k, m in zip(P.cats, f))
            mor[f] = T.compose(c[tgt], T.compose(P.mor[f], T.inverse(c[src])))
        H = MultiFunctor(P.inputs, P.cats, T, obj, mor)
        seen.setdefault(H.key(), H)
    return list(seen.values())


class _CatTable:
    """Deduplicated category list for JSON output."""

    def __init__(self):
        self.ids: dict = {}
        self.items: list = []

    def ref(self, C: FinCat) -> int:
        if id(C) not in self.ids:
            for k, D in enumerate(self.items):
                if D == C:
                    self.ids[id(C)] = k
                    break
            else:
                self.ids[id(C)] = len(self.items)
                self.items.append(C)
        return self.ids[id(C)]

    def to_json(self):
        return [C.to_json() for C in self.items]


def _comps_json(comps: dict) -> list:
    return [[_enc(k), _enc(v)] for k, v in sorted(comps.items(), key=repr)]


def _comps_from(data) -> dict:
    return {tuple(_dec(k)) if isinstance(k, list) else k: _dec(v) for k, v in data}


def _sig_json(s: Sig) -> list:
    return [_enc(s.objs), list(s.levels), s.out]


def _sig_from(d) -> Sig:
    return Sig(tuple(_dec(a) for a in d[0]), tuple(d[1]), d[2])


# ---------------------------------------------------------------------------
# classical bicategories

class ClassicalBicategory:
    """Objects, hom categories, binary composition ``comp[(a, b, c)]`` with
    inputs ``(f: a -> b, g: b -> c)``, units, and the constraint cells

    * ``assoc[(a, b, c, d)][(f, g, h)]: psi(f, psi(g, h)) -> psi(psi(f, g), h)``
    * ``lunit[(a, b)][f]: psi(f, Id_b) -> f``
    * ``runit[(a, b)][f]: psi(Id_a, f) -> f``
    """

    def __init__(self, objects, hom: dict, comp: dict, unit: dict, assoc: dict, lunit: dict,
                 runit: dict, name: str = "B"):
        self.objects = tuple(objects)
        self.hom = dict(hom)
        self.comp = dict(comp)
        self.unit = dict(unit)
        self.assoc = dict(assoc)
        self.lunit = dict(lunit)
        self.runit = dict(runit)
        self.name = name

    def __repr__(self):
        return f"ClassicalBicategory({self.name}: {len(self.objects)} objects)"

    def psi(self, a, b, c, x, y):
        return self.comp[(a, b, c)].obj[(x, y)]

    def psi_mor(self, a, b, c, m, n):
        return self.comp[(a, b, c)].mor[(m, n)]

    def triples(self):
        return itertools.product(self.objects, repeat=3)

    def to_json(self) -> dict:
        cats = _CatTable()
        hom = [[_enc(k), cats.ref(C)] for k, C in self.hom.items()]
        return {
            "kind": "classical_bicategory",
            "name": self.name,
            "objects": [_enc(a) for a in self.objects],
            "hom": hom,
            "composition": [[_enc(k), F.to_json()] for k, F in self.comp.items()],
            "unit": [[_enc(a), _enc(u)] for a, u in self.unit.items()],
            "assoc": [[_enc(k), _comps_json(v)] for k, v in self.assoc.items()],
            "lunit": [[_enc(k), _comps_json(v)] for k, v in self.lunit.items()],
            "runit": [[_enc(k), _comps_json(v)] for k, v in self.runit.items()],
            "categories": cats.to_json(),
        }

    @classmethod
    def from_json(cls, data) -> "ClassicalBicategory":
        if isinstance(data, str):
            data = json.loads(data)
        cats = [FinCat.from_json(c) for c in data["categories"]]
        hom = {tuple(_dec(k)): cats[i] for k, i in data["hom"]}
        comp = {}
        for k, F in data["composition"]:
            a, b, c = _dec(k)
            comp[(a, b, c)] = MultiFunctor.from_json(F, [hom[(a, b)], hom[(b, c)]], hom[(a, c)])
        return cls([_dec(a) for a in data["objects"]], hom, comp,
                   {_dec(a): _dec(u) for a, u in data["unit"]},
                   {tuple(_dec(k)): _comps_from(v) for k, v in data["assoc"]},
                   {tuple(_dec(k)): _comps_from(v) for k, v in data["lunit"]},
                   {tuple(_dec(k)): _comps_from(v) for k, v in data["runit"]},
                   data.get("name", "B"))


def strict_bicategory(objects, hom: dict, comp_obj, comp_mor, unit: dict, name: str = "B") -> ClassicalBicategory:
    """A bicategory with identity constraint cells.  ``comp_obj(a, b, c, x, y)``
    and ``comp_mor(a, b, c, m, n)`` give the composite of ``x: a -> b`` and
    ``y: b -> c``."""
    objects = tuple(objects)
    comp = {}
    for a, b, c in itertools.product(objects, repeat=3):
        comp[(a, b, c)] = _functor([hom[(a, b)], hom[(b, c)]], hom[(a, c)],
                                   lambda x, a=a, b=b, c=c: comp_obj(a, b, c, *x),
                                   lambda f, a=a, b=b, c=c: comp_mor(a, b, c, *f))
    B = ClassicalBicategory(objects, hom, comp, unit, {}, {}, {}, name)
    for a, b, c, d in itertools.product(objects, repeat=4):
        B.assoc[(a, b, c, d)] = {
            (f, g, h): hom[(a, d)].id(B.psi(a, b, d, f, B.psi(b, c, d, g, h)))
            for f in hom[(a, b)].objects for g in hom[(b, c)].objects for h in hom[(c, d)].objects}
    for a, b in itertools.product(objects, repeat=2):
        B.lunit[(a, b)] = {f: hom[(a, b)].id(f) for f in hom[(a, b)].objects}
        B.runit[(a, b)] = {f: hom[(a, b)].id(f) for f in hom[(a, b)].objects}
    return B


def validate_classical(B: ClassicalBicategory) -> list[str]:
    """Typing, naturality, invertibility, pentagon and triangle."""
    errs = []
    O = B.objects
    for key, C in B.hom.items():
        errs += [f"hom{key}: {e}" for e in C.validate()]
    for a, b, c in B.triples():
        F = B.comp.get((a, b, c))
        if F is None:
            errs.append(f"missing composition at {(a, b, c)!r}")
            continue
        if not (_same(F.cats[0], B.hom[(a, b)]) and _same(F.cats[1], B.hom[(b, c)])
                and _same(F.target, B.hom[(a, c)])):
            errs.append(f"composition at {(a, b, c)!r} has wrong type")
            continue
        errs += [f"composition {(a, b, c)!r}: {e}" for e in F.validate()]
    for a in O:
        if B.unit.get(a) not in B.hom[(a, a)].objects:
            errs.append(f"unit at {a!r} is not a 1-cell")
    if errs:
        return errs
    for a, b, c, d in itertools.product(O, repeat=4):
        left = B.comp[(a, b, d)].compose_at(1, B.comp[(b, c, d)])
        right = B.comp[(a, c, d)].compose_at(0, B.comp[(a, b, c)])
        errs += [f"associator {(a, b, c, d)!r}: {e}" for e in _nat_failures(
            B.hom[(a, d)], left, lambda x: right.obj[x], lambda f: right.mor[f], B.assoc.get((a, b, c, d), {}))]
    for a, b in itertools.product(O, repeat=2):
        C = B.hom[(a, b)]
        one = MultiFunctor.identity(C)
        for name, cells, inner in (("left unitor", B.lunit, B.comp[(a, b, b)].compose_at(1, MultiFunctor.constant(B.hom[(b, b)], B.unit[b]))),
                                   ("right unitor", B.runit, B.comp[(a, a, b)].compose_at(0, MultiFunctor.constant(B.hom[(a, a)], B.unit[a])))):
            comps = {(f,): m for f, m in cells.get((a, b), {}).items()}
            errs += [f"{name} {(a, b)!r}: {e}" for e in _nat_failures(
                C, inner, lambda x: one.obj[x], lambda f: one.mor[f], comps)]
    if errs:
        return errs
    for a1, a2, a3, a4, a5 in itertools.product(O, repeat=5):
        H = B.hom
        for f, g, h, k in itertools.product(H[(a1, a2)].objects, H[(a2, a3)].objects,
                                            H[(a3, a4)].objects, H[(a4, a5)].objects):
            C = H[(a1, a5)]
            hk = B.psi(a3, a4, a5, h, k)
            fg = B.psi(a1, a2, a3, f, g)
            gh = B.psi(a2, a3, a4, g, h)
            p1 = C.compose(B.assoc[(a1, a3, a4, a5)][(fg, h, k)], B.assoc[(a1, a2, a3, a5)][(f, g, hk)])
            s1 = B.psi_mor(a1, a2, a5, H[(a1, a2)].id(f), B.assoc[(a2, a3, a4, a5)][(g, h, k)])
            s2 = B.assoc[(a1, a2, a4, a5)][(f, gh, k)]
            s3 = B.psi_mor(a1, a4, a5, B.assoc[(a1, a2, a3, a4)][(f, g, h)], H[(a4, a5)].id(k))
            p2 = C.compose(s3, C.compose(s2, s1))
            if p1 != p2:
                errs.append(f"pentagon fails at {(f, g, h, k)!r} over {(a1, a2, a3, a4, a5)!r}")
    for a1, a2, a3 in B.triples():
        H = B.hom
        for f, g in itertools.product(H[(a1, a2)].objects, H[(a2, a3)].objects):
            C = H[(a1, a3)]
            u = B.unit[a2]
            p1 = C.compose(B.psi_mor(a1, a2, a3, B.lunit[(a1, a2)][f], H[(a2, a3)].id(g)),
                           B.assoc[(a1, a2, a2, a3)][(f, u, g)])
            p2 = B.psi_mor(a1, a2, a3, H[(a1, a2)].id(f), B.runit[(a2, a3)][g])
            if p1 != p2:
                errs.append(f"triangle fails at {(f, g)!r} over {(a1, a2, a3)!r}")
    return errs


class ClassicalHom:
    """``(F, f)`` with ``theta[(a, b, c)][(g, h)]: psi(Fg, Fh) -> F psi(g, h)``
    and ``theta0[a]: Id_fa -> F(Id_a)``."""

    def __init__(self, source: ClassicalBicategory, target: ClassicalBicategory, f: dict,
                 F: dict, theta: dict, theta0: dict):
        self.source, self.target = source, target
        self.f = dict(f)
        self.F = dict(F)
        self.theta = dict(theta)
        self.theta0 = dict(theta0)


def identity_classical_hom(B: ClassicalBicategory) -> ClassicalHom:
    F = {k: MultiFunctor.identity(C) for k, C in B.hom.items()}
    theta = {}
    for a, b, c in B.triples():
        theta[(a, b, c)] = {(g, h): B.hom[(a, c)].id(B.psi(a, b, c, g, h))
                            for g in B.hom[(a, b)].objects for h in B.hom[(b, c)].objects}
    theta0 = {a: B.hom[(a, a)].id(B.unit[a]) for a in B.objects}
    return ClassicalHom(B, B, {a: a for a in B.objects}, F, theta, theta0)


def validate_classical_hom(H: ClassicalHom) -> list[str]:
    """Typing, naturality, hexagon and the two unit squares."""
    A, B, f = H.source, H.target, H.f
    errs = []
    for a in A.objects:
        if f.get(a) not in B.objects:
            errs.append(f"object {a!r} has no image")
    if errs:
        return errs
    for (a, b), C in A.hom.items():
        F = H.F.get((a, b))
        if F is None or not (_same(F.cats[0], C) and _same(F.target, B.hom[(f[a], f[b])])):
            errs.append(f"hom functor at {(a, b)!r} has wrong type")
        else:
            errs += [f"hom functor {(a, b)!r}: {e}" for e in F.validate()]
    if errs:
        return errs

    def Fo(a, b, x):
        return H.F[(a, b)].obj[(x,)]

    def Fm(a, b, m):
        return H.F[(a, b)].mor[(m,)]

    for a, b, c in A.triples():
        src = B.comp[(f[a], f[b], f[c])]
        dom = A.comp[(a, b, c)]
        lhs = _functor(dom.cats, B.hom[(f[a], f[c])],
                       lambda x: src.obj[(Fo(a, b, x[0]), Fo(b, c, x[1]))],
                       lambda m: src.mor[(Fm(a, b, m[0]), Fm(b, c, m[1]))])
        errs += [f"theta {(a, b, c)!r}: {e}" for e in _nat_failures(
            B.hom[(f[a], f[c])], lhs, lambda x: Fo(a, c, dom.obj[x]), lambda m: Fm(a, c, dom.mor[m]),
            H.theta.get((a, b, c), {}))]
    for a in A.objects:
        t = H.theta0.get(a)
        C = B.hom[(f[a], f[a])]
        if C.morphisms.get(t) != (B.unit[f[a]], Fo(a, a, A.unit[a])) or not C.is_iso(t):
            errs.append(f"theta0 at {a!r} has wrong type")
    if errs:
        return errs
    for a1, a2, a3, a4 in itertools.product(A.objects, repeat=4):
        Ah = A.hom
        b1, b2, b3, b4 = f[a1], f[a2], f[a3], f[a4]
        C = B.hom[(b1, b4)]
        for g, h, k in itertools.product(Ah[(a1, a2)].objects, Ah[(a2, a3)].objects, Ah[(a3, a4)].objects):
            Fg, Fh, Fk = Fo(a1, a2, g), Fo(a2, a3, h), Fo(a3, a4, k)
            hk = A.psi(a2, a3, a4, h, k)
            gh = A.psi(a1, a2, a3, g, h)
            up = C.compose(Fm(a1, a4, A.assoc[(a1, a2, a3, a4)][(g, h, k)]),
                           C.compose(H.theta[(a1, a2, a4)][(g, hk)],
                                     B.psi_mor(b1, b2, b4, B.hom[(b1, b2)].id(Fg), H.theta[(a2, a3, a4)][(h, k)])))
            down = C.compose(H.theta[(a1, a3, a4)][(gh, k)],
                             C.compose(B.psi_mor(b1, b3, b4, H.theta[(a1, a2, a3)][(g, h)], B.hom[(b3, b4)].id(Fk)),
                                       B.assoc[(b1, b2, b3, b4)][(Fg, Fh, Fk)]))
            if up != down:
                errs.append(f"hexagon fails at {(g, h, k)!r} over {(a1, a2, a3, a4)!r}")
    for a, a2 in itertools.product(A.objects, repeat=2):
        C = B.hom[(f[a], f[a2])]
        for g in A.hom[(a, a2)].objects:
            Fg = Fo(a, a2, g)
            p = C.compose(Fm(a, a2, A.runit[(a, a2)][g]),
                          C.compose(H.theta[(a, a, a2)][(A.unit[a], g)],
                                    B.psi_mor(f[a], f[a], f[a2], H.theta0[a], C.id(Fg))))
            if p != B.runit[(f[a], f[a2])][Fg]:
                errs.append(f"right unit square fails at {g!r}")
            q = C.compose(Fm(a, a2, A.lunit[(a, a2)][g]),
                          C.compose(H.theta[(a, a2, a2)][(g, A.unit[a2])],
                                    B.psi_mor(f[a], f[a2], f[a2], C.id(Fg), H.theta0[a2])))
            if q != B.lunit[(f[a], f[a2])][Fg]:
                errs.append(f"left unit square fails at {g!r}")
    return errs


# ---------------------------------------------------------------------------
# level records: vertex dendrices, edge dendrices, homotopy witnesses

class LevelRecord:
    """Categories on colours, a functor per signature and an isomorphism
    ``Psi_{s o_i r} => Psi_s o_i Psi_r`` (components keyed by object tuples)
    per composite ``(s, i, r)``, all up to arity ``N``."""

    def __init__(self, objects, top: int, cats: dict, psi: dict, phi: dict, N: int = DEFAULT_ARITY):
        self.objects = tuple(objects)
        self.top = top
        self.cats = dict(cats)
        self.psi = dict(psi)
        self.phi = dict(phi)
        self.N = N
        self._sigs = None
        self._comps = None

    def __repr__(self):
        return f"{type(self).__name__}({len(self.objects)} objects, top level {self.top}, N={self.N})"

    def __eq__(self, other):
        return (isinstance(other, LevelRecord) and self.objects == other.objects
                and self.top == other.top and self.N == other.N
                and self.psi == other.psi and self.phi == other.phi
                and all(_same(C, other.cats.get(k)) for k, C in self.cats.items()))

    def __hash__(self):
        return hash((self.objects, self.top, frozenset(self.psi)))

    def in_cats(self, s: Sig) -> tuple:
        return tuple(self.cats[s.colour_in(j)] for j in range(s.arity))

    def out_cat(self, s: Sig) -> FinCat:
        return self.cats[s.colour_out()]

    def signatures(self) -> list[Sig]:
        if self._sigs is None:
            self._sigs = all_signatures(self.objects, self.top, self.N)
        return self._sigs

    def composites(self) -> list[tuple]:
        if self._comps is None:
            self._comps = _composites(self.signatures(), self.N)
        return self._comps

    def composite_obj(self, s: Sig, i: int, r: Sig, x: tuple):
        return _cobj(self.psi[s], i, self.psi[r], x)

    def check_phi(self, key, comps=None, strict_units=True) -> list[str]:
        s, i, r = key
        c = compose_sig(s, i, r)
        comps = self.phi.get(key) if comps is None else comps
        if comps is None:
            return [f"missing isomorphism at {key!r}"]
        P, Q = self.psi[s], self.psi[r]
        T = self.out_cat(c)
        errs = [f"isomorphism {key!r}: {e}" for e in _nat_failures(
            T, self.psi[c], lambda x: _cobj(P, i, Q, x), lambda f: _cmor(P, i, Q, f), comps)]
        if not errs and strict_units and (s.is_unit or r.is_unit):
            if any(m != T.id(T.src(m)) for m in comps.values()):
                errs.append(f"isomorphism {key!r} must be the identity")
        return errs

    def check_triple(self, tr) -> str | None:
        kind, s, i, r, j, t = tr
        psi, phi = self.psi, self.phi
        c = compose_sig(s, i, r)
        T = self.out_cat(s)
        if kind == "seq":
            rt = compose_sig(r, j, t)
            full = compose_sig(s, i, rt)
            p = i + j
            kt, mrt = t.arity, rt.arity
            P, R, Tt = psi[s], psi[r], psi[t]
            a1, a2 = phi[(c, p, t)], phi[(s, i, r)]
            b1, b2 = phi[(s, i, rt)], phi[(r, j, t)]
            for x in psi[full].domain_objects():
                p1 = T.compose(a2[x[:p] + (Tt.obj[x[p:p + kt]],) + x[p + kt:]], a1[x])
                mid = b2[x[i:i + mrt]]
                ids_l = _ids(P.cats[:i], x[:i])
                ids_r = _ids(P.cats[i + 1:], x[i + mrt:])
                p2 = T.compose(P.mor[ids_l + (mid,) + ids_r], b1[x])
                if p1 != p2:
                    return f"sequential square fails for {(s, i, r, j, t)!r} at {x!r}"
            return None
        m = r.arity
        q = j + m - 1
        full = compose_sig(c, q, t)
        st = compose_sig(s, j, t)
        R, Tt = psi[r], psi[t]
        a1, a2 = phi[(c, q, t)], phi[(s, i, r)]
        b1, b2 = phi[(st, i, r)], phi[(s, j, t)]
        kt = t.arity
        for x in psi[full].domain_objects():
            p1 = T.compose(a2[x[:q] + (Tt.obj[x[q:q + kt]],) + x[q + kt:]], a1[x])
            p2 = T.compose(b2[x[:i] + (R.obj[x[i:i + m]],) + x[i + m:]], b1[x])
            if p1 != p2:
                return f"parallel square fails for {(s, i, r, j, t)!r} at {x!r}"
        return None

    def validate(self, full: bool = True, strict_units: bool = True) -> list[str]:
        errs = []
        sigs = self.signatures()
        allowed = set(sigs)
        errs += [f"unexpected signature {s!r}" for s in self.psi if s not in allowed]
        for (a, b), l in itertools.product(itertools.product(self.objects, repeat=2), range(self.top + 1)):
            if ((a, b), l) not in self.cats:
                errs.append(f"no category at colour {((a, b), l)!r}")
        if errs:
            return errs
        for s in sigs:
            P = self.psi.get(s)
            if P is None:
                errs.append(f"missing functor at {s!r}")
                continue
            ins = self.in_cats(s)
            if len(P.cats) != len(ins) or not all(_same(a, b) for a, b in zip(P.cats, ins)) \
                    or not _same(P.target, self.out_cat(s)):
                errs.append(f"functor at {s!r} has wrong type")
                continue
            if full:
                errs += [f"functor at {s!r}: {e}" for e in P.validate()]
            if strict_units and s.is_unit and P != MultiFunctor.identity(ins[0]):
                errs.append(f"functor at unit signature {s!r} is not the identity")
        if errs:
            return errs
        keys = self.composites()
        keyset = set(keys)
        errs += [f"unexpected isomorphism {k!r}" for k in self.phi if k not in keyset]
        for key in keys:
            errs += self.check_phi(key, strict_units=strict_units)
        if errs:
            return errs
        for tr in _triples(keyset):
            e = self.check_triple(tr)
            if e:
                errs.append(e)
        return errs

    def restrict(self, level_map: Sequence[int]) -> "LevelRecord":
        """Pull back along a monotone map of levels: new level ``j`` reads old
        level ``level_map[j]``."""
        lm = tuple(level_map)
        if any(a > b for a, b in zip(lm, lm[1:])):
            raise ValueError("level map must be monotone")
        top = len(lm) - 1
        cats = {(p, l): self.cats[(p, lm[l])] for (p, l0) in self.cats for l in range(top + 1) if l0 == 0}
        sigs = all_signatures(self.objects, top, self.N)
        psi = {s: self.psi[s.relabel(lm)] for s in sigs}
        phi = {}
        for s, i, r in _composites(sigs, self.N):
            phi[(s, i, r)] = self.phi[(s.relabel(lm), i, r.relabel(lm))]
        return LevelRecord(self.objects, top, cats, psi, phi, self.N)

    def pullback(self, f: dict, objects: Sequence) -> "LevelRecord":
        """Reindex along a map of object sets ``objects -> self.objects``."""
        objects = tuple(objects)
        cats = {((a, b), l): self.cats[((f[a], f[b]), l)]
                for a in objects for b in objects for l in range(self.top + 1)}
        sigs = all_signatures(objects, self.top, self.N)
        psi = {s: self.psi[s.along(f)] for s in sigs}
        phi = {(s, i, r): self.phi[(s.along(f), i, r.along(f))] for s, i, r in _composites(sigs, self.N)}
        return LevelRecord(objects, self.top, cats, psi, phi, self.N)

    def to_json(self) -> dict:
        cats = _CatTable()
        return {
            "kind": "level_record",
            "objects": [_enc(a) for a in self.objects],
            "top": self.top,
            "N": self.N,
            "colours": [[_enc(p), l, cats.ref(C)] for (p, l), C in sorted(self.cats.items(), key=repr)],
            "functors": [[_sig_json(s), F.to_json()] for s, F in sorted(self.psi.items(), key=repr)],
            "isos": [[_sig_json(s), i, _sig_json(r), _comps_json(c)]
                     for (s, i, r), c in sorted(self.phi.items(), key=repr)],
            "categories": cats.to_json(),
        }

    @classmethod
    def from_json(cls, data) -> "LevelRecord":
        if isinstance(data, str):
            data = json.loads(data)
        table = [FinCat.from_json(c) for c in data["categories"]]
        cats = {(tuple(_dec(p)), l): table[k] for p, l, k in data["colours"]}
        rec = cls([_dec(a) for a in data["objects"]], data["top"], cats, {}, {}, data["N"])
        for sj, F in data["functors"]:
            s = _sig_from(sj)
            rec.psi[s] = MultiFunctor.from_json(F, rec.in_cats(s), rec.out_cat(s))
        for sj, i, rj, comps in data["isos"]:
            rec.phi[(_sig_from(sj), i, _sig_from(rj))] = _comps_from(comps)
        return rec


class VertexDendrex(LevelRecord):
    """A dendrex of shape ``|``: a single level."""

    def __init__(self, objects, cats: dict, psi: dict, phi: dict, N: int = DEFAULT_ARITY, top: int = 0):
        if top != 0:
            raise ValueError("a vertex dendrex has one level")
        super().__init__(objects, 0, cats, psi, phi, N)

    @classmethod
    def from_json(cls, data) -> "VertexDendrex":
        r = LevelRecord.from_json(data)
        return cls(r.objects, r.cats, r.psi, r.phi, r.N)

    def hom(self, a, b) -> FinCat:
        return self.cats[((a, b), 0)]


class EdgeDendrex:
    """A dendrex of shape ``C_1``: a map of object sets ``f``, its two
    endpoint vertex dendrices and a two-level record over the source objects
    (level 1 = source, level 0 = target pulled back along f)."""

    def __init__(self, f: dict, source: VertexDendrex, target: VertexDendrex, record: LevelRecord):
        self.f = dict(f)
        self.source = source
        self.target = target
        self.record = record

    def __repr__(self):
        return f"EdgeDendrex({len(self.source.objects)} -> {len(self.target.objects)} objects)"

    def __eq__(self, other):
        return (isinstance(other, EdgeDendrex) and self.f == other.f and self.source == other.source
                and self.target == other.target and self.record == other.record)

    def __hash__(self):
        return hash((frozenset(self.f.items()), len(self.record.phi)))

    @property
    def N(self):
        return self.record.N

    def unary(self, a, b) -> MultiFunctor:
        return self.record.psi[Sig((a, b), (1,), 0)]

    def boundary_failures(self) -> list[str]:
        errs = []
        if self.record.top != 1 or self.record.objects != self.source.objects:
            return ["record is not a two-level record over the source objects"]
        if any(self.f.get(a) not in self.target.objects for a in self.source.objects):
            return ["object map does not land in the target"]
        if self.record.restrict((1,)) != self.source:
            errs.append("leaf face differs from the source vertex")
        if self.record.restrict((0,)) != self.target.pullback(self.f, self.source.objects):
            errs.append("root face differs from the pulled back target vertex")
        return errs

    def validate(self, full: bool = True) -> list[str]:
        errs = [f"source: {e}" for e in self.source.validate(full)]
        errs += [f"target: {e}" for e in self.target.validate(full)]
        if errs:
            return errs
        errs = self.boundary_failures()
        if errs:
            return errs
        return self.record.validate(full)

    def to_json(self) -> dict:
        return {"kind": "edge_dendrex", "f": [[_enc(a), _enc(b)] for a, b in self.f.items()],
                "source": self.source.to_json(), "target": self.target.to_json(),
                "record": self.record.to_json()}

    @classmethod
    def from_json(cls, data) -> "EdgeDendrex":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({_dec(a): _dec(b) for a, b in data["f"]}, VertexDendrex.from_json(data["source"]),
                   VertexDendrex.from_json(data["target"]), LevelRecord.from_json(data["record"]))


def degenerate_edge(x: VertexDendrex) -> EdgeDendrex:
    """The identity edge on ``x``."""
    return EdgeDendrex({a: a for a in x.objects}, x, x, x.restrict((0, 0)))


# ---------------------------------------------------------------------------
# unbiased bicategories and homomorphisms

class UnbiasedBicategory:
    """``Psi[objs]`` for every sequence ``(a_1, ..., a_{n+1})`` with ``n <= N``
    (``(a,)`` for the nullary unit), ``phi[(objs_s, i, objs_r)]``:
    ``Psi_s o_i Psi_r => Psi_{s o_i r}`` and ``iota[(a, b)]: id => Psi_{(a, b)}``
    (identity for strict units)."""

    def __init__(self, objects, hom: dict, Psi: dict, phi: dict, iota: dict | None = None,
                 N: int = DEFAULT_ARITY, name: str = "B"):
        self.objects = tuple(objects)
        self.hom = dict(hom)
        self.Psi = dict(Psi)
        self.phi = dict(phi)
        self.iota = dict(iota or {})
        self.N = N
        self.name = name

    def __repr__(self):
        return f"UnbiasedBicategory({self.name}: {len(self.objects)} objects, N={self.N})"

    def __eq__(self, other):
        return (isinstance(other, UnbiasedBicategory) and self.objects == other.objects
                and self.N == other.N and self.Psi == other.Psi and self.phi == other.phi
                and self._iota_full() == other._iota_full()
                and all(_same(C, other.hom.get(k)) for k, C in self.hom.items()))

    def __hash__(self):
        return hash((self.objects, self.N, frozenset(self.Psi)))

    def _iota_full(self) -> dict:
        out = {}
        for (a, b), C in self.hom.items():
            out[(a, b)] = self.iota.get((a, b)) or {(x,): C.id(x) for x in C.objects}
        return out

    def sequences(self) -> list[tuple]:
        return [s.objs for s in all_signatures(self.objects, 0, self.N)]

    def strict_unit(self) -> bool:
        for (a, b), C in self.hom.items():
            if self.Psi.get((a, b)) != MultiFunctor.identity(C):
                return False
            io = self.iota.get((a, b))
            if io and any(m != C.id(C.src(m)) for m in io.values()):
                return False
        return True

    def as_record(self) -> LevelRecord:
        """The same data in record orientation (isomorphisms inverted)."""
        cats = {((a, b), 0): self.hom[(a, b)] for a in self.objects for b in self.objects}
        psi = {Sig(objs, (0,) * (len(objs) - 1 if len(objs) > 1 else 0), 0): F
               for objs, F in self.Psi.items()}
        rec = LevelRecord(self.objects, 0, cats, psi, {}, self.N)
        for s, i, r in rec.composites():
            comps = self.phi.get((s.objs, i, r.objs))
            if comps is None:
                continue
            T = rec.out_cat(s)
            inv = {}
            for x, m in comps.items():
                inv[x] = T.inverse(m) if m in T.morphisms and T.is_iso(m) else None
            rec.phi[(s, i, r)] = inv
        return rec

    def to_json(self) -> dict:
        cats = _CatTable()
        return {
            "kind": "unbiased_bicategory",
            "name": self.name,
            "N": self.N,
            "objects": [_enc(a) for a in self.objects],
            "hom": [[_enc(k), cats.ref(C)] for k, C in self.hom.items()],
            "Psi": [[_enc(k), F.to_json()] for k, F in sorted(self.Psi.items(), key=repr)],
            "phi": [[_enc(s), i, _enc(r), _comps_json(c)] for (s, i, r), c in sorted(self.phi.items(), key=repr)],
            "iota": [[_enc(k), _comps_json(c)] for k, c in sorted(self.iota.items(), key=repr)],
            "categories": cats.to_json(),
        }

    @classmethod
    def from_json(cls, data) -> "UnbiasedBicategory":
        if isinstance(data, str):
            data = json.loads(data)
        table = [FinCat.from_json(c) for c in data["categories"]]
        hom = {tuple(_dec(k)): table[i] for k, i in data["hom"]}
        Psi = {}
        for k, F in data["Psi"]:
            objs = tuple(_dec(a) for a in k)
            cats = [hom[(objs[j], objs[j + 1])] for j in range(len(objs) - 1)]
            Psi[objs] = MultiFunctor.from_json(F, cats, hom[(objs[0], objs[-1])])
        phi = {(tuple(_dec(a) for a in s), i, tuple(_dec(a) for a in r)): _comps_from(c)
               for s, i, r, c in data["phi"]}
        iota = {tuple(_dec(k)): _comps_from(c) for k, c in data.get("iota", [])}
        return cls([_dec(a) for a in data["objects"]], hom, Psi, phi, iota, data["N"], data.get("name", "B"))


def validate_unbiased(B: UnbiasedBicategory) -> list[str]:
    """Typing, invertibility, naturality, unit conditions and the two
    degree-3 coherence squares (checked with every isomorphism inverted,
    which does not change whether a square of isomorphisms commutes)."""
    errs = []
    for (a, b), C in B.hom.items():
        io = B.iota.get((a, b))
        if io is not None:
            one = MultiFunctor.identity(C)
            P = B.Psi.get((a, b))
            if P is None:
                errs.append(f"missing unary composition at {(a, b)!r}")
                continue
            errs += [f"iota {(a, b)!r}: {e}" for e in _nat_failures(
                C, one, lambda x: P.obj[x], lambda f: P.mor[f], io)]
    if errs:
        return errs
    rec = B.as_record()
    bad = [k for k, c in rec.phi.items() if any(v is None for v in c.values())]
    errs += [f"isomorphism {(k[0].objs, k[1], k[2].objs)!r} has a non-invertible component" for k in bad]
    if errs:
        return errs
    return rec.validate(strict_units=B.strict_unit())


class UnbiasedHom:
    """``f``, hom functors ``F[(a, b)]`` (unary) and for every sequence a
    natural isomorphism ``theta[objs]: Psi^B_{f objs} o F^n => F o Psi^A_objs``."""

    def __init__(self, source: UnbiasedBicategory, target: UnbiasedBicategory, f: dict, F: dict, theta: dict):
        self.source, self.target = source, target
        self.f = dict(f)
        self.F = dict(F)
        self.theta = dict(theta)

    def __repr__(self):
        return f"UnbiasedHom({self.source.name} -> {self.target.name})"

    def __eq__(self, other):
        return (isinstance(other, UnbiasedHom) and self.f == other.f and self.F == other.F
                and self.theta == other.theta)

    def __hash__(self):
        return hash((frozenset(self.f.items()), frozenset(self.F.items())))

    def lhs(self, objs) -> MultiFunctor:
        """``Psi^B_{f objs} o F^n``."""
        B = self.target
        P = B.Psi[tuple(self.f[a] for a in objs)]
        n = len(objs) - 1 if len(objs) > 1 else 0
        Fs = [self.F[(objs[j], objs[j + 1])] for j in range(n)]
        cats = [F.cats[0] for F in Fs]
        return _functor(cats, P.target, lambda x: P.obj[tuple(F.obj[(y,)] for F, y in zip(Fs, x))],
                        lambda m: P.mor[tuple(F.mor[(g,)] for F, g in zip(Fs, m))])

    def to_json(self) -> dict:
        return {"kind": "unbiased_hom",
                "f": [[_enc(a), _enc(b)] for a, b in self.f.items()],
                "F": [[_enc(k), F.to_json()] for k, F in sorted(self.F.items(), key=repr)],
                "theta": [[_enc(k), _comps_json(c)] for k, c in sorted(self.theta.items(), key=repr)]}

    @classmethod
    def from_json(cls, data, source: UnbiasedBicategory, target: UnbiasedBicategory) -> "UnbiasedHom":
        if isinstance(data, str):
            data = json.loads(data)
        f = {_dec(a): _dec(b) for a, b in data["f"]}
        F = {}
        for k, Fj in data["F"]:
            a, b = _dec(k)
            F[(a, b)] = MultiFunctor.from_json(Fj, [source.hom[(a, b)]], target.hom[(f[a], f[b])])
        theta = {tuple(_dec(a) for a in k): _comps_from(c) for k, c in data["theta"]}
        return cls(source, target, f, F, theta)


def _seq_arity(objs) -> int:
    return len(objs) - 1 if len(objs) > 1 else 0


def _hom_coherence_failure(H: UnbiasedHom, s, i, r) -> str | None:
    A, B, f = H.source, H.target, H.f
    sr = compose_sig(Sig(s, (0,) * _seq_arity(s), 0), i, Sig(r, (0,) * _seq_arity(r), 0)).objs
    fs, fr, fsr = (tuple(f[a] for a in o) for o in (s, r, sr))
    PB_s = B.Psi[fs]
    PA_r = A.Psi[r]
    m = _seq_arity(r)
    T = B.hom[(f[sr[0]], f[sr[-1]])]
    Fout = H.F[(s[0], s[-1])]
    Fs = [H.F[(sr[j], sr[j + 1])] for j in range(_seq_arity(sr))]
    phiB = B.phi[(fs, i, fr)]
    phiA = A.phi[(s, i, r)]
    th_sr, th_s, th_r = H.theta[sr], H.theta[s], H.theta[r]
    for x in itertools.product(*(F.cats[0].objects for F in Fs)):
        Fx = tuple(F.obj[(y,)] for F, y in zip(Fs, x))
        p1 = T.compose(th_sr[x], phiB[Fx])
        ids_l = _ids(PB_s.cats[:i], Fx[:i])
        ids_r = _ids(PB_s.cats[i + 1:], Fx[i + m:])
        step1 = PB_s.mor[ids_l + (th_r[x[i:i + m]],) + ids_r]
        step2 = th_s[x[:i] + (PA_r.obj[x[i:i + m]],) + x[i + m:]]
        step3 = Fout.mor[(phiA[x],)]
        p2 = T.compose(step3, T.compose(step2, step1))
        if p1 != p2:
            return f"coherence with composition fails for {(s, i, r)!r} at {x!r}"
    return None


def validate_hom(H: UnbiasedHom) -> list[str]:
    A, B, f = H.source, H.target, H.f
    errs = []
    if any(f.get(a) not in B.objects for a in A.objects):
        return ["object map does not land in the target"]
    for (a, b), C in A.hom.items():
        F = H.F.get((a, b))
        if F is None or F.arity != 1 or not _same(F.cats[0], C) or not _same(F.target, B.hom[(f[a], f[b])]):
            errs.append(f"hom functor at {(a, b)!r} has wrong type")
        else:
            errs += [f"hom functor {(a, b)!r}: {e}" for e in F.validate()]
    if errs:
        return errs
    for objs in A.sequences():
        L = H.lhs(objs)
        P = A.Psi[objs]
        Fo = H.F[(objs[0], objs[-1])]
        errs += [f"theta {objs!r}: {e}" for e in _nat_failures(
            L.target, L, lambda x: Fo.obj[(P.obj[x],)], lambda m: Fo.mor[(P.mor[m],)], H.theta.get(objs, {}))]
        if _seq_arity(objs) == 1 and any(m != L.target.id(L.target.src(m)) for m in H.theta.get(objs, {}).values()):
            errs.append(f"theta {objs!r} must be the identity")
    if errs:
        return errs
    rec = A.as_record()
    for s, i, r in rec.composites():
        e = _hom_coherence_failure(H, s.objs, i, r.objs)
        if e:
            errs.append(e)
    return errs


def identity_hom(B: UnbiasedBicategory) -> UnbiasedHom:
    F = {k: MultiFunctor.identity(C) for k, C in B.hom.items()}
    theta = {objs: {x: P.target.id(y) for x, y in P.obj.items()} for objs, P in B.Psi.items()}
    return UnbiasedHom(B, B, {a: a for a in B.objects}, F, theta)


def compose_homs(H1: UnbiasedHom, H2: UnbiasedHom) -> UnbiasedHom:
    """First H1, then H2."""
    A, C = H1.source, H2.target
    f = {a: H2.f[H1.f[a]] for a in A.objects}
    F = {}
    for (a, b), X in A.hom.items():
        G1, G2 = H1.F[(a, b)], H2.F[(H1.f[a], H1.f[b])]
        F[(a, b)] = _functor([X], G2.target, lambda x: G2.obj[(G1.obj[x],)], lambda m: G2.mor[(G1.mor[m],)])
    theta = {}
    for objs in A.sequences():
        n = _seq_arity(objs)
        G2o = H2.F[(H1.f[objs[0]], H1.f[objs[-1]])]
        fo = tuple(H1.f[a] for a in objs)
        T = C.hom[(f[objs[0]], f[objs[-1]])]
        F1s = [H1.F[(objs[j], objs[j + 1])] for j in range(n)]
        comps = {}
        for x in itertools.product(*(F.cats[0].objects for F in F1s)):
            y = tuple(F.obj[(v,)] for F, v in zip(F1s, x))
            comps[x] = T.compose(G2o.mor[(H1.theta[objs][x],)], H2.theta[fo][y])
        theta[objs] = comps
    return UnbiasedHom(A, C, f, F, theta)


def enumerate_homs(A: UnbiasedBicategory, B: UnbiasedBicategory, limit: int | None = None) -> list[UnbiasedHom]:
    """Every homomorphism with strict unit, by backtracking with coherence pruning."""
    out = []
    pairs = sorted(A.hom, key=repr)
    seqs = sorted(A.sequences(), key=lambda o: (_seq_arity(o), repr(o)))
    rec = A.as_record()
    cons: dict = {}
    for s, i, r in rec.composites():
        sr = compose_sig(s, i, r).objs
        last = max(seqs.index(o) for o in (s.objs, r.objs, sr))
        cons.setdefault(last, []).append((s.objs, i, r.objs))
    for fvals in itertools.product(B.objects, repeat=len(A.objects)):
        f = dict(zip(A.objects, fvals))
        options = [_all_functors([A.hom[p]], B.hom[(f[p[0]], f[p[1]])]) for p in pairs]
        for Fs in itertools.product(*options):
            H = UnbiasedHom(A, B, f, dict(zip(pairs, Fs)), {})

            def go(k):
                if limit is not None and len(out) >= limit:
                    return
                if k == len(seqs):
                    out.append(UnbiasedHom(A, B, f, H.F, dict(H.theta)))
                    return
                objs = seqs[k]
                L = H.lhs(objs)
                P = A.Psi[objs]
                Fo = H.F[(objs[0], objs[-1])]
                if _seq_arity(objs) == 1:
                    cands = [{x: L.target.id(y) for x, y in L.obj.items()}]
                    if cands[0] and any(L.obj[x] != Fo.obj[(P.obj[x],)] for x in L.obj):
                        cands = []
                else:
                    cands = _iso_families(L, lambda x: Fo.obj[(P.obj[x],)], lambda m: Fo.mor[(P.mor[m],)])
                for c in cands:
                    H.theta[objs] = c
                    if all(_hom_coherence_failure(H, *t) is None for t in cons.get(k, ())):
                        go(k + 1)
                H.theta.pop(objs, None)

            go(0)
    return out


# ---------------------------------------------------------------------------
# from classical to unbiased

def _word_ends(w, objs):
    kind = w[0]
    if kind == "v":
        return objs[w[1]], objs[w[1] + 1]
    if kind == "u":
        return w[1], w[1]
    return _word_ends(w[1], objs)[0], _word_ends(w[2], objs)[1]


def _left_bracketed(vars_: Sequence[int], unit_obj):
    if not vars_:
        return ("u", unit_obj)
    w = ("v", vars_[0])
    for v in vars_[1:]:
        w = ("m", w, ("v", v))
    return w


class _Words:
    """Evaluation and normalisation of bracketed words in a classical bicategory."""

    def __init__(self, B: ClassicalBicategory, objs: tuple, xs: tuple):
        self.B, self.objs, self.xs = B, objs, xs

    def ends(self, w):
        return _word_ends(w, self.objs)

    def val(self, w):
        if w[0] == "v":
            return self.xs[w[1]]
        if w[0] == "u":
            return self.B.unit[w[1]]
        a, b = self.ends(w[1])
        _, c = self.ends(w[2])
        return self.B.psi(a, b, c, self.val(w[1]), self.val(w[2]))

    def hom(self, w) -> FinCat:
        return self.B.hom[self.ends(w)]

    def normalise(self, w):
        """``(normal word, morphism val(w) -> val(normal))``."""
        if w[0] != "m":
            return w, self.hom(w).id(self.val(w))
        nl, ml = self.normalise(w[1])
        nr, mr = self.normalise(w[2])
        a, b = self.ends(w[1])
        _, c = self.ends(w[2])
        m = self.B.psi_mor(a, b, c, ml, mr)
        n2, m2 = self.merge(nl, nr)
        return n2, self.hom(w).compose(m2, m)

    def merge(self, nl, nr):
        B = self.B
        a, b = self.ends(nl)
        _, c = self.ends(nr)
        if nr[0] == "u":
            return nl, B.lunit[(a, b)][self.val(nl)]
        if nl[0] == "u":
            return nr, B.runit[(b, c)][self.val(nr)]
        if nr[0] == "v":
            return ("m", nl, nr), B.hom[(a, c)].id(self.val(("m", nl, nr)))
        p, q = nr[1], nr[2]
        _, pb = self.ends(p)
        alpha = B.assoc[(a, b, pb, c)][(self.val(nl), self.val(p), self.val(q))]
        n1, m1 = self.merge(nl, p)
        step = B.psi_mor(a, pb, c, m1, B.hom[(pb, c)].id(self.val(q)))
        return ("m", n1, q), B.hom[(a, c)].compose(step, alpha)


def classical_to_unbiased(B: ClassicalBicategory, N: int = DEFAULT_ARITY, check: bool = True) -> UnbiasedBicategory:
    """Left-bracketed n-ary composites; the isomorphisms are the canonical
    constraint cells between bracketings (units removed by the unitors)."""
    if check:
        errs = validate_classical(B)
        if errs:
            raise ValueError(f"invalid bicategory: {errs[0]}")
    sigs = all_signatures(B.objects, 0, N)
    Psi = {}
    for s in sigs:
        objs, n = s.objs, s.arity
        cats = [B.hom[(objs[j], objs[j + 1])] for j in range(n)]
        target = B.hom[(objs[0], objs[-1])]
        if n == 0:
            Psi[objs] = MultiFunctor.constant(target, B.unit[objs[0]])
            continue
        if n == 1:
            Psi[objs] = MultiFunctor.identity(target)
            continue

        def fobj(x, objs=objs):
            return _Words(B, objs, x).val(_left_bracketed(range(len(x)), objs[0]))

        def fmor(m, objs=objs, n=n):
            acc = m[0]
            for j in range(1, n):
                acc = B.psi_mor(objs[0], objs[j], objs[j + 1], acc, m[j])
            return acc

        Psi[objs] = _functor(cats, target, fobj, fmor)
    phi = {}
    for s, i, r in _composites(sigs, N):
        c = compose_sig(s, i, r)
        n, m = s.arity, r.arity
        inner = _left_bracketed(range(i, i + m), s.objs[i])
        outer_vars = list(range(i)) + ["X"] + list(range(i + m, n + m - 1))
        w = None
        for v in outer_vars:
            leaf = inner if v == "X" else ("v", v)
            w = leaf if w is None else ("m", w, leaf)
        comps = {}
        for x in Psi[c.objs].obj:
            _, mor = _Words(B, c.objs, x).normalise(w)
            comps[x] = mor
        phi[(s.objs, i, r.objs)] = comps
    return UnbiasedBicategory(B.objects, B.hom, Psi, phi, {}, N, B.name)


# ---------------------------------------------------------------------------
# the translation to dendrices

def phi_object(B: UnbiasedBicategory, check: bool = True) -> VertexDendrex:
    """The dendrex of shape ``|`` of an unbiased bicategory with strict unit."""
    if not B.strict_unit():
        raise ValueError("the translation needs strict units")
    if check:
        errs = validate_unbiased(B)
        if errs:
            raise ValueError(f"invalid unbiased bicategory: {errs[0]}")
    rec = B.as_record()
    return VertexDendrex(rec.objects, rec.cats, rec.psi, rec.phi, rec.N)


def unbiased_from_vertex(x: VertexDendrex, name: str = "B") -> UnbiasedBicategory:
    hom = {(a, b): x.hom(a, b) for a in x.objects for b in x.objects}
    Psi = {s.objs: F for s, F in x.psi.items()}
    phi = {}
    for (s, i, r), comps in x.phi.items():
        T = x.out_cat(s)
        phi[(s.objs, i, r.objs)] = {k: T.inverse(m) for k, m in comps.items()}
    return UnbiasedBicategory(x.objects, hom, Psi, phi, {}, x.N, name)


def _level_cats(xA: VertexDendrex, xB: VertexDendrex, f: dict) -> dict:
    cats = {}
    for a in xA.objects:
        for b in xA.objects:
            cats[((a, b), 1)] = xA.hom(a, b)
            cats[((a, b), 0)] = xB.hom(f[a], f[b])
    return cats


def phi_hom(H: UnbiasedHom, source: VertexDendrex | None = None,
            target: VertexDendrex | None = None) -> EdgeDendrex:
    """Mixed functors are ``Psi^B`` after F on the level-1 inputs; the
    isomorphisms paste the target's isomorphisms with theta."""
    xA = source or phi_object(H.source, check=False)
    xB = target or phi_object(H.target, check=False)
    f = H.f
    cats = _level_cats(xA, xB, f)
    N = xA.N
    rec = LevelRecord(xA.objects, 1, cats, {}, {}, N)

    def G(s: Sig, x):
        return tuple(H.F[(s.objs[j], s.objs[j + 1])].obj[(v,)] if s.levels[j] == 1 else v
                     for j, v in enumerate(x))

    def Gm(s: Sig, m):
        return tuple(H.F[(s.objs[j], s.objs[j + 1])].mor[(g,)] if s.levels[j] == 1 else g
                     for j, g in enumerate(m))

    zero = {1: 0, 0: 0}
    for s in rec.signatures():
        if s.out == 1:
            rec.psi[s] = xA.psi[s.relabel(zero)]
            continue
        P = xB.psi[s.relabel(zero).along(f)]
        rec.psi[s] = _functor(rec.in_cats(s), rec.out_cat(s),
                              lambda x, s=s, P=P: P.obj[G(s, x)], lambda m, s=s, P=P: P.mor[Gm(s, m)])
    for s, i, r in rec.composites():
        c = compose_sig(s, i, r)
        s0, r0 = s.relabel(zero), r.relabel(zero)
        if s.out == 1:
            rec.phi[(s, i, r)] = xA.phi[(s0, i, r0)]
            continue
        phiB = xB.phi[(s0.along(f), i, r0.along(f))]
        if r.out == 0:
            rec.phi[(s, i, r)] = {x: phiB[G(c, x)] for x in rec.psi[c].obj}
            continue
        PBs = xB.psi[s0.along(f)]
        th = H.theta[r.objs]
        m = r.arity
        T = rec.out_cat(c)
        comps = {}
        for x in rec.psi[c].obj:
            gx = G(c, x)
            ids_l = _ids(PBs.cats[:i], gx[:i])
            ids_r = _ids(PBs.cats[i + 1:], gx[i + m:])
            comps[x] = T.compose(PBs.mor[ids_l + (th[x[i:i + m]],) + ids_r], phiB[gx])
        rec.phi[(s, i, r)] = comps
    return EdgeDendrex(f, xA, xB, rec)


def _chain(y: EdgeDendrex, s: Sig, x: tuple, order: Sequence[int]):
    """Convert the level-1 inputs of ``s`` (output level 0) to level 0 one
    position at a time: ``Psi_s(x) -> Psi^B(G x)``."""
    rec = y.record
    T = rec.out_cat(s)
    cur, xs = s, list(x)
    acc = T.id(rec.psi[s].obj[tuple(x)])
    for p in order:
        nxt = Sig(cur.objs, cur.levels[:p] + (0,) + cur.levels[p + 1:], 0)
        v = Sig((cur.objs[p], cur.objs[p + 1]), (1,), 0)
        acc = T.compose(rec.phi[(nxt, p, v)][tuple(xs)], acc)
        xs[p] = rec.psi[v].obj[(xs[p],)]
        cur = nxt
    return acc


def recover_hom(y: EdgeDendrex, source: UnbiasedBicategory | None = None,
                target: UnbiasedBicategory | None = None, check_orders: bool = True) -> UnbiasedHom:
    """Read off ``f`` and the hom functors; ``theta`` is the isomorphism from
    ``C_1 o C_n`` composed with the inverse of the pasting from
    ``C_n o (C_1, ..., C_1)``.  Raises if different pasting orders disagree."""
    A = source or unbiased_from_vertex(y.source)
    B = target or unbiased_from_vertex(y.target)
    rec = y.record
    F = {(a, b): y.unary(a, b) for a in y.source.objects for b in y.source.objects}
    theta = {}
    for objs in A.sequences():
        n = _seq_arity(objs)
        T = B.hom[(y.f[objs[0]], y.f[objs[-1]])]
        K = Sig(objs, (1,) * n, 0)
        v = Sig((objs[0], objs[-1]), (1,), 0)
        sA = Sig(objs, (1,) * n, 1)
        alpha = rec.phi[(v, 0, sA)]
        orders = list(itertools.permutations(range(n))) if check_orders else [tuple(range(n))]
        comps = {}
        for x in rec.psi[K].obj:
            betas = {_chain(y, K, x, o) for o in orders}
            if len(betas) != 1:
                raise ValueError(f"pastings disagree for {objs!r} at {x!r}")
            comps[x] = T.compose(alpha[x], T.inverse(betas.pop()))
        theta[objs] = comps
    return UnbiasedHom(A, B, dict(y.f), F, theta)


# ---------------------------------------------------------------------------
# enumeration of records

def _search(rec: LevelRecord, free: list, options, limit=None):
    """Fill in ``rec.psi[s]`` for the free signatures (in order) and every
    isomorphism not already present, yielding completed copies."""
    keys = rec.composites()
    fixed = set(rec.phi)
    assigned = set(rec.psi)
    steps: list = []
    pending = [k for k in keys if k not in fixed]

    def ready(k):
        s, i, r = k
        return s in assigned and r in assigned and compose_sig(s, i, r) in assigned

    for k in [k for k in pending if ready(k)]:
        steps.append(("phi", k))
    pending = [k for k in pending if not ready(k)]
    for s in free:
        steps.append(("psi", s))
        assigned.add(s)
        now = [k for k in pending if ready(k)]
        steps += [("phi", k) for k in now]
        pending = [k for k in pending if not ready(k)]
    if pending:
        raise ValueError("some composites never become ready")
    where = {k: -1 for k in fixed}
    for n, (kind, k) in enumerate(steps):
        if kind == "phi":
            where[k] = n
    checks: dict = {}
    for tr in _triples(set(keys)):
        last = max(where[k] for k in _triple_keys(tr))
        checks.setdefault(last, []).append(tr)
    bad = [tr for tr in checks.get(-1, ()) if rec.check_triple(tr)]
    if bad:
        return
    count = [0]

    def go(n):
        if limit is not None and count[0] >= limit:
            return
        if n == len(steps):
            count[0] += 1
            yield LevelRecord(rec.objects, rec.top, rec.cats, dict(rec.psi), dict(rec.phi), rec.N)
            return
        kind, k = steps[n]
        if kind == "psi":
            for P in options(k, rec):
                rec.psi[k] = P
                yield from go(n + 1)
            rec.psi.pop(k, None)
            return
        s, i, r = k
        c = compose_sig(s, i, r)
        Ps, Pr, Pc = rec.psi[s], rec.psi[r], rec.psi[c]
        if s.is_unit or r.is_unit:
            T = rec.out_cat(c)
            ident = {x: T.id(y) for x, y in Pc.obj.items()}
            cands = [ident] if all(Pc.obj[x] == _cobj(Ps, i, Pr, x) for x in Pc.obj) \
                and all(Pc.mor[f] == _cmor(Ps, i, Pr, f) for f in Pc.mor) else []
        else:
            cands = _iso_families(Pc, lambda x: _cobj(Ps, i, Pr, x), lambda f: _cmor(Ps, i, Pr, f))
        for comps in cands:
            rec.phi[k] = comps
            if all(rec.check_triple(tr) is None for tr in checks.get(n, ())):
                yield from go(n + 1)
        rec.phi.pop(k, None)

    yield from go(0)


def enumerate_vertex_dendrices(objects, homs: dict, N: int = DEFAULT_ARITY, limit=None) -> list[VertexDendrex]:
    """Every valid vertex dendrex with the given hom categories."""
    objects = tuple(objects)
    cats = {((a, b), 0): homs[(a, b)] for a in objects for b in objects}
    rec = LevelRecord(objects, 0, cats, {}, {}, N)
    free = []
    for s in rec.signatures():
        if s.arity == 1:
            rec.psi[s] = MultiFunctor.identity(rec.in_cats(s)[0])
        else:
            free.append(s)
    cache: dict = {}

    def options(s, r):
        key = (tuple(id(c) for c in r.in_cats(s)), id(r.out_cat(s)))
        if key not in cache:
            cache[key] = _all_functors(r.in_cats(s), r.out_cat(s))
        return cache[key]

    return [VertexDendrex(r.objects, r.cats, r.psi, r.phi, r.N) for r in _search(rec, free, options, limit)]


def enumerate_unbiased(objects, homs: dict, N: int = DEFAULT_ARITY, name: str = "B") -> list[UnbiasedBicategory]:
    """Every unbiased bicategory with strict unit on the given hom categories,
    by plain product over functors and isomorphisms and then validation."""
    objects = tuple(objects)
    seqs = [s.objs for s in all_signatures(objects, 0, N)]
    fixed = {}
    free = []
    for objs in seqs:
        if len(objs) == 2:
            fixed[objs] = MultiFunctor.identity(homs[objs])
        else:
            free.append(objs)
    opts = []
    for objs in free:
        cats = [homs[(objs[j], objs[j + 1])] for j in range(_seq_arity(objs))]
        opts.append(_all_functors(cats, homs[(objs[0], objs[-1])]))
    out = []
    keys = [(s.objs, i, r.objs) for s, i, r in _composites(all_signatures(objects, 0, N), N)]
    for pick in itertools.product(*opts):
        Psi = dict(fixed)
        Psi.update(zip(free, pick))
        cand = []
        for s, i, r in keys:
            c = compose_sig(Sig(s, (0,) * _seq_arity(s), 0), i, Sig(r, (0,) * _seq_arity(r), 0)).objs
            Ps, Pr, Pc = Psi[s], Psi[r], Psi[c]
            src = _functor(Pc.cats, Pc.target, lambda x: _cobj(Ps, i, Pr, x), lambda f: _cmor(Ps, i, Pr, f))
            cand.append(_iso_families(src, lambda x: Pc.obj[x], lambda f: Pc.mor[f]))
        for phis in itertools.product(*cand):
            B = UnbiasedBicategory(objects, homs, Psi, dict(zip(keys, phis)), {}, N, name)
            if not validate_unbiased(B):
                out.append(B)
    return out


def enumerate_edge_dendrices(xA: VertexDendrex, xB: VertexDendrex, limit=None) -> list[EdgeDendrex]:
    """Every valid edge dendrex between two vertex dendrices."""
    out = []
    A = xA.objects
    for fvals in itertools.product(xB.objects, repeat=len(A)):
        f = dict(zip(A, fvals))
        rec = LevelRecord(A, 1, _level_cats(xA, xB, f), {}, {}, xA.N)
        zero = {0: 0, 1: 0}
        free = []
        for s in rec.signatures():
            if s.out == 1:
                rec.psi[s] = xA.psi[s.relabel(zero)]
            elif all(l == 0 for l in s.levels):
                rec.psi[s] = xB.psi[s.along(f)]
            else:
                free.append(s)
        free.sort(key=lambda s: (s.arity != 1, s.arity, repr(s)))
        for s, i, r in rec.composites():
            c = compose_sig(s, i, r)
            if s.out == 1:
                rec.phi[(s, i, r)] = xA.phi[(s.relabel(zero), i, r.relabel(zero))]
            elif all(l == 0 for l in c.levels) and r.out == 0:
                rec.phi[(s, i, r)] = xB.phi[(s.along(f), i, r.along(f))]

        def options(s, r):
            if s.arity == 1:
                return _all_functors(r.in_cats(s), r.out_cat(s))
            P = xB.psi[Sig(s.objs, (0,) * s.arity, 0).along(f)]
            Fs = [r.psi[Sig((s.objs[j], s.objs[j + 1]), (1,), 0)] if s.levels[j] == 1 else None
                  for j in range(s.arity)]
            base = _functor(r.in_cats(s), r.out_cat(s),
                            lambda x: P.obj[tuple(F.obj[(v,)] if F else v for F, v in zip(Fs, x))],
                            lambda m: P.mor[tuple(F.mor[(g,)] if F else g for F, g in zip(Fs, m))])
            return _functors_iso_to(base)

        for r in _search(rec, free, options, None if limit is None else limit - len(out)):
            out.append(EdgeDendrex(f, xA, xB, r))
        if limit is not None and len(out) >= limit:
            break
    return out


# ---------------------------------------------------------------------------
# left homotopy

def _witness(y1: EdgeDendrex, y2: EdgeDendrex, eta: dict, build: bool = True):
    """The witness over levels 2 (leaf), 1 and 0 obtained by transporting the
    degeneracy of ``y2`` along ``eta``.  Returns None when the face towards
    ``y1`` does not match, otherwise the witness (or True if not built)."""
    r1, r2 = y1.record, y2.record
    A = y1.source.objects
    N = r1.N
    down = {0: 0, 1: 1, 2: 1}

    def kind(s: Sig):
        if s.out >= 1 or 1 in s.levels or 2 not in s.levels:
            return "y2"
        return "y1"

    def psi_w(s: Sig):
        return (r1 if kind(s) == "y1" else r2).psi[s.relabel(down)]

    nu_cache: dict = {}

    def nu(s: Sig, x):
        if kind(s) == "y2":
            return None
        key = (s, x)
        if key not in nu_cache:
            sb = s.relabel(down)
            T = r1.out_cat(sb)
            pos = [j for j, l in enumerate(sb.levels) if l == 1]
            b1 = _chain(y1, sb, x, pos)
            b2 = _chain(y2, sb, x, pos)
            PB = r1.psi[Sig(sb.objs, (0,) * sb.arity, 0)]
            g1 = list(x)
            mid = []
            for j, v in enumerate(x):
                if j in pos:
                    p = (sb.objs[j], sb.objs[j + 1])
                    g1[j] = r1.psi[Sig(p, (1,), 0)].obj[(v,)]
                    mid.append(eta[p][(v,)])
                else:
                    mid.append(PB.cats[j].id(v))
            nu_cache[key] = T.compose(T.inverse(b2), T.compose(PB.mor[tuple(mid)], b1))
        return nu_cache[key]

    def phi_w(s: Sig, i: int, r: Sig, x):
        c = compose_sig(s, i, r)
        sb, rb, cb = s.relabel(down), r.relabel(down), c.relabel(down)
        T = r2.out_cat(cb)
        m = r.arity
        Pr = psi_w(r)
        out = r2.phi[(sb, i, rb)][x]
        n_c = nu(c, x)
        if n_c is not None:
            out = T.compose(out, n_c)
        inner = x[:i] + (Pr.obj[x[i:i + m]],) + x[i + m:]
        h = T.id(_cobj(r2.psi[sb], i, r2.psi[rb], x))
        n_s = nu(s, inner)
        n_r = nu(r, x[i:i + m])
        if n_s is not None:
            h = n_s
        if n_r is not None:
            P2 = r2.psi[sb]
            ids_l = _ids(P2.cats[:i], x[:i])
            ids_r = _ids(P2.cats[i + 1:], x[i + m:])
            h = T.compose(P2.mor[ids_l + (n_r,) + ids_r], h if n_s is not None else T.id(T.src(P2.mor[ids_l + (n_r,) + ids_r])))
        return T.compose(T.inverse(h), out)

    sigs = all_signatures(A, 2, N)
    comps = _composites(sigs, N)
    for s, i, r in comps:
        c = compose_sig(s, i, r)
        if all(l != 1 for l in c.levels) and s.out != 1 and r.out != 1 and 1 not in s.levels:
            if kind(c) != "y1" and kind(s) != "y1" and kind(r) != "y1":
                continue
            k1 = (s.relabel(down), i, r.relabel(down))
            for x in psi_w(c).obj:
                if phi_w(s, i, r, x) != r1.phi[k1][x]:
                    return None
    if not build:
        return True
    cats = {}
    for a in A:
        for b in A:
            cats[((a, b), 2)] = r1.cats[((a, b), 1)]
            cats[((a, b), 1)] = r2.cats[((a, b), 1)]
            cats[((a, b), 0)] = r2.cats[((a, b), 0)]
    w = LevelRecord(A, 2, cats, {}, {}, N)
    for s in sigs:
        P = psi_w(s)
        w.psi[s] = P if all(_same(a, b) for a, b in zip(P.cats, w.in_cats(s))) \
            else MultiFunctor(P.inputs, w.in_cats(s), P.target, P.obj, P.mor)
    for s, i, r in comps:
        c = compose_sig(s, i, r)
        w.phi[(s, i, r)] = {x: phi_w(s, i, r, x) for x in w.psi[c].obj}
    return w


def left_homotopic(y1: EdgeDendrex, y2: EdgeDendrex, build: bool = True):
    """``(True, witness)`` if a filler of shape ``C_1 o C_1`` with faces
    (identity on the source, y2, y1) exists, else ``(False, None)``.

    The search runs over families of natural isomorphisms between the hom
    functors; each family is transported to a full witness and kept when its
    face matches y1."""
    if y1.source != y2.source or y1.target != y2.target:
        raise ValueError("edges have different endpoints")
    if y1.f != y2.f:
        return False, None
    A = y1.source.objects
    pairs = [(a, b) for a in A for b in A]
    options = []
    for p in pairs:
        F1 = y1.unary(*p)
        F2 = y2.unary(*p)
        isos = _iso_families(F1, lambda x, F2=F2: F2.obj[x], lambda m, F2=F2: F2.mor[m])
        T = F1.target
        isos.sort(key=lambda c: (any(m != T.id(T.src(m)) for m in c.values()), repr(sorted(c.items(), key=repr))))
        if not isos:
            return False, None
        options.append(isos)
    for pick in itertools.product(*options):
        w = _witness(y1, y2, dict(zip(pairs, pick)), build)
        if w is not None:
            return True, (w if build else None)
    return False, None


def homotopy_category(vertices: Sequence[VertexDendrex], edges: Sequence[EdgeDendrex]):
    """Objects are the vertices, arrows the left homotopy classes of the
    edges.  Composition goes through the corresponding homomorphisms and is
    checked to be well defined on classes.  Returns ``(category, classes)``
    with ``classes[name] = list of edges``."""
    vertices = list(vertices)

    def index(x):
        for k, v in enumerate(vertices):
            if v == x:
                return k
        raise ValueError("edge endpoint is not among the vertices")

    reps: dict = {}
    classes: dict = {}
    member: list = []
    for y in edges:
        u, v = index(y.source), index(y.target)
        for name in reps.get((u, v), []):
            if left_homotopic(classes[name][0], y, build=False)[0]:
                classes[name].append(y)
                member.append(name)
                break
        else:
            name = f"e{len(classes)}"
            reps.setdefault((u, v), []).append(name)
            classes[name] = [y]
            member.append(name)

    def find(y, u, v):
        for name in reps.get((u, v), []):
            if left_homotopic(classes[name][0], y, build=False)[0]:
                return name
        return None

    unb = [unbiased_from_vertex(x) for x in vertices]
    identities = {}
    for k, x in enumerate(vertices):
        name = find(degenerate_edge(x), k, k)
        if name is None:
            raise ValueError(f"no identity edge at vertex {k}")
        identities[k] = name
    morphisms = {name: (index(ys[0].source), index(ys[0].target)) for name, ys in classes.items()}
    comp = {}
    for g, (v, w) in morphisms.items():
        for f_, (u, v2) in morphisms.items():
            if v2 != v:
                continue
            got = set()
            for y1 in classes[f_]:
                for y2 in classes[g]:
                    H = compose_homs(recover_hom(y1, unb[u], unb[v]), recover_hom(y2, unb[v], unb[w]))
                    name = find(phi_hom(H, vertices[u], vertices[w]), u, w)
                    if name is None:
                        raise ValueError(f"composite of {f_} and {g} is not among the edges")
                    got.add(name)
            if len(got) != 1:
                raise ValueError(f"composition of classes {f_}, {g} is not well defined")
            comp[(g, f_)] = got.pop()
    C = FinCat(list(range(len(vertices))), morphisms, identities, comp, name="ho")
    return C, classes


# ---------------------------------------------------------------------------
# fixtures

def _monoid_bicategory(elements, mult, unit, name) -> ClassicalBicategory:
    """One object, discrete hom category on a monoid, identity 2-cells."""
    C = discrete(elements)
    C.name = name
    return strict_bicategory(["*"], {("*", "*"): C},
                             lambda a, b, c, x, y: mult(x, y),
                             lambda a, b, c, m, n: ("id", mult(m[1], n[1])),
                             {"*": unit}, name)


def _posetal(objects, n, name) -> ClassicalBicategory:
    """Every hom category the chain ``0 < ... < n-1``; composition is max."""
    C = chain_poset(n)
    hom = {(a, b): C for a in objects for b in objects}
    return strict_bicategory(objects, hom, lambda a, b, c, x, y: max(x, y),
                             lambda a, b, c, m, k: (max(m[0], k[0]), max(m[1], k[1])),
                             {a: 0 for a in objects}, name)


def _z2_bicategory(assoc: str = "e") -> ClassicalBicategory:
    """One object, one 1-cell, 2-cells the group Z/2; ``assoc`` fills every
    associator component (only ``"e"`` is coherent)."""
    def mult(g, f):
        return "e" if g == f else "s"
    C = monoid_category(["e", "s"], mult, "e", name="Z2")
    B = strict_bicategory(["*"], {("*", "*"): C}, lambda a, b, c, x, y: "*",
                          lambda a, b, c, m, n: mult(m, n), {"*": "*"}, "Z2" if assoc == "e" else "Z2-bad")
    for k in B.assoc:
        B.assoc[k] = {t: assoc for t in B.assoc[k]}
    return B


def _codiscrete_bicategory() -> ClassicalBicategory:
    """One object, two uniquely isomorphic 1-cells, composition constantly
    ``e``; the unitors are not identities."""
    C = indiscrete(["e", "s"], name="codiscrete")
    B = strict_bicategory(["*"], {("*", "*"): C}, lambda a, b, c, x, y: "e",
                          lambda a, b, c, m, n: ("e", "e"), {"*": "e"}, "codiscrete")
    B.lunit[("*", "*")] = {f: ("e", f) for f in C.objects}
    B.runit[("*", "*")] = {f: ("e", f) for f in C.objects}
    return B


def bicat_corpus() -> dict[str, ClassicalBicategory]:
    return {
        "monoid_es": _monoid_bicategory(["e", "s"], lambda x, y: "e" if x == y else "s", "e", "monoid_es"),
        "chain": _posetal(["*"], 2, "chain"),
        "chain_2obj": _posetal(["x", "y"], 2, "chain_2obj"),
        "z2": _z2_bicategory(),
        "codiscrete": _codiscrete_bicategory(),
    }


def pentagon_mutant() -> ClassicalBicategory:
    return _z2_bicategory("s")
