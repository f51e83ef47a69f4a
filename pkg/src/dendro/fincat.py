"""Finite categories, functors, natural transformations and the interval H.

Morphisms are named by hashable values; ``comp[(g, f)]`` is ``g o f`` (first
``f``).  Products of categories have tuples as objects and as morphisms.

Multi-input functors ``C_1 x ... x C_n -> C`` (:class:`MultiFunctor`) are the
currency of the enriched constructions: they compose along an input with
``compose_at`` and natural isomorphisms between them whisker the same way.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Any, Callable, Hashable, Iterable, Sequence

__all__ = [
    "FinCat",
    "FinFunctor",
    "FinNatTrans",
    "MultiFunctor",
    "MultiNat",
    "Interval",
    "interval",
    "terminal",
    "product_cat",
    "hypercube",
    "arrow_category",
    "group_groupoid",
    "poset_category",
    "chain_poset",
    "monoid_category",
    "discrete",
    "check_nat_iso",
    "enumerate_functors",
    "find_isomorphism",
    "functor_from_spanning",
    "fixture_corpus",
]


class FinCat:
    """A finite category given by tables."""

    def __init__(self, objects: Iterable, morphisms: dict, identities: dict, comp: dict,
                 name: str | None = None):
        self.objects = tuple(objects)
        self.morphisms = dict(morphisms)      # name -> (src, tgt)
        self.identities = dict(identities)    # object -> name
        self.comp = dict(comp)                # (g, f) -> g o f
        self.name = name
        self._hom: dict = {}
        for m, (a, b) in self.morphisms.items():
            self._hom.setdefault((a, b), []).append(m)

    def __repr__(self):
        return f"FinCat({self.name or '?'}: {len(self.objects)} objects, {len(self.morphisms)} morphisms)"

    def __eq__(self, other):
        return (isinstance(other, FinCat) and set(self.objects) == set(other.objects)
                and self.morphisms == other.morphisms and self.identities == other.identities
                and self.comp == other.comp)

    def __hash__(self):
        return hash((frozenset(self.objects), frozenset(self.morphisms.items())))

    def src(self, f):
        return self.morphisms[f][0]

    def tgt(self, f):
        return self.morphisms[f][1]

    def id(self, a):
        return self.identities[a]

    def hom(self, a, b) -> list:
        return list(self._hom.get((a, b), ()))

    def compose(self, g, f):
        """``g o f``."""
        return self.comp[(g, f)]

    def composable_pairs(self):
        for f, (a, b) in self.morphisms.items():
            for (x, y), gs in self._hom.items():
                if x == b:
                    for g in gs:
                        yield g, f

    def inverse(self, f):
        a, b = self.morphisms[f]
        for g in self.hom(b, a):
            if self.comp.get((g, f)) == self.id(a) and self.comp.get((f, g)) == self.id(b):
                return g
        return None

    def is_iso(self, f) -> bool:
        return self.inverse(f) is not None

    def is_groupoid(self) -> bool:
        return all(self.is_iso(f) for f in self.morphisms)

    def validate(self) -> list[str]:
        """Check the category laws exhaustively; returns violations."""
        errs = []
        for a in self.objects:
            i = self.identities.get(a)
            if i is None or self.morphisms.get(i) != (a, a):
                errs.append(f"bad identity at {a!r}")
        if errs:
            return errs
        for f, (a, b) in self.morphisms.items():
            if a not in self.objects or b not in self.objects:
                errs.append(f"morphism {f!r} has unknown endpoints")
                continue
            if self.comp.get((self.id(b), f)) != f or self.comp.get((f, self.id(a))) != f:
                errs.append(f"identity law fails at {f!r}")
        pairs = list(self.composable_pairs())
        for g, f in pairs:
            h = self.comp.get((g, f))
            if h is None:
                errs.append(f"missing composite {g!r} o {f!r}")
            elif self.morphisms.get(h) != (self.src(f), self.tgt(g)):
                errs.append(f"composite {g!r} o {f!r} has wrong type")
        if errs:
            return errs
        for g, f in pairs:
            gf = self.comp[(g, f)]
            for h in self.morphisms:
                if self.src(h) == self.tgt(g):
                    if self.comp[(h, gf)] != self.comp[(self.comp[(h, g)], f)]:
                        errs.append(f"associativity fails at ({h!r}, {g!r}, {f!r})")
        return errs

    def to_json(self) -> dict:
        enc = _enc
        return {
            "name": self.name,
            "objects": [enc(o) for o in self.objects],
            "morphisms": [{"name": enc(m), "src": enc(a), "tgt": enc(b)}
                          for m, (a, b) in sorted(self.morphisms.items(), key=repr)],
            "identities": [[enc(a), enc(i)] for a, i in sorted(self.identities.items(), key=repr)],
            "composition": [[enc(g), enc(f), enc(h)] for (g, f), h in sorted(self.comp.items(), key=repr)],
        }

    @classmethod
    def from_json(cls, data) -> "FinCat":
        if isinstance(data, str):
            data = json.loads(data)
        dec = _dec
        mors = {dec(m["name"]): (dec(m["src"]), dec(m["tgt"])) for m in data["morphisms"]}
        ids = {dec(a): dec(i) for a, i in data["identities"]}
        comp = {(dec(g), dec(f)): dec(h) for g, f, h in data["composition"]}
        return cls([dec(o) for o in data["objects"]], mors, ids, comp, data.get("name"))


def _enc(x):
    if isinstance(x, tuple):
        return [_enc(y) for y in x]
    return x


def _dec(x):
    if isinstance(x, list):
        return tuple(_dec(y) for y in x)
    return x


# ---------------------------------------------------------------------------
# functors and natural transformations

@dataclass
class FinFunctor:
    source: FinCat
    target: FinCat
    obj: dict
    mor: dict

    def validate(self) -> list[str]:
        errs = []
        S, T = self.source, self.target
        for a in S.objects:
            if self.mor.get(S.id(a)) != T.id(self.obj[a]):
                errs.append(f"identity at {a!r} not preserved")
        for f, (a, b) in S.morphisms.items():
            if T.morphisms.get(self.mor.get(f)) != (self.obj[a], self.obj[b]):
                errs.append(f"{f!r} mapped with wrong type")
        if errs:
            return errs
        for g, f in S.composable_pairs():
            if self.mor[S.compose(g, f)] != T.compose(self.mor[g], self.mor[f]):
                errs.append(f"composition {g!r} o {f!r} not preserved")
        return errs

    def then(self, G: "FinFunctor") -> "FinFunctor":
        return FinFunctor(self.source, G.target, {a: G.obj[x] for a, x in self.obj.items()},
                          {f: G.mor[x] for f, x in self.mor.items()})

    def __eq__(self, other):
        return isinstance(other, FinFunctor) and self.obj == other.obj and self.mor == other.mor

    def __hash__(self):
        return hash((frozenset(self.obj.items()), frozenset(self.mor.items())))


@dataclass
class FinNatTrans:
    F: FinFunctor
    G: FinFunctor
    comps: dict

    def failures(self) -> list:
        """Morphisms whose naturality square does not commute."""
        T = self.F.target
        bad = []
        for f, (a, b) in self.F.source.morphisms.items():
            lhs = T.comp.get((self.comps[b], self.F.mor[f]))
            rhs = T.comp.get((self.G.mor[f], self.comps[a]))
            if lhs is None or lhs != rhs:
                bad.append(f)
        return bad


def check_nat_iso(F: FinFunctor, G: FinFunctor, components: dict) -> tuple[bool, list]:
    """True iff ``components`` is a natural isomorphism ``F => G``; the second
    value lists failing morphisms (naturality) or objects (invertibility)."""
    if F.source is not G.source and F.source != G.source:
        raise ValueError("functors are not parallel")
    if F.target is not G.target and F.target != G.target:
        raise ValueError("functors are not parallel")
    T = F.target
    bad = []
    for a in F.source.objects:
        c = components.get(a)
        if c is None or T.morphisms.get(c) != (F.obj[a], G.obj[a]) or not T.is_iso(c):
            bad.append(("object", a))
    if bad:
        return False, bad
    bad = [("morphism", f) for f in FinNatTrans(F, G, components).failures()]
    return not bad, bad


# ---------------------------------------------------------------------------
# constructions

def terminal() -> FinCat:
    return FinCat(["*"], {"id*": ("*", "*")}, {"*": "id*"}, {("id*", "id*"): "id*"}, name="*")


def discrete(objs: Iterable) -> FinCat:
    objs = list(objs)
    return FinCat(objs, {("id", o): (o, o) for o in objs}, {o: ("id", o) for o in objs},
                  {(("id", o), ("id", o)): ("id", o) for o in objs}, name="discrete")


def indiscrete(objs: Iterable, name: str | None = None, naming: Callable | None = None) -> FinCat:
    """Exactly one morphism between any two objects."""
    objs = list(objs)
    nm = naming or (lambda a, b: (a, b))
    mors = {nm(a, b): (a, b) for a in objs for b in objs}
    ids = {a: nm(a, a) for a in objs}
    comp = {(nm(b, c), nm(a, b)): nm(a, c) for a in objs for b in objs for c in objs}
    return FinCat(objs, mors, ids, comp, name=name)


def product_cat(cats: Sequence[FinCat]) -> FinCat:
    """Cartesian product; the empty product is the terminal category."""
    cats = list(cats)
    if not cats:
        return terminal_product()
    objs = list(itertools.product(*(c.objects for c in cats)))
    mors = {}
    for ms in itertools.product(*(list(c.morphisms) for c in cats)):
        mors[ms] = (tuple(c.src(m) for c, m in zip(cats, ms)), tuple(c.tgt(m) for c, m in zip(cats, ms)))
    ids = {o: tuple(c.id(x) for c, x in zip(cats, o)) for o in objs}
    comp = {}
    for f, (a, b) in mors.items():
        for g in _hom_product(cats, b):
            comp[(g, f)] = tuple(c.compose(x, y) for c, x, y in zip(cats, g, f))
    return FinCat(objs, mors, ids, comp, name="x".join(c.name or "?" for c in cats))


def _hom_product(cats, a):
    """Morphisms of the product with source ``a``."""
    choices = [[m for m in c.morphisms if c.src(m) == x] for c, x in zip(cats, a)]
    return itertools.product(*choices)


def terminal_product() -> FinCat:
    """The empty product, with the empty tuple as its object."""
    return FinCat([()], {(): ((), ())}, {(): ()}, {((), ()): ()}, name="*")


@dataclass
class Interval:
    """The interval H: two uniquely isomorphic objects 0, 1."""
    H: FinCat
    zero: Any
    one: Any

    def join_obj(self, x, y):
        return max(x, y)

    def join_mor(self, f, g):
        """``f v g`` on morphisms of H x H."""
        a = max(self.H.src(f), self.H.src(g))
        b = max(self.H.tgt(f), self.H.tgt(g))
        return self.H.hom(a, b)[0]

    def join_functor(self) -> FinFunctor:
        HH = product_cat([self.H, self.H])
        return FinFunctor(HH, self.H, {o: self.join_obj(*o) for o in HH.objects},
                          {m: self.join_mor(*m) for m in HH.morphisms})

    def augmentation(self) -> FinFunctor:
        T = terminal()
        return FinFunctor(self.H, T, {o: "*" for o in self.H.objects},
                          {m: "id*" for m in self.H.morphisms})

    def point(self, x) -> FinFunctor:
        T = terminal()
        return FinFunctor(T, self.H, {"*": x}, {"id*": self.H.id(x)})

    def check_laws(self) -> list[str]:
        """Associativity of v, 0 neutral, 1 absorbing, eps.0 = eps.1 = id."""
        errs = list(self.H.validate())
        J = self.join_functor()
        errs += [f"join: {e}" for e in J.validate()]
        H = self.H
        ms = list(H.morphisms)
        for f, g, h in itertools.product(ms, repeat=3):
            if self.join_mor(self.join_mor(f, g), h) != self.join_mor(f, self.join_mor(g, h)):
                errs.append(f"associativity fails at {(f, g, h)}")
        z, o = H.id(self.zero), H.id(self.one)
        for f in ms:
            if self.join_mor(z, f) != f or self.join_mor(f, z) != f:
                errs.append(f"0 is not neutral at {f!r}")
            if self.join_mor(o, f) != o or self.join_mor(f, o) != o:
                errs.append(f"1 is not absorbing at {f!r}")
        eps = self.augmentation()
        T = terminal()
        for p in (self.zero, self.one):
            comp = self.point(p).then(eps)
            if comp.obj != {"*": "*"} or comp.mor != {"id*": T.id("*")}:
                errs.append(f"eps after point {p} is not the identity")
        return errs


def interval() -> Interval:
    naming = lambda a, b: f"{a}{b}"
    H = indiscrete([0, 1], name="H", naming=naming)
    return Interval(H, 0, 1)


def hypercube(k: int) -> FinCat:
    """H^k as the indiscrete groupoid on {0,1}^k."""
    objs = list(itertools.product((0, 1), repeat=k))
    return indiscrete(objs, name=f"H^{k}")


def arrow_category() -> FinCat:
    return FinCat([0, 1], {"id0": (0, 0), "id1": (1, 1), "f": (0, 1)}, {0: "id0", 1: "id1"},
                  {("id0", "id0"): "id0", ("id1", "id1"): "id1", ("f", "id0"): "f", ("id1", "f"): "f"},
                  name="arrow")


def group_groupoid() -> FinCat:
    """Two objects a, b, each with automorphism group Z/2, connected by isos."""
    objs = ["a", "b"]
    mors, comp = {}, {}
    for x in objs:
        for y in objs:
            for k in (0, 1):
                mors[(x, y, k)] = (x, y)
    for (x, y, k) in list(mors):
        for (y2, z, l) in list(mors):
            if y2 == y:
                comp[((y, z, l), (x, y, k))] = (x, z, (k + l) % 2)
    return FinCat(objs, mors, {x: (x, x, 0) for x in objs}, comp, name="groupoid2")


def poset_category(elements: Sequence, leq: Callable) -> FinCat:
    mors = {(a, b): (a, b) for a in elements for b in elements if leq(a, b)}
    comp = {((b, c), (a, b)): (a, c) for (a, b) in mors for (b2, c) in mors if b2 == b}
    return FinCat(list(elements), mors, {a: (a, a) for a in elements}, comp, name="poset")


def chain_poset(n: int) -> FinCat:
    c = poset_category(list(range(n)), lambda a, b: a <= b)
    c.name = f"[{n - 1}]"
    return c


def monoid_category(elements: Sequence, mult: Callable, unit, name="monoid") -> FinCat:
    """One-object category from a finite monoid."""
    mors = {m: ("*", "*") for m in elements}
    comp = {(g, f): mult(g, f) for g in elements for f in elements}
    return FinCat(["*"], mors, {"*": unit}, comp, name=name)


def fixture_corpus() -> dict[str, FinCat]:
    return {
        "terminal": terminal(),
        "H": interval().H,
        "arrow": arrow_category(),
        "groupoid2": group_groupoid(),
        "poset3": chain_poset(3),
    }


# ---------------------------------------------------------------------------
# search

def enumerate_functors(C: FinCat, D: FinCat) -> list[FinFunctor]:
    """All functors ``C -> D`` (brute force over object maps, then morphisms)."""
    out = []
    mors = list(C.morphisms)
    for objs in itertools.product(D.objects, repeat=len(C.objects)):
        om = dict(zip(C.objects, objs))
        choices = []
        for f in mors:
            a, b = C.morphisms[f]
            if f == C.id(a) and a == b:
                choices.append([D.id(om[a])])
            else:
                choices.append(D.hom(om[a], om[b]))
        for pick in itertools.product(*choices):
            F = FinFunctor(C, D, om, dict(zip(mors, pick)))
            if not F.validate():
                out.append(F)
    return out


def find_isomorphism(C: FinCat, D: FinCat) -> FinFunctor | None:
    """An isomorphism of categories ``C -> D`` if one exists."""
    if len(C.objects) != len(D.objects) or len(C.morphisms) != len(D.morphisms):
        return None
    for objs in itertools.permutations(D.objects):
        om = dict(zip(C.objects, objs))
        if any(len(C.hom(a, b)) != len(D.hom(om[a], om[b])) for a in C.objects for b in C.objects):
            continue
        blocks = []
        keys = []
        for a in C.objects:
            for b in C.objects:
                src = C.hom(a, b)
                keys.append(src)
                blocks.append(list(itertools.permutations(D.hom(om[a], om[b]))))
        for pick in itertools.product(*blocks):
            mm = {}
            for src, tgt in zip(keys, pick):
                mm.update(zip(src, tgt))
            F = FinFunctor(C, D, om, mm)
            if not F.validate():
                return F
    return None


def functor_from_spanning(k: int, target: FinCat, obj_images: dict, edge_images: dict) -> FinFunctor | None:
    """Extend object images plus isomorphisms along the spanning tree of
    ``hypercube(k)`` (edges ``0..0 -> e_j + lower bits``) to a functor, or
    return None when the data does not extend.

    The spanning tree joins each object ``x != 0`` to ``x`` with its highest
    set bit cleared."""
    C = hypercube(k)
    zero = (0,) * k

    def parent(x):
        j = max(i for i, b in enumerate(x) if b)
        return x[:j] + (0,) + x[j + 1:]

    # path from zero to x through parents, as a composite in the target
    to: dict = {zero: target.id(obj_images[zero])}
    for x in sorted(C.objects, key=sum):
        if x == zero:
            continue
        p = parent(x)
        e = edge_images[(p, x)]
        if target.morphisms.get(e) != (obj_images[p], obj_images[x]) or not target.is_iso(e):
            return None
        to[x] = target.compose(e, to[p])
    mor = {}
    for (a, b) in C.morphisms:
        mor[(a, b)] = target.compose(to[b], target.inverse(to[a]))
    F = FinFunctor(C, target, dict(obj_images), mor)
    return F if not F.validate() else None


# ---------------------------------------------------------------------------
# multi-input functors

class MultiFunctor:
    """A functor ``C_1 x ... x C_n -> C`` stored as tables on tuples.

    ``inputs`` names the factors (used only for bookkeeping)."""

    __slots__ = ("inputs", "cats", "target", "obj", "mor", "_key")

    def __init__(self, inputs: Sequence[Hashable], cats: Sequence[FinCat], target: FinCat,
                 obj: dict, mor: dict):
        self.inputs = tuple(inputs)
        self.cats = tuple(cats)
        self.target = target
        self.obj = dict(obj)
        self.mor = dict(mor)
        self._key = None

    @property
    def arity(self):
        return len(self.cats)

    def key(self):
        if self._key is None:
            self._key = (frozenset(self.obj.items()), frozenset(self.mor.items()))
        return self._key

    def __eq__(self, other):
        return (isinstance(other, MultiFunctor) and self.arity == other.arity
                and self.obj == other.obj and self.mor == other.mor)

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"MultiFunctor({list(self.inputs)} -> {self.target.name})"

    def domain_objects(self):
        return itertools.product(*(c.objects for c in self.cats))

    def domain_morphisms(self):
        return itertools.product(*(list(c.morphisms) for c in self.cats))

    def renamed(self, inputs: Sequence[Hashable]) -> "MultiFunctor":
        return MultiFunctor(inputs, self.cats, self.target, self.obj, self.mor)

    def validate(self) -> list[str]:
        errs = []
        T = self.target
        for x in self.domain_objects():
            if x not in self.obj:
                errs.append(f"no object image at {x!r}")
        if errs:
            return errs
        for x in self.domain_objects():
            ids = tuple(c.id(a) for c, a in zip(self.cats, x))
            if self.mor.get(ids) != T.id(self.obj[x]):
                errs.append(f"identity at {x!r} not preserved")
        for f in self.domain_morphisms():
            src = tuple(c.src(m) for c, m in zip(self.cats, f))
            tgt = tuple(c.tgt(m) for c, m in zip(self.cats, f))
            if T.morphisms.get(self.mor.get(f)) != (self.obj[src], self.obj[tgt]):
                errs.append(f"morphism {f!r} mapped with wrong type")
        if errs:
            return errs
        for f in self.domain_morphisms():
            tgt = tuple(c.tgt(m) for c, m in zip(self.cats, f))
            for g in itertools.product(*([m for m in c.morphisms if c.src(m) == t]
                                          for c, t in zip(self.cats, tgt))):
                gf = tuple(c.compose(a, b) for c, a, b in zip(self.cats, g, f))
                if self.mor[gf] != T.compose(self.mor[g], self.mor[f]):
                    errs.append(f"composition {g!r} o {f!r} not preserved")
        return errs

    def compose_at(self, i: int, G: "MultiFunctor") -> "MultiFunctor":
        """``self o_i G``: feed the output of ``G`` into input ``i``."""
        if G.target != self.cats[i]:
            raise ValueError("target of the inner functor does not match input category")
        m = G.arity
        cats = self.cats[:i] + G.cats + self.cats[i + 1:]
        names = self.inputs[:i] + G.inputs + self.inputs[i + 1:]
        obj = {}
        for x in itertools.product(*(c.objects for c in cats)):
            obj[x] = self.obj[x[:i] + (G.obj[x[i:i + m]],) + x[i + m:]]
        mor = {}
        for f in itertools.product(*(list(c.morphisms) for c in cats)):
            mor[f] = self.mor[f[:i] + (G.mor[f[i:i + m]],) + f[i + m:]]
        return MultiFunctor(names, cats, self.target, obj, mor)

    def permuted(self, order: Sequence[int]) -> "MultiFunctor":
        """Reorder inputs: new input ``k`` is old input ``order[k]``."""
        cats = tuple(self.cats[o] for o in order)
        obj = {tuple(x[o] for o in order): y for x, y in self.obj.items()}
        mor = {tuple(f[o] for o in order): y for f, y in self.mor.items()}
        return MultiFunctor(tuple(self.inputs[o] for o in order), cats, self.target, obj, mor)

    @classmethod
    def identity(cls, C: FinCat, name: Hashable = 0) -> "MultiFunctor":
        return cls((name,), (C,), C, {(a,): a for a in C.objects}, {(f,): f for f in C.morphisms})

    @classmethod
    def constant(cls, C: FinCat, x) -> "MultiFunctor":
        """A nullary functor picking the object ``x``."""
        return cls((), (), C, {(): x}, {(): C.id(x)})

    def to_json(self) -> dict:
        return {"inputs": [_enc(i) for i in self.inputs],
                "obj": [[_enc(k), _enc(v)] for k, v in sorted(self.obj.items(), key=repr)],
                "mor": [[_enc(k), _enc(v)] for k, v in sorted(self.mor.items(), key=repr)]}

    @classmethod
    def from_json(cls, data, cats, target) -> "MultiFunctor":
        return cls([_dec(i) for i in data["inputs"]], cats, target,
                   {tuple(_dec(k)): _dec(v) for k, v in data["obj"]},
                   {tuple(_dec(k)): _dec(v) for k, v in data["mor"]})


class MultiNat:
    """A natural transformation between parallel multi-functors."""

    __slots__ = ("F", "G", "comps")

    def __init__(self, F: MultiFunctor, G: MultiFunctor, comps: dict):
        self.F, self.G, self.comps = F, G, dict(comps)

    def __eq__(self, other):
        return isinstance(other, MultiNat) and self.comps == other.comps

    def __hash__(self):
        return hash(frozenset(self.comps.items()))

    def __repr__(self):
        return f"MultiNat({len(self.comps)} components)"

    @classmethod
    def identity(cls, F: MultiFunctor) -> "MultiNat":
        return cls(F, F, {x: F.target.id(y) for x, y in F.obj.items()})

    def is_identity(self) -> bool:
        T = self.F.target
        return all(T.identities[self.F.obj[x]] == c for x, c in self.comps.items())

    def validate(self, iso: bool = True) -> list[str]:
        F, G, T = self.F, self.G, self.F.target
        errs = []
        for x in F.domain_objects():
            c = self.comps.get(x)
            if c is None or T.morphisms.get(c) != (F.obj[x], G.obj[x]):
                errs.append(f"component at {x!r} has wrong type")
            elif iso and not T.is_iso(c):
                errs.append(f"component at {x!r} is not invertible")
        if errs:
            return errs
        for f in F.domain_morphisms():
            src = tuple(c.src(m) for c, m in zip(F.cats, f))
            tgt = tuple(c.tgt(m) for c, m in zip(F.cats, f))
            if T.compose(self.comps[tgt], F.mor[f]) != T.compose(G.mor[f], self.comps[src]):
                errs.append(f"naturality fails at {f!r}")
        return errs

    def then(self, other: "MultiNat") -> "MultiNat":
        """Vertical composite: first ``self``, then ``other``."""
        T = self.F.target
        return MultiNat(self.F, other.G, {x: T.compose(other.comps[x], c) for x, c in self.comps.items()})

    def inverse(self) -> "MultiNat":
        T = self.F.target
        return MultiNat(self.G, self.F, {x: T.inverse(c) for x, c in self.comps.items()})

    def whisker_left(self, H: MultiFunctor, i: int) -> "MultiNat":
        """``H o_i self``: ``H o_i F => H o_i G``."""
        F, G = self.F, self.G
        m = F.arity
        HF, HG = H.compose_at(i, F), H.compose_at(i, G)
        comps = {}
        for x in HF.domain_objects():
            ids = tuple(c.id(a) for c, a in zip(HF.cats, x))
            comps[x] = H.mor[ids[:i] + (self.comps[x[i:i + m]],) + ids[i + m:]]
        return MultiNat(HF, HG, comps)

    def whisker_right(self, i: int, K: MultiFunctor) -> "MultiNat":
        """``self o_i K``: ``F o_i K => G o_i K``."""
        F, G = self.F, self.G
        m = K.arity
        FK, GK = F.compose_at(i, K), G.compose_at(i, K)
        comps = {x: self.comps[x[:i] + (K.obj[x[i:i + m]],) + x[i + m:]] for x in FK.domain_objects()}
        return MultiNat(FK, GK, comps)

    def permuted(self, order: Sequence[int]) -> "MultiNat":
        return MultiNat(self.F.permuted(order), self.G.permuted(order),
                        {tuple(x[o] for o in order): c for x, c in self.comps.items()})

    def to_json(self) -> dict:
        return {"comps": [[_enc(k), _enc(v)] for k, v in sorted(self.comps.items(), key=repr)]}
