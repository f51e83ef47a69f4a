"""Finite coloured symmetric operads.

A signature is a pair ``(inputs, output)`` with ``inputs`` a tuple of
colours.  Indices for partial composition are 0-based: ``compose(sf, f, i,
sg, g)`` plugs ``g`` into input ``i`` of ``f``.  A permutation ``tau`` acts on
a signature by ``inputs' [k] = inputs[tau[k]]``.

Operads built from a planar operad with at most one operation per planar
signature (``As_A`` and its tensor with ``Omega(C1)``) are symmetrized
freely: an operation on a signature is a permutation ``pi`` such that the
planar reordering ``inputs[pi[0]], inputs[pi[1]], ...`` is admissible.
"""

from __future__ import annotations

import itertools
import json
from typing import Callable, Iterable, Iterator

from .trees import Tree, subtree_vertices

__all__ = [
    "FiniteOperad",
    "TableOperad",
    "SymmetrizedPlanar",
    "OmegaOperad",
    "make_asA",
    "make_ass",
    "omega_operad",
    "validate_operad",
    "check_operad_map",
    "FreeOperadMap",
    "enumerate_operad_maps",
    "evaluate",
    "bv_tensor_asA_c1",
    "bv_tensor_oracle",
    "tensor_projection_asA",
    "tensor_inclusions",
    "asA_map",
    "inverse_perm",
]


def inverse_perm(p):
    inv = [0] * len(p)
    for k, x in enumerate(p):
        inv[x] = k
    return tuple(inv)


def permute_sig(sig, tau):
    ins, out = sig
    return tuple(ins[t] for t in tau), out


def compose_sig(sf, i, sg):
    ins, out = sf
    if ins[i] != sg[1]:
        raise ValueError(f"colour mismatch at input {i}: {ins[i]!r} vs {sg[1]!r}")
    return ins[:i] + sg[0] + ins[i + 1:], out


class FiniteOperad:
    """Interface shared by all operads in this package."""

    colours: tuple = ()

    def ops(self, inputs: tuple, output) -> tuple:
        raise NotImplementedError

    def unit(self, c):
        raise NotImplementedError

    def compose(self, sf, f, i, sg, g):
        raise NotImplementedError

    def act(self, sig, f, tau):
        raise NotImplementedError

    def signatures(self, max_arity: int) -> Iterator[tuple]:
        """Signatures with at least one operation, arity at most ``max_arity``."""
        cs = self.colours
        for n in range(max_arity + 1):
            for ins in itertools.product(cs, repeat=n):
                for out in cs:
                    if self.ops(ins, out):
                        yield ins, out

    def to_table(self, max_arity: int) -> "TableOperad":
        """Materialize every table entry up to ``max_arity``."""
        sigs = list(self.signatures(max_arity))
        ops = {s: tuple(self.ops(*s)) for s in sigs}
        comp = {}
        by_out: dict = {}
        for s in sigs:
            by_out.setdefault(s[1], []).append(s)
        for sf in sigs:
            for i, c in enumerate(sf[0]):
                for sg in by_out.get(c, ()):
                    if len(sf[0]) - 1 + len(sg[0]) > max_arity:
                        continue
                    for f in ops[sf]:
                        for g in ops[sg]:
                            comp[(sf, f, i, sg, g)] = self.compose(sf, f, i, sg, g)
        sym = {}
        for s in sigs:
            for tau in itertools.permutations(range(len(s[0]))):
                for f in ops[s]:
                    sym[(s, f, tau)] = self.act(s, f, tau)
        return TableOperad(self.colours, ops, {c: self.unit(c) for c in self.colours}, comp, sym)


class TableOperad(FiniteOperad):
    """An operad given by explicit finite tables (truncated at some arity)."""

    def __init__(self, colours, ops: dict, units: dict, comp: dict, sym: dict | None = None):
        self.colours = tuple(colours)
        self._ops = {(tuple(s[0]), s[1]): tuple(v) for s, v in ops.items()}
        self._units = dict(units)
        self.comp = dict(comp)
        self.sym = dict(sym or {})
        self.max_arity = max((len(s[0]) for s in self._ops), default=0)

    def ops(self, inputs, output):
        return self._ops.get((tuple(inputs), output), ())

    def unit(self, c):
        return self._units[c]

    def compose(self, sf, f, i, sg, g):
        try:
            return self.comp[(sf, f, i, sg, g)]
        except KeyError:
            raise KeyError(f"composition table has no entry for {(sf, f, i, sg, g)!r}") from None

    def act(self, sig, f, tau):
        if tuple(tau) == tuple(range(len(tau))):
            return self.sym.get((sig, f, tuple(tau)), f)
        return self.sym[(sig, f, tuple(tau))]

    def signatures(self, max_arity):
        for s, v in sorted(self._ops.items(), key=repr):
            if v and len(s[0]) <= max_arity:
                yield s

    def to_json(self) -> dict:
        enc = _encode
        return {
            "colours": [enc(c) for c in self.colours],
            "ops": [{"in": [enc(c) for c in s[0]], "out": enc(s[1]), "ops": [enc(o) for o in v]}
                    for s, v in sorted(self._ops.items(), key=repr)],
            "units": [[enc(c), enc(u)] for c, u in sorted(self._units.items(), key=repr)],
            "comp": [[_enc_sig(k[0]), enc(k[1]), k[2], _enc_sig(k[3]), enc(k[4]), enc(v)]
                     for k, v in sorted(self.comp.items(), key=repr)],
            "sym": [[_enc_sig(k[0]), enc(k[1]), list(k[2]), enc(v)]
                    for k, v in sorted(self.sym.items(), key=repr)],
        }

    @classmethod
    def from_json(cls, data) -> "TableOperad":
        if isinstance(data, str):
            data = json.loads(data)
        dec = _decode
        colours = [dec(c) for c in data["colours"]]
        ops = {(tuple(dec(c) for c in o["in"]), dec(o["out"])): [dec(x) for x in o["ops"]]
               for o in data["ops"]}
        units = {dec(c): dec(u) for c, u in data["units"]}
        comp = {(_dec_sig(a), dec(f), int(i), _dec_sig(b), dec(g)): dec(r)
                for a, f, i, b, g, r in data.get("comp", [])}
        sym = {(_dec_sig(a), dec(f), tuple(t)): dec(r) for a, f, t, r in data.get("sym", [])}
        return cls(colours, ops, units, comp, sym)


def _encode(x):
    if isinstance(x, tuple):
        return [_encode(y) for y in x]
    if isinstance(x, frozenset):
        return {"set": sorted((_encode(y) for y in x), key=repr)}
    return x


def _decode(x):
    if isinstance(x, list):
        return tuple(_decode(y) for y in x)
    if isinstance(x, dict) and "set" in x:
        return frozenset(_decode(y) for y in x["set"])
    return x


def _enc_sig(s):
    return [_encode(s[0]), _encode(s[1])]


def _dec_sig(s):
    return tuple(_decode(c) for c in s[0]), _decode(s[1])


class SymmetrizedPlanar(FiniteOperad):
    """Free symmetrization of a planar operad with at most one operation per
    planar signature.  ``planar_sigs(n)`` must list the admissible planar
    signatures of arity ``n``; ``admissible`` decides membership."""

    def __init__(self, colours, admissible: Callable, planar_sigs: Callable, name: str = "P"):
        self.colours = tuple(colours)
        self.admissible = admissible
        self.planar_sigs = planar_sigs
        self.name = name

    def __repr__(self):
        return f"<{self.name}>"

    def ops(self, inputs, output):
        inputs = tuple(inputs)
        found = []
        for pi in itertools.permutations(range(len(inputs))):
            if self.admissible(tuple(inputs[k] for k in pi), output):
                found.append(pi)
        return tuple(found)

    def unit(self, c):
        return (0,)

    def compose(self, sf, f, i, sg, g):
        m = len(sg[0])
        if sf[0][i] != sg[1]:
            raise ValueError("colour mismatch")

        def shift(j):
            return j if j < i else j + m - 1

        out = []
        for j in f:
            if j == i:
                out.extend(i + x for x in g)
            else:
                out.append(shift(j))
        return tuple(out)

    def act(self, sig, f, tau):
        inv = inverse_perm(tau)
        return tuple(inv[j] for j in f)

    def signatures(self, max_arity):
        seen = set()
        for n in range(max_arity + 1):
            for ins, out in self.planar_sigs(n):
                for perm in set(itertools.permutations(ins)):
                    s = (perm, out)
                    if s not in seen:
                        seen.add(s)
                        yield s


def _chains(A, n):
    """Tuples ``(a_0, ..., a_n)`` of objects."""
    return itertools.product(sorted(A), repeat=n + 1)


def make_asA(A: Iterable) -> SymmetrizedPlanar:
    """The operad whose algebras are categories with object set ``A``.

    Colours are pairs ``(a, b)``; a planar signature
    ``((a0,a1), (a1,a2), ..., (a_{n-1},a_n); (a0,a_n))`` carries exactly one
    operation (for ``n = 0`` this is ``(; (a,a))``)."""
    A = tuple(sorted(set(A)))
    colours = tuple(itertools.product(A, A))

    def admissible(ins, out):
        if not ins:
            return out[0] == out[1]
        if ins[0][0] != out[0] or ins[-1][1] != out[1]:
            return False
        return all(ins[k][1] == ins[k + 1][0] for k in range(len(ins) - 1))

    def planar_sigs(n):
        for ch in _chains(A, n):
            if n == 0:
                yield (), (ch[0], ch[0])
            else:
                yield tuple((ch[k], ch[k + 1]) for k in range(n)), (ch[0], ch[n])

    op = SymmetrizedPlanar(colours, admissible, planar_sigs, name=f"As_{''.join(map(str, A))}")
    op.objects = A
    return op


def make_ass() -> SymmetrizedPlanar:
    """The one-colour associative operad: ``Ass(n)`` is the symmetric group."""
    return make_asA(["*"])


class OmegaOperad(FiniteOperad):
    """The free operad ``Omega(T)``; a non-unit operation is the vertex set
    of a subtree, and its input order is the signature's order."""

    def __init__(self, T: Tree):
        self.tree = T
        self.colours = tuple(sorted(T.edges))

    def ops(self, inputs, output):
        inputs = tuple(inputs)
        if len(inputs) == 1 and inputs[0] == output:
            return ("id",)
        vs = subtree_vertices(self.tree, output, inputs)
        return (vs,) if vs else ()

    def unit(self, c):
        return "id"

    def compose(self, sf, f, i, sg, g):
        if sf[0][i] != sg[1]:
            raise ValueError("colour mismatch")
        if f == "id":
            return g
        if g == "id":
            return f
        return f | g

    def act(self, sig, f, tau):
        return f


def omega_operad(T: Tree) -> OmegaOperad:
    return OmegaOperad(T)


# ---------------------------------------------------------------------------
# validation

def _tau_after_outer(tau, i, m):
    """``(f.tau) o_{tau^-1(i)} g = (f o_i g) . tau'``; returns ``tau'``."""
    n = len(tau)
    inv = inverse_perm(tau)
    k = inv[i]  # position in the permuted signature holding old input i
    # the composite of f.tau at k has inputs: for positions p of tau, the old
    # input tau[p], with position k expanded into m inputs of g
    def old_index(j):  # index in f o_i g of old input j of f (j != i)
        return j if j < i else j + m - 1
    out = []
    for p in range(n):
        if p == k:
            out.extend(i + x for x in range(m))
        else:
            out.append(old_index(tau[p]))
    return tuple(out)


def _tau_after_inner(rho, i, n):
    """``f o_i (g.rho) = (f o_i g) . rho'``; returns ``rho'``."""
    m = len(rho)
    return tuple(range(i)) + tuple(i + r for r in rho) + tuple(range(i + m, n + m - 1))


def _perm_compose(a, b):
    """Acting by ``a`` then by ``b`` equals acting by ``a o b`` (``(a o b)[k] = a[b[k]]``)."""
    return tuple(a[k] for k in b)


def validate_operad(P: FiniteOperad, max_arity: int = 3, limit: int | None = None) -> list[dict]:
    """Check unit, associativity and equivariance laws on every table entry
    with arity at most ``max_arity``.  Returns the list of violations."""
    report: list[dict] = []
    sigs = list(P.signatures(max_arity))
    by_out: dict = {}
    for s in sigs:
        by_out.setdefault(s[1], []).append(s)
    opsof = {s: P.ops(*s) for s in sigs}

    def bad(law, **kw):
        report.append({"law": law, **{k: repr(v) for k, v in kw.items()}})
        return limit is not None and len(report) >= limit

    def safe(fn):
        try:
            return fn()
        except (KeyError, ValueError) as exc:
            return ("missing", str(exc))

    for s in sigs:
        ins, out = s
        for f in opsof[s]:
            u = P.unit(out)
            if safe(lambda: P.compose(((out,), out), u, 0, s, f)) != f:
                if bad("left unit", sig=s, op=f):
                    return report
            for i, c in enumerate(ins):
                if safe(lambda: P.compose(s, f, i, ((c,), c), P.unit(c))) != f:
                    if bad("right unit", sig=s, op=f, i=i):
                        return report
            ident = tuple(range(len(ins)))
            if safe(lambda: P.act(s, f, ident)) != f:
                if bad("identity permutation", sig=s, op=f):
                    return report
            for t1 in itertools.permutations(range(len(ins))):
                s1 = permute_sig(s, t1)
                f1 = safe(lambda: P.act(s, f, t1))
                for t2 in itertools.permutations(range(len(ins))):
                    lhs = safe(lambda: P.act(s1, f1, t2))
                    rhs = safe(lambda: P.act(s, f, _perm_compose(t1, t2)))
                    if lhs != rhs:
                        if bad("action", sig=s, op=f, perms=(t1, t2)):
                            return report

    for sf in sigs:
        n = len(sf[0])
        for i, c in enumerate(sf[0]):
            for sg in by_out.get(c, ()):
                m = len(sg[0])
                if n - 1 + m > max_arity:
                    continue
                sfg = compose_sig(sf, i, sg)
                for f in opsof[sf]:
                    for g in opsof[sg]:
                        fg = safe(lambda: P.compose(sf, f, i, sg, g))
                        # sequential associativity
                        for j, d in enumerate(sg[0]):
                            for sh in by_out.get(d, ()):
                                k = len(sh[0])
                                # intermediates must fit the truncation too
                                if max(n + m + k - 2, m + k - 1) > max_arity:
                                    continue
                                sgh = compose_sig(sg, j, sh)
                                for h in opsof[sh]:
                                    lhs = safe(lambda: P.compose(sf, f, i, sgh, P.compose(sg, g, j, sh, h)))
                                    rhs = safe(lambda: P.compose(sfg, fg, i + j, sh, h))
                                    if lhs != rhs:
                                        if bad("sequential associativity", f=(sf, f), i=i, g=(sg, g), j=j, h=(sh, h)):
                                            return report
                        # parallel associativity
                        for j in range(i + 1, n):
                            for sh in by_out.get(sf[0][j], ()):
                                k = len(sh[0])
                                if max(n + m + k - 2, n + k - 1) > max_arity:
                                    continue
                                sfh = compose_sig(sf, j, sh)
                                for h in opsof[sh]:
                                    lhs = safe(lambda: P.compose(sfh, P.compose(sf, f, j, sh, h), i, sg, g))
                                    rhs = safe(lambda: P.compose(sfg, fg, j + m - 1, sh, h))
                                    if lhs != rhs:
                                        if bad("parallel associativity", f=(sf, f), i=i, g=(sg, g), j=j, h=(sh, h)):
                                            return report
                        # equivariance in the outer operation
                        for tau in itertools.permutations(range(n)):
                            st = permute_sig(sf, tau)
                            k = inverse_perm(tau)[i]
                            lhs = safe(lambda: P.compose(st, P.act(sf, f, tau), k, sg, g))
                            rhs = safe(lambda: P.act(sfg, fg, _tau_after_outer(tau, i, m)))
                            if lhs != rhs:
                                if bad("outer equivariance", f=(sf, f), i=i, g=(sg, g), tau=tau):
                                    return report
                        # equivariance in the inner operation
                        for rho in itertools.permutations(range(m)):
                            sr = permute_sig(sg, rho)
                            lhs = safe(lambda: P.compose(sf, f, i, sr, P.act(sg, g, rho)))
                            rhs = safe(lambda: P.act(sfg, fg, _tau_after_inner(rho, i, n)))
                            if lhs != rhs:
                                if bad("inner equivariance", f=(sf, f), i=i, g=(sg, g), rho=rho):
                                    return report
    return report


def check_operad_map(P: FiniteOperad, Q: FiniteOperad, colour: Callable, op: Callable,
                     max_arity: int = 3) -> list[dict]:
    """Check that ``(colour, op)`` is a map ``P -> Q`` on signatures up to
    ``max_arity``.  ``op(sig, f)`` returns an operation of ``Q``."""
    report = []

    def img(s):
        return tuple(colour(c) for c in s[0]), colour(s[1])

    sigs = list(P.signatures(max_arity))
    by_out: dict = {}
    for s in sigs:
        by_out.setdefault(s[1], []).append(s)
    for s in sigs:
        for f in P.ops(*s):
            g = op(s, f)
            if g not in Q.ops(*img(s)):
                report.append({"law": "typing", "sig": repr(s), "op": repr(f)})
                continue
            for tau in itertools.permutations(range(len(s[0]))):
                if op(permute_sig(s, tau), P.act(s, f, tau)) != Q.act(img(s), g, tau):
                    report.append({"law": "symmetry", "sig": repr(s), "op": repr(f), "tau": tau})
    for c in P.colours:
        if op(((c,), c), P.unit(c)) != Q.unit(colour(c)):
            report.append({"law": "unit", "colour": repr(c)})
    for sf in sigs:
        for i, c in enumerate(sf[0]):
            for sg in by_out.get(c, ()):
                if len(sf[0]) + len(sg[0]) - 1 > max_arity:
                    continue
                sfg = compose_sig(sf, i, sg)
                for f in P.ops(*sf):
                    for g in P.ops(*sg):
                        lhs = op(sfg, P.compose(sf, f, i, sg, g))
                        rhs = Q.compose(img(sf), op(sf, f), i, img(sg), op(sg, g))
                        if lhs != rhs:
                            report.append({"law": "composition", "f": repr((sf, f)), "i": i,
                                           "g": repr((sg, g))})
    return report


# ---------------------------------------------------------------------------
# maps out of free operads

class FreeOperadMap:
    """A map ``Omega(T) -> P`` given by edge colours and generator images."""

    __slots__ = ("tree", "colour", "gen", "_key", "_hash")

    def __init__(self, tree: Tree, colour: dict, gen: dict):
        self.tree = tree
        self.colour = dict(colour)
        self.gen = dict(gen)
        self._key = (tuple(sorted(self.colour.items())), tuple(sorted(self.gen.items(), key=repr)))
        self._hash = hash(self._key)

    def __eq__(self, other):
        return isinstance(other, FreeOperadMap) and self.tree == other.tree and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FreeOperadMap(colour={self.colour}, gen={self.gen})"

    def sig(self, v):
        return tuple(self.colour[e] for e in self.tree.ins(v)), self.colour[v]


def enumerate_operad_maps(P: FiniteOperad, Q: FiniteOperad, max_arity: int = 3) -> list:
    """All operad maps ``P -> Q``.

    For ``P = Omega(T)`` only generator images are searched and the result
    is a list of :class:`FreeOperadMap`.  Otherwise the search runs over all
    colour maps and table assignments up to ``max_arity``, keeping those that
    pass :func:`check_operad_map`; results are ``(colour_dict, op_dict)``."""
    if isinstance(P, OmegaOperad):
        return free_maps(P.tree, Q)
    sigs = list(P.signatures(max_arity))
    out = []
    for cols in itertools.product(Q.colours, repeat=len(P.colours)):
        cmap = dict(zip(P.colours, cols))
        slots = [(s, f) for s in sigs for f in P.ops(*s)]
        choices = [Q.ops(tuple(cmap[c] for c in s[0]), cmap[s[1]]) for s, f in slots]
        if any(not ch for ch in choices):
            continue
        for pick in itertools.product(*choices):
            omap = dict(zip(slots, pick))
            rep = check_operad_map(P, Q, cmap.__getitem__, lambda s, f: omap[(s, f)], max_arity)
            if not rep:
                out.append((cmap, omap))
    return out


def free_maps(T: Tree, Q: FiniteOperad) -> list[FreeOperadMap]:
    """Maps ``Omega(T) -> Q``: colour the root, then each vertex top-down."""
    order = []
    stack = [T.root]
    while stack:
        e = stack.pop()
        if T.vertex_above(e) is not None:
            order.append(e)
            stack.extend(T.ins(e))
    out = []

    def go(k, colour, gen):
        if k == len(order):
            out.append(FreeOperadMap(T, colour, gen))
            return
        v = order[k]
        ins = T.ins(v)
        for cols in itertools.product(Q.colours, repeat=len(ins)):
            ops = Q.ops(cols, colour[v])
            if not ops:
                continue
            c2 = dict(colour)
            c2.update(zip(ins, cols))
            for f in ops:
                go(k + 1, c2, {**gen, v: f})

    for c in Q.colours:
        go(0, {T.root: c}, {})
    return out


def evaluate(Q: FiniteOperad, T: Tree, colour: dict, gen: dict, vertices: frozenset,
             root: str, leaves: tuple):
    """The operation of ``Q`` obtained by composing the generator images over
    the subtree ``vertices`` of ``T``, with inputs ordered as ``leaves``."""
    if not vertices:
        return Q.unit(colour[root])

    def ev(e):
        ins = T.ins(e)
        sig = (tuple(colour[i] for i in ins), colour[e])
        op = gen[e]
        parts = []
        for i in ins:
            if i in vertices:
                parts.append(ev(i))
            else:
                parts.append((None, ((colour[i],), colour[i]), (i,)))
        planar: list = []
        for idx in reversed(range(len(ins))):
            sub, ssig, sleaves = parts[idx]
            if sub is not None:
                op = Q.compose(sig, op, idx, ssig, sub)
                sig = compose_sig(sig, idx, ssig)
        for _, _, sleaves in parts:
            planar.extend(sleaves)
        return op, sig, tuple(planar)

    op, sig, planar = ev(root)
    pos = {e: k for k, e in enumerate(planar)}
    tau = tuple(pos[e] for e in leaves)
    return Q.act(sig, op, tau)


def asA_map(f: dict, A, B) -> tuple[SymmetrizedPlanar, SymmetrizedPlanar, Callable, Callable]:
    """The operad map ``As_A -> As_B`` induced by a function ``f: A -> B``."""
    P, Q = make_asA(A), make_asA(B)
    return P, Q, (lambda c: (f[c[0]], f[c[1]])), (lambda s, op: op)


# ---------------------------------------------------------------------------
# the tensor As_A (x) Omega(C1)

def _tensor_pieces(A):
    A = tuple(sorted(set(A)))
    colours = tuple((ab, l) for ab in itertools.product(A, A) for l in (0, 1))

    def admissible(ins, out):
        (a, b), lo = out
        if not ins:
            if a != b:
                return False
        else:
            if ins[0][0][0] != a or ins[-1][0][1] != b:
                return False
            if any(ins[k][0][1] != ins[k + 1][0][0] for k in range(len(ins) - 1)):
                return False
        if lo == 1 and any(l != 1 for _, l in ins):
            return False
        return True

    def planar_sigs(n):
        for ch in _chains(A, n):
            if n == 0:
                for lo in (0, 1):
                    yield (), ((ch[0], ch[0]), lo)
                continue
            parts = tuple((ch[k], ch[k + 1]) for k in range(n))
            for levels in itertools.product((0, 1), repeat=n):
                ins = tuple(zip(parts, levels))
                yield ins, ((ch[0], ch[n]), 0)
                if all(levels):
                    yield ins, ((ch[0], ch[n]), 1)

    return A, colours, admissible, planar_sigs


def bv_tensor_asA_c1(A: Iterable) -> SymmetrizedPlanar:
    """``As_A (x) Omega(C1)`` by its closed form.

    Colours are ``((a, b), level)`` with level 0 at the root of ``C1`` and 1
    at its leaf.  A planar signature carries exactly one operation iff its
    ``A^2`` parts form a composable chain and an output at level 1 forces all
    inputs to level 1; otherwise none."""
    A, colours, admissible, planar_sigs = _tensor_pieces(A)
    op = SymmetrizedPlanar(colours, admissible, planar_sigs, name="As_A(x)Omega(C1)")
    op.objects = A
    return op


def tensor_projection_asA(A) -> tuple:
    """The projection ``As_A (x) Omega(C1) -> As_A`` forgetting levels."""
    return bv_tensor_asA_c1(A), make_asA(A), (lambda c: c[0]), (lambda s, f: f)


def tensor_inclusions(A) -> list[tuple]:
    """The maps ``As_A -> As_A (x) Omega(C1)`` (one per level) and
    ``Omega(C1) -> As_A (x) Omega(C1)`` (one per colour of ``As_A``)."""
    from .trees import corolla
    T = bv_tensor_asA_c1(A)
    P = make_asA(A)
    out = []
    for lvl in (0, 1):
        out.append((P, T, (lambda c, lvl=lvl: (c, lvl)), (lambda s, f: f)))
    C1 = corolla(1)
    W = omega_operad(C1)
    level = {"r": 0, "l1": 1}
    for ab in P.colours:
        out.append((W, T, (lambda e, ab=ab: (ab, level[e])), (lambda s, f: (0,))))
    return out


# planar term rewriting oracle -------------------------------------------------
#
# A term is ("leaf", colour) or (gen, children) where gen is
# ("op", level, chain) for a generator p (x) level, chain = (a0, ..., an), or
# ("v", (a, b)) for (a, b) (x) v : ((a,b),1) -> ((a,b),0).

def _gen_out(gen):
    if gen[0] == "v":
        return (gen[1], 0)
    _, lvl, ch = gen
    return ((ch[0], ch[-1]), lvl)


def _gen_ins(gen):
    if gen[0] == "v":
        return [(gen[1], 1)]
    _, lvl, ch = gen
    return [((ch[k], ch[k + 1]), lvl) for k in range(len(ch) - 1)]


def _term_out(t):
    return t[1] if t[0] == "leaf" else _gen_out(t[0])


def _term_ins(t):
    if t[0] == "leaf":
        return [t[1]]
    return [c for ch in t[1] for c in _term_ins(ch)]


def _rewrite_once(t):
    """Apply one rule at the outermost applicable position; None if normal."""
    if t[0] == "leaf":
        return None
    gen, kids = t
    # a unary generator p (x) level is a unit of As_A, hence an identity
    if gen[0] == "op" and len(kids) == 1:
        return kids[0]
    if gen[0] == "op":
        _, lvl, ch = gen
        for i, k in enumerate(kids):
            if k[0] != "leaf" and k[0][0] == "op" and k[0][1] == lvl:
                ch2 = k[0][2]
                new = ch[:i] + ch2 + ch[i + 2:]
                return (("op", lvl, new), kids[:i] + k[1] + kids[i + 1:])
    if gen[0] == "v":
        (k,) = kids
        if k[0] != "leaf" and k[0][0] == "op" and k[0][1] == 1:
            _, _, ch = k[0]
            new_kids = tuple((("v", (ch[j], ch[j + 1])), (sub,)) for j, sub in enumerate(k[1]))
            return (("op", 0, ch), new_kids)
    for i, k in enumerate(kids):
        r = _rewrite_once(k)
        if r is not None:
            return (gen, kids[:i] + (r,) + kids[i + 1:])
    return None


def normal_form(t, max_steps: int = 10_000):
    for _ in range(max_steps):
        r = _rewrite_once(t)
        if r is None:
            return t
        t = r
    raise RuntimeError("rewriting did not terminate")


def bv_tensor_oracle(A: Iterable, max_arity: int = 4, depth: int = 4) -> dict:
    """Planar operations of ``As_A (x) Omega(C1)`` reachable by generator
    terms of height at most ``depth`` (all subterms of arity at most
    ``max_arity``), quotiented by rewriting to normal form.

    Returns ``{planar signature: set of normal forms}``."""
    A = tuple(sorted(set(A)))
    if len(A) > 3 or max_arity > 4:
        raise ValueError("oracle bounds exceeded: |A| <= 3 and arity <= 4")
    gens = []
    for n in range(max_arity + 1):
        for ch in _chains(A, n):
            for lvl in (0, 1):
                gens.append(("op", lvl, tuple(ch)))
    for ab in itertools.product(A, A):
        gens.append(("v", ab))

    by_out: dict = {}  # colour -> {nf: arity}
    found: dict = {}
    frontier: dict = {}

    def add(nf, bucket):
        c = _term_out(nf)
        if nf in by_out.setdefault(c, {}):
            return
        a = len(_term_ins(nf))
        by_out[c][nf] = a
        bucket.setdefault(c, {})[nf] = a
        sig = (tuple(_term_ins(nf)), c)
        found.setdefault(sig, set()).add(nf)

    for d in range(1, depth + 1):
        new: dict = {}
        known = {c: dict(v) for c, v in by_out.items()}
        for g in gens:
            ins = _gen_ins(g)
            options = []
            for c in ins:
                opts = [(("leaf", c), 1, False)]
                if d > 1:
                    for nf, a in known.get(c, {}).items():
                        opts.append((nf, a, nf in frontier.get(c, {})))
                options.append(opts)

            def build(k, kids, total, fresh):
                if k == len(ins):
                    if d > 1 and not fresh:
                        return
                    add(normal_form((g, tuple(kids))), new)
                    return
                for t, a, isnew in options[k]:
                    if total + a <= max_arity:
                        kids.append(t)
                        build(k + 1, kids, total + a, fresh or isnew)
                        kids.pop()

            build(0, [], 0, False)
        frontier = new
        if not new:
            break
    return found
