"""Partial actions: characteristic actions, the canonical action, transporter
partial groups of partial group actions, L-set axioms, and self-actions."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .closure import ClosureSpace
from .symcore import GroupWords, PartialGroupoid, Violation


@dataclass
class PartialGroupAction:
    """Exel partial action: per-element partial injections on the carrier.

    maps[g] is a dict x -> g.x; the identity may be omitted (acts as identity)."""
    group: object
    carrier: tuple
    maps: dict

    def act(self, g, x):
        if g == self.group.identity:
            return x if x in self.carrier_set else None
        return self.maps.get(g, {}).get(x)

    @property
    def carrier_set(self):
        return frozenset(self.carrier)

    def dom(self, g):
        if g == self.group.identity:
            return self.carrier_set
        return frozenset(self.maps.get(g, {}))

    def word_acts(self, word, x):
        """Successive action of the word; None when it breaks."""
        for g in word:
            x = self.act(g, x)
            if x is None:
                return None
        return x

    def dom_word(self, word):
        return frozenset(x for x in self.carrier
                         if self.word_acts(word, x) is not None)

    def validate(self):
        out = []
        g_, c = self.group, self.carrier_set
        for g, m in self.maps.items():
            for x, y in m.items():
                if x not in c or y not in c:
                    out.append(Violation("format", f"map of {g} leaves the carrier"))
            if len(set(m.values())) != len(m):
                out.append(Violation("injective", f"{g} does not act injectively"))
        if self.group.identity in self.maps:
            m = self.maps[self.group.identity]
            if any(m.get(x, x) != x for x in c) or set(m) - c:
                out.append(Violation("exel-1", "identity does not act as identity"))
        for g in g_.elements:
            for h in g_.elements:
                hg = g_.mul(g, h)
                for x in self.dom(g):
                    y = self.act(g, x)
                    z = self.act(h, y)
                    if z is not None:
                        if self.act(hg, x) != z:
                            out.append(Violation(
                                "exel-2", f"(hg).x undefined or != h.(g.x) for g={g}, h={h}, x={x}"))
        for g in g_.elements:
            for x in self.dom(g):
                y = self.act(g, x)
                if self.act(g_.inv(g), y) != x:
                    out.append(Violation("exel-3", f"g^-1.(g.x) fails for g={g}, x={x}"))
        return out


def ambient_restriction(group, total_act, subset):
    """Restrict a total action (callable (g, x) -> y) to a subset; the Exel
    axioms hold automatically."""
    subset = tuple(sorted(subset, key=repr))
    sset = set(subset)
    maps = {}
    for g in group.elements:
        if g == group.identity:
            continue
        m = {x: total_act(g, x) for x in subset if total_act(g, x) in sset}
        maps[g] = m
    return PartialGroupAction(group, subset, maps)


@dataclass
class CharacteristicAction:
    """A partial action of `base` given by per-edge partial injections.

    `characteristic` records the intent: surjective with groupoid total space
    (the word-level property "simplex iff acts somewhere" is then validated)."""
    base: object
    carrier: tuple
    anchor: dict
    edge_action: dict                      # edge -> dict x -> y
    characteristic: bool = True
    name: str = "rho"

    def __post_init__(self):
        self._fibers = {}
        for x in self.carrier:
            self._fibers.setdefault(self.anchor[x], set()).add(x)

    # -- base access (PartialGroupoid or GroupWords) --

    def _edges(self):
        return self.base.edge_list() if hasattr(self.base, "edge_list") \
            else sorted(self.base.edges)

    def _objects(self):
        return self.base.objects

    def _src(self, e):
        return self.base.src(e)

    def _tgt(self, e):
        return self.base.tgt(e)

    def _identity_of(self, a):
        if isinstance(self.base, PartialGroupoid):
            return self.base.identity[a]
        return self.base.identity_of(a)

    def _inv(self, e):
        if isinstance(self.base, PartialGroupoid):
            return self.base.inverse[e]
        return self.base.edge_inverse(e)

    def _is_identity(self, e):
        return self.base.is_identity_edge(e)

    # -- action --

    def fiber(self, a):
        return frozenset(self._fibers.get(a, ()))

    def dom_edge(self, e):
        return frozenset(self.edge_action.get(e, {}))

    def act_edge(self, e, x):
        return self.edge_action.get(e, {}).get(x)

    def act_word(self, word, x):
        for e in word:
            x = self.act_edge(e, x)
            if x is None:
                return None
        return x

    def dom_word(self, word):
        return frozenset(x for x in self.carrier
                         if self.act_word(word, x) is not None)

    def domain(self, word_or_edge):
        """Domain of a word (successive action) or a single edge."""
        if isinstance(word_or_edge, tuple):
            return self.dom_word(word_or_edge)
        return self.dom_edge(word_or_edge)

    def closure_space(self):
        """Ground = carrier, generators = edge domains (cl = cl_1)."""
        gens = [self.dom_edge(e) for e in self._edges()]
        return ClosureSpace(self.carrier, gens, name=f"cl({self.name})")

    def fiber_space(self, a):
        return self.closure_space().subspace(self.fiber(a))

    # -- validation --

    def validate(self, nonword_samples=300, exhaustive=False, rng_seed=7):
        out = []

        def bad(code, msg):
            out.append(Violation(code, msg))

        carrier = set(self.carrier)
        edges = self._edges()
        # structure: anchors, domains inside fibers, injectivity
        for x in self.carrier:
            if self.anchor.get(x) not in self._objects():
                bad("format", f"carrier point {x} has no anchor object")
        for e in edges:
            m = self.edge_action.get(e, {})
            for x, y in m.items():
                if x not in carrier or y not in carrier:
                    bad("format", f"action of {e} leaves the carrier")
                elif self.anchor[x] != self._src(e) or self.anchor[y] != self._tgt(e):
                    bad("anchor", f"action of {e} violates its endpoints at {x}")
            if len(set(m.values())) != len(m):
                bad("star-injective", f"edge {e} does not act injectively")
        # A1: identities act as the identity on their full fiber
        for a in self._objects():
            ide = self._identity_of(a)
            m = self.edge_action.get(ide, {})
            fib = self._fibers.get(a, set())
            if set(m) != set(fib) or any(m[x] != x for x in m):
                bad("A1", f"identity of {a} does not act as identity on its fiber")
        # inverse compatibility (gives A6)
        for e in edges:
            m = self.edge_action.get(e, {})
            minv = self.edge_action.get(self._inv(e), {})
            for x, y in m.items():
                if minv.get(y) != x:
                    bad("A6", f"inverse of {e} does not reverse {x} -> {y}")
        # composite compatibility over all 2-simplices (A3); successive steps
        # assemble into simplex lifts only when the total space is a groupoid,
        # so this is a characteristic-action check
        if self.characteristic:
            pairs = (self.base.compose.items() if isinstance(self.base, PartialGroupoid)
                     else [(w, self.base.group.mul(*w))
                           for w in itertools.product(self.base.edge_list(), repeat=2)
                           if self.base.is_simplex(w)])
            for (f, g), h in pairs:
                mf, mg = self.edge_action.get(f, {}), self.edge_action.get(g, {})
                mh = self.edge_action.get(h, {})
                for x, y in mf.items():
                    if y in mg and mh.get(x) != mg[y]:
                        bad("A3", f"composite {h} of ({f},{g}) disagrees at {x}")
        if out:
            return out
        # characteristic: simplex words act somewhere; non-simplex words nowhere
        if self.characteristic:
            rng = random.Random(rng_seed)
            if isinstance(self.base, PartialGroupoid):
                words = [(e,) for e in edges]
                words += [w for w in self.base.compose]
                for n, ws in sorted(self.base.simplex_words.items()):
                    words += sorted(ws)
                for w in words:
                    if not self.dom_word(w):
                        bad("characteristic", f"simplex word {w} acts on no point")
                nonwords = self._nonsimplex_words(rng, nonword_samples, exhaustive)
                for w in nonwords:
                    if self.dom_word(w):
                        bad("characteristic", f"non-simplex word {w} acts on a point")
            else:
                els = self.base.edge_list()
                pool = (itertools.product(els, repeat=2) if exhaustive else
                        ((tuple(rng.choice(els) for _ in range(rng.randint(1, 4))))
                         for _ in range(nonword_samples)))
                for w in pool:
                    w = tuple(w)
                    if self.base.is_simplex(w) != bool(self.dom_word(w)):
                        bad("characteristic", f"word {w} disagrees with the action")
        return out

    def _nonsimplex_words(self, rng, samples, exhaustive):
        base = self.base
        edges = self._edges()
        out = []
        if exhaustive:
            for n in (2, 3):
                for w in itertools.product(edges, repeat=n):
                    if base.is_composable_word(w) and not base.is_simplex(w):
                        out.append(w)
            return out
        tries = 0
        while len(out) < samples and tries < samples * 20:
            tries += 1
            n = rng.randint(2, 4)
            w = []
            e = rng.choice(edges)
            w.append(e)
            ok = True
            for _ in range(n - 1):
                nxt = [f for f in edges if base.src(f) == base.tgt(w[-1])]
                if not nxt:
                    ok = False
                    break
                w.append(rng.choice(nxt))
            if ok and not base.is_simplex(tuple(w)):
                out.append(tuple(w))
        return out


def canonical_action(base, name=None):
    """Coproduct of representables over the nondegenerate simplices: point
    (w, i) is vertex i of the nondegenerate simplex with spine word w; an edge
    acts along the matrix entries of each component."""
    if isinstance(base, PartialGroupoid):
        edges = sorted(base.edges)
        dim = base.dimension()

        def components():
            for a in sorted(base.objects, key=repr):
                yield ("v", a), [[base.identity[a]]], [a]
            for n in range(1, dim + 1):
                for w in base.nondeg_words(n):
                    verts = [base.src(w[0])] + [base.tgt(e) for e in w]
                    yield ("s", w), base.word_matrix(w), verts

        anchor = {}
        carrier = []
        edge_action = {e: {} for e in edges}
        for key, m, verts in components():
            for i in range(len(m)):
                x = (key, i)
                carrier.append(x)
                anchor[x] = verts[i]
                for j in range(len(m)):
                    edge_action[m[i][j]][x] = (key, j)
        return CharacteristicAction(base, tuple(carrier), anchor, edge_action,
                                    name=name or f"canonical({base.name})")
    if isinstance(base, GroupWords):
        g = base.group
        rows_by_size = _liftable_sets(base)
        anchor = {}
        carrier = []
        edge_action = {e: {} for e in base.edge_list()}
        key0 = ("0", "*")
        carrier.append((key0, 0))
        anchor[(key0, 0)] = "*"
        edge_action[g.identity][(key0, 0)] = (key0, 0)
        for rows_set in rows_by_size:
            for rows in itertools.permutations(rows_set):
                spine = base.spine_of_row(rows)
                if not base.member(spine):
                    continue
                key = spine
                m = base.matrix(spine)
                size = len(spine) + 1
                for i in range(size):
                    x = (key, i)
                    carrier.append(x)
                    anchor[x] = "*"
                    for j in range(size):
                        e = m[i][j]
                        if e in edge_action:
                            edge_action[e][x] = (key, j)
        return CharacteristicAction(base, tuple(carrier), anchor, edge_action,
                                    name=name or f"canonical({base.name})")
    raise TypeError("canonical_action needs a PartialGroupoid or GroupWords base")


def _liftable_sets(base):
    """All liftable sets of distinct nonidentity elements of a GroupWords base."""
    els = base.star("*")
    out = []

    def extend(t, start):
        for idx in range(start, len(els)):
            cand = t + (els[idx],)
            if base.lifts_starry_set(cand):
                out.append(cand)
                extend(cand, idx + 1)

    extend((), 0)
    return out


class TransporterNerve:
    """Nerve of the transporter groupoid of a partial group action."""

    symmetric = True

    def __init__(self, pa):
        self.pa = pa
        self.name = f"E({pa.group.name})"

    def simplices(self, n):
        if n == 0:
            return list(self.pa.carrier)
        out = []
        for x in self.pa.carrier:
            out.extend((x,) + w for w in self._chains(x, n))
        return out

    def _chains(self, x, n):
        if n == 0:
            yield ()
            return
        for g in self.pa.group.elements:
            y = self.pa.act(g, x)
            if y is not None:
                for rest in self._chains(y, n - 1):
                    yield (g,) + rest

    def face(self, n, i, x):
        if n == 1:
            x0, g = x[0], x[1]
            return self.pa.act(g, x0) if i == 0 else x0
        x0, word = x[0], x[1:]
        if i == 0:
            return (self.pa.act(word[0], x0),) + word[1:]
        if i == n:
            return x[:-1]
        g = self.pa.group.mul(word[i - 1], word[i])
        return (x0,) + word[:i - 1] + (g,) + word[i:]

    def act(self, alpha, n, x):
        if n == 0:
            if len(alpha) == 1:
                return x
            return (x,) + (self.pa.group.identity,) * (len(alpha) - 1)
        x0, word = x[0], x[1:]
        g = self.pa.group
        m = GroupWords(g, lambda w: True).matrix(word)
        pts = [x0]
        for e in word:
            pts.append(self.pa.act(e, pts[-1]))
        newx0 = pts[alpha[0]]
        return (newx0,) + tuple(m[alpha[j - 1]][alpha[j]]
                                for j in range(1, len(alpha)))

    def dimension(self):
        best = 0
        for x in self.pa.carrier:
            cnt = sum(1 for g in self.pa.group.elements
                      if g != self.pa.group.identity and self.pa.act(g, x) is not None)
            best = max(best, cnt)
        return best


def transporter(pa):
    """(nerve of the transporter groupoid, the image partial group L_S(G),
    the induced characteristic action)."""
    if not pa.carrier:
        raise ValueError("empty partial group: no element acts on an empty carrier")
    group = pa.group
    doms = {g: pa.dom(g) for g in group.elements}

    def member(word):
        return bool(pa.dom_word(word))

    L = GroupWords(group, member, name=f"L_S({group.name})", symmetric=True,
                   domains=doms, carrier=tuple(pa.carrier))
    edge_action = {}
    for g in L.edge_list():
        if g == group.identity:
            edge_action[g] = {x: x for x in pa.carrier}
        else:
            edge_action[g] = dict(pa.maps.get(g, {}))
    anchor = {x: "*" for x in pa.carrier}
    act = CharacteristicAction(L, tuple(pa.carrier), anchor, edge_action,
                               name=f"transporter({group.name})")
    L.native_action = act
    return TransporterNerve(pa), L, act


def multiplication_action(pg):
    """dec_bot L -> L: the action of L on its own edges by postcomposition."""
    carrier = tuple(sorted(pg.edges))
    anchor = {f: pg.tgt(f) for f in carrier}
    edge_action = {e: {} for e in pg.edges}
    for (f, g), h in pg.compose.items():
        edge_action[g][f] = h
    return CharacteristicAction(pg, carrier, anchor, edge_action,
                                characteristic=False, name=f"mult({pg.name})")


def conjugation_action(pg):
    """cj(L) -> L for a partial group: z acts on u by the total composite of
    (z^-1, u, z) when that word is a simplex."""
    if len(pg.objects) != 1:
        raise ValueError("conjugation action is defined for partial groups")
    carrier = tuple(sorted(pg.edges))
    a = pg.objects[0]
    anchor = {u: a for u in carrier}
    edge_action = {e: {} for e in pg.edges}
    for z in pg.edges:
        zi = pg.inverse[z]
        for u in carrier:
            w = (zi, u, z)
            if pg.is_simplex(w):
                m = pg.word_matrix(w)
                edge_action[z][u] = m[0][3]
    return CharacteristicAction(pg, carrier, anchor, edge_action,
                                characteristic=False, name=f"cj({pg.name})")


def self_actions(pg):
    from .symcore import EdgewiseSubdivision, WordPresentation
    return {
        "multiplication": multiplication_action(pg),
        "conjugation": conjugation_action(pg) if len(pg.objects) == 1 else None,
        "subdivision": EdgewiseSubdivision(WordPresentation(pg)),
    }


def induced_partial_action(act):
    """For a group-embedded base: the partial action of the ambient group on the
    carrier recovered from a characteristic action (pgs-in-a-group direction)."""
    base = act.base
    if not isinstance(base, GroupWords):
        raise TypeError("needs a group-embedded base")
    maps = {}
    for g in base.group.elements:
        if g == base.group.identity:
            continue
        maps[g] = dict(act.edge_action.get(g, {}))
    return PartialGroupAction(base.group, act.carrier, maps)


def validate_action(act, **kw):
    return act.validate(**kw)


def domain(act, word_or_edge):
    return act.domain(word_or_edge)
