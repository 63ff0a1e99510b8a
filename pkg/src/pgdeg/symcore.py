"""Finite partial groupoids (spiny symmetric sets) and their structural operations.

A partial groupoid is stored through its spine words: objects, edges with
endpoints, identities, an inversion involution, a partial composition whose
domain is exactly the set of 2-simplices in spine form, and explicit sets of
nondegenerate spine words in each dimension >= 3.  Degenerate simplices are
never stored; membership of an arbitrary word is decided by computing its full
matrix and collapsing repeated vertices onto a nondegenerate support word.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class ResourceLimitExceeded(RuntimeError):
    """Raised when a configured enumeration budget is blown."""


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    simplex: tuple | None = None
    operator: str | None = None

    def __str__(self):
        loc = f" at {self.simplex}" if self.simplex is not None else ""
        op = f" [{self.operator}]" if self.operator else ""
        return f"{self.code}{op}{loc}: {self.message}"


@dataclass(frozen=True)
class SimplexRef:
    """Dimension plus presentation-specific payload (spine word, tuple, function...)."""
    dimension: int
    payload: object


def surjections(m, p):
    """All functions [m] ->> [p] as value tuples of length m+1 (not only monotone)."""
    if p > m:
        return
    rng = range(p + 1)
    for f in itertools.product(rng, repeat=m + 1):
        if len(set(f)) == p + 1:
            yield f


def adjacent_transposition(n, i):
    """The bijection of [n] swapping i and i+1, as a value tuple."""
    t = list(range(n + 1))
    t[i], t[i + 1] = t[i + 1], t[i]
    return tuple(t)


class PartialGroupoid:
    """Word-presented spiny symmetric set.  Treated as immutable after construction."""

    def __init__(self, objects, edges, identity, inverse, compose, simplex_words=None,
                 name="L"):
        self.objects = tuple(objects)
        self.edges = dict(edges)                # edge id -> (src, tgt)
        self.identity = dict(identity)          # object -> edge id
        self.inverse = dict(inverse)            # edge id -> edge id
        self.compose = dict(compose)            # (f, g) -> g o f
        self.simplex_words = {int(n): frozenset(map(tuple, ws))
                              for n, ws in (simplex_words or {}).items()
                              if ws}
        self.name = name
        self._identity_edges = frozenset(self.identity.values())
        self._matrix_cache = {}
        self._member_cache = {}

    # -- basic accessors ----------------------------------------------------

    def src(self, e):
        return self.edges[e][0]

    def tgt(self, e):
        return self.edges[e][1]

    def is_identity_edge(self, e):
        return e in self._identity_edges

    def edge_list(self):
        return sorted(self.edges)

    def nonidentity_edges(self):
        return [e for e in sorted(self.edges) if e not in self._identity_edges]

    def star(self, obj):
        """Nonidentity edges with source obj, sorted."""
        return [e for e in sorted(self.edges)
                if self.edges[e][0] == obj and e not in self._identity_edges]

    def is_composable_word(self, w):
        return (all(e in self.edges for e in w)
                and all(self.tgt(w[i]) == self.src(w[i + 1]) for i in range(len(w) - 1)))

    # -- matrix form ---------------------------------------------------------

    def word_matrix(self, w):
        """Full (n+1)x(n+1) coedge matrix of the word, or None if some coedge is
        missing or the composition cocycle fails.  A word is the spine of a simplex
        only if this matrix exists."""
        w = tuple(w)
        if w in self._matrix_cache:
            return self._matrix_cache[w]
        m = self._word_matrix_report(w)[0]
        self._matrix_cache[w] = m
        return m

    def _word_matrix_report(self, w):
        """(matrix | None, failure description | None)."""
        n = len(w)
        if n == 0 or not self.is_composable_word(w):
            return None, "not a nonempty target-to-source composable word"
        verts = [self.src(w[0])] + [self.tgt(e) for e in w]
        m = [[None] * (n + 1) for _ in range(n + 1)]
        for i in range(n + 1):
            m[i][i] = self.identity[verts[i]]
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                if j == i + 1:
                    m[i][j] = w[i]
                else:
                    prev = m[i][j - 1]
                    e = self.compose.get((prev, w[j - 1]))
                    if e is None:
                        return None, f"missing coedge eps_{{{i},{j}}}"
                    m[i][j] = e
                m[j][i] = self.inverse[m[i][j]]
        # full symmetric cocycle: every ordered triple must compose consistently
        for a in range(n + 1):
            for b in range(n + 1):
                for c in range(n + 1):
                    if a == b or b == c or a == c:
                        continue
                    got = self.compose.get((m[a][b], m[b][c]))
                    if got != m[a][c]:
                        what = "missing" if got is None else "inconsistent"
                        return None, (f"coedge eps_{{{a},{c}}} {what} through vertex {b}")
        return m, None

    def act(self, alpha, w):
        """alpha^* on a simplex given by spine word w; alpha is a value tuple [p]->[n]."""
        m = self.word_matrix(w)
        if m is None:
            raise ValueError(f"{w} is not a simplex word")
        if len(alpha) == 1:
            return m[alpha[0]][alpha[0]]  # a vertex identity; callers wanting objects use verts
        return tuple(m[alpha[j - 1]][alpha[j]] for j in range(1, len(alpha)))

    def face(self, i, w):
        """d_i as a spine word (length n-1); None if the inner composite is missing."""
        n = len(w)
        if i == 0:
            return w[1:]
        if i == n:
            return w[:-1]
        e = self.compose.get((w[i - 1], w[i]))
        if e is None:
            return None
        return w[:i - 1] + (e,) + w[i + 1:]

    def degeneracy(self, i, w):
        """s_i: insert the identity at vertex i."""
        verts = [self.src(w[0])] + [self.tgt(e) for e in w]
        return w[:i] + (self.identity[verts[i]],) + w[i:]

    def transpose(self, i, w):
        """Action of the adjacent transposition of vertices (i, i+1) on the spine word."""
        m = self.word_matrix(w)
        if m is None:
            raise ValueError(f"{w} is not a simplex word")
        n = len(w)
        out = list(w)
        if i >= 1:
            out[i - 1] = m[i - 1][i + 1]
        out[i] = self.inverse[w[i]]
        if i + 1 < n:
            out[i + 1] = m[i][i + 2]
        return tuple(out)

    # -- membership ----------------------------------------------------------

    def support(self, w):
        """Collapse repeated vertices: (nondegenerate support word, sigma) with
        w = sigma^* support.  Requires the matrix to exist."""
        m = self.word_matrix(w)
        if m is None:
            return None
        n = len(w)
        rep = list(range(n + 1))
        for i in range(n + 1):
            for j in range(i):
                if self.is_identity_edge(m[j][i]):
                    rep[i] = rep[j]
                    break
        classes = sorted(set(rep))
        pos = {c: k for k, c in enumerate(classes)}
        sigma = tuple(pos[rep[i]] for i in range(n + 1))
        support = tuple(m[classes[k - 1]][classes[k]] for k in range(1, len(classes)))
        return support, sigma

    def is_simplex(self, w):
        """Is the word the spine of a simplex (degenerate ones included)?"""
        w = tuple(w)
        if w in self._member_cache:
            return self._member_cache[w]
        res = self._is_simplex(w)
        self._member_cache[w] = res
        return res

    def _is_simplex(self, w):
        n = len(w)
        if n == 0:
            return False
        if any(e not in self.edges for e in w):
            return False
        if n == 1:
            return True
        if n == 2:
            return w in self.compose
        sup = self.support(w)
        if sup is None:
            return False
        support, _ = sup
        if not support:
            return True  # total degeneracy of a vertex
        if len(support) == n:
            return w in self.simplex_words.get(n, frozenset())
        return self.is_simplex(support)

    def is_nondegenerate(self, w):
        """Top-row test: f_01..f_0n pairwise distinct nonidentity (char of nondegeneracy)."""
        m = self.word_matrix(w)
        if m is None:
            raise ValueError(f"{w} is not a simplex word")
        top = m[0][1:]
        return (len(set(top)) == len(top)
                and not any(self.is_identity_edge(e) for e in top))

    def bousfield_row(self, w):
        m = self.word_matrix(w)
        if m is None:
            return None
        return tuple(m[0][1:])

    def lift_starry(self, rows):
        """The simplex with Bousfield row `rows`, as a spine word, or None.

        rows must share a common source; entries are arbitrary edges."""
        if not rows:
            return None
        a = self.src(rows[0])
        if any(self.src(g) != a for g in rows):
            return None
        spine = [rows[0]]
        for i in range(1, len(rows)):
            e = self.compose.get((self.inverse[rows[i - 1]], rows[i]))
            if e is None:
                return None
            spine.append(e)
        spine = tuple(spine)
        if not self.is_simplex(spine):
            return None
        if self.bousfield_row(spine) != tuple(rows):
            return None
        return spine

    def lifts_starry_set(self, rows):
        return self.lift_starry(tuple(rows)) is not None

    # -- enumeration ----------------------------------------------------------

    def nondeg_words(self, n):
        """Nondegenerate n-simplices as spine words (n >= 1)."""
        if n == 1:
            return [(e,) for e in sorted(self.nonidentity_edges())]
        if n == 2:
            out = []
            for (f, g) in self.compose:
                h = self.compose[f, g]
                # top row is (f, h): nondegenerate iff distinct nonidentity
                if (not self.is_identity_edge(f) and not self.is_identity_edge(h)
                        and h != f):
                    out.append((f, g))
            return sorted(out)
        return sorted(self.simplex_words.get(n, frozenset()))

    def simplices(self, n, budget=2_000_000):
        """ALL n-simplices: objects at n=0, else spine words incl. degenerate ones."""
        if n == 0:
            return [o for o in sorted(self.objects)]
        seen = set()
        out = []
        for p in range(0, min(n, self.dimension()) + 1):
            if p == 0:
                base = [(o,) for o in sorted(self.objects)]
            else:
                base = [(w, None) for w in self.nondeg_words(p)]
            for item in base:
                if p == 0:
                    # constant word on the object's identity
                    w = (self.identity[item[0]],) * n
                    if w not in seen:
                        seen.add(w)
                        out.append(w)
                    continue
                w0 = item[0]
                if p == n:
                    if w0 not in seen:
                        seen.add(w0)
                        out.append(w0)
                    continue
                m = self.word_matrix(w0)
                for sigma in surjections(n, p):
                    w = tuple(m[sigma[j - 1]][sigma[j]] for j in range(1, n + 1))
                    if w not in seen:
                        seen.add(w)
                        out.append(w)
                if len(seen) > budget:
                    raise ResourceLimitExceeded(f"simplex expansion at n={n}")
        return sorted(out)

    def dimension(self):
        """Largest n carrying a nondegenerate simplex."""
        top = max(self.simplex_words, default=0)
        if top >= 3 and self.nondeg_words(top):
            return top
        if self.nondeg_words(2):
            return 2
        if self.nonidentity_edges():
            return 1
        return 0

    # -- classification --------------------------------------------------------

    def is_groupoid(self):
        """Total composition on compatible pairs + every full star lifts.

        Subwords of simplices are simplices and degenerate candidates collapse, so
        a single starry word per object (all distinct nonidentity edges out of it)
        certifies surjectivity of the Bousfield-Segal maps in every dimension."""
        for f in self.edges:
            for g in self.edges:
                if self.tgt(f) == self.src(g) and (f, g) not in self.compose:
                    return False
        for a in self.objects:
            st = self.star(a)
            if st and not self.lifts_starry_set(st):
                return False
        return True

    def is_group(self):
        return len(self.objects) == 1 and self.is_groupoid()

    # -- structural constructions ----------------------------------------------

    def opposite(self):
        edges = {e: (t, s) for e, (s, t) in self.edges.items()}
        compose = {(g, f): h for (f, g), h in self.compose.items()}
        words = {n: frozenset(tuple(reversed(w)) for w in ws)
                 for n, ws in self.simplex_words.items()}
        return PartialGroupoid(self.objects, edges, self.identity, self.inverse,
                               compose, words, name=f"op({self.name})")

    def reduction(self):
        """One-object reduction; injective on nonidentity edges."""
        ident = "1"
        rmap = {e: (ident if self.is_identity_edge(e) else e) for e in self.edges}
        edges = {ident: ("*", "*")}
        edges.update({e: ("*", "*") for e in self.edges if not self.is_identity_edge(e)})
        inverse = {ident: ident}
        inverse.update({e: rmap[self.inverse[e]] for e in self.edges
                        if not self.is_identity_edge(e)})
        compose = {}
        for (f, g), h in self.compose.items():
            key = (rmap[f], rmap[g])
            val = rmap[h]
            if compose.get(key, val) != val:
                raise ValueError("reduction produced an ambiguous composite")
            compose[key] = val
        words = {}
        for n, ws in self.simplex_words.items():
            words[n] = frozenset(tuple(rmap[e] for e in w) for w in ws)
        return PartialGroupoid(("*",), edges, {"*": ident}, inverse, compose, words,
                               name=f"red({self.name})")

    # -- validation --------------------------------------------------------------

    def validate(self, collapse_samples=25):
        """Structural + operator-closure checks; empty list means valid."""
        out = []

        def bad(code, message, simplex=None, operator=None):
            out.append(Violation(code, message, simplex, operator))

        # identifier formats
        for e, (s, t) in self.edges.items():
            if s not in self.objects or t not in self.objects:
                bad("format", f"edge {e} has dangling endpoint", (e,))
        for a in self.objects:
            e = self.identity.get(a)
            if e is None or e not in self.edges:
                bad("format", f"object {a} has no identity edge")
            elif self.edges[e] != (a, a):
                bad("identity", f"identity of {a} is not a loop at {a}", (e,))
        for e in self.edges:
            j = self.inverse.get(e)
            if j is None or j not in self.edges:
                bad("format", f"edge {e} has no inverse", (e,))
                continue
            if self.inverse.get(j) != e:
                bad("inverse", "inverse is not an involution", (e,), "tau")
            if self.edges[j] != (self.tgt(e), self.src(e)):
                bad("inverse", "inverse does not swap endpoints", (e,), "tau")
        for a in self.objects:
            e = self.identity.get(a)
            if e is not None and self.inverse.get(e) != e:
                bad("inverse", f"identity at {a} is not self-inverse", (e,), "tau")
        if out:
            return out

        # composition domain is L2 in spine form
        for (f, g), h in self.compose.items():
            if f not in self.edges or g not in self.edges or h not in self.edges:
                bad("format", "composition references unknown edge", (f, g))
                continue
            if self.tgt(f) != self.src(g):
                bad("compose", "pair is not target-to-source compatible", (f, g))
            elif self.edges[h] != (self.src(f), self.tgt(g)):
                bad("compose", "composite has wrong endpoints", (f, g))
        # degeneracies and inverse pairs of every edge are 2-simplices
        for e in self.edges:
            a, b = self.edges[e]
            if self.compose.get((self.identity[a], e)) != e:
                bad("closure", f"s_0 of edge {e} missing or wrong", (e,), "s_0")
            if self.compose.get((e, self.identity[b])) != e:
                bad("closure", f"s_1 of edge {e} missing or wrong", (e,), "s_1")
            if self.compose.get((e, self.inverse[e])) != self.identity[a]:
                bad("closure", f"inverse pair ({e}, {e}^-1) missing or wrong",
                    (e,), "tau")
        # transposition closure of L2
        for (f, g), h in self.compose.items():
            if self.compose.get((self.inverse[f], h)) != g:
                bad("closure", "transposed pair (f^-1, g o f) missing or wrong",
                    (f, g), "tau_0")
            if self.compose.get((h, self.inverse[g])) != f:
                bad("closure", "transposed pair (g o f, g^-1) missing or wrong",
                    (f, g), "tau_1")

        # stored words
        for n, ws in sorted(self.simplex_words.items()):
            if n < 3:
                bad("format", f"stored words at n={n} < 3")
                continue
            for w in sorted(ws):
                if len(w) != n:
                    bad("format", f"word of length {len(w)} stored at n={n}", w)
                    continue
                if any(e not in self.edges for e in w):
                    bad("format", "word references unknown edge", w)
                    continue
                m, why = self._word_matrix_report(w)
                if m is None:
                    bad("matrix", why, w, "eps")
                    continue
                top = m[0][1:]
                if len(set(top)) != len(top) or any(self.is_identity_edge(e) for e in top):
                    bad("degenerate", "stored word is degenerate", w)
                    continue
                for i in range(n + 1):
                    fw = self.face(i, w)
                    if fw is None or not self.is_simplex(fw):
                        bad("closure", f"face d_{i} is not a simplex", w, f"d_{i}")
                for i in range(n):
                    tw = self.transpose(i, w)
                    if tw not in ws:
                        bad("closure",
                            f"transposition of vertices ({i},{i + 1}) leaves the stored set",
                            w, f"tau_{i}")

        # degeneracy-collapse spot check on a sample of stored words
        sample = []
        for n, ws in sorted(self.simplex_words.items()):
            sample.extend(sorted(ws)[:collapse_samples])
        for (f, g) in sorted(self.compose)[:collapse_samples]:
            sample.append((f, g))
        for w in sample:
            if not self.is_simplex(w):
                continue
            for i in range(len(w) + 1):
                sw = self.degeneracy(i, w)
                if not self.is_simplex(sw):
                    bad("closure", f"degeneracy s_{i} is not a simplex", w, f"s_{i}")
        return out


# -- generic presentation protocol -------------------------------------------
#
# A presentation exposes:
#   simplices(n)   -> list of hashable payloads (ALL n-simplices)
#   face(n, i, x)  -> payload of d_i x
#   dimension()    -> int (largest nondegenerate dimension)
#   symmetric      -> bool
#   act(alpha, n, x) when symmetric (alpha a value tuple [m] -> [n])


class WordPresentation:
    """Presentation view of a word-presented partial groupoid."""

    symmetric = True

    def __init__(self, pg, name=None):
        self.pg = pg
        self.name = name or pg.name

    def simplices(self, n):
        return self.pg.simplices(n)

    def face(self, n, i, x):
        if n == 1:
            return self.pg.tgt(x[0]) if i == 0 else self.pg.src(x[0])
        return self.pg.face(i, x)

    def act(self, alpha, n, x):
        if n == 0:
            if len(alpha) == 1:
                return x
            return (self.pg.identity[x],) * (len(alpha) - 1)
        if len(alpha) == 1:
            verts = [self.pg.src(x[0])] + [self.pg.tgt(e) for e in x]
            return verts[alpha[0]]
        return self.pg.act(alpha, x)

    def dimension(self):
        return self.pg.dimension()


class FunctionFamily:
    """Symmetric subsets of the representable Upsilon^n cut out by an image predicate.

    Covers representables, skeleta, boundaries, and spines; a k-simplex is a
    value tuple of length k+1 into [n]."""

    symmetric = True

    def __init__(self, n, image_ok=None, name="representable", closed_dim=None):
        self.n = n
        self.image_ok = image_ok or (lambda img: True)
        self.name = f"{name}({n})"
        self._closed_dim = closed_dim if closed_dim is not None else n

    def simplices(self, k):
        rng = range(self.n + 1)
        return [f for f in itertools.product(rng, repeat=k + 1)
                if self.image_ok(frozenset(f))]

    def face(self, k, i, x):
        return x[:i] + x[i + 1:]

    def act(self, alpha, k, x):
        return tuple(x[a] for a in alpha)

    def dimension(self):
        return self._closed_dim

    def is_simplex(self, x):
        return max(x, default=0) <= self.n and self.image_ok(frozenset(x))


class SpherePresentation:
    """Sigma S^n: surjections [m] ->> [n] plus one basepoint per dimension."""

    symmetric = True

    def __init__(self, n):
        self.n = n
        self.name = f"sphere({n})"
        self._cache = {}

    def basepoint(self, m):
        return ("*", m)

    def simplices(self, m):
        if m not in self._cache:
            rng = range(self.n + 1)
            epis = [f for f in itertools.product(rng, repeat=m + 1)
                    if len(set(f)) == self.n + 1]
            self._cache[m] = [self.basepoint(m)] + epis
        return self._cache[m]

    def face(self, m, i, x):
        if x[0] == "*":
            return self.basepoint(m - 1)
        y = x[:i] + x[i + 1:]
        if x[i] in y:
            return y
        return self.basepoint(m - 1)

    def act(self, alpha, m, x):
        if x[0] == "*":
            return self.basepoint(len(alpha) - 1)
        y = tuple(x[a] for a in alpha)
        if len(set(y)) == self.n + 1:
            return y
        return self.basepoint(len(alpha) - 1)

    def dimension(self):
        return self.n


class GroupWords:
    """Group-embedded symmetric (or merely simplicial) subsets of BG.

    Simplices are words in the group subject to a membership predicate that is
    closed under the simplicial (and, if `symmetric`, the full symmetric)
    operator actions.  Optionally backed by a native carrier giving domains."""

    def __init__(self, group, member, name="L<=BG", symmetric=True, domains=None,
                 carrier=None):
        self.group = group
        self._member = member
        self.name = name
        self.symmetric = symmetric
        self.domains = domains      # dict g -> frozenset over carrier, or None
        self.carrier = carrier
        self._member_cache = {}
        self.objects = ("*",)

    # presentation protocol
    def simplices(self, n):
        if n == 0:
            return ["*"]
        els = self.group.elements
        return [w for w in itertools.product(els, repeat=n) if self.member(w)]

    def face(self, n, i, x):
        if n == 1:
            return "*"
        if i == 0:
            return x[1:]
        if i == n:
            return x[:-1]
        return x[:i - 1] + (self.group.mul(x[i - 1], x[i]),) + x[i:]

    def act(self, alpha, n, x):
        if n == 0:
            if len(alpha) == 1:
                return x
            return (self.group.identity,) * (len(alpha) - 1)
        m = self.matrix(x)
        return tuple(m[alpha[j - 1]][alpha[j]] for j in range(1, len(alpha)))

    def matrix(self, w):
        n = len(w)
        g = self.group
        m = [[g.identity] * (n + 1) for _ in range(n + 1)]
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                e = w[i]
                for k in range(i + 1, j):
                    e = g.mul(e, w[k])
                m[i][j] = e
                m[j][i] = g.inv(e)
        return m

    def member(self, w):
        w = tuple(w)
        if w not in self._member_cache:
            self._member_cache[w] = bool(self._member(w))
        return self._member_cache[w]

    # pg-like surface used by the starry checker and the degree pipeline
    def edge_list(self):
        return [g for g in self.group.elements if self.member((g,))]

    def nonidentity_edges(self):
        return [g for g in self.edge_list() if g != self.group.identity]

    def star(self, obj):
        return sorted(self.nonidentity_edges(), key=repr)

    def src(self, e):
        return "*"

    def tgt(self, e):
        return "*"

    def is_identity_edge(self, e):
        return e == self.group.identity

    def identity_of(self, obj):
        return self.group.identity

    def edge_inverse(self, e):
        return self.group.inv(e)

    def is_simplex(self, w):
        return self.member(w)

    def spine_of_row(self, rows):
        g = self.group
        spine = [rows[0]]
        for i in range(1, len(rows)):
            spine.append(g.mul(g.inv(rows[i - 1]), rows[i]))
        return tuple(spine)

    def lift_starry(self, rows):
        spine = self.spine_of_row(rows)
        return spine if self.member(spine) else None

    def lifts_starry_set(self, rows):
        return self.lift_starry(tuple(rows)) is not None

    def is_groupoid(self):
        els = self.edge_list()
        for f in els:
            for g in els:
                if not self.member((f, g)):
                    return False
        full = tuple(self.nonidentity_edges())
        return not full or self.lifts_starry_set(full)

    def is_group(self):
        return self.is_groupoid()

    def dimension(self, cap=None):
        """Largest size of a liftable set of distinct nonidentity elements."""
        if self.domains is not None:
            best = 0
            for x in self.carrier:
                cnt = sum(1 for g in self.nonidentity_edges()
                          if x in self.domains[g])
                best = max(best, cnt)
            return best
        els = self.star("*")
        best = 0
        cap = cap if cap is not None else len(els)

        def extend(chosen, start):
            nonlocal best
            best = max(best, len(chosen))
            if len(chosen) >= cap:
                return
            for idx in range(start, len(els)):
                cand = chosen + (els[idx],)
                if self.lifts_starry_set(cand):
                    extend(cand, idx + 1)

        extend((), 0)
        return best


# -- operator-reindexed wrappers ----------------------------------------------


class DecBottom:
    """Lower decalage: (dec X)_n = X_{n+1}, bottom operators dropped."""

    def __init__(self, base):
        self.base = base
        self.symmetric = base.symmetric
        self.name = f"dec_bot({base.name})"

    def simplices(self, n):
        return self.base.simplices(n + 1)

    def face(self, n, i, x):
        return self.base.face(n + 1, i + 1, x)

    def act(self, alpha, n, x):
        lifted = (0,) + tuple(a + 1 for a in alpha)
        return self.base.act(lifted, n + 1, x)

    def dimension(self):
        # equal to the base dimension for spiny bases (s_0 of a nondegenerate
        # simplex has nondegenerate row 1 and conversely)
        return self.base.dimension()


class DecTop:
    """Upper decalage: (dec X)_n = X_{n+1}, top operators dropped."""

    def __init__(self, base):
        self.base = base
        self.symmetric = base.symmetric
        self.name = f"dec_top({base.name})"

    def simplices(self, n):
        return self.base.simplices(n + 1)

    def face(self, n, i, x):
        return self.base.face(n + 1, i, x)

    def act(self, alpha, n, x):
        lifted = tuple(alpha) + (n + 1,)
        return self.base.act(lifted, n + 1, x)

    def dimension(self):
        return self.base.dimension()


class Opposite:
    def __init__(self, base):
        self.base = base
        self.symmetric = base.symmetric
        self.name = f"op({base.name})"

    def simplices(self, n):
        return self.base.simplices(n)

    def face(self, n, i, x):
        return self.base.face(n, n - i, x)

    def act(self, alpha, n, x):
        m = len(alpha) - 1
        tw = tuple(n - alpha[m - j] for j in range(m + 1))
        return self.base.act(tw, n, x)

    def dimension(self):
        return self.base.dimension()


class EdgewiseSubdivision:
    """tw(X)_n = X_{2n+1} with the doubling reindexing."""

    def __init__(self, base):
        self.base = base
        self.symmetric = base.symmetric
        self.name = f"tw({base.name})"

    @staticmethod
    def _double(alpha, n):
        # Q(alpha): [2m+1] -> [2n+1]; domain reads m',...,0',0,...,m with
        # i' at position m-i and i at position m+1+i
        m = len(alpha) - 1
        out = [n - alpha[m - j] for j in range(m + 1)]
        out.extend(n + 1 + alpha[j] for j in range(m + 1))
        return tuple(out)

    def simplices(self, n):
        return self.base.simplices(2 * n + 1)

    def face(self, n, i, x):
        alpha = tuple(j for j in range(n + 1) if j != i)
        return self.act(alpha, n, x)

    def act(self, alpha, n, x):
        return self.base.act(self._double(alpha, n), 2 * n + 1, x)

    def dimension(self):
        return self.base.dimension()  # bound only


def materialize(p, max_dim=None, budget=500_000, name=None):
    """Extract a word-presented partial groupoid from a spiny presentation.

    Requires spines to be injective on the enumerated simplices (checked)."""
    objects = list(p.simplices(0))
    edge_payloads = list(p.simplices(1))
    eid = {x: f"e{k}" for k, x in enumerate(edge_payloads)}
    edges = {}
    identity = {}
    inverse = {}
    for x in edge_payloads:
        s = p.face(1, 1, x)
        t = p.face(1, 0, x)
        edges[eid[x]] = (s, t)
    for o in objects:
        ex = p.act((0, 0), 0, o) if hasattr(p, "act") else None
        if ex is None or ex not in eid:
            raise ValueError("presentation does not expose identity edges")
        identity[o] = eid[ex]
    for x in edge_payloads:
        inverse[eid[x]] = eid[p.act((1, 0), 1, x)]

    def spine(n, x):
        return tuple(eid[p.act((j - 1, j), n, x)] for j in range(1, n + 1))

    compose = {}
    level2 = list(p.simplices(2))
    for x in level2:
        w = spine(2, x)
        h = eid[p.act((0, 2), 2, x)]
        if compose.get(w, h) != h:
            raise ValueError("presentation is not spiny at dimension 2")
        compose[w] = h
    if len(compose) != len(set(level2)):
        raise ValueError("presentation is not spiny at dimension 2")

    pg_words = {}
    n = 3
    dim_cap = max_dim if max_dim is not None else p.dimension()
    probe = PartialGroupoid(objects, edges, identity, inverse, compose, {},
                            name=name or getattr(p, "name", "L"))
    while n <= dim_cap:
        words = set()
        count = 0
        distinct = set()
        for x in p.simplices(n):
            count += 1
            if count > budget:
                raise ResourceLimitExceeded(f"materialize at n={n}")
            distinct.add(x)
            w = spine(n, x)
            words.add(w)
        if len(words) != len(distinct):
            raise ValueError(f"presentation is not spiny at dimension {n}")
        nondeg = set()
        for w in words:
            m = probe.word_matrix(w)  # uses compose of lower materialized data
            if m is None:
                raise ValueError(f"simplex word {w} has no matrix during materialization")
            top = m[0][1:]
            if len(set(top)) == len(top) and not any(
                    probe.is_identity_edge(e) for e in top):
                nondeg.add(w)
        if not nondeg:
            break
        pg_words[n] = frozenset(nondeg)
        probe = PartialGroupoid(objects, edges, identity, inverse, compose, pg_words,
                                name=name or getattr(p, "name", "L"))
        n += 1
    return probe


# -- operation-level aliases -----------------------------------------------------


def validate(pg, **kw):
    return pg.validate(**kw)


def matrix_form(pg, x):
    m = pg.word_matrix(x)
    if m is None:
        raise ValueError(f"{x} is not a simplex word")
    return m


def is_nondegenerate(pg, x):
    return pg.is_nondegenerate(x)


def dimension(p):
    return p.dimension()


def opposite(p):
    if isinstance(p, PartialGroupoid):
        return p.opposite()
    return Opposite(p)


def reduction(pg):
    return pg.reduction()


def is_groupoid(base):
    return base.is_groupoid()


def is_group(base):
    return base.is_group()
