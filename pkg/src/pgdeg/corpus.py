"""Constructors for the named example family: representables, skeleta, boundaries,
spines, the platonically non-associative partial groupoid, symmetric spheres,
commuting-tuple spaces, and small group/groupoid nerves."""

from __future__ import annotations

import itertools

from .groups import FiniteGroup, named_group
from .symcore import (FunctionFamily, GroupWords, PartialGroupoid,
                      SpherePresentation, WordPresentation, materialize)


def representable(n):
    return FunctionFamily(n, name="representable", closed_dim=n)


def skeleton(m, n):
    """sk_m of the representable on [n]: functions with at most m+1 values."""
    if not (0 <= m <= n):
        raise ValueError("need 0 <= m <= n")
    return FunctionFamily(n, image_ok=lambda img: len(img) <= m + 1,
                          name=f"skeleton{m}", closed_dim=min(m, n))


def boundary(n):
    """Non-surjective functions into [n] = sk_{n-1} of the representable."""
    if n < 1:
        raise ValueError("need n >= 1")
    return FunctionFamily(n, image_ok=lambda img: len(img) <= n,
                          name="boundary", closed_dim=n - 1)


def spine(n):
    """Functions with image inside some {i, i+1}."""
    def ok(img):
        if len(img) > 2:
            return False
        if len(img) <= 1:
            return True
        a, b = sorted(img)
        return b == a + 1

    return FunctionFamily(n, image_ok=ok, name="spine", closed_dim=min(1, n))


def sphere(n):
    if n < 1:
        raise ValueError("need n >= 1")
    return SpherePresentation(n)


def function_family_pg(fam, name=None):
    """Materialize a function-backed family as a word-presented partial groupoid."""
    return materialize(fam, name=name or fam.name)


def na():
    """The pushout of the front and back face pairs of the symmetric 3-simplex
    along its spine: a 2-dimensional partial groupoid with a doubled 03 edge."""
    front = [frozenset({0, 1, 2}), frozenset({0, 2, 3})]
    back = [frozenset({0, 1, 3}), frozenset({1, 2, 3})]
    spine_pairs = {frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3})}
    objects = (0, 1, 2, 3)

    def edge_id(i, j, tag):
        if i == j:
            return f"id{i}"
        if frozenset({i, j}) in spine_pairs:
            return f"{i}{j}"
        return f"{i}{j}{tag}"

    edges = {}
    identity = {}
    inverse = {}
    for o in objects:
        edges[f"id{o}"] = (o, o)
        identity[o] = f"id{o}"
        inverse[f"id{o}"] = f"id{o}"
    for tag, faces in (("F", front), ("B", back)):
        for face in faces:
            for i in face:
                for j in face:
                    if i != j:
                        e = edge_id(i, j, tag)
                        edges[e] = (i, j)
                        inverse[e] = edge_id(j, i, tag)

    compose = {}
    words3 = set()
    for tag, faces in (("F", front), ("B", back)):
        for face in faces:
            verts = sorted(face)
            for alpha in itertools.product(verts, repeat=3):
                f = edge_id(alpha[0], alpha[1], tag)
                g = edge_id(alpha[1], alpha[2], tag)
                h = edge_id(alpha[0], alpha[2], tag)
                if compose.get((f, g), h) != h:
                    raise AssertionError("NA gluing produced an ambiguous composite")
                compose[f, g] = h
    return PartialGroupoid(objects, edges, identity, inverse, compose,
                           {3: words3}, name="NA")


def na_universal_check(pg, word):
    """Does (f, g, h) classify an embedding of the non-associative pushout?

    True iff [f|g], [g|h], [g o f|h], [f|h o g] are 2-simplices and the two total
    composites differ."""
    f, g, h = word
    if (f, g) not in pg.compose or (g, h) not in pg.compose:
        return False
    gf = pg.compose[f, g]
    hg = pg.compose[g, h]
    if (gf, h) not in pg.compose or (f, hg) not in pg.compose:
        return False
    return pg.compose[gf, h] != pg.compose[f, hg]


def bcom(group_or_name, symmetric=None):
    """Commuting-tuple subspace of BM; symmetric exactly when M is a group."""
    g = named_group(group_or_name) if isinstance(group_or_name, str) else group_or_name
    sym = symmetric if symmetric is not None else hasattr(g, "inv")

    def member(w):
        return all(g.mul(a, b) == g.mul(b, a)
                   for i, a in enumerate(w) for b in w[i + 1:])

    return GroupWords(g, member, name=f"B_com({g.name})", symmetric=sym)


def group_nerve(group_or_name):
    g = named_group(group_or_name) if isinstance(group_or_name, str) else group_or_name
    return GroupWords(g, lambda w: True, name=f"B({g.name})", symmetric=True)


def skeleton_of_group_nerve(m, group_or_name):
    """sk_m BG as a group-embedded presentation: words whose Bousfield row,
    including the identity source, takes at most m+1 values."""
    g = named_group(group_or_name) if isinstance(group_or_name, str) else group_or_name

    def member(w):
        values = {g.identity}
        acc = g.identity
        for x in w:
            acc = g.mul(acc, x)
            values.add(acc)
        return len(values) <= m + 1

    return GroupWords(g, member, name=f"sk{m}B({g.name})", symmetric=True)


def group_nerve_pg(group_or_name, max_dim=None):
    """BG as an explicit word-presented partial groupoid (small groups only)."""
    g = named_group(group_or_name) if isinstance(group_or_name, str) else group_or_name
    pres = group_nerve(g)
    cap = max_dim if max_dim is not None else len(g) - 1
    return materialize(pres, max_dim=cap, name=f"B({g.name})")


def discrete_groupoid(n):
    """n objects, identity edges only."""
    objects = tuple(range(n))
    edges = {f"id{o}": (o, o) for o in objects}
    identity = {o: f"id{o}" for o in objects}
    inverse = {e: e for e in edges}
    compose = {(e, e): e for e in edges}
    return PartialGroupoid(objects, edges, identity, inverse, compose, {},
                           name=f"disc({n})")


def chaotic_groupoid(n):
    """Nerve of the chaotic groupoid on n objects (the representable on [n-1])."""
    return materialize(representable(n - 1), name=f"chaotic({n})")


def trivial_group_nerve():
    return group_nerve_pg(FiniteGroup(("1",), {("1", "1"): "1"}, "1", name="1"))


class FreeIdempotentMonoid:
    """Normal forms of the monoid free on two idempotents a, b, truncated to
    alternating strings of bounded length.  Products collapse equal adjacent
    letters, so the truncation is closed under multiplication of its elements
    whenever results stay within twice the bound (they are kept; the element
    list used for word enumeration is the bounded one)."""

    def __init__(self, max_len=4):
        self.max_len = max_len
        els = [""]
        for ln in range(1, max_len + 1):
            for first in "ab":
                word = "".join(("ab" if first == "a" else "ba")[i % 2] for i in range(ln))
                els.append(word)
        self.elements = tuple(els)
        self.identity = ""
        self.name = f"FreeIdem(<= {max_len})"

    def mul(self, x, y):
        out = x
        for ch in y:
            if not out or out[-1] != ch:
                out += ch
        return out

    def commute(self, x, y):
        return self.mul(x, y) == self.mul(y, x)


def bcom_free_idempotents(max_len=3):
    m = FreeIdempotentMonoid(max_len)

    def member(w):
        return all(m.commute(a, b) for i, a in enumerate(w) for b in w[i + 1:])

    return GroupWords(m, member, name="B_com(FreeIdem)", symmetric=False)


def make(spec):
    """Constructor from CLI-style spec strings.

    Examples: na, sphere:2, skeleton:2,4, boundary:3, spine:3, representable:3,
    bcom:S3, group:S3, skgroup:3,S3, chaotic:2, discrete:2."""
    head, _, rest = spec.partition(":")
    head = head.strip().lower()
    if head == "na":
        return WordPresentation(na())
    if head == "sphere":
        return sphere(int(rest))
    if head == "skeleton":
        m, n = (int(v) for v in rest.split(","))
        return skeleton(m, n)
    if head == "boundary":
        return boundary(int(rest))
    if head == "spine":
        return spine(int(rest))
    if head == "representable":
        return representable(int(rest))
    if head == "bcom":
        return bcom(rest)
    if head == "group":
        return group_nerve(rest)
    if head == "skgroup":
        m, name = rest.split(",")
        return skeleton_of_group_nerve(int(m), name)
    if head == "chaotic":
        return WordPresentation(chaotic_groupoid(int(rest)))
    if head == "discrete":
        return WordPresentation(discrete_groupoid(int(rest)))
    raise ValueError(f"unknown corpus spec: {spec}")
