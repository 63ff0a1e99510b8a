"""Small finite groups backing nerves, commuting-tuple spaces, and partial actions."""

from __future__ import annotations


class FiniteGroup:
    """Finite group on hashable element labels with dict-backed multiplication.

    ``mul(a, b)`` is the categorical composite ``a then b`` read right-to-left,
    i.e. the group product ``b * a`` as functions when elements are permutations.
    """

    def __init__(self, elements, mul, identity, name=""):
        self.elements = tuple(elements)
        self._mul = dict(mul)
        self.identity = identity
        self.name = name or f"G{len(self.elements)}"
        self._inv = {}
        for a in self.elements:
            for b in self.elements:
                if self._mul[a, b] == identity and self._mul[b, a] == identity:
                    self._inv[a] = b
                    break
        if len(self._inv) != len(self.elements):
            raise ValueError("multiplication table has no inverse for some element")

    def mul(self, a, b):
        """Composite of the word (a, b): first a, then b."""
        return self._mul[a, b]

    def inv(self, a):
        return self._inv[a]

    def commute(self, a, b):
        return self._mul[a, b] == self._mul[b, a]

    def nonidentity(self):
        return tuple(a for a in self.elements if a != self.identity)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, a):
        return a in self._inv

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={len(self.elements)})"

    def is_abelian(self):
        els = self.elements
        return all(self.commute(a, b) for i, a in enumerate(els) for b in els[i + 1:])

    @classmethod
    def from_permutations(cls, generators, degree, name=""):
        """Closure of permutation generators; permutations are tuples p with p[i] = image of i."""
        ident = tuple(range(degree))
        gens = [tuple(g) for g in generators]
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = tuple(g[p[i]] for i in range(degree))
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
            frontier = nxt
        els = sorted(seen)
        # word (a, b) acts i -> a(i) -> b(a(i)); composite as a function is b after a
        mul = {(a, b): tuple(b[a[i]] for i in range(degree)) for a in els for b in els}
        return cls(els, mul, ident, name=name)


class PermutationGroup:
    """Permutation group with composition computed on the fly (no stored table);
    elements are tuples p with p[i] = image of i."""

    def __init__(self, elements, degree, name=""):
        self.elements = tuple(sorted(elements))
        self.degree = degree
        self.identity = tuple(range(degree))
        self.name = name or f"P{len(self.elements)}"

    @classmethod
    def from_generators(cls, generators, degree, name="", budget=None):
        ident = tuple(range(degree))
        gens = [tuple(g) for g in generators]
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = tuple(g[p[i]] for i in range(degree))
                    if q not in seen:
                        seen.add(q)
                        if budget is not None and len(seen) > budget:
                            raise ValueError(f"group closure exceeds budget {budget}")
                        nxt.append(q)
            frontier = nxt
        return cls(seen, degree, name=name)

    def mul(self, a, b):
        """Composite of the word (a, b): apply a, then b."""
        return tuple(b[a[i]] for i in range(self.degree))

    def inv(self, a):
        out = [0] * self.degree
        for i, v in enumerate(a):
            out[v] = i
        return tuple(out)

    def commute(self, a, b):
        return self.mul(a, b) == self.mul(b, a)

    def nonidentity(self):
        return tuple(a for a in self.elements if a != self.identity)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, a):
        return tuple(a) in set(self.elements)

    def __repr__(self):
        return f"PermutationGroup({self.name}, order={len(self.elements)})"

    def is_abelian(self):
        els = self.elements
        return all(self.commute(a, b) for i, a in enumerate(els) for b in els[i + 1:])


def symmetric_group(n):
    gens = []
    for i in range(n - 1):
        t = list(range(n))
        t[i], t[i + 1] = t[i + 1], t[i]
        gens.append(tuple(t))
    if not gens:
        gens = [tuple(range(n))]
    return PermutationGroup.from_generators(gens, n, name=f"S{n}")


def alternating_group(n):
    gens = []
    for i in range(n - 2):
        c = list(range(n))
        c[i], c[i + 1], c[i + 2] = c[i + 1], c[i + 2], c[i]
        gens.append(tuple(c))
    return PermutationGroup.from_generators(gens or [tuple(range(n))], n, name=f"A{n}")


def cyclic_group(n):
    els = tuple(range(n))
    mul = {(a, b): (a + b) % n for a in els for b in els}
    return FiniteGroup(els, mul, 0, name=f"C{n}")


def dihedral_group(n):
    """Symmetries of the regular n-gon as permutations of vertices 0..n-1."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return PermutationGroup.from_generators([rot, ref], n, name=f"D{n}")


def quaternion_group():
    """Q8 with labels 1, -1, i, -i, j, -j, k, -k."""
    els = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")

    def canon(sign, unit):
        if unit == "1":
            return "1" if sign > 0 else "-1"
        return unit if sign > 0 else "-" + unit

    def split(x):
        return (-1, x[1:]) if x.startswith("-") else (1, x)

    base = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
        ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
        ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
    }
    mul = {}
    for a in els:
        for b in els:
            sa, ua = split(a)
            sb, ub = split(b)
            # word (a, b) composes as the product b*a
            s, u = base[ub, ua]
            mul[a, b] = canon(sa * sb * s, u)
    return FiniteGroup(els, mul, "1", name="Q8")


def direct_product(g1, g2, name=""):
    els = tuple((a, b) for a in g1.elements for b in g2.elements)
    mul = {((a1, b1), (a2, b2)): (g1.mul(a1, a2), g2.mul(b1, b2))
           for (a1, b1) in els for (a2, b2) in els}
    return FiniteGroup(els, mul, (g1.identity, g2.identity),
                       name=name or f"{g1.name}x{g2.name}")


_NAMED = {}


def named_group(name):
    """Resolve names like S3, C4, D4, Q8, A4 (used by CLI corpus specs)."""
    key = name.upper()
    if key not in _NAMED:
        if key == "Q8":
            _NAMED[key] = quaternion_group()
        elif key[0] == "S" and key[1:].isdigit():
            _NAMED[key] = symmetric_group(int(key[1:]))
        elif key[0] == "A" and key[1:].isdigit():
            _NAMED[key] = alternating_group(int(key[1:]))
        elif key[0] == "C" and key[1:].isdigit():
            _NAMED[key] = cyclic_group(int(key[1:]))
        elif key[0] == "D" and key[1:].isdigit():
            _NAMED[key] = dihedral_group(int(key[1:]))
        else:
            raise ValueError(f"unknown group name: {name}")
    return _NAMED[key]
