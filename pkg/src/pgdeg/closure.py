"""Finite closure spaces: closure, cores, Helly independence and criticality,
the union/intersection adjunction, convex geometries, and free sets.

Closed sets are the intersections of a finite generating family (plus the
ground set); everything is computed over bitmask representations."""

from __future__ import annotations

from dataclasses import dataclass

from .symcore import ResourceLimitExceeded


class EmptyNotClosedError(ValueError):
    """The empty set is not closed, so no Helly independent family exists
    (the group case)."""


class ClosureSpace:
    def __init__(self, ground, generators, name="S"):
        self.ground = tuple(ground)
        self.name = name
        self._pos = {x: i for i, x in enumerate(self.ground)}
        if len(self._pos) != len(self.ground):
            raise ValueError("ground set has duplicates")
        self._full = (1 << len(self.ground)) - 1
        gens = {self._mask(g) for g in generators}
        gens.discard(self._full)
        self.generator_masks = tuple(sorted(gens))
        self._cl_cache = {}

    # -- bitmask helpers --

    def _mask(self, subset):
        m = 0
        for x in subset:
            m |= 1 << self._pos[x]
        return m

    def _unmask(self, m):
        return frozenset(x for x, i in self._pos.items() if m >> i & 1)

    def generators(self):
        return [self._unmask(g) for g in self.generator_masks]

    # -- closure --

    def closure_mask(self, m):
        if m in self._cl_cache:
            return self._cl_cache[m]
        out = self._full
        for g in self.generator_masks:
            if m & g == m:
                out &= g
        self._cl_cache[m] = out
        return out

    def closure(self, subset):
        return self._unmask(self.closure_mask(self._mask(subset)))

    def is_closed(self, subset):
        m = self._mask(subset)
        return self.closure_mask(m) == m

    @property
    def empty_closed(self):
        return self.closure_mask(0) == 0

    # -- cores and independence --

    def core_mask(self, masks):
        out = self.closure_mask(_union(masks))
        for i in range(len(masks)):
            out &= self.closure_mask(_union(masks[:i] + masks[i + 1:]))
        return out

    def core(self, family):
        return self._unmask(self.core_mask([self._mask(a) for a in family]))

    def is_helly_independent(self, family):
        if not self.empty_closed:
            raise EmptyNotClosedError(self.name)
        masks = [self._mask(a) for a in family]
        if any(m == 0 for m in masks):
            return False
        return self.core_mask(masks) == 0

    def helly_number(self, return_witness=False):
        """Max size of a duplicate-free independent singleton family, by DFS over
        trace-class representatives (points in identical generators merge)."""
        if not self.empty_closed:
            raise EmptyNotClosedError(self.name)
        reps = self._trace_representatives()
        best = [0, ()]

        def core_empty(bits):
            return self.core_mask(bits) == 0

        def extend(bits, start, chosen):
            if len(chosen) > best[0]:
                best[0] = len(chosen)
                best[1] = tuple(chosen)
            for idx in range(start, len(reps)):
                nb = bits + [1 << self._pos[reps[idx]]]
                if core_empty(nb):
                    extend(nb, idx + 1, chosen + [reps[idx]])

        extend([], 0, [])
        if return_witness:
            return best[0], [frozenset([x]) for x in best[1]]
        return best[0]

    def _trace_representatives(self):
        seen = {}
        for x in self.ground:
            trace = tuple((g >> self._pos[x]) & 1 for g in self.generator_masks)
            seen.setdefault(trace, x)
        return sorted(seen.values(), key=lambda x: self._pos[x])

    # -- criticality --

    def is_helly_critical(self, family):
        masks = [self._mask(a) for a in family]
        if any(self.closure_mask(m) != m for m in masks):
            raise ValueError("critical families consist of closed sets")
        if not masks:
            return True
        if _intersection(masks, self._full) != 0:
            return False
        for i in range(len(masks)):
            if _intersection(masks[:i] + masks[i + 1:], self._full) == 0:
                return False
        return True

    def closed_sets(self, budget=200_000):
        """All closed sets (intersections of generators plus the ground set)."""
        sets = {self._full}
        frontier = list(self.generator_masks)
        sets.update(frontier)
        while frontier:
            new = []
            for g in frontier:
                for s in list(sets):
                    t = g & s
                    if t not in sets:
                        sets.add(t)
                        new.append(t)
                        if len(sets) > budget:
                            raise ResourceLimitExceeded("closed-set lattice budget")
            frontier = new
        return sorted(sets)

    def max_critical_size(self, budget=200_000, return_witness=False):
        """Largest Helly critical family, by DFS over closed sets with strictly
        shrinking prefix meets (every member of a critical family strictly cuts
        the meet of the others, in any order)."""
        closed = [c for c in self.closed_sets(budget) if c != self._full]
        best = [0, ()]

        def extend(chosen, meet, start):
            for idx in range(start, len(closed)):
                c = closed[idx]
                nm = meet & c
                if nm == meet:
                    continue
                fam = chosen + (c,)
                if nm == 0:
                    if len(fam) > best[0] and self._critical_masks(fam):
                        best[0] = len(fam)
                        best[1] = fam
                else:
                    extend(fam, nm, idx + 1)

        extend((), self._full, 0)
        if return_witness:
            return best[0], [self._unmask(m) for m in best[1]]
        return best[0]

    def _critical_masks(self, masks):
        if _intersection(list(masks), self._full) != 0:
            return False
        for i in range(len(masks)):
            if _intersection(list(masks[:i] + masks[i + 1:]), self._full) == 0:
                return False
        return True

    # -- F/G adjunction --

    def f_map(self, family):
        masks = [self._mask(a) for a in family]
        return [self._unmask(self.closure_mask(_union(masks[:i] + masks[i + 1:])))
                for i in range(len(masks))]

    def g_map(self, family):
        masks = [self._mask(a) for a in family]
        return [self._unmask(_intersection(masks[:i] + masks[i + 1:], self._full))
                for i in range(len(masks))]

    # -- convex geometries and free sets --

    def is_convex_geometry(self, budget=200_000):
        """Antiexchange: for closed C and distinct x, y outside C,
        y in cl(C + x) forbids x in cl(C + y)."""
        n = len(self.ground)
        for c in self.closed_sets(budget):
            outside = [i for i in range(n) if not (c >> i) & 1]
            for xi in outside:
                cx = self.closure_mask(c | (1 << xi))
                for yi in outside:
                    if yi == xi or not (cx >> yi) & 1:
                        continue
                    cy = self.closure_mask(c | (1 << yi))
                    if (cy >> xi) & 1:
                        return False
        return True

    def is_free(self, subset):
        m = self._mask(subset)
        return self._is_free_mask(m)

    def _is_free_mask(self, m):
        if self.closure_mask(m) != m:
            return False
        mm = m
        while mm:
            low = mm & -mm
            sub = m & ~low
            if self.closure_mask(sub) != sub:
                return False
            mm ^= low
        return True

    def max_free_set(self, return_witness=False):
        """Largest free set, by DFS over the downward-closed system of free sets."""
        n = len(self.ground)
        best = [0, 0]

        def extend(m, size, start):
            if size > best[0]:
                best[0], best[1] = size, m
            for i in range(start, n):
                nm = m | (1 << i)
                if self._is_free_mask(nm):
                    extend(nm, size + 1, i + 1)

        extend(0, 0, 0)
        if return_witness:
            return best[0], self._unmask(best[1])
        return best[0]

    # -- derived spaces --

    def subspace(self, points):
        sub = [x for x in self.ground if x in set(points)]
        gens = [[x for x in sub if x in g] for g in self.generators()]
        return ClosureSpace(sub, gens, name=f"{self.name}|{len(sub)}")

    def disjoint_union(self, other):
        ground = [("L", x) for x in self.ground] + [("R", y) for y in other.ground]
        right_all = [("R", y) for y in other.ground]
        left_all = [("L", x) for x in self.ground]
        gens = [[("L", x) for x in g] + right_all for g in self.generators()]
        gens += [left_all + [("R", y) for y in g] for g in other.generators()]
        return ClosureSpace(ground, gens, name=f"{self.name}+{other.name}")


def _union(masks):
    out = 0
    for m in masks:
        out |= m
    return out


def _intersection(masks, full):
    out = full
    for m in masks:
        out &= m
    return out


def order_convexity(n):
    """Order convexity on n collinear points 1..n: closed sets are the
    intervals and the empty set."""
    ground = list(range(1, n + 1))
    gens = [list(range(i, j + 1)) for i in ground for j in range(i, n + 1)]
    gens.append([])
    return ClosureSpace(ground, gens, name=f"line({n})")


@dataclass
class ClosedFamily:
    """Indexed family of subsets; members need not be distinct."""
    members: list

    def __len__(self):
        return len(self.members)
