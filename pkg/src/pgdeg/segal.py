"""Higher Segal condition checkers.

Three routes, used as independent oracles for each other:

* a generic unique-filler checker over face-index tables (works for any
  finite presentation, including non-spiny ones like the symmetric spheres);
* a word checker for edgy inputs: surjectivity of the spine maps onto words
  whose gapped faces lift;
* a starry checker for spiny inputs: surjectivity of the star maps, searched
  over entry sets (starry words are permutable, so witnesshood is set-level,
  and any witness prunes to a set all of whose drops lift).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .symcore import DecBottom, DecTop, GroupWords, PartialGroupoid, ResourceLimitExceeded

VARIANT_KINDS = ("lower-odd", "lower-even", "upper-even", "upper-odd")


@dataclass(frozen=True)
class SegalVariant:
    """One of the four gapped-cube conditions at level k >= 1.

    lower-odd is the lower (2k-1)-Segal condition; lower-even/upper-even/upper-odd
    exclude 0, n, or both from the gapped index set."""
    kind: str
    k: int

    def __post_init__(self):
        if self.kind not in VARIANT_KINDS:
            raise ValueError(f"unknown variant kind {self.kind}")
        if self.k < 1:
            raise ValueError("k must be >= 1")

    @property
    def excludes_bottom(self):
        return self.kind in ("lower-even", "upper-odd")

    @property
    def excludes_top(self):
        return self.kind in ("upper-even", "upper-odd")

    def degree_name(self):
        return {"lower-odd": f"lower {2 * self.k - 1}-Segal",
                "lower-even": f"lower {2 * self.k}-Segal",
                "upper-even": f"upper {2 * self.k}-Segal",
                "upper-odd": f"upper {2 * self.k + 1}-Segal"}[self.kind]


def lower_odd(k):
    return SegalVariant("lower-odd", k)


@dataclass(frozen=True)
class GappedSet:
    ambient: int
    members: tuple

    def __post_init__(self):
        ms = self.members
        if any(not (0 <= m <= self.ambient) for m in ms):
            raise ValueError("members outside [0, n]")
        if any(ms[i + 1] - ms[i] < 2 for i in range(len(ms) - 1)):
            raise ValueError("members are not pairwise >= 2 apart")


def gapped_subsets(n, size, variant=None, require_endpoints=False):
    """All gapped subsets of [n] of the given size, filtered by the variant's
    endpoint exclusions (or restricted to subsets containing 0 and n)."""
    if size < 1:
        raise ValueError("size must be >= 1")
    lo = 1 if (variant and variant.excludes_bottom) else 0
    hi = n - 1 if (variant and variant.excludes_top) else n
    out = []

    def rec(start, acc):
        if len(acc) == size:
            out.append(GappedSet(n, tuple(acc)))
            return
        for v in range(start, hi + 1):
            if (hi - v) < 2 * (size - len(acc) - 1):
                break
            acc.append(v)
            rec(v + 2, acc)
            acc.pop()

    rec(lo, [])
    if require_endpoints:
        out = [g for g in out if 0 in g.members and n in g.members]
    return out


@dataclass
class SegalWitness:
    """A refutation: the faces indexed by I lift, the word (or family) does not."""
    kind: str                    # starry | word | generic-missing | generic-double
    n: int
    members: tuple               # the index set I
    word: tuple | None = None
    faces: list = field(default_factory=list)   # [(i, lift payload)]
    extra: dict = field(default_factory=dict)

    def to_json(self):
        def enc(v):
            if isinstance(v, tuple):
                return [enc(x) for x in v]
            if isinstance(v, (list, set, frozenset)):
                return [enc(x) for x in sorted(v, key=repr)]
            return v

        return {"kind": self.kind, "n": self.n, "I": list(self.members),
                "word": enc(self.word) if self.word is not None else None,
                "faces": [{"i": i, "lift": enc(x)} for i, x in self.faces],
                "extra": {k: enc(v) for k, v in self.extra.items()}}


@dataclass
class PassReport:
    n_max: int
    cubes: int = 0
    words: int = 0

    def __bool__(self):
        return True


def is_pass(result):
    return isinstance(result, PassReport)


# -- generic unique-filler checker ---------------------------------------------


class LevelTables:
    """Simplex lists and face index tables for a presentation, built lazily
    per dimension and shareable between checks."""

    def __init__(self, p, budget=3_000_000):
        self.p = p
        self.budget = budget
        self.simplices = {}
        self.index = {}
        self.faces = {}

    def ensure(self, m):
        for level in range(m + 1):
            if level in self.simplices:
                continue
            xs = list(self.p.simplices(level))
            if len(xs) > self.budget:
                raise ResourceLimitExceeded(f"level {level} has {len(xs)} simplices")
            self.simplices[level] = xs
            self.index[level] = {x: i for i, x in enumerate(xs)}
            if level >= 1:
                idx = self.index[level - 1]
                for i in range(level + 1):
                    self.faces[level, i] = np.fromiter(
                        (idx[self.p.face(level, i, x)] for x in xs),
                        dtype=np.int32, count=len(xs))


def _group_ids(mat):
    """Row group ids for an int matrix; equal rows get equal ids."""
    r = len(mat)
    if r == 0:
        return np.zeros(0, dtype=np.int64), 0
    if mat.shape[1] == 0:
        return np.zeros(r, dtype=np.int64), 1
    order = np.lexsort(mat.T[::-1])
    srt = mat[order]
    new = np.empty(r, dtype=bool)
    new[0] = True
    if r > 1:
        new[1:] = np.any(srt[1:] != srt[:-1], axis=1)
    gid_sorted = np.cumsum(new) - 1
    gids = np.empty(r, dtype=np.int64)
    gids[order] = gid_sorted
    return gids, int(gid_sorted[-1]) + 1


def _injective_rows(mat):
    """(True, None) if all rows distinct, else (False, (r1, r2)) for a clash."""
    gids, n = _group_ids(mat)
    if n == len(mat):
        return True, None
    order = np.argsort(gids, kind="stable")
    gs = gids[order]
    pos = np.nonzero(gs[1:] == gs[:-1])[0][0]
    return False, (int(order[pos]), int(order[pos + 1]))


def _enumerate_families(tables, n, members, budget):
    """All compatible families (x_i)_{i in I} in X_{n-1}, as an index matrix."""
    I = list(members)
    M = len(tables.simplices[n - 1])
    fm1 = {j: tables.faces[n - 1, j] for j in range(n)} if n >= 2 else {}
    R = np.arange(M, dtype=np.int32).reshape(-1, 1)
    for ell in range(1, len(I)):
        il = I[ell]
        key_exist = np.stack([fm1[il - 1][R[:, j]] for j in range(ell)], axis=1)
        key_cand = np.stack([fm1[I[j]] for j in range(ell)], axis=1)
        both = np.vstack([key_exist, key_cand])
        gids, _ = _group_ids(both)
        ge = gids[:len(key_exist)]
        gc = gids[len(key_exist):]
        order = np.argsort(gc, kind="stable")
        gcs = gc[order]
        left = np.searchsorted(gcs, ge, side="left")
        right = np.searchsorted(gcs, ge, side="right")
        counts = (right - left).astype(np.int64)
        total = int(counts.sum())
        if total > budget:
            raise ResourceLimitExceeded(
                f"family join at n={n}, I={tuple(I)} needs {total} rows")
        rep = np.repeat(np.arange(len(R)), counts)
        starts = np.cumsum(counts) - counts
        within = np.arange(total, dtype=np.int64) - np.repeat(starts, counts)
        cand_pos = order[np.repeat(left, counts) + within].astype(np.int32)
        R = np.hstack([R[rep], cand_pos.reshape(-1, 1)])
    return R


def check_segal_generic(p, variant, n_max, budget=20_000_000,
                        restrict_endpoints=None, tables=None):
    """Unique-filler check of the variant over all admissible gapped cubes with
    top vertex at dimension <= n_max.  Returns PassReport or the first witness.

    For the lower-odd variant the cubes may be restricted to gapped sets
    containing both endpoints; the verdict within the same bound is unchanged."""
    if restrict_endpoints is None:
        restrict_endpoints = False
    k = variant.k
    if tables is None:
        tables = LevelTables(p, budget=budget)
    report = PassReport(n_max)
    for n in range(2, n_max + 1):
        cubes = gapped_subsets(n, k + 1, variant,
                               require_endpoints=(restrict_endpoints
                                                  and variant.kind == "lower-odd"))
        if cubes:
            tables.ensure(n)
        for gap in cubes:
            I = gap.members
            report.cubes += 1
            fill = np.stack([tables.faces[n, i] for i in I], axis=1)
            ok, clash = _injective_rows(fill)
            if not ok:
                x1 = tables.simplices[n][clash[0]]
                x2 = tables.simplices[n][clash[1]]
                fam = [(i, tables.simplices[n - 1][fill[clash[0], j]])
                       for j, i in enumerate(I)]
                return SegalWitness("generic-double", n, I, None, fam,
                                    {"fillers": (x1, x2)})
            fams = _enumerate_families(tables, n, I, budget)
            both = np.vstack([fill.astype(np.int32), fams])
            gids, _ = _group_ids(both)
            gf = gids[:len(fill)]
            ga = gids[len(fill):]
            has_filler = np.isin(ga, gf)
            if not has_filler.all():
                missing = fams[~has_filler]
                best = missing[np.lexsort(missing.T[::-1])][0]
                fam = [(i, tables.simplices[n - 1][best[j]])
                       for j, i in enumerate(I)]
                return SegalWitness("generic-missing", n, I, None, fam)
    return report


def replay_generic_witness(p, witness):
    """Check a generic witness against the presentation: the family must be
    compatible and admit no (or two) fillers."""
    n, I = witness.n, list(witness.members)
    fam = {i: x for i, x in witness.faces}
    for a in range(len(I)):
        for b in range(a + 1, len(I)):
            i, j = I[a], I[b]
            if p.face(n - 1, i, fam[j]) != p.face(n - 1, j - 1, fam[i]):
                return False
    fillers = [x for x in p.simplices(n)
               if all(p.face(n, i, x) == fam[i] for i in I)]
    if witness.kind == "generic-missing":
        return len(fillers) == 0
    if witness.kind == "generic-double":
        return len(fillers) >= 2
    return False


# -- word checker (edgy inputs) --------------------------------------------------


def _word_chains(base, n, budget):
    """Target-to-source composable words of length n over the base's edges."""
    if isinstance(base, GroupWords):
        edges = base.edge_list()
        count = len(edges) ** n
        if count > budget:
            raise ResourceLimitExceeded(f"{count} candidate words at n={n}")
        yield from itertools.product(edges, repeat=n)
        return
    edges = sorted(base.edges)
    by_src = {}
    for e in edges:
        by_src.setdefault(base.src(e), []).append(e)
    count = 0

    def rec(word):
        nonlocal count
        if len(word) == n:
            count += 1
            if count > budget:
                raise ResourceLimitExceeded(f"word enumeration at n={n}")
            yield tuple(word)
            return
        for e in by_src.get(base.tgt(word[-1]), []):
            word.append(e)
            yield from rec(word)
            word.pop()

    for e in edges:
        yield from rec([e])


def _max_gapped_subset(values):
    """Greedy maximum gapped subset of a sorted value list."""
    out = []
    last = None
    for v in values:
        if last is None or v - last >= 2:
            out.append(v)
            last = v
    return out


def check_lower_segal_words(base, k, n_max, variant_kind="lower-odd",
                            budget=2_000_000):
    """Spine-word surjectivity onto gapped-liftable words, per variant.

    base is a PartialGroupoid or a GroupWords presentation (possibly simplicial
    only, e.g. commuting tuples over a monoid)."""
    variant = SegalVariant(variant_kind, k)
    report = PassReport(n_max)

    def face_word(w, i):
        n = len(w)
        if isinstance(base, GroupWords):
            if i == 0:
                return w[1:]
            if i == n:
                return w[:-1]
            return w[:i - 1] + (base.group.mul(w[i - 1], w[i]),) + w[i + 1:]
        return base.face(i, w)

    for n in range(max(2, 2 * k), n_max + 1):
        for w in _word_chains(base, n, budget):
            report.words += 1
            if base.is_simplex(w):
                continue
            lo = 1 if variant.excludes_bottom else 0
            hi = n - 1 if variant.excludes_top else n
            liftable = []
            for i in range(lo, hi + 1):
                fw = face_word(w, i)
                if fw is not None and base.is_simplex(fw):
                    liftable.append(i)
            gapped = _max_gapped_subset(liftable)
            if len(gapped) >= k + 1:
                I = tuple(gapped[:k + 1])
                faces = [(i, face_word(w, i)) for i in I]
                return SegalWitness("word", n, I, w, faces)
    return report


# -- starry checker (spiny inputs) ------------------------------------------------


def _starry_context(base, obj):
    """(sorted elements, lift test on sorted tuples, domain bitsets or None)."""
    if isinstance(base, GroupWords):
        elements = base.star(obj)
        doms = None
        if base.domains is not None:
            order = {x: i for i, x in enumerate(base.carrier)}
            doms = {g: sum(1 << order[x] for x in base.domains[g]) for g in elements}
        return elements, base.lifts_starry_set, doms
    elements = base.star(obj)
    return elements, base.lifts_starry_set, None


def check_lower_segal_spiny(base, k, n_max=None, budget=5_000_000):
    """Starry-word surjectivity check for spiny inputs.

    Witnesshood depends only on the entry set; any witness prunes to a set whose
    drop-intersections are all liftable, and in any enumeration order the prefix
    lift-sets of such a set strictly shrink.  The DFS enumerates accordingly."""
    if n_max is None:
        n_max = base.dimension() + k + 2
    objects = getattr(base, "objects", None) or base.objects
    report = PassReport(n_max)
    nodes = 0

    for obj in objects:
        elements, lifts, doms = _starry_context(base, obj)
        if not elements:
            continue
        memo = {}

        def lift_set(t):
            if t not in memo:
                memo[t] = lifts(t)
            return memo[t]

        found = []

        def candidate(t):
            # t does not lift; a witness needs >= k+1 liftable drops
            if len(t) < k + 1:
                return False
            drops = [i for i in range(len(t)) if lift_set(t[:i] + t[i + 1:])]
            if len(drops) >= k + 1:
                I = tuple(range(1, k + 2))
                faces = []
                for pos in drops[:k + 1]:
                    sub = t[:pos] + t[pos + 1:]
                    faces.append((pos + 1, base.lift_starry(sub)))
                found.append(SegalWitness("starry", len(t), I, t, faces,
                                          {"liftable_drops": [d + 1 for d in drops],
                                           "object": obj}))
                return True
            return False

        def extend(prefix, start, cur):
            nonlocal nodes
            for idx in range(start, len(elements)):
                s = elements[idx]
                nodes += 1
                if nodes > budget:
                    raise ResourceLimitExceeded("starry search budget")
                t = prefix + (s,)
                if doms is not None:
                    nxt = cur & doms[s]
                    if nxt == cur and cur != 0:
                        continue  # non-shrinking entries never occur in critical sets
                    if nxt == 0:
                        if candidate(t):
                            return True
                        continue
                    if len(t) <= n_max - 1 and extend(t, idx + 1, nxt):
                        return True
                else:
                    if lift_set(t):
                        if len(t) <= n_max - 1 and extend(t, idx + 1, cur):
                            return True
                    else:
                        if candidate(t):
                            return True
            return False

        start_mask = (1 << len(base.carrier)) - 1 if doms is not None else 0
        if extend((), 0, start_mask):
            return found[0]
        report.words += len(memo)
    return report


def replay_starry_witness(base, witness):
    w = witness.word
    if base.lifts_starry_set(w):
        return False
    good = 0
    for pos in witness.extra.get("liftable_drops", []):
        sub = w[:pos - 1] + w[pos:]
        if base.lifts_starry_set(sub):
            good += 1
    return good >= len(witness.members)


def replay_word_witness(base, witness):
    if base.is_simplex(witness.word):
        return False
    for i, lift in witness.faces:
        if lift is None or not base.is_simplex(lift):
            return False
    return True


# -- decalage -------------------------------------------------------------------


def dec_bot(p):
    return DecBottom(p)


def dec_top(p):
    return DecTop(p)
