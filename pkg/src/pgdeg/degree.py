"""The main pipeline: exact degree of finite partial groupoids via Helly numbers
of characteristic actions, cross-checked by bounded starry-word brute force, plus
the structural corollaries and the symmetric-sphere suite."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .action import canonical_action
from .corpus import sphere
from .segal import (SegalWitness, check_lower_segal_spiny,
                    check_segal_generic, is_pass, lower_odd)
from .symcore import DecBottom, DecTop, GroupWords, PartialGroupoid, WordPresentation, materialize


@dataclass
class DegreeReport:
    degree: int
    method: str
    helly_number: int | None = None
    fiber_numbers: dict = field(default_factory=dict)
    critical_family: list = field(default_factory=list)   # [(edge, domain points)]
    brute_witness: SegalWitness | None = None
    brute_pass_n_max: int | None = None
    is_groupoid: bool = False
    is_group: bool = False
    empty: bool = False
    action_name: str | None = None
    agree: bool | None = None

    def to_json(self):
        def enc(v):
            if isinstance(v, (tuple, frozenset, set)):
                return [enc(x) for x in (sorted(v, key=repr) if isinstance(v, (set, frozenset)) else v)]
            return v

        return {
            "degree": self.degree,
            "method": self.method,
            "helly_number": self.helly_number,
            "fiber_numbers": {str(k): v for k, v in self.fiber_numbers.items()},
            "critical_family": [{"edge": enc(e), "domain": enc(d)}
                                for e, d in self.critical_family],
            "brute_witness": self.brute_witness.to_json() if self.brute_witness else None,
            "brute_pass_n_max": self.brute_pass_n_max,
            "is_groupoid": self.is_groupoid,
            "is_group": self.is_group,
            "empty": self.empty,
            "action": self.action_name,
            "agree": self.agree,
        }


def _as_base(obj):
    """Normalize inputs to a PartialGroupoid or GroupWords base."""
    if isinstance(obj, (PartialGroupoid, GroupWords)):
        return obj
    if isinstance(obj, WordPresentation):
        return obj.pg
    if isinstance(obj, (DecBottom, DecTop)) or hasattr(obj, "simplices"):
        return materialize(obj)
    raise TypeError(f"cannot interpret {obj!r} as a partial groupoid")


def max_critical_domains(act, obj):
    """Largest critical family of 1-simplex domains inside the fiber of obj.

    Returns (size, [(edge, domain trace)]).  DFS over the nonidentity edge
    domains with strictly shrinking prefix meets."""
    fiber = act.fiber(obj)
    edges = act._edges()
    cands = []
    seen = {}
    for e in edges:
        if act._is_identity(e) or act._src(e) != obj:
            continue
        d = act.dom_edge(e) & fiber
        if d and d not in seen:
            seen[d] = e
            cands.append((e, d))
    cands.sort(key=lambda t: repr(t[0]))
    best = [0, ()]

    def critical(fam):
        doms = [d for _, d in fam]
        total = fiber
        for d in doms:
            total &= d
        if total:
            return False
        for i in range(len(doms)):
            meet = fiber
            for j, d in enumerate(doms):
                if j != i:
                    meet &= d
            if not meet:
                return False
        return True

    def extend(fam, meet, start):
        for idx in range(start, len(cands)):
            e, d = cands[idx]
            nm = meet & d
            if nm == meet:
                continue
            nf = fam + ((e, d),)
            if not nm:
                if len(nf) > best[0] and critical(nf):
                    best[0] = len(nf)
                    best[1] = nf
            else:
                extend(nf, nm, idx + 1)

    extend((), fiber, 0)
    return best[0], list(best[1])


def degree(obj, method="both", action=None, n_max=None, budget=5_000_000,
           validate=True):
    """Exact degree with optional brute confirmation.

    helly route: build (or take) a characteristic action, take the sup of the
    fiber Helly numbers; brute route: smallest k at which the bounded starry
    check passes, with the witness at k-1 recorded."""
    base = _as_base(obj)
    if isinstance(base, PartialGroupoid) and validate:
        problems = base.validate()
        if problems:
            raise ValueError(f"invalid partial groupoid: {problems[0]}")

    if isinstance(base, PartialGroupoid) and not base.objects:
        return DegreeReport(1, method, empty=True)

    if base.is_groupoid():
        rep = DegreeReport(1, method, is_groupoid=True,
                           is_group=base.is_group() if isinstance(base, PartialGroupoid)
                           else True)
        if method in ("brute", "both"):
            nm = n_max or (base.dimension() + 3)
            res = check_lower_segal_spiny(base, 1, nm, budget=budget)
            rep.brute_pass_n_max = nm
            rep.agree = is_pass(res)
            if not rep.agree:
                raise AssertionError("groupoid failed the k=1 starry check")
        return rep

    report = DegreeReport(0, method)
    act = action
    if method in ("helly", "both"):
        if act is None:
            act = getattr(base, "native_action", None) or canonical_action(base)
        if validate:
            problems = act.validate()
            if problems:
                raise ValueError(f"invalid action: {problems[0]}")
        report.action_name = act.name
        cs = act.closure_space()
        deg_h = 0
        witness = []
        for a in (base.objects if isinstance(base, PartialGroupoid) else ("*",)):
            fib = act.fiber(a)
            if not fib:
                continue
            sub = cs.subspace(fib)
            h_a = sub.helly_number()
            report.fiber_numbers[a] = h_a
            if h_a > deg_h:
                size, fam = max_critical_domains(act, a)
                if size != h_a:
                    raise AssertionError(
                        f"critical domain family size {size} != fiber Helly number {h_a}")
                deg_h, witness = h_a, fam
        report.helly_number = deg_h
        report.critical_family = witness
        report.degree = deg_h

    if method in ("brute", "both"):
        k = 1
        last_witness = None
        while True:
            nm = n_max or (base.dimension() + k + 2)
            res = check_lower_segal_spiny(base, k, nm, budget=budget)
            if is_pass(res):
                break
            last_witness = res
            k += 1
            if k > 2 * len(base.edge_list() if isinstance(base, GroupWords)
                           else base.edges) + 2:
                raise AssertionError("brute degree search exceeded the HM bound")
        report.brute_witness = last_witness
        report.brute_pass_n_max = nm
        if method == "both":
            report.agree = (k == report.degree)
            if not report.agree:
                raise AssertionError(
                    f"helly degree {report.degree} != brute degree {k}")
        else:
            report.degree = k
    return report


def degree_bound_check(obj, **kw):
    """deg(L) <= dim(L) + 1."""
    base = _as_base(obj)
    rep = degree(base, **kw)
    return rep.degree <= base.dimension() + 1


def reduction_invariance_check(pg, **kw):
    """degree(reduction) == degree for non-groupoids; reports the reduction's
    degree for groupoid inputs (the exceptional case)."""
    if pg.is_groupoid():
        red = pg.reduction()
        return degree(red, **kw).degree
    a = degree(pg, **kw).degree
    b = degree(pg.reduction(), **kw).degree
    return a == b


def decalage_invariance_check(obj, **kw):
    base = _as_base(obj)
    pres = WordPresentation(base) if isinstance(base, PartialGroupoid) else base
    d0 = degree(base, **kw).degree
    db = degree(materialize(DecBottom(pres)), **kw).degree
    dt = degree(materialize(DecTop(pres)), **kw).degree
    return d0 == db == dt


# -- symmetric sphere suite ------------------------------------------------------


def sphere_lower_bound_family(n):
    """The explicit boundary family with no filler (defined for n >= 2):
    x_0 = ... = x_{n-1} = a', x_n = ... = x_{2n-1} = b' over I = {0..2n-1}."""
    a1 = (0,) * (n - 1) + tuple(range(1, n + 1)) + (0,)
    b1 = tuple(range(1, n + 1)) + (0,) * n
    I = tuple(range(2 * n))
    fam = {i: (a1 if i < n else b1) for i in I}
    return I, fam


def replay_sphere_lower_bound(n):
    """Verify compatibility of the explicit family and the absence of a filler."""
    if n < 2:
        raise ValueError("the explicit family needs n >= 2")
    sp = sphere(n)
    I, fam = sphere_lower_bound_family(n)
    m = 2 * n
    for ai in range(len(I)):
        for bi in range(ai + 1, len(I)):
            i, j = I[ai], I[bi]
            if sp.face(m - 1, i, fam[j]) != sp.face(m - 1, j - 1, fam[i]):
                return False
    fillers = [x for x in sp.simplices(m)
               if all(sp.face(m, i, x) == fam[i] for i in I)]
    return not fillers


@dataclass
class SphereReport:
    n: int
    lower_witness: SegalWitness | None
    explicit_family_refutes: bool | None
    upper_pass: bool
    function_lemma: dict

    def to_json(self):
        return {"n": self.n,
                "degree": 2 * self.n,
                "lower_witness": self.lower_witness.to_json() if self.lower_witness else None,
                "explicit_family_refutes": self.explicit_family_refutes,
                "upper_pass": self.upper_pass,
                "function_lemma": self.function_lemma}


def sphere_degree_check(n, n_max=None, function_r=(3,), function_sizes=None,
                        budget=30_000_000):
    """deg(Sigma S^n) = 2n: replay the lower-bound witness, verify the
    lower (4n-1)-Segal condition up to 4n+3, and run the function-family oracle."""
    if n_max is None:
        n_max = 4 * n + 3
    sp = sphere(n)
    from .segal import LevelTables
    tables = LevelTables(sp, budget=budget)
    low = check_segal_generic(sp, lower_odd(2 * n - 1), n_max, budget=budget,
                              restrict_endpoints=True, tables=tables)
    if is_pass(low):
        raise AssertionError(f"Sigma S^{n} unexpectedly lower {4 * n - 3}-Segal up to {n_max}")
    explicit = replay_sphere_lower_bound(n) if n >= 2 else None
    up = check_segal_generic(sp, lower_odd(2 * n), n_max, budget=budget,
                             restrict_endpoints=True, tables=tables)
    fl = {}
    for r in function_r:
        sizes = function_sizes or (2 * r, 2 * r + 1)
        for s in sizes:
            fl[f"r={r},s={s}"] = function_family_oracle(r, s)
    return SphereReport(n, low, explicit, is_pass(up), fl)


# -- the function-family extension oracle ----------------------------------------


def _restrict(f, dom, j):
    """Restrict a function given as a tuple over the sorted domain by removing j."""
    pos = dom.index(j)
    return f[:pos] + f[pos + 1:]


def function_family_oracle(r, s_size):
    """Exhaustive check: for |R| = r >= 3 and a (2r-1)-subset I of S, every
    pairwise-coherent class family (f_i) extends to a unique class [f].

    Families are enumerated at class level (trivial functions are a single
    class; epi classes are singletons); any epi extension must restrict to the
    given epi slot on the nose, so candidates are its r one-point extensions."""
    if r < 3 or s_size < 2 * r:
        raise ValueError("need r >= 3 and |S| >= 2r")
    S = list(range(s_size))
    I = list(range(2 * r - 1))
    doms = {i: [x for x in S if x != i] for i in I}
    R = range(r)

    def is_epi(f):
        return len(set(f)) == r

    slot_classes = {}
    for i in I:
        epis = [f for f in itertools.product(R, repeat=s_size - 1) if is_epi(f)]
        slot_classes[i] = [None] + epis

    def rest_class(c, i, j):
        if c is None:
            return None
        g = _restrict(c, doms[i], j)
        return g if is_epi(g) else None

    # bucket slot-j classes by their restriction class at i (for the DFS join)
    buckets = {}
    for j in I:
        for i in I:
            if i == j:
                continue
            b = {}
            for c in slot_classes[j]:
                b.setdefault(rest_class(c, j, i), []).append(c)
            buckets[j, i] = b

    checked = 0

    def matching_classes(fam):
        epi_slots = [i for i in I if fam[i] is not None]
        if not epi_slots:
            # any trivial f matches; an epi match would need 2r-1 > r unique
            # preimage positions over r values, impossible
            return 1
        i0 = epi_slots[0]
        count = 0
        for v in R:
            pos = S.index(i0)
            f = fam[i0][:pos] + (v,) + fam[i0][pos:]
            if not is_epi(f):
                continue
            ok = True
            for i in I:
                g = _restrict(f, S, i)
                cls = g if is_epi(g) else None
                if cls != fam[i]:
                    ok = False
                    break
            if ok:
                count += 1
        return count

    def extend(ell, fam):
        nonlocal checked
        if ell == len(I):
            checked += 1
            cnt = matching_classes(fam)
            if cnt != 1:
                raise AssertionError(
                    f"family {fam} has {cnt} matching classes (expected 1)")
            return
        j = I[ell]
        first = I[0]
        cands = (buckets[j, first].get(rest_class(fam[first], first, j), [])
                 if ell > 0 else slot_classes[j])
        for c in cands:
            ok = True
            for idx in range(1, ell):
                i = I[idx]
                if rest_class(c, j, i) != rest_class(fam[i], i, j):
                    ok = False
                    break
            if ok:
                fam[j] = c
                extend(ell + 1, fam)
        fam[j] = None

    fam = {i: None for i in I}
    extend(0, fam)
    return {"r": r, "s": s_size, "families": checked, "pass": True}
