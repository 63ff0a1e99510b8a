"""JSON document formats: partial groupoids, group-embedded presentations,
actions, closure spaces; canonical serialization for round-trip stability."""

from __future__ import annotations

import json

from .action import CharacteristicAction, PartialGroupAction
from .closure import ClosureSpace
from .groups import FiniteGroup
from .symcore import GroupWords, PartialGroupoid


def canonical_json(doc):
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def dump_partial_groupoid(pg):
    return {
        "kind": "partial-groupoid",
        "objects": [str(o) for o in pg.objects],
        "edges": [{"id": str(e), "src": str(s), "tgt": str(t),
                   "inv": str(pg.inverse[e])}
                  for e, (s, t) in sorted(pg.edges.items(), key=lambda kv: str(kv[0]))],
        "identities": {str(o): str(e) for o, e in pg.identity.items()},
        "compositions": sorted([str(f), str(g), str(h)]
                               for (f, g), h in pg.compose.items()),
        "simplices": {str(n): sorted([str(e) for e in w] for w in ws)
                      for n, ws in pg.simplex_words.items()},
    }


def load_partial_groupoid(doc):
    edges = {e["id"]: (e["src"], e["tgt"]) for e in doc["edges"]}
    inverse = {e["id"]: e["inv"] for e in doc["edges"]}
    compose = {(f, g): h for f, g, h in doc["compositions"]}
    words = {int(n): frozenset(tuple(w) for w in ws)
             for n, ws in doc.get("simplices", {}).items()}
    return PartialGroupoid(doc["objects"], edges, doc["identities"], inverse,
                           compose, words, name=doc.get("name", "L"))


def dump_group(group):
    els = [str(e) for e in group.elements]
    idx = {e: i for i, e in enumerate(group.elements)}
    table = [[idx[group.mul(a, b)] for b in group.elements]
             for a in group.elements]
    return {"elements": els, "table": table,
            "identity": str(group.identity), "name": group.name}


def load_group(doc):
    if "permutation_generators" in doc:
        from .groups import PermutationGroup
        gens = [tuple(g) for g in doc["permutation_generators"]]
        return PermutationGroup.from_generators(gens, len(gens[0]),
                                                name=doc.get("name", ""))
    els = list(doc["elements"])
    table = doc["table"]
    mul = {(els[i], els[j]): els[table[i][j]]
           for i in range(len(els)) for j in range(len(els))}
    return FiniteGroup(els, mul, doc["identity"], name=doc.get("name", ""))


def dump_group_embedded(gw, max_dim=None):
    doc = {"kind": "group-embedded", "group": dump_group(gw.group),
           "name": gw.name, "symmetric": gw.symmetric}
    if gw.domains is not None:
        doc["word_predicate"] = "all-acting"
        doc["action"] = {
            "carrier": [str(x) for x in gw.carrier],
            "maps": {str(g): sorted([str(x), str(y)] for x, y in
                                    gw.native_action.edge_action.get(g, {}).items())
                     for g in gw.edge_list()},
        }
    else:
        dim = max_dim if max_dim is not None else gw.dimension()
        simplices = {}
        for n in range(1, dim + 1):
            simplices[str(n)] = sorted([str(e) for e in w]
                                       for w in gw.simplices(n))
        doc["simplices"] = simplices
        doc["dimension"] = dim
    return doc


def load_group_embedded(doc):
    group = load_group(doc["group"])
    name = doc.get("name", "L<=BG")
    sym = doc.get("symmetric", True)
    if doc.get("word_predicate") == "all-acting":
        carrier = tuple(doc["action"]["carrier"])
        maps = {g: {x: y for x, y in pairs}
                for g, pairs in doc["action"]["maps"].items()}
        doms = {g: frozenset(maps.get(str(g), {})) for g in group.elements}

        def member(w):
            pts = set(carrier)
            for g in w:
                m = maps.get(str(g), {})
                pts = {m[x] for x in pts if x in m} if str(g) != str(group.identity) \
                    else pts
                if not pts:
                    return False
            return True

        gw = GroupWords(group, member, name=name, symmetric=sym,
                        domains=doms, carrier=carrier)
        edge_action = {g: ({x: x for x in carrier} if g == group.identity
                           else dict(maps.get(str(g), {})))
                       for g in group.elements}
        gw.native_action = CharacteristicAction(
            gw, carrier, {x: "*" for x in carrier}, edge_action,
            name=f"loaded({name})")
        return gw
    listed = {int(n): frozenset(tuple(w) for w in ws)
              for n, ws in doc["simplices"].items()}
    bound = doc.get("dimension", max(listed, default=1))
    ident = group.identity

    def member(w):
        # collapse duplicates/identities in the Bousfield row, then look up
        row = []
        acc = ident
        for g in w:
            acc = group.mul(acc, g)
            row.append(acc)
        seen = {ident: 0}
        for g in row:
            if g not in seen:
                seen[g] = len(seen)
        # rebuild the support spine from the deduped row
        support = []
        back = {v: g for g, v in seen.items()}
        for k in range(1, len(seen)):
            support.append(group.mul(group.inv(back[k - 1]), back[k]))
        n = len(support)
        if n == 0:
            return True
        if n > bound:
            return False
        return tuple(support) in listed.get(n, frozenset())

    return GroupWords(group, member, name=name, symmetric=sym)


def dump_closure_space(cs):
    return {"kind": "closure-space",
            "ground": [str(x) for x in cs.ground],
            "generators": sorted(sorted(str(x) for x in g) for g in cs.generators())}


def load_closure_space(doc):
    return ClosureSpace(doc["ground"], doc["generators"])


def dump_action(act):
    if isinstance(act.base, PartialGroupoid):
        base = dump_partial_groupoid(act.base)
    else:
        base = dump_group_embedded(act.base)
    return {"kind": "characteristic-action",
            "base": base,
            "carrier": [str(x) for x in act.carrier],
            "anchor": {str(x): str(a) for x, a in act.anchor.items()},
            "edge_action": {str(e): sorted([str(x), str(y)] for x, y in m.items())
                            for e, m in act.edge_action.items() if m}}


def load_action(doc):
    base_doc = doc["base"]
    if base_doc["kind"] == "partial-groupoid":
        base = load_partial_groupoid(base_doc)
        edge_ids = set(base.edges)
        objects = set(base.objects)
    else:
        base = load_group_embedded(base_doc)
        edge_ids = set(map(str, base.edge_list()))
        objects = {"*"}
    carrier = tuple(doc["carrier"])
    anchor = dict(doc["anchor"])
    edge_action = {}
    for e, pairs in doc["edge_action"].items():
        edge_action[e] = {x: y for x, y in pairs}
    if base_doc["kind"] == "group-embedded":
        # keys were stringified group elements; remap where possible
        named = {str(g): g for g in base.edge_list()}
        edge_action = {named.get(e, e): m for e, m in edge_action.items()}
        anchor = {x: "*" for x in carrier}
        for e in base.edge_list():
            edge_action.setdefault(e, {})
    else:
        for e in base.edges:
            edge_action.setdefault(e, {})
    return CharacteristicAction(base, carrier, anchor, edge_action,
                                name=doc.get("name", "loaded"))


def dump_partial_group_action(pa):
    return {"kind": "partial-group-action",
            "group": dump_group(pa.group),
            "carrier": [str(x) for x in pa.carrier],
            "maps": {str(g): sorted([str(x), str(y)] for x, y in m.items())
                     for g, m in pa.maps.items() if m}}


def load_partial_group_action(doc):
    group = load_group(doc["group"])
    named = {str(g): g for g in group.elements}
    maps = {named[g]: {x: y for x, y in pairs}
            for g, pairs in doc["maps"].items()}
    return PartialGroupAction(group, tuple(doc["carrier"]), maps)


DUMPERS = {
    PartialGroupoid: dump_partial_groupoid,
    GroupWords: dump_group_embedded,
    ClosureSpace: dump_closure_space,
    CharacteristicAction: dump_action,
    PartialGroupAction: dump_partial_group_action,
}


def dump_document(obj):
    for cls, fn in DUMPERS.items():
        if isinstance(obj, cls):
            return fn(obj)
    raise TypeError(f"no document form for {type(obj)}")


LOADERS = {
    "partial-groupoid": load_partial_groupoid,
    "group-embedded": load_group_embedded,
    "closure-space": load_closure_space,
    "characteristic-action": load_action,
    "partial-group-action": load_partial_group_action,
}


def load_document(doc):
    kind = doc.get("kind")
    if kind not in LOADERS:
        raise ValueError(f"unknown document kind: {kind}")
    return LOADERS[kind](doc)
