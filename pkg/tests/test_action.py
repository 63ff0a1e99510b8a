"""Actions: canonical, transporter, self-actions, L-set axioms, domain lemmas."""

import random

from pgdeg.action import (CharacteristicAction, PartialGroupAction,
                          ambient_restriction, canonical_action,
                          conjugation_action, induced_partial_action,
                          multiplication_action, self_actions, transporter)
from pgdeg.corpus import group_nerve_pg
from pgdeg.groups import cyclic_group, symmetric_group
from pgdeg.symcore import EdgewiseSubdivision, WordPresentation, materialize


def test_canonical_action_of_na_validates(NA):
    act = canonical_action(NA)
    assert act.validate(exhaustive=True) == []


def test_transporter_s3_on_subset():
    s3 = symmetric_group(3)
    pa = ambient_restriction(s3, lambda g, x: g[x], (0, 1))   # {1,2} inside {1,2,3}
    assert pa.validate() == []
    E, L, act = transporter(pa)
    assert act.validate() == []
    t13 = (2, 1, 0)
    t123 = (1, 2, 0)
    t12 = (1, 0, 2)
    assert pa.dom(t13) == {1}
    assert pa.dom(t123) == {0}
    assert pa.dom(t12) == {0, 1}


def test_a1_violation_detected():
    c2 = cyclic_group(2)
    pa = ambient_restriction(c2, lambda g, x: (g + x) % 2, (0, 1))
    _, L, act = transporter(pa)
    broken = CharacteristicAction(L, act.carrier, act.anchor,
                                  {**act.edge_action, 0: {0: 0}}, name="broken")
    report = broken.validate()
    assert any(v.code == "A1" for v in report)


def test_canonical_action_of_bc2(bc2_pg):
    act = canonical_action(bc2_pg)
    # components: the object and the nondegenerate 1-simplex t
    assert len(act.carrier) == 3
    t = bc2_pg.nonidentity_edges()[0]
    assert len(act.dom_edge(t)) == 2
    assert act.validate(exhaustive=True) == []


def test_canonical_action_of_discrete_groupoid():
    from pgdeg.corpus import discrete_groupoid
    pg = discrete_groupoid(2)
    act = canonical_action(pg)
    assert len(act.carrier) == 2
    for e in pg.edges:
        assert len(act.dom_edge(e)) == 1


def test_canonical_action_of_na_domain_structure(NA):
    act = canonical_action(NA)
    total = sum(len(NA.nondeg_words(n)) * (n + 1) for n in (1, 2)) + len(NA.objects)
    assert len(act.carrier) == total
    for x in act.carrier:
        key, i = x
        if key[0] == "s" and i == 0:
            w = key[1]
            m = NA.word_matrix(w)
            for f in set(m[0]):
                if not NA.is_identity_edge(f):
                    assert x in act.dom_edge(f)


def test_multiplication_action(bc2_pg):
    act = multiplication_action(bc2_pg)
    assert sorted(act.carrier) == sorted(bc2_pg.edges)
    t = bc2_pg.nonidentity_edges()[0]
    assert act.dom_edge(t) == frozenset(bc2_pg.edges)
    assert act.validate() == []  # star-injectivity-level checks only


def test_subdivision_sizes(bc2_pg):
    tw = EdgewiseSubdivision(WordPresentation(bc2_pg))
    assert len(tw.simplices(1)) == 8
    # tw of a partial group is spiny: spines are injective at level 2
    pg = materialize(tw, max_dim=2)
    assert pg.validate() == []


def test_conjugation_action_of_group_nerve():
    bg = group_nerve_pg(symmetric_group(3))
    act = conjugation_action(bg)
    for z in bg.edges:
        assert act.dom_edge(z) == frozenset(bg.edges)  # groups conjugate totally
    assert act.validate() == []
    # z acts on u as the total composite of (z^-1, u, z)
    for z in list(bg.nonidentity_edges())[:3]:
        for u in list(bg.nonidentity_edges())[:3]:
            w = (bg.inverse[z], u, z)
            m = bg.word_matrix(w)
            assert act.act_edge(z, u) == m[0][3]


def test_self_actions_bundle(NA):
    red = NA.reduction()
    bundle = self_actions(red)
    assert bundle["multiplication"].validate() == []
    assert bundle["conjugation"].validate() == []
    assert bundle["subdivision"].simplices(0) == red.simplices(1)


def test_domain_lemmas_on_canonical_action(NA):
    act = canonical_action(NA)
    rng = random.Random(11)
    words = NA.nondeg_words(2)
    for w in words:
        # dom(simplex) = intersection of the top-row domains
        row = NA.bousfield_row(w)
        inter = act.fiber(NA.src(w[0]))
        for g in row:
            inter &= act.dom_edge(g)
        assert act.dom_word(w) == inter
    # lemma: alpha with alpha(0) = 0 only enlarges domains, equal when surjective
    for w in words:
        for _ in range(6):
            m = rng.randint(1, 3)
            alpha = (0,) + tuple(rng.randint(0, 2) for _ in range(m))
            aw = NA.act(alpha, w)
            assert act.dom_word(w) <= act.dom_word(aw)
            if set(alpha) == {0, 1, 2}:
                assert act.dom_word(w) == act.dom_word(aw)


def test_bous_domain_item_two(NA):
    # nonempty intersection of edge domains forces a lift of the starry word
    act = canonical_action(NA)
    edges = NA.nonidentity_edges()
    for a in NA.objects:
        star = NA.star(a)
        for i, g1 in enumerate(star):
            for g2 in star[i + 1:]:
                if act.dom_edge(g1) & act.dom_edge(g2):
                    assert NA.lifts_starry_set((g1, g2))


def test_nondegenerate_iff_star_injective_classifying_map(NA):
    # simulate lifts of representable vertices: the classifying map of g is
    # star injective iff no row of the matrix repeats
    for w in NA.simplices(2):
        m = NA.word_matrix(w)
        inj = all(len(set(row)) == len(row) for row in m)
        assert inj == NA.is_nondegenerate(w)


def test_disjoint_union_of_characteristic_actions(NA):
    a1 = canonical_action(NA)
    a2 = canonical_action(NA)
    carrier = tuple(("L", x) for x in a1.carrier) + tuple(("R", x) for x in a2.carrier)
    anchor = {("L", x): a1.anchor[x] for x in a1.carrier}
    anchor.update({("R", x): a2.anchor[x] for x in a2.carrier})
    edge_action = {}
    for e in NA.edges:
        m = {("L", x): ("L", y) for x, y in a1.edge_action.get(e, {}).items()}
        m.update({("R", x): ("R", y) for x, y in a2.edge_action.get(e, {}).items()})
        edge_action[e] = m
    both = CharacteristicAction(NA, carrier, anchor, edge_action, name="double")
    assert both.validate() == []


def test_pgs_in_a_group_rebuild():
    # for a group-embedded base, rebuilding through the induced partial action
    # gives the same domains and action maps
    s3 = symmetric_group(3)
    pa = ambient_restriction(s3, lambda g, x: g[x], (0, 2))
    _, L, act = transporter(pa)
    pa2 = induced_partial_action(act)
    assert pa2.validate() == []
    _, L2, act2 = transporter(pa2)
    for g in s3.elements:
        assert pa.dom(g) == pa2.dom(g)
        assert L.member((g,)) == L2.member((g,))
    for g in L.edge_list():
        assert act.edge_action.get(g, {}) == act2.edge_action.get(g, {})


def test_exel_axiom_violations_detected():
    c2 = cyclic_group(2)
    # g.x defined but g^-1.(g.x) undefined
    pa = PartialGroupAction(c2, (0, 1), {1: {0: 1}})
    report = pa.validate()
    assert any(v.code == "exel-3" for v in report)


def test_characteristic_flag_catches_non_simplex_action(NA):
    act = canonical_action(NA)
    # force an extra action step making a non-simplex word act
    e = "01"
    target = next(iter(act.dom_edge("12")))
    fake = dict(act.edge_action)
    src_pt = next(x for x in act.carrier if act.anchor[x] == 0
                  and x not in act.dom_edge(e))
    fake[e] = {**fake[e], src_pt: target}
    broken = CharacteristicAction(NA, act.carrier, act.anchor, fake)
    assert broken.validate() != []
