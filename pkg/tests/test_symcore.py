"""Partial groupoid structure: validation, matrix form, membership, operators."""

import itertools

from pgdeg.corpus import (group_nerve, group_nerve_pg, skeleton,
                          skeleton_of_group_nerve, trivial_group_nerve)
from pgdeg.groups import cyclic_group, symmetric_group
from pgdeg.symcore import PartialGroupoid, WordPresentation, materialize


def test_na_validates(NA):
    assert NA.validate() == []


def test_trivial_group_nerve_validates():
    assert trivial_group_nerve().validate() == []


def test_na_with_injected_word_reports_matrix_failure(NA):
    # injecting (f, g, h) without its coherence: the two associations of the
    # total composite disagree, so some coedge is inconsistent
    words = dict(NA.simplex_words)
    words[3] = frozenset([("01", "12", "23")])
    broken = PartialGroupoid(NA.objects, NA.edges, NA.identity, NA.inverse,
                             NA.compose, words, name="NA+w")
    report = broken.validate()
    assert report
    codes = {v.code for v in report}
    assert "matrix" in codes
    bad = [v for v in report if v.code == "matrix"][0]
    assert bad.simplex == ("01", "12", "23")
    assert "coedge" in bad.message and "eps" in bad.message


def test_matrix_form_of_na_triangle(NA):
    m = NA.word_matrix(("01", "12"))
    gf = NA.compose[("01", "12")]
    assert m[0][1] == "01" and m[1][2] == "12" and m[0][2] == gf
    assert m[1][0] == NA.inverse["01"] and m[2][0] == NA.inverse[gf]
    assert all(NA.is_identity_edge(m[i][i]) for i in range(3))


def test_matrix_entry_in_group_nerve():
    # in B S3 the word ((12), (13)) has top-right entry (13)(12) = (123)
    s3 = symmetric_group(3)
    bg = group_nerve(s3)
    t12 = (1, 0, 2)
    t13 = (2, 1, 0)
    m = bg.matrix((t12, t13))
    composite = m[0][2]
    # oracle: apply (12) then (13) pointwise; (123) maps 0->1->2->0
    assert composite == tuple(t13[t12[i]] for i in range(3)) == (1, 2, 0)


def test_nondegeneracy(NA, bc2_pg):
    a = NA.objects[0]
    assert not NA.is_nondegenerate((NA.identity[a],))          # s_0 of a vertex
    assert NA.is_nondegenerate(("01", "12"))
    # in B C2 the word (t, t) has f_{02} = t*t = 1, hence is degenerate
    t = [e for e in bc2_pg.nonidentity_edges()][0]
    assert not bc2_pg.is_nondegenerate((t, t))
    assert bc2_pg.is_simplex((t, t))


def test_dimension_examples(NA):
    assert NA.dimension() == 2
    for n in (2, 3):
        g = cyclic_group(n)
        assert group_nerve_pg(g).dimension() == n - 1
    assert materialize(skeleton(1, 3)).dimension() == 1


def test_group_nerve_dimension_hm_bound():
    # dim B G = |G| - 1 exactly for groups (HM theorem boundary case)
    s3 = symmetric_group(3)
    assert group_nerve(s3).dimension() == 5


def test_opposite_involution(NA):
    op = NA.opposite()
    assert op.validate() == []
    opop = op.opposite()
    assert opop.edges == NA.edges
    assert opop.compose == NA.compose
    assert opop.simplex_words == NA.simplex_words


def test_opposite_preserves_dimension(NA):
    assert NA.opposite().dimension() == NA.dimension()


def test_reduction_validates_and_reduces_objects(NA):
    red = NA.reduction()
    assert red.validate() == []
    assert len(red.objects) == 1
    assert red.dimension() <= NA.dimension()


def test_is_groupoid_examples(NA):
    assert group_nerve_pg(symmetric_group(3), max_dim=3).is_group() is False  # truncated data
    assert group_nerve(symmetric_group(3)).is_group()
    assert not NA.is_groupoid()
    # pair (g o f, h) and (f, h o g) compose but (f, g, h) is no simplex
    gf = NA.compose[("01", "12")]
    hg = NA.compose[("12", "23")]
    assert (gf, "23") in NA.compose and ("01", hg) in NA.compose
    assert not NA.is_simplex(("01", "12", "23"))


def test_skeleton_of_group_nerve_not_groupoid_despite_low_words():
    sk = skeleton_of_group_nerve(3, symmetric_group(3))
    els = sk.group.elements
    assert all(sk.member(w) for w in itertools.product(els, repeat=2))
    assert all(sk.member(w) for w in itertools.product(els, repeat=3))
    assert not sk.is_groupoid()


def test_act_respects_composition(NA):
    # act(alpha o beta) = act(beta) o act(alpha) on sampled simplices
    import random
    rng = random.Random(3)
    words = NA.simplices(3)[:20]
    for w in words:
        n = len(w)
        for _ in range(8):
            m = rng.randint(1, 3)
            p = rng.randint(1, m)
            alpha = tuple(rng.randint(0, n) for _ in range(m + 1))
            beta = tuple(rng.randint(0, m) for _ in range(p + 1))
            comp = tuple(alpha[b] for b in beta)
            assert NA.act(comp, w) == NA.act(beta, NA.act(alpha, w))


def test_matrix_row_property(NA, bc2_pg):
    # nondegenerate: no row repeats; degenerate: every row has a repeat
    m = NA.word_matrix(("01", "12"))
    for row in m:
        assert len(set(row)) == len(row)
    t = bc2_pg.nonidentity_edges()[0]
    m = bc2_pg.word_matrix((t, t))
    for row in m:
        assert len(set(row)) < len(row)


def test_simplices_expansion_counts(bc2_pg):
    # the symmetric set B C2 has 2^n words in every dimension
    for n in (1, 2, 3):
        assert len(bc2_pg.simplices(n)) == 2 ** n


def test_spine_injectivity_on_materialized_skeleton():
    sk = materialize(skeleton(2, 3))
    assert sk.validate() == []
    for n, ws in sk.simplex_words.items():
        assert len(ws) == len(set(ws))


def test_face_transpose_identities(NA):
    w = ("01", "12", "23")
    # not a simplex; use a real one: pick a stored 2-simplex and check
    for w in list(NA.nondeg_words(2))[:6]:
        tw = NA.transpose(0, w)
        assert NA.is_simplex(tw)
        assert NA.transpose(0, tw) == w  # involution
        for i in range(3):
            fw = NA.face(i, w)
            assert fw is not None and NA.is_simplex(fw)


def test_groupoid_full_star_certificate(chaotic2):
    assert chaotic2.is_groupoid()
    assert not chaotic2.is_group()
    red = chaotic2.reduction()
    assert not red.is_groupoid()


def test_opposite_wrapper_double_is_identity(NA):
    from pgdeg.symcore import Opposite, WordPresentation
    P = WordPresentation(NA)
    Q = Opposite(Opposite(P))
    for n in (0, 1, 2, 3):
        assert Q.simplices(n) == P.simplices(n)
        for x in P.simplices(n)[:5]:
            for i in range(n + 1):
                if n >= 1:
                    assert Q.face(n, i, x) == P.face(n, i, x)
    # single op reverses sources and targets
    O = Opposite(P)
    e = ("01",)
    assert O.face(1, 1, e) == P.face(1, 0, e)
