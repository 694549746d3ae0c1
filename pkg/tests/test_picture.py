import json
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import A2, A3, ALL, C3, D4C, SMALL, ids, sig
from taunak import wide as wd
from taunak.cubes import MorphW, build_cube_complex
from taunak.picture import (STYLES, BrickElement, Coset, GroupWord, brick_mul, brick_product, canonical_relation,
                            check_functor, group_functor_F, parse_word, phi, presentation, relations_from_json,
                            verify_presentation)
from taunak.serial import Indec, validate_spec

M = Indec
S1, S2, P1 = M(1, 1), M(2, 1), M(1, 2)


def E(spec, *terms):
    coeffs = {}
    for t in terms:
        coeffs[t] = coeffs.get(t, 0) + 1
    return BrickElement(spec, coeffs)


def test_brick_products():
    assert brick_product(A2, S1, S2) == P1
    assert brick_product(A2, S2, S1) is None
    for spec in SMALL:
        assert all(brick_product(spec, s, s) is None for s in spec.bricks)


def test_brick_mul_rejects_mixed_specs():
    with pytest.raises(ValueError):
        brick_mul(BrickElement.one(A2), BrickElement.one(A3))


@pytest.mark.parametrize("spec", SMALL + [D4C], ids=ids(SMALL + [D4C]))
def test_brick_algebra_associative(spec):
    basis = [BrickElement.one(spec)] + [BrickElement.brick(spec, b) for b in spec.bricks]
    for x, y, z in product(basis, repeat=3):
        assert (x * y) * z == x * (y * z)


def test_phi_examples():
    assert phi(A2, GroupWord.of([S1, S2])) == E(A2, None, S1, S2, P1)
    for s in A2.bricks:
        w = GroupWord.of([s]) * GroupWord.of([s]).inverse()
        assert phi(A2, w) == BrickElement.one(A2)
    (rel,) = presentation(A2, "polygon").relations
    assert phi(A2, rel[0]) == phi(A2, rel[1])


def test_a2_presentations():
    gens = [S1, P1, S2]
    poly = presentation(A2, "polygon")
    assert poly.generators == gens
    assert [(str(l), str(r)) for l, r in poly.relations] == [
        ("X[M(2,1)] X[M(1,2)] X[M(1,1)]", "X[M(1,1)] X[M(2,1)]")]
    assert presentation(A2, "mgs").relations == poly.relations
    coset = presentation(A2, "coset")
    assert len(coset.cosets) == 5
    arrow_rels = [r for r in coset.relations if len(r[1])]
    assert len(arrow_rels) == 5
    assert coset.relations[-1][1] == GroupWord() and len(coset.relations) == 6


@pytest.mark.parametrize("spec", ALL, ids=ids(ALL))
def test_verify_presentation(spec):
    for rep in verify_presentation(spec):
        assert rep.passed, rep.failures


@pytest.mark.parametrize("spec", SMALL + [D4C], ids=ids(SMALL + [D4C]))
def test_functor_and_faithfulness(spec):
    for rep in check_functor(build_cube_complex(spec)):
        assert rep.passed, rep.failures


def test_group_functor_examples():
    w = wd.whole(A2)
    assert group_functor_F(MorphW(w, frozenset([sig("M(1,1)")]))) == GroupWord.of([S1])
    assert group_functor_F(MorphW(w, frozenset())) == GroupWord()
    word = group_functor_F(MorphW(w, frozenset([sig("M(1,2)"), sig("M(2,1)")])))
    assert phi(A2, word) == phi(A2, GroupWord.of([S1, S2]))


def test_polygon_style_relations_follow_from_mgs():
    # Every mgs relation holds under phi, and the polygon style has one relation per rank-two wide.
    for spec in (A3, C3, D4C):
        poly = presentation(spec, "polygon")
        assert len(poly.relations) == sum(1 for w in wd.all_wides(spec) if w.rank == 2)
        for lhs, rhs in presentation(spec, "mgs").relations:
            assert phi(spec, lhs) == phi(spec, rhs)


def test_relations_deduplicated():
    for spec in (A3, D4C):
        for style in ("polygon", "path", "mgs"):
            rels = presentation(spec, style).relations
            assert len({canonical_relation(l, r) for l, r in rels}) == len(rels)


@pytest.mark.parametrize("style", STYLES)
def test_json_round_trip(style):
    pres = presentation(A3, style)
    data = json.loads(json.dumps(pres.to_json()))
    assert relations_from_json(data) == pres.relations
    assert all(t.startswith(("X[", "g[")) for rel in data["relations"] for side in rel for t in side)


def test_word_tokens():
    w = GroupWord(((S1, 1), (P1, -1), (Coset(3), 1)))
    assert w.tokens() == ["X[M(1,1)]", "X[M(1,2)]^-1", "g[3]"]
    assert parse_word(w.tokens()) == w
    assert str(GroupWord()) == "e"
    with pytest.raises(ValueError):
        parse_word(["Y[M(1,1)]"])
    with pytest.raises(ValueError):
        presentation(A2, "braid")


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_phi_multiplicative(data):
    spec = data.draw(st.sampled_from([A2, A3, C3, validate_spec(3, [4, 4, 4])]))
    letter = st.tuples(st.sampled_from(spec.bricks), st.sampled_from([1, -1]))
    u = GroupWord(tuple(data.draw(st.lists(letter, max_size=6))))
    v = GroupWord(tuple(data.draw(st.lists(letter, max_size=6))))
    assert phi(spec, u * v) == phi(spec, u) * phi(spec, v)
    assert phi(spec, u * u.inverse()) == BrickElement.one(spec)
