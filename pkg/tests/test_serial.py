import json

import pytest
from hypothesis import given, settings

from conftest import A2, A3, C3, SMALL, ids, specs
from taunak.serial import (AlgebraSpec, Indec, SignedIndec, SpecError, ext_dim, hom_dim, hom_kind, is_brick,
                           parse_indec, parse_list, parse_signed, spec_from_json, spec_to_json, syzygy, tau,
                           tau_inverse, union_spec, validate_spec)

M = Indec


def test_validate_linear_and_cyclic():
    assert A3.kind == "linear"
    assert C3.kind == "cyclic"
    assert A3.is_linear and not C3.is_linear


@pytest.mark.parametrize("n,kup", [(3, [3, 1, 1]), (3, [3, 2]), (0, []), (2, [2, 0]), (3, [2, 2, 4])])
def test_validate_rejects(n, kup):
    with pytest.raises(SpecError):
        validate_spec(n, kup)


def test_hom_examples():
    assert hom_dim(A2, M(2, 1), M(1, 2)) == 1
    assert hom_dim(A2, M(1, 1), M(2, 1)) == 0
    assert hom_dim(C3, M(2, 2), M(1, 2)) == 1


def test_hom_kind_examples():
    assert hom_kind(A2, M(2, 1), M(1, 2)) == "mono"
    assert hom_kind(A2, M(1, 2), M(1, 1)) == "epi"
    assert hom_kind(C3, M(2, 2), M(1, 2)) == "proper"
    assert hom_kind(A2, M(1, 1), M(1, 1)) == "iso"
    assert hom_kind(A2, M(1, 1), M(2, 1)) == "none"


def test_ext_examples():
    assert ext_dim(A2, M(1, 1), M(2, 1)) == 1
    assert all(ext_dim(A2, M(1, 2), y) == 0 for y in A2.indecs)
    assert ext_dim(C3, M(1, 2), M(2, 2)) == 0


def test_tau_examples():
    assert tau(A2, M(1, 1)) == M(2, 1)
    assert tau(A2, M(1, 2)) is None
    assert tau(C3, M(3, 1)) == M(1, 1)


def test_syzygy():
    assert syzygy(A2, M(1, 1)) == M(2, 1)
    assert syzygy(A2, M(1, 2)) is None
    assert syzygy(A3, M(1, 2)) == M(3, 1)


def test_brick_examples():
    assert is_brick(C3, M(2, 2))
    assert not is_brick(validate_spec(4, [5, 5, 5, 5]), M(1, 5))
    assert all(is_brick(s, M(i, 1)) for s in SMALL for i in s.vertices())


def test_parse_tokens():
    assert parse_signed("M(1,2)[1]") == SignedIndec(M(1, 2), True)
    assert parse_indec(" M( 3 , 1 ) ") == M(3, 1)
    assert parse_list("M(1,2) ⊔ M(2,1)[1]") == [SignedIndec(M(1, 2)), SignedIndec(M(2, 1), True)]
    with pytest.raises(SpecError):
        parse_signed("M(1,1)[1]", A2)  # not projective
    with pytest.raises(SpecError):
        parse_indec("M(2,2)", A2)
    with pytest.raises(SpecError):
        parse_list("M(1,1) junk")


def test_spec_json_round_trip():
    for s in SMALL:
        assert spec_from_json(json.loads(json.dumps(spec_to_json(s)))) == s
    with pytest.raises(SpecError):
        spec_from_json({"kupisch": [1]})


def test_union_spec_wraps_inside_blocks():
    u = union_spec([[2, 1], [2, 2]])
    assert u.n == 4 and u.kind == "union"
    assert u.shift(2, 1) == 1
    assert u.shift(4, 1) == 3
    assert hom_dim(u, M(1, 1), M(3, 1)) == 0
    assert tau(u, M(3, 1)) == M(4, 1)


@pytest.mark.parametrize("spec", SMALL, ids=ids(SMALL))
def test_indec_count_is_sum_of_lengths(spec):
    assert len(spec.indecs) == sum(spec.kupisch)


@pytest.mark.parametrize("spec", SMALL, ids=ids(SMALL))
def test_brick_hom_at_most_one(spec):
    for x in spec.bricks:
        for y in spec.bricks:
            assert hom_dim(spec, x, y) <= 1


@given(specs())
@settings(max_examples=60, deadline=None)
def test_tau_is_bijection_nonprojective_to_noninjective(spec):
    nonproj = [x for x in spec.indecs if not spec.is_projective(x)]
    noninj = {x for x in spec.indecs if not spec.is_injective(x)}
    images = [tau(spec, x) for x in nonproj]
    assert set(images) == noninj and len(images) == len(set(images))
    for x in nonproj:
        assert tau_inverse(spec, tau(spec, x)) == x
        assert ext_dim(spec, x, tau(spec, x)) >= 1


@given(specs())
@settings(max_examples=60, deadline=None)
def test_hom_dim_zero_iff_kind_none(spec):
    for x in spec.indecs:
        for y in spec.indecs:
            assert (hom_dim(spec, x, y) == 0) == (hom_kind(spec, x, y) == "none")
            assert (hom_kind(spec, x, y) == "iso") == (x == y)


def test_algebra_spec_str():
    assert str(A3) == "(3,[3,2,1])"
    assert isinstance(A2, AlgebraSpec)
