import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homhopf.errors import BoundsError, GroupValidationError, MissingIdentityError, MissingInverseError, NonAssociativeError
from homhopf.group import builtin_group, conjugation_action, cyclic_group, symmetric_group_3, validate_group

GROUPS = [builtin_group(n) for n in ("1", "Z/2", "Z/3", "S3")]


@pytest.mark.parametrize("g", GROUPS, ids=lambda g: str(g.order))
def test_group_axioms_by_brute_force(g):
    e = g.identity
    for a, b, c in itertools.product(g.elements, repeat=3):
        assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))
    for a in g.elements:
        assert g.mul(a, e) == a == g.mul(e, a)
        assert g.mul(a, g.inv(a)) == e


def test_s3_is_nonabelian_of_order_six():
    g = symmetric_group_3()
    assert g.order == 6 and not g.is_abelian
    assert cyclic_group(3).is_abelian


@pytest.mark.parametrize("g", GROUPS, ids=lambda g: str(g.order))
def test_conjugation_is_a_left_action(g):
    for q, r, p in itertools.product(g.elements, repeat=3):
        assert g.conj(g.mul(q, r), p) == g.conj(q, g.conj(r, p))
        assert conjugation_action(g, q, p) == g.prod(q, p, g.inv(q))


def test_rejects_nonassociative_table():
    # a loop of order 5 that is not a group
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NonAssociativeError):
        validate_group(5, table)


def test_rejects_missing_identity():
    with pytest.raises(MissingIdentityError):
        validate_group(2, [[0, 0], [0, 0]])


def test_rejects_missing_inverse():
    with pytest.raises((MissingInverseError, GroupValidationError)):
        validate_group(2, [[0, 1], [1, 1]])


def test_rejects_bad_shape_and_entries():
    with pytest.raises(GroupValidationError):
        validate_group(2, [[0, 1]])
    with pytest.raises(GroupValidationError):
        validate_group(2, [[0, 2], [1, 0]])


def test_out_of_range_element():
    with pytest.raises(BoundsError):
        cyclic_group(3).mul(0, 3)


@given(st.integers(1, 12), st.randoms(use_true_random=False))
def test_relabelled_cyclic_tables_validate(n, rnd):
    perm = list(range(n))
    rnd.shuffle(perm)
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            table[perm[a]][perm[b]] = perm[(a + b) % n]
    g = validate_group(n, table)
    assert g.identity == perm[0]
    assert g.is_abelian
