import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homhopf.errors import DivisionByZero, FieldError, NotInvertibleError, ShapeError
from homhopf.linalg import FieldSpec, einsum_mod, mat_inverse, rank, solve_linear, tensor_contract

from oracles import egcd_inverse, gauss_inverse, loop_matmul

PRIMES = st.sampled_from([3, 5, 7, 101, 10007])


def matrices(n, p=101):
    return st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), min_size=n, max_size=n)


@pytest.mark.parametrize("bad", [1, 2, 4, 100, 46349, 2.0, "7"])
def test_field_rejects_non_primes_and_large_moduli(bad):
    with pytest.raises(FieldError):
        FieldSpec(bad)


def test_inverse_of_zero_raises():
    F = FieldSpec(7)
    with pytest.raises(DivisionByZero):
        F.inv(0)
    with pytest.raises(ZeroDivisionError):
        F(0).inverse()


@given(PRIMES, st.integers(-10**6, 10**6))
def test_scalar_inverse_matches_euclid(p, a):
    F = FieldSpec(p)
    if a % p == 0:
        return
    assert F.inv(a) == egcd_inverse(a, p)
    assert F(a) * F(a).inverse() == 1


@given(PRIMES, st.integers(-10**4, 10**4), st.integers(-10**4, 10**4))
def test_scalar_ops_match_python_ints(p, a, b):
    F = FieldSpec(p)
    assert int(F(a) + F(b)) == (a + b) % p
    assert int(F(a) - b) == (a - b) % p
    assert int(a - F(b)) == (a - b) % p
    assert int(F(a) * b) == (a * b) % p
    assert int(-F(a)) == (-a) % p


@settings(max_examples=60)
@given(matrices(4))
def test_mat_inverse_agrees_with_gauss_oracle(rows):
    F = FieldSpec(101)
    ref = gauss_inverse(rows, 101)
    if ref is None:
        with pytest.raises(NotInvertibleError) as ei:
            mat_inverse(np.array(rows), F)
        assert ei.value.rank < 4
        return
    inv = mat_inverse(np.array(rows), F)
    assert inv.tolist() == ref
    assert loop_matmul(rows, inv.tolist(), 101) == np.eye(4, dtype=int).tolist()


def test_singular_inverse_reports_rank():
    F = FieldSpec(101)
    m = np.array([[1, 2], [2, 4]])
    with pytest.raises(NotInvertibleError) as ei:
        mat_inverse(m, F)
    assert ei.value.rank == 1
    assert rank(m, F) == 1


@settings(max_examples=40)
@given(st.integers(0, 2**31), st.sampled_from(["ij,jk->ik", "ijk,kl,lm->ijm", "abc,cd,be->ade"]))
def test_einsum_mod_matches_loop_oracle(seed, subs):
    rng = np.random.default_rng(seed)
    p = 10007
    ins = subs.split("->")[0].split(",")
    sizes = {c: int(rng.integers(1, 5)) for c in set("".join(ins))}
    ops = [rng.integers(0, p, size=[sizes[c] for c in t]) for t in ins]
    got = einsum_mod(subs, *ops, prime=p)
    # big-int reference: object arrays never overflow
    ref = np.einsum(subs, *[o.astype(object) for o in ops]) % p
    assert got.tolist() == np.asarray(ref).tolist()


def test_einsum_mod_chain_does_not_overflow():
    p = 46337
    a = np.full((8, 8), p - 1, dtype=np.int64)
    got = einsum_mod("ab,bc,cd,de->ae", a, a, a, a, prime=p)
    assert got[0, 0] == pow(p - 1, 4, p) * pow(8, 3, p) % p


def test_einsum_operand_count_mismatch():
    with pytest.raises(ShapeError):
        einsum_mod("ij,jk->ik", np.eye(2, dtype=np.int64), prime=7)


@settings(max_examples=40)
@given(matrices(3, 7), st.lists(st.integers(0, 6), min_size=3, max_size=3))
def test_solve_linear(rows, b):
    F = FieldSpec(7)
    a = np.array(rows)
    x, kernel = solve_linear(a, np.array(b), F)
    assert kernel.shape[0] == 3 - rank(a, F)
    for k in kernel:
        assert not np.any(a @ k % 7)
    if x is None:
        assert rank(np.hstack([a, np.array(b).reshape(3, 1)]), F) > rank(a, F)
    else:
        assert ((a @ x - np.array(b)) % 7 == 0).all()


def test_tensor_contract_shape_errors():
    F = FieldSpec(5)
    t = np.ones((2, 3), dtype=np.int64)
    with pytest.raises(ShapeError):
        tensor_contract(t, t, [(1, 1), (0, 3)], F)
    with pytest.raises(ShapeError):
        tensor_contract(t, t, [(1, 0)], F)
    assert tensor_contract(t, t.T, [(1, 0)], F).tolist() == [[3, 3], [3, 3]]
