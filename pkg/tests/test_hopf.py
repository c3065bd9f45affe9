import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homhopf.errors import NotInvertibleError, PreconditionError
from homhopf.group import cyclic_group, symmetric_group_3
from homhopf.hopf import (
    antipode_solve,
    check_admissible_action,
    check_graded_coalgebra,
    check_graded_hopf,
    check_hom_comodule,
    check_hom_module,
    hom_coherence_maps,
    hopf_automorphism_report,
    regular_comodule,
    regular_module,
    s_inverse,
    twist_by_automorphism,
    twist_by_crossing,
)
from homhopf.library import (
    SWEEDLER_BASIS,
    group_algebra,
    group_automorphism_matrix,
    squaring_action,
    sweedler4,
    trivial_hopf_as_tcoalgebra,
    trivial_tcoalgebra,
    twisted_sweedler,
)
from homhopf.linalg import FieldSpec, mat_inverse

from oracles import brute_hom_associativity, loop_matmul

ONE, G, X, GX = range(4)


def _prod(h, p, a, b):
    return h.field.einsum("i,j,ijk->k", a, b, h.mult[p])


def _e(i, n=4):
    return np.eye(n, dtype=np.int64)[i]


def test_sweedler_relations_by_hand():
    h, _ = sweedler4()
    assert _prod(h, 0, _e(G), _e(G)).tolist() == _e(ONE).tolist()
    assert _prod(h, 0, _e(X), _e(X)).tolist() == [0, 0, 0, 0]
    assert _prod(h, 0, _e(X), _e(G)).tolist() == (-_e(GX) % 101).tolist()
    assert _prod(h, 0, _e(G), _e(X)).tolist() == _e(GX).tolist()
    assert SWEEDLER_BASIS == ("1", "g", "x", "gx")


def test_twisted_sweedler_hom_associativity_by_hand():
    # alpha(g)(g x) = (g g) alpha(x) = 9x when x is scaled by 3
    h = twisted_sweedler(lam=3)
    g, x = _e(G), _e(X)
    lhs = _prod(h, 0, h.alpha[0] @ g % 101, _prod(h, 0, g, x))
    rhs = _prod(h, 0, _prod(h, 0, g, g), h.alpha[0] @ x % 101)
    assert lhs.tolist() == rhs.tolist() == (9 * x).tolist()


@pytest.mark.parametrize("name", ["trivial-1", "trivial-Z2", "trivial-S3", "group-algebra-S3", "sweedler4-l3",
                                  "twisted-sweedler-l3", "twisted-constant-kZ3", "twisted-crossed-constant-kZ3"])
def test_hom_associativity_matches_brute_force(builtin, name):
    h = builtin(name).hopf
    for p in h.group.elements:
        assert brute_hom_associativity(h.mult[p].tolist(), h.alpha[p].tolist(), 101) is None


def test_brute_oracle_sees_the_mult_fixture(builtin):
    h = builtin("fx-2.1-mult").hopf
    assert brute_hom_associativity(h.mult[0].tolist(), h.alpha[0].tolist(), 101) is not None
    assert not check_graded_hopf(h).verdict("2.1")


def test_group_algebra_antipode_is_inversion():
    for grp in (cyclic_group(3), symmetric_group_3()):
        h = group_algebra(grp)
        (s,) = antipode_solve(h)
        expected = np.zeros_like(s)
        for a in grp.elements:
            expected[grp.inv(a), a] = 1
        assert np.array_equal(s, expected)


@pytest.mark.parametrize("name", ["sweedler4-l1", "twisted-sweedler-l3", "constant-kZ3", "twisted-crossed-constant-kZ3"])
def test_antipode_solve_recovers_stored_antipode(builtin, name):
    h = builtin(name).hopf
    solved = antipode_solve(h)
    for p in h.group.elements:
        assert np.array_equal(solved[p], h.antipode[p])


def test_sweedler_antipode_by_hand():
    h, _ = sweedler4()
    (s,) = antipode_solve(h)
    assert (s @ _e(X) % 101).tolist() == (-_e(GX) % 101).tolist()
    assert (s @ _e(GX) % 101).tolist() == _e(X).tolist()


def test_s_inverse_inverts():
    h = twisted_sweedler()
    (si,) = s_inverse(h)
    assert loop_matmul(si.tolist(), h.antipode[0].tolist(), 101) == np.eye(4, dtype=int).tolist()


def test_coalgebra_check_on_coalgebra_only(builtin):
    inst = builtin("trivial-S3")
    assert check_graded_coalgebra(inst.coalgebra).passed
    assert check_graded_coalgebra(inst.hopf).passed


@pytest.mark.parametrize("lam", [1, 2, 3, 50, 100])
def test_sweedler_automorphism_family(lam):
    h, auto = sweedler4(lam=lam)
    assert hopf_automorphism_report(h, auto).passed
    t = twist_by_automorphism(h, auto)
    assert check_graded_hopf(t).passed
    assert np.array_equal(t.alpha[0], auto[0])


def test_sweedler_rejects_zero_scalar():
    with pytest.raises(PreconditionError):
        sweedler4(lam=101)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([5, 7]), st.integers(1, 6))
def test_twist_of_cyclic_group_algebra_by_power_map(n, k):
    grp = cyclic_group(n)
    k = k % n or 1
    auto = group_automorphism_matrix(grp, [a * k % n for a in grp.elements])
    h = group_algebra(grp)
    t = twist_by_automorphism(h, [auto])
    assert check_graded_hopf(t).passed


def test_twist_rejects_non_automorphism():
    h = group_algebra(cyclic_group(3))
    swap = np.eye(3, dtype=np.int64)[[1, 0, 2]]  # exchanges 1 and g: linear, not an algebra map
    with pytest.raises(PreconditionError):
        twist_by_automorphism(h, [swap])


def test_twist_rejects_singular_family():
    h = group_algebra(cyclic_group(3))
    with pytest.raises(NotInvertibleError):
        twist_by_automorphism(h, [np.zeros((3, 3), dtype=np.int64)])


def test_twist_rejects_hom_input():
    h = twisted_sweedler()
    with pytest.raises(PreconditionError):
        twist_by_automorphism(h, [np.eye(4, dtype=np.int64)])


def test_twist_carries_commuting_crossing(crossed_host, twisted_host):
    assert check_admissible_action(twisted_host).passed
    assert not twisted_host.host.is_classical
    for q, p in itertools.product(range(2), repeat=2):
        assert np.array_equal(twisted_host.pi[q][p], crossed_host.pi[q][p])


def test_crossing_twist_rejects_crossed_constant(crossed_host):
    with pytest.raises(PreconditionError):
        twist_by_crossing(crossed_host)


def test_crossing_twist_with_identity_crossing_is_identity_twist(plain_host):
    t = twist_by_crossing(plain_host)
    assert check_graded_hopf(t.host).passed
    assert t.host.is_classical


def test_trivial_group_lift():
    t = trivial_hopf_as_tcoalgebra(group_algebra(symmetric_group_3()))
    assert check_admissible_action(t).passed
    with pytest.raises(PreconditionError):
        trivial_hopf_as_tcoalgebra(trivial_tcoalgebra(cyclic_group(2)).host)


def test_crossing_checks_flag_a_bad_pi(crossed_host):
    from homhopf.structures import TCoalgebra

    pi = [list(row) for row in crossed_host.pi]
    pi[1][0] = np.eye(3, dtype=np.int64)  # identity in place of g -> g^2 on H_e only
    rep = check_admissible_action(TCoalgebra(crossed_host.host, pi))
    # pi_s pi_s = id still holds, but Delta_{s,s} no longer intertwines pi_s
    assert rep.verdict("pi-mult")
    assert not rep.verdict("3.8")


def test_regular_module_and_comodule():
    for h in (twisted_sweedler(), group_algebra(symmetric_group_3())):
        assert check_hom_module(regular_module(h)).passed
        assert check_hom_comodule(regular_comodule(h)).passed


def test_regular_module_with_wrong_mu_fails():
    from homhopf.structures import HomModule

    h = twisted_sweedler()
    m = HomModule(h.field, h.mult[0], h.unit[0], h.alpha[0], 4, np.eye(4, dtype=np.int64), h.mult[0])
    assert not check_hom_module(m).passed


def _invertible(seed, n, p=101):
    rng = np.random.default_rng(seed)
    while True:
        m = rng.integers(0, p, size=(n, n))
        try:
            mat_inverse(m, FieldSpec(p))
            return m
        except NotInvertibleError:
            continue


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32 - 1), st.lists(st.integers(1, 3), min_size=4, max_size=4))
def test_associator_pentagon_and_triangle(seed, dims):
    F = FieldSpec(101)
    m1, m2, m3, m4 = (_invertible(seed + i, d) for i, d in enumerate(dims))
    d1, d2, d3, d4 = dims
    I = lambda n: np.eye(n, dtype=np.int64)
    a = lambda x, y, z: hom_coherence_maps(F, x, y, z).associator
    # ((M N) P) Q -> M (N (P Q)) two ways
    lhs = F.matmul(a(m1, m2, F.kron(m3, m4)), a(F.kron(m1, m2), m3, m4))
    rhs = F.matmul(F.kron(I(d1), a(m2, m3, m4)), a(m1, F.kron(m2, m3), m4), F.kron(a(m1, m2, m3), I(d4)))
    assert np.array_equal(lhs, rhs)
    one = np.ones((1, 1), dtype=np.int64)
    coh = hom_coherence_maps(F, m1, one, m2)
    assert np.array_equal(F.matmul(F.kron(I(d1), coh.varsigma), a(m1, one, m2)),
                          F.kron(hom_coherence_maps(F, m1, one, m1).right_unitor, I(d2)))
    assert np.array_equal(F.matmul(coh.associator_inv, coh.associator), I(d1 * d2))


def test_forced_crossing_twist_is_not_a_hom_hopf_coalgebra(crossed_host):
    # bypass the precondition: the twisted structure itself fails the axioms
    from homhopf.hopf import _twisted

    g = crossed_host.host.group
    forced = _twisted(crossed_host.host, [crossed_host.pi[p][p] for p in g.elements],
                      [crossed_host.pi_inv[p][p] for p in g.elements])
    rep = check_graded_hopf(forced)
    assert {r.equation for r in rep.failures()} == {"3.1", "3.3", "3.5"}
