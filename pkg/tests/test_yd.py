import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homhopf.errors import DegreeMismatchError, HostMismatchError, InconsistencyError, ShapeError
from homhopf.group import cyclic_group, symmetric_group_3
from homhopf.library import group_algebra, sweedler4, trivial_hopf_as_tcoalgebra
from homhopf.yd import (
    YDModule,
    YDMorphism,
    braiding_inverse,
    braiding_inverse_matrix,
    braiding_map,
    braiding_matrix,
    check_braiding_axioms,
    check_unit_coherence,
    check_yd_module,
    check_yd_morphism,
    compat_alt_check,
    compat_forms,
    conjugation_functor,
    diagonal_yd_module,
    identity_morphism,
    mu_morphism,
    same_structure,
    yd_conjugate,
    yd_on_H,
    yd_tensor,
    yd_unit_k,
)

from oracles import braiding_by_elements, classical_yd_braiding, module_as_lists


def test_yd_on_H_has_total_dimension(twisted_mods):
    assert twisted_mods["H"].dim == 6
    assert braiding_matrix(twisted_mods["H"], twisted_mods["H"]).shape == (36, 36)


def test_H_action_on_grouplikes_by_hand(twisted_host, crossed_host):
    # for group-likes h . g = alpha(g): the twisted product folds h g h^-1 back through alpha
    for host in (twisted_host, crossed_host):
        H = yd_on_H(host)
        for q in range(2):
            blk = slice(3 * q, 3 * q + 3)
            for a in range(3):
                assert np.array_equal(H.action[a][blk, blk], host.host.alpha[q].T)
                assert not H.action[a][blk, :][:, [i for i in range(6) if not blk.start <= i < blk.stop]].any()


@pytest.mark.parametrize("which", ["twisted", "crossed"])
def test_builtin_modules_are_yd(which, twisted_mods, crossed_mods):
    mods = twisted_mods if which == "twisted" else crossed_mods
    for m in mods.values():
        assert check_yd_module(m).passed, m.name
        assert compat_forms(m) == (True, True)
        assert compat_alt_check(m).passed


def test_diagonal_module_requirements(twisted_host):
    with pytest.raises(ShapeError):
        diagonal_yd_module(twisted_host, 0)
    s3 = trivial_hopf_as_tcoalgebra(group_algebra(symmetric_group_3()))
    with pytest.raises(ShapeError):
        diagonal_yd_module(s3, 0)
    z3 = trivial_hopf_as_tcoalgebra(group_algebra(cyclic_group(3)))
    assert check_yd_module(diagonal_yd_module(z3, 0)).passed


def test_mu_is_a_morphism_only_without_twist(twisted_mods, crossed_mods):
    assert check_yd_morphism(mu_morphism(crossed_mods["H"])).passed
    assert not check_yd_morphism(mu_morphism(twisted_mods["H"])).passed
    for m in twisted_mods.values():
        assert check_yd_morphism(identity_morphism(m)).passed


def test_morphism_degree_and_host_errors(twisted_mods, crossed_mods):
    d0, d1 = crossed_mods["D0"], crossed_mods["D1"]
    with pytest.raises(DegreeMismatchError):
        YDMorphism(d0, d1, np.eye(3, dtype=np.int64))
    with pytest.raises(HostMismatchError):
        yd_tensor(twisted_mods["H"], crossed_mods["H"])
    with pytest.raises(HostMismatchError):
        braiding_matrix(twisted_mods["k"], crossed_mods["k"])


def test_module_shape_validation(twisted_host):
    k = yd_unit_k(twisted_host)
    with pytest.raises(ShapeError):
        YDModule(twisted_host, 0, 1, k.mu, k.action[:2], k.coaction)
    with pytest.raises(ShapeError):
        YDModule(twisted_host, 5, 1, k.mu, k.action, k.coaction)
    with pytest.raises(ShapeError):
        YDModule(twisted_host, 0, 1, k.mu, k.action, k.coaction[:1])


def test_tensor_and_conjugate_degrees(crossed_mods, crossed_host):
    g = crossed_host.host.group
    for m, n in itertools.product(crossed_mods.values(), repeat=2):
        mn = yd_tensor(m, n)
        assert mn.degree == g.mul(m.degree, n.degree)
        assert mn.dim == m.dim * n.dim
        assert check_yd_module(mn).passed
    for m in crossed_mods.values():
        for q in g.elements:
            assert yd_conjugate(m, q).degree == g.conj(q, m.degree)


def test_conjugation_identities(twisted_mods, twisted_host):
    g = twisted_host.host.group
    for m in twisted_mods.values():
        assert same_structure(yd_conjugate(m, g.identity), m)
        for s, t in itertools.product(g.elements, repeat=2):
            assert same_structure(yd_conjugate(m, g.mul(s, t)), yd_conjugate(yd_conjugate(m, t), s))
            f = conjugation_functor(identity_morphism(m), s)
            assert check_yd_morphism(f).passed


def _pool(mods):
    return list(mods.values())


@pytest.mark.parametrize("which", ["twisted", "crossed"])
def test_braiding_matches_elementwise_oracle(which, twisted_mods, crossed_mods):
    mods = twisted_mods if which == "twisted" else crossed_mods
    pool = _pool(mods) + [yd_conjugate(mods["H"], 1)]
    for m, n in itertools.product(pool, repeat=2):
        ref = braiding_by_elements(module_as_lists(m), module_as_lists(n), 101)
        assert braiding_matrix(m, n).tolist() == ref, (m.name, n.name)


def test_braiding_on_tensor_product_matches_oracle(twisted_mods):
    k, H = twisted_mods["k"], twisted_mods["H"]
    kh = yd_tensor(k, H)
    ref = braiding_by_elements(module_as_lists(kh), module_as_lists(H), 101)
    assert braiding_matrix(kh, H).tolist() == ref


def _classical_host(h):
    return trivial_hopf_as_tcoalgebra(h)


@pytest.mark.parametrize("base", ["kZ3", "sweedler"])
def test_classical_degeneration(base):
    h = group_algebra(cyclic_group(3)) if base == "kZ3" else sweedler4()[0]
    host = _classical_host(h)
    mods = [yd_unit_k(host), yd_on_H(host)]
    if base == "kZ3":
        mods.append(diagonal_yd_module(host, 0))
    for m in mods:
        assert check_yd_module(m).passed
    for m, n in itertools.product(mods, repeat=2):
        ref = classical_yd_braiding(h.mult[0].tolist(), h.comult[0][0].tolist(), h.antipode[0].tolist(),
                                    m.action.tolist(), m.coaction[0].tolist(), n.action.tolist(), 101)
        assert braiding_matrix(m, n).tolist() == ref


def test_classical_H_braiding_on_commutative_group_algebra_is_the_flip():
    H = yd_on_H(_classical_host(group_algebra(cyclic_group(3))))
    c = braiding_matrix(H, H)
    flip = np.zeros((9, 9), dtype=np.int64)
    for i, j in itertools.product(range(3), repeat=2):
        flip[j * 3 + i, i * 3 + j] = 1
    assert np.array_equal(c, flip)


def test_braiding_map_records_target(crossed_mods):
    d1, H = crossed_mods["D1"], crossed_mods["H"]
    b = braiding_map(d1, H)
    assert b.target[0].degree == H.degree and b.target[1] is d1
    assert same_structure(b.target[0], yd_conjugate(H, 1))


@pytest.mark.parametrize("which", ["twisted", "crossed"])
def test_braiding_inverse_composites(which, twisted_mods, crossed_mods):
    mods = twisted_mods if which == "twisted" else crossed_mods
    for m, n in itertools.product(mods.values(), repeat=2):
        ci = braiding_inverse(m, n)
        eye = np.eye(m.dim * n.dim, dtype=np.int64)
        c = braiding_matrix(m, n)
        assert np.array_equal(ci @ c % 101, eye)
        assert np.array_equal(c @ ci % 101, eye)


def test_braiding_inverse_detects_broken_module(builtin):
    H = builtin("fx-4.2-coaction").module("H")
    assert not np.array_equal(braiding_inverse_matrix(H, H) @ braiding_matrix(H, H) % 101, np.eye(36, dtype=np.int64))
    with pytest.raises(InconsistencyError):
        braiding_inverse(H, H)


def test_pair_axioms_and_unit_coherence(twisted_mods, crossed_mods):
    for mods in (twisted_mods, crossed_mods):
        for m in mods.values():
            assert check_unit_coherence(m).passed
        for m, n in itertools.product(mods.values(), repeat=2):
            rep = check_braiding_axioms(m, n)
            assert rep.passed
            assert {r.equation for r in rep} == {"4.13", "4.16"}


def test_hexagons_on_a_mixed_triple(crossed_mods):
    rep = check_braiding_axioms(crossed_mods["D1"], crossed_mods["H"], crossed_mods["D1"])
    assert rep.verdict("4.14") and rep.verdict("4.15")


def test_broken_module_fails_braiding_checks(builtin):
    inst = builtin("fx-4.4-action")
    H, k = inst.module("H"), inst.module("k")
    # k's side of c_{H,k} never touches H's action, so only pairs acting on H notice
    assert check_braiding_axioms(H, k).passed
    assert not check_braiding_axioms(k, H).verdict("4.13")
    assert not check_braiding_axioms(H, H).verdict("4.16")


def test_compat_forms_on_fixtures(builtin):
    assert compat_forms(builtin("fx-4.4-action").module("H")) == (False, False)
    # a mu mutation breaks (4.4) but not the alternate form; the comodule law (4.3) fails first
    m = builtin("fx-4.3-mu").module("H")
    assert compat_forms(m) == (False, True)
    assert not check_yd_module(m).verdict("4.3")
    assert compat_alt_check(m).passed


@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_hexagons_on_random_triples(data, crossed_mods):
    pool = [crossed_mods[k] for k in ("k", "D0", "D1")] + [yd_conjugate(crossed_mods["D0"], 1)]
    m, n, x = (data.draw(st.sampled_from(pool)) for _ in range(3))
    rep = check_braiding_axioms(m, n, x)
    assert rep.passed


@settings(max_examples=20, deadline=None)
@given(a=st.integers(1, 100), b=st.integers(1, 100), mn=st.sampled_from(["k", "H", "D0", "D1"]),
       nn=st.sampled_from(["k", "H", "D1"]))
def test_braiding_is_natural_for_scalar_morphisms(a, b, mn, nn, crossed_mods):
    m, n = crossed_mods[mn], crossed_mods[nn]
    f = YDMorphism(m, m, a * np.eye(m.dim, dtype=np.int64))
    g = YDMorphism(n, n, b * np.eye(n.dim, dtype=np.int64))
    assert check_yd_morphism(f).passed and check_yd_morphism(g).passed
    c = braiding_matrix(m, n)
    lhs = c @ np.kron(f.map, g.map) % 101
    rhs = np.kron(conjugation_functor(g, m.degree).map, f.map) @ c % 101
    assert np.array_equal(lhs, rhs)
