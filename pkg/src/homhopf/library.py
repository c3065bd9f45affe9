"""Deterministic builders for the desk-scale example structures.

Every builder verifies its output with the full applicable check suite and
refuses to return an invalid structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import numpy as np

from .errors import PreconditionError
from .group import FiniteGroup, cyclic_group, symmetric_group_3, trivial_group
from .hopf import (
    check_admissible_action,
    check_graded_hopf,
    hopf_automorphism_report,
    twist_by_automorphism,
)
from .linalg import FieldSpec
from .report import CheckReport
from .structures import GradedHomHopf, TCoalgebra, ungraded_hopf


def _self_verify(report: CheckReport, what: str):
    bad = report.failures()
    if bad:
        r = bad[0]
        raise AssertionError(f"builder {what} produced an invalid structure: {r.axiom} ({r.equation}) {r.witness}")


def trivial_tcoalgebra(g: FiniteGroup, field: FieldSpec | None = None) -> TCoalgebra:
    """Every component is the ground field and every structure map is trivial."""
    field = field or FieldSpec()
    n = g.order
    one = np.ones((1, 1), dtype=np.int64)
    host = GradedHomHopf(
        field, g, (1,) * n,
        alpha=(one,) * n,
        mult=(np.ones((1, 1, 1), dtype=np.int64),) * n,
        unit=(np.ones(1, dtype=np.int64),) * n,
        comult=tuple(tuple(np.ones((1, 1, 1), dtype=np.int64) for _ in range(n)) for _ in range(n)),
        counit=np.ones(1, dtype=np.int64),
        antipode=(one,) * n,
    )
    t = TCoalgebra(host, [[one] * n for _ in range(n)])
    _self_verify(check_graded_hopf(host) + check_admissible_action(t), "trivial_tcoalgebra")
    return t


def group_algebra(f: FiniteGroup, field: FieldSpec | None = None) -> GradedHomHopf:
    """k[f] with group-like basis in element order."""
    field = field or FieldSpec()
    n = f.order
    mult = np.zeros((n, n, n), dtype=np.int64)
    comult = np.zeros((n, n, n), dtype=np.int64)
    anti = np.zeros((n, n), dtype=np.int64)
    for a in f.elements:
        comult[a, a, a] = 1
        anti[f.inv(a), a] = 1
        for b in f.elements:
            mult[a, b, f.mul(a, b)] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[f.identity] = 1
    h = ungraded_hopf(field, np.eye(n, dtype=np.int64), mult, unit, comult, np.ones(n, dtype=np.int64), anti)
    _self_verify(check_graded_hopf(h), "group_algebra")
    return h


def group_automorphism_matrix(f: FiniteGroup, images: Sequence[int]) -> np.ndarray:
    """Matrix on k[f] of the group automorphism sending element ``a`` to ``images[a]``."""
    n = f.order
    m = np.zeros((n, n), dtype=np.int64)
    for a, b in enumerate(images):
        m[b, a] = 1
    return m


SWEEDLER_BASIS = ("1", "g", "x", "gx")


def sweedler4(field: FieldSpec | None = None, lam: int = 1) -> tuple[GradedHomHopf, tuple[np.ndarray]]:
    """Sweedler's 4-dimensional Hopf algebra and the automorphism scaling x, gx by ``lam``.

    Basis ``1, g, x, gx`` with g^2 = 1, x^2 = 0, xg = -gx, Delta(g) = g (x) g,
    Delta(x) = x (x) 1 + g (x) x, S(g) = g, S(x) = -gx.
    """
    field = field or FieldSpec()
    p = field.prime
    if p == 2:
        raise PreconditionError("Sweedler's algebra needs characteristic other than 2")
    if lam % p == 0:
        raise PreconditionError("twist scalar must be nonzero", axiom="lambda != 0")
    one, g, x, gx = range(4)
    m = np.zeros((4, 4, 4), dtype=np.int64)
    for b in range(4):
        m[one, b, b] = 1
        m[b, one, b] = 1
    m[g, g, one] = 1
    m[g, x, gx] = 1
    m[g, gx, x] = 1
    m[x, g, gx] = -1
    m[gx, g, x] = -1
    d = np.zeros((4, 4, 4), dtype=np.int64)
    d[one, one, one] = 1
    d[g, g, g] = 1
    d[x, x, one] = 1
    d[x, g, x] = 1
    d[gx, gx, g] = 1
    d[gx, one, gx] = 1
    s = np.zeros((4, 4), dtype=np.int64)
    s[one, one] = 1
    s[g, g] = 1
    s[gx, x] = -1
    s[x, gx] = 1
    unit = np.array([1, 0, 0, 0])
    counit = np.array([1, 1, 0, 0])
    h = ungraded_hopf(field, np.eye(4, dtype=np.int64), m % p, unit, d, counit, s % p)
    auto = np.diag([1, 1, lam, lam]) % p
    _self_verify(check_graded_hopf(h), "sweedler4")
    _self_verify(hopf_automorphism_report(h, (auto,)), "sweedler4 automorphism")
    return h, (auto,)


def constant_tcoalgebra(g: FiniteGroup, d: GradedHomHopf, action: Mapping[int, np.ndarray] | Sequence) -> TCoalgebra:
    """``H_p = D`` for every ``p`` with crossing ``pi_q`` acting as ``action[q]`` on each component."""
    if d.group.order != 1 or not d.is_classical or d.antipode is None:
        raise PreconditionError("constant_tcoalgebra needs a classical ungraded Hopf algebra with antipode")
    field = d.field
    acts = [np.asarray(action[q], dtype=np.int64) % field.prime for q in g.elements]
    dim = d.dims[0]
    for q in g.elements:
        if acts[q].shape != (dim, dim):
            raise PreconditionError(f"action[{q}] has shape {acts[q].shape}, expected {(dim, dim)}")
        report = hopf_automorphism_report(d, (acts[q],))
        if not report.passed:
            r = report.failures()[0]
            raise PreconditionError(f"action[{q}] is not a Hopf automorphism: {r.axiom}", axiom=r.equation,
                                    witness=r.witness)
    for a in g.elements:
        for b in g.elements:
            if not np.array_equal(acts[g.mul(a, b)], field.matmul(acts[a], acts[b])):
                raise PreconditionError(f"action is not a homomorphism at ({a}, {b})", axiom="pi-mult")
    n = g.order
    host = GradedHomHopf(
        field, g, (dim,) * n,
        alpha=(d.alpha[0],) * n,
        mult=(d.mult[0],) * n,
        unit=(d.unit[0],) * n,
        comult=tuple(tuple(d.comult[0][0] for _ in range(n)) for _ in range(n)),
        counit=d.counit,
        antipode=(d.antipode[0],) * n,
    )
    t = TCoalgebra(host, [[acts[q]] * n for q in g.elements])
    _self_verify(check_graded_hopf(host) + check_admissible_action(t), "constant_tcoalgebra")
    return t


def squaring_action(field: FieldSpec | None = None):
    """Z/2 acting on k[Z/3] with the non-identity element sending g to g^2."""
    z2, z3 = cyclic_group(2), cyclic_group(3)
    ident = np.eye(3, dtype=np.int64)
    square = group_automorphism_matrix(z3, [2 * a % 3 for a in z3.elements])
    return z2, group_algebra(z3, field), [ident, square]


def crossed_constant(field: FieldSpec | None = None) -> TCoalgebra:
    """constant_tcoalgebra(Z/2, k[Z/3], s -> (g -> g^2)): classical, nontrivial crossing."""
    z2, kz3, action = squaring_action(field)
    return constant_tcoalgebra(z2, kz3, action)


def plain_constant(field: FieldSpec | None = None) -> TCoalgebra:
    """constant_tcoalgebra(Z/2, k[Z/3]) with the identity crossing."""
    z2, kz3, action = squaring_action(field)
    return constant_tcoalgebra(z2, kz3, [action[0], action[0]])


def twisted_constant(field: FieldSpec | None = None) -> TCoalgebra:
    """Default nontrivial host: the crossed constant T-coalgebra twisted by g -> g^2 on every component.

    Nontrivial group, crossing and alpha at once; the crossing commutes with
    the twist and is carried over.
    """
    t = crossed_constant(field)
    square = t.pi[1][0]
    out = twist_by_automorphism(t, [square] * t.host.group.order)
    _self_verify(check_graded_hopf(out.host) + check_admissible_action(out), "twisted_constant")
    return out


def twisted_sweedler(field: FieldSpec | None = None, lam: int = 3) -> GradedHomHopf:
    h, auto = sweedler4(field, lam)
    out = twist_by_automorphism(h, auto)
    _self_verify(check_graded_hopf(out), "twisted_sweedler")
    return out


def trivial_hopf_as_tcoalgebra(h: GradedHomHopf) -> TCoalgebra:
    """A trivial-group Hopf algebra viewed as a T-coalgebra with ``pi_e = id``."""
    from .structures import identity_crossing

    if h.group.order != 1:
        raise PreconditionError("only trivial-group instances are lifted this way")
    return identity_crossing(h)


GROUPS = {"1": trivial_group, "Z/2": lambda: cyclic_group(2), "Z/3": lambda: cyclic_group(3),
          "S3": symmetric_group_3}


# ---------------------------------------------------------------- registry


@dataclass(frozen=True)
class Builtin:
    name: str
    description: str
    build: Callable[[FieldSpec], object]
    modules: bool = False


def _declared_yd(field: FieldSpec | None = None):
    from .yd import yd_on_H, yd_unit_k

    t = twisted_constant(field)
    return t, [yd_unit_k(t), yd_on_H(t)]


BUILTINS: dict[str, Builtin] = {b.name: b for b in (
    Builtin("trivial-1", "trivial T-coalgebra over the trivial group", lambda f: trivial_tcoalgebra(trivial_group(), f)),
    Builtin("trivial-Z2", "trivial T-coalgebra over Z/2", lambda f: trivial_tcoalgebra(cyclic_group(2), f)),
    Builtin("trivial-Z3", "trivial T-coalgebra over Z/3", lambda f: trivial_tcoalgebra(cyclic_group(3), f)),
    Builtin("trivial-S3", "trivial T-coalgebra over S3", lambda f: trivial_tcoalgebra(symmetric_group_3(), f)),
    Builtin("group-algebra-Z3", "k[Z/3] as a classical Hopf algebra", lambda f: group_algebra(cyclic_group(3), f)),
    Builtin("group-algebra-S3", "k[S3] as a classical Hopf algebra", lambda f: group_algebra(symmetric_group_3(), f)),
    Builtin("sweedler4-l1", "Sweedler's algebra (twist scalar 1)", lambda f: sweedler4(f, 1)[0]),
    Builtin("sweedler4-l3", "Sweedler's algebra (twist scalar 3)", lambda f: sweedler4(f, 3)[0]),
    Builtin("twisted-sweedler-l3", "Sweedler's algebra twisted by the automorphism scaling x, gx by 3",
            lambda f: twisted_sweedler(f, 3)),
    Builtin("constant-kZ3", "constant T-coalgebra k[Z/3] over Z/2, identity crossing", plain_constant),
    Builtin("crossed-constant-kZ3", "constant T-coalgebra k[Z/3] over Z/2, crossing s -> (g -> g^2)",
            crossed_constant),
    Builtin("twisted-constant-kZ3", "constant k[Z/3] over Z/2 twisted by g -> g^2, identity crossing",
            lambda f: twist_by_automorphism(plain_constant(f), [squaring_action(f)[2][1]] * 2)),
    Builtin("twisted-crossed-constant-kZ3",
            "crossed constant k[Z/3] over Z/2 twisted by g -> g^2; the default YD host", twisted_constant),
    Builtin("yd-declared", "default YD host with the unit module and H declared in the file", _declared_yd,
            modules=True),
)}


def build_builtin(name: str, field: FieldSpec | None = None):
    """Instance for a builtin structure or mutation fixture."""
    from .instance import make_instance, perturb

    field = field or FieldSpec()
    if name in FIXTURES:
        fx = FIXTURES[name]
        base = build_builtin(fx.base, field)
        inst = perturb(base, fx.section, fx.coordinate, fx.delta)
        return make_instance(name, _structure_of(inst), inst.modules,
                             {**inst.metadata, "expected_failure": {"suite": fx.suite, "equation": fx.equation}})
    if name not in BUILTINS:
        raise KeyError(f"unknown builtin {name!r}")
    b = BUILTINS[name]
    built = b.build(field)
    mods = ()
    if b.modules:
        built, mods = built
    return make_instance(name, built, mods, {"builtin": name, "description": b.description})


def _structure_of(inst):
    return inst.action if inst.action is not None else inst.hopf if inst.hopf is not None else inst.coalgebra


@dataclass(frozen=True)
class Fixture:
    name: str
    base: str
    section: str
    coordinate: tuple[int, ...]
    delta: int
    suite: str
    equation: str


# Single-coordinate mutations, each recorded with the suite and equation that must flag it.
FIXTURES: dict[str, Fixture] = {f.name: f for f in (
    Fixture("fx-2.1-mult", "group-algebra-Z3", "mult", (0, 0, 1, 0), 1, "hopf", "2.1"),
    Fixture("fx-2.2-alpha", "sweedler4-l3", "alpha", (0, 2, 2), 1, "hopf", "2.2"),
    Fixture("fx-2.8-unit-action", "yd-declared", "modules.k.action", (0, 0, 0), 1, "yd", "2.8"),
    Fixture("fx-3.1-comult", "constant-kZ3", "comult", (0, 1, 0, 0, 0), 1, "hopf", "3.1"),
    Fixture("fx-3.2-counit", "constant-kZ3", "counit", (0,), 1, "hopf", "3.2"),
    Fixture("fx-3.3-comult", "twisted-sweedler-l3", "comult", (0, 0, 0, 2, 2), 1, "hopf", "3.3"),
    Fixture("fx-3.5-mult", "sweedler4-l3", "mult", (0, 0, 1, 2), 1, "hopf", "3.5"),
    Fixture("fx-3.7-antipode", "constant-kZ3", "antipode", (0, 0, 0), 1, "hopf", "3.7"),
    Fixture("fx-3.8-crossing", "crossed-constant-kZ3", "crossing", (0, 0, 0, 0), 1, "crossing", "3.8"),
    Fixture("fx-pi-mult-crossing", "crossed-constant-kZ3", "crossing", (1, 1, 1, 2), 1, "crossing", "pi-mult"),
    Fixture("fx-4.1-coaction", "yd-declared", "modules.H.coaction", (1, 0, 0, 0), 1, "yd", "4.1"),
    Fixture("fx-4.2-coaction", "yd-declared", "modules.H.coaction", (0, 0, 0, 0), 1, "yd", "4.2"),
    Fixture("fx-4.3-mu", "yd-declared", "modules.H.mu", (0, 0), 1, "yd", "4.3"),
    Fixture("fx-4.4-action", "yd-declared", "modules.H.action", (0, 0, 0), 1, "yd", "4.4"),
)}
