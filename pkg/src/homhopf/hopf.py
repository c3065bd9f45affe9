"""Exhaustive axiom checkers, antipode solver and twist constructions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import NoAntipodeError, NotBijectiveError, NotInvertibleError, PreconditionError
from .linalg import FieldSpec, mat_inverse, solve_linear
from .report import CheckReport, Collector
from .structures import (
    AdmissibleAction,
    GradedHomCoalgebra,
    GradedHomHopf,
    HomComodule,
    HomModule,
    TCoalgebra,
    ungraded_hopf,
)

ONE_INPUT = ("i",)
TWO_INPUTS = ("i", "j")
THREE_INPUTS = ("i", "j", "k")


def _coalgebra_checks(c: GradedHomCoalgebra, col: Collector) -> None:
    g, f = c.group, c.field
    D, gi, eps, e = c.comult, c.gamma_inv, c.counit, c.e
    for p, q, r in itertools.product(g.elements, repeat=3):
        qr, pq = g.mul(q, r), g.mul(p, q)
        lhs = f.einsum("cab,ia,bjk->cijk", D[p][qr], gi[p], D[q][r])
        rhs = f.einsum("cab,aij,kb->cijk", D[pq][r], D[p][q], gi[r])
        col.compare("coassociativity", "3.1", lhs, rhs, (p, q, r), ("p", "q", "r"), ONE_INPUT)
    for p in g.elements:
        left = f.einsum("cab,b->ca", D[p][e], eps)
        right = f.einsum("cab,a->cb", D[e][p], eps)
        col.compare("counit (right leg)", "3.2", left, gi[p].T, (p,), ("p",), ONE_INPUT)
        col.compare("counit (left leg)", "3.2", right, gi[p].T, (p,), ("p",), ONE_INPUT)
    for p, q in itertools.product(g.elements, repeat=2):
        pq = g.mul(p, q)
        lhs = f.einsum("ac,aij->cij", gi[pq], D[p][q])
        rhs = f.einsum("cab,ia,jb->cij", D[p][q], gi[p], gi[q])
        col.compare("comultiplication commutes with gamma", "3.3", lhs, rhs, (p, q), ("p", "q"), ONE_INPUT)
    col.compare("counit invariant under gamma", "3.4", f.einsum("a,ac->c", eps, gi[e]), eps)


def check_graded_coalgebra(c: GradedHomCoalgebra | GradedHomHopf) -> CheckReport:
    if isinstance(c, GradedHomHopf):
        c = c.coalgebra
    col = Collector()
    _coalgebra_checks(c, col)
    return col.report()


def _algebra_checks(f: FieldSpec, mult, unit, alpha, col: Collector, group=(), names=()) -> None:
    lhs = f.einsum("bcx,ya,yxo->abco", mult, alpha, mult)
    rhs = f.einsum("abx,yc,xyo->abco", mult, alpha, mult)
    col.compare("Hom-associativity", "2.1", lhs, rhs, group, names, THREE_INPUTS)
    col.compare("right unit", "2.1", f.einsum("auo,u->ao", mult, unit), alpha.T, group, names, ONE_INPUT)
    col.compare("left unit", "2.1", f.einsum("u,uao->ao", unit, mult), alpha.T, group, names, ONE_INPUT)
    lhs = f.einsum("abx,ox->abo", mult, alpha)
    rhs = f.einsum("ya,zb,yzo->abo", alpha, alpha, mult)
    col.compare("alpha multiplicative", "2.2", lhs, rhs, group, names, TWO_INPUTS)
    col.compare("alpha fixes unit", "2.2", f.matmul(alpha, unit[:, None])[:, 0], unit, group, names)


def check_graded_hopf(h: GradedHomHopf) -> CheckReport:
    """Coalgebra axioms, per-component algebra axioms, bialgebra laws and the antipode."""
    g, f = h.group, h.field
    col = Collector()
    _coalgebra_checks(h.coalgebra, col)
    for p in g.elements:
        _algebra_checks(f, h.mult[p], h.unit[p], h.alpha[p], col, (p,), ("p",))
    D, M, u, eps, e = h.comult, h.mult, h.unit, h.counit, h.e
    for p, q in itertools.product(g.elements, repeat=2):
        pq = g.mul(p, q)
        lhs = f.einsum("hgx,xij->hgij", M[pq], D[p][q])
        rhs = f.einsum("hab,gcd,aci,bdj->hgij", D[p][q], D[p][q], M[p], M[q])
        col.compare("comultiplication multiplicative", "3.5", lhs, rhs, (p, q), ("p", "q"), TWO_INPUTS)
        col.compare("comultiplication preserves unit", "3.5",
                    f.einsum("c,cij->ij", u[pq], D[p][q]), np.outer(u[p], u[q]) % f.prime, (p, q), ("p", "q"))
    lhs = f.einsum("hgx,x->hg", M[e], eps)
    col.compare("counit multiplicative", "3.6", lhs, np.outer(eps, eps) % f.prime, (), (), TWO_INPUTS)
    col.require("counit preserves unit", "3.6", int(eps @ u[e]) % f.prime == 1,
                lhs=[int(eps @ u[e]) % f.prime], rhs=[1])
    if h.antipode is None:
        col.require("antipode present", "3.7", False)
        return col.report()
    S = h.antipode
    for p in g.elements:
        pinv = g.inv(p)
        target = np.outer(eps, u[p]) % f.prime
        left = f.einsum("hab,xa,xbo->ho", D[pinv][p], S[pinv], M[p])
        right = f.einsum("hab,yb,ayo->ho", D[p][pinv], S[pinv], M[p])
        col.compare("antipode (left convolution)", "3.7", left, target, (p,), ("p",), ONE_INPUT)
        col.compare("antipode (right convolution)", "3.7", right, target, (p,), ("p",), ONE_INPUT)
    for p in g.elements:
        pinv = g.inv(p)
        col.compare("antipode commutes with alpha", "3.7", f.matmul(S[p], h.alpha[p]),
                    f.matmul(h.alpha[pinv], S[p]).copy(), (p,), ("p",))
    return col.report()


def _action_checks(t: AdmissibleAction, col: Collector) -> None:
    h, g, f = t.host, t.host.group, t.host.field
    theta, pi = t.theta, t.pi
    # theta must be an action of G on itself
    for a, b in itertools.product(g.elements, repeat=2):
        for x in g.elements:
            lhs, rhs = theta[g.mul(a, b)][x], theta[a][theta[b][x]]
            if not col.require("theta is a group action", "theta", lhs == rhs, (a, b, x),
                               ("p", "q", "r"), [lhs], [rhs]):
                break
    for x in g.elements:
        col.require("theta of identity is identity", "theta", theta[g.identity][x] == x, (x,), ("r",),
                    [theta[g.identity][x]], [x])
    for q, p in itertools.product(g.elements, repeat=2):
        tp = theta[q][p]
        P = pi[q][p]
        lhs = f.einsum("abx,ox->abo", h.mult[p], P)
        rhs = f.einsum("ia,jb,ijo->abo", P, P, h.mult[tp])
        col.compare("pi is multiplicative", "adm-alg", lhs, rhs, (q, p), ("q", "p"), TWO_INPUTS)
        col.compare("pi preserves unit", "adm-alg", f.matmul(P, h.unit[p][:, None])[:, 0],
                    h.unit[tp], (q, p), ("q", "p"))
        col.compare("pi commutes with alpha", "adm-2", f.matmul(P, h.alpha[p]), f.matmul(h.alpha[tp], P).copy(),
                    (q, p), ("q", "p"), ())
    # condition (1)/(3.8): (pi_q (x) pi_q) Delta_{p,r} = Delta_{theta_q p, theta_q r} pi_q
    for q, p, r in itertools.product(g.elements, repeat=3):
        pr = g.mul(p, r)
        tp, tr, tpr = theta[q][p], theta[q][r], theta[q][pr]
        if g.mul(tp, tr) != tpr:
            col.require("pi preserves comultiplication", "3.8", False, (q, p, r), ("q", "p", "r"),
                        [tpr], [g.mul(tp, tr)])
            continue
        lhs = f.einsum("cab,ia,jb->cij", h.comult[p][r], pi[q][p], pi[q][r])
        rhs = f.einsum("xc,xij->cij", pi[q][pr], h.comult[tp][tr])
        col.compare("pi preserves comultiplication", "3.8", lhs, rhs, (q, p, r), ("q", "p", "r"), ONE_INPUT)
    e = g.identity
    for q in g.elements:
        if theta[q][e] != e:
            col.require("pi preserves counit", "3.8", False, (q,), ("q",), [theta[q][e]], [e])
            continue
        col.compare("pi preserves counit", "3.8", f.einsum("a,ac->c", h.counit, pi[q][e]), h.counit,
                    (q,), ("q",), ONE_INPUT[:0])
    for a, b, p in itertools.product(g.elements, repeat=3):
        lhs = pi[g.mul(a, b)][p]
        rhs = f.matmul(pi[a][theta[b][p]], pi[b][p])
        col.compare("pi multiplicative in the group", "pi-mult", lhs.T, rhs.T,
                    (a, b, p), ("p", "q", "r"), ONE_INPUT)
    for p in g.elements:
        col.compare("pi_e is the identity", "pi-mult", pi[e][p].T,
                    np.eye(h.dims[p], dtype=np.int64), (p,), ("p",), ONE_INPUT)
    # condition (3): pi_{theta_p(q)} = pi_{pqp^-1}, alpha_{theta_p(q)} = alpha_{pqp^-1}
    for a, b in itertools.product(g.elements, repeat=2):
        tb, cb = theta[a][b], g.conj(a, b)
        if tb == cb:
            continue
        same_dims = h.dims[tb] == h.dims[cb]
        ok = same_dims and np.array_equal(h.alpha[tb], h.alpha[cb])
        col.require("alpha agrees on theta and conjugation indices", "adm-3", ok, (a, b), ("p", "q"),
                    [tb], [cb])
        for x in g.elements:
            ok = (pi[tb][x].shape == pi[cb][x].shape) and np.array_equal(pi[tb][x], pi[cb][x])
            col.require("pi agrees on theta and conjugation indices", "adm-3", ok, (a, b, x), ("p", "q", "r"),
                        [tb], [cb])


def check_admissible_action(t: AdmissibleAction) -> CheckReport:
    col = Collector()
    _action_checks(t, col)
    return col.report()


# ---------------------------------------------------------------- antipode


def _antipode_system(h: GradedHomHopf, p: int):
    """Linear system for the unknown ``S_{p^-1}: H_{p^-1} -> H_p`` (shape ``d_p x d_{p^-1}``)."""
    g, f = h.group, h.field
    pinv = g.inv(p)
    dp, dq, de = h.dims[p], h.dims[pinv], h.dims[h.e]
    M, D, u, eps = h.mult[p], h.comult, h.unit[p], h.counit
    left = f.einsum("hab,xbo->hoxa", D[pinv][p], M)
    right = f.einsum("hab,ayo->hoyb", D[p][pinv], M)
    target = np.outer(eps, u) % f.prime
    rows = [left.reshape(de * dp, dp * dq), right.reshape(de * dp, dp * dq)]
    rhs = [target.ravel(), target.ravel()]
    # S_{p^-1} alpha_{p^-1} = alpha_p S_{p^-1}
    ap, aq = h.alpha[p], h.alpha[pinv]
    comm = np.zeros((dp, dq, dp, dq), dtype=np.int64)
    for i in range(dp):
        for j in range(dq):
            comm[i, j, i, :] += aq[:, j]
            comm[i, j, :, j] -= ap[i, :]
    rows.append(comm.reshape(dp * dq, dp * dq) % f.prime)
    rhs.append(np.zeros(dp * dq, dtype=np.int64))
    return np.vstack(rows), np.concatenate(rhs), (dp, dq)


def antipode_solve(h: GradedHomHopf) -> tuple[np.ndarray, ...]:
    """Solve the convolution-inverse equations for every ``S_p``.

    Raises :class:`NoAntipodeError` if some component has no solution or more than one.
    """
    g = h.group
    out: list[np.ndarray | None] = [None] * g.order
    for p in g.elements:
        a, b, shape = _antipode_system(h, p)
        x, kernel = solve_linear(a, b, h.field)
        pinv = g.inv(p)
        if x is None:
            raise NoAntipodeError(f"no S_{pinv} satisfies the antipode equations (inconsistent system)")
        if kernel.shape[0]:
            raise NoAntipodeError(f"antipode equations for S_{pinv} are underdetermined "
                                  f"({kernel.shape[0]}-dimensional solution space)")
        out[pinv] = x.reshape(shape)
    return tuple(out)


def s_inverse(h: GradedHomHopf) -> tuple[np.ndarray, ...]:
    """``S_p^{-1}: H_{p^-1} -> H_p`` for every ``p``, solving for S if the instance has none."""
    if h.antipode is None:
        h = h.replace(antipode=antipode_solve(h))
    return h.antipode_inv


def with_solved_antipode(h: GradedHomHopf) -> GradedHomHopf:
    return h.replace(antipode=antipode_solve(h))


# ---------------------------------------------------------------- twists


def _require(report: CheckReport, what: str) -> None:
    bad = report.failures()
    if bad:
        r = bad[0]
        raise PreconditionError(f"{what}: {r.axiom} ({r.equation}) fails {r.witness}", axiom=r.equation,
                                witness=r.witness)


def hopf_automorphism_report(h: GradedHomHopf, a) -> CheckReport:
    """Checks that the family ``a_p`` is a component-preserving Hopf automorphism of ``h``."""
    g, f = h.group, h.field
    col = Collector()
    a = tuple(np.asarray(x, dtype=np.int64) % f.prime for x in a)
    for p in g.elements:
        lhs = f.einsum("abx,ox->abo", h.mult[p], a[p])
        rhs = f.einsum("ia,jb,ijo->abo", a[p], a[p], h.mult[p])
        col.compare("automorphism multiplicative", "aut-alg", lhs, rhs, (p,), ("p",), TWO_INPUTS)
        col.compare("automorphism preserves unit", "aut-alg",
                    f.matmul(a[p], h.unit[p][:, None])[:, 0], h.unit[p], (p,), ("p",))
        col.compare("automorphism commutes with alpha", "aut-alg",
                    f.matmul(a[p], h.alpha[p]), f.matmul(h.alpha[p], a[p]).copy(), (p,), ("p",))
    for p, q in itertools.product(g.elements, repeat=2):
        pq = g.mul(p, q)
        lhs = f.einsum("cab,ia,jb->cij", h.comult[p][q], a[p], a[q])
        rhs = f.einsum("xc,xij->cij", a[pq], h.comult[p][q])
        col.compare("automorphism preserves comultiplication", "aut-coalg", lhs, rhs, (p, q), ("p", "q"), ONE_INPUT)
    e = h.e
    col.compare("automorphism preserves counit", "aut-coalg", f.einsum("a,ac->c", h.counit, a[e]), h.counit)
    if h.antipode is not None:
        for p in g.elements:
            col.compare("automorphism commutes with antipode", "aut-S", f.matmul(h.antipode[p], a[p]),
                        f.matmul(a[g.inv(p)], h.antipode[p]).copy(), (p,), ("p",))
    return col.report()


def _twisted(h: GradedHomHopf, a, a_inv) -> GradedHomHopf:
    g, f = h.group, h.field
    mult = tuple(f.einsum("abx,ox->abo", h.mult[p], a[p]) for p in g.elements)
    comult = tuple(tuple(f.einsum("xc,xij->cij", a_inv[g.mul(p, q)], h.comult[p][q]) for q in g.elements)
                   for p in g.elements)
    return h.replace(alpha=tuple(a), mult=mult, comult=comult)


def _invert_family(f: FieldSpec, a):
    out = []
    for p, m in enumerate(a):
        try:
            out.append(mat_inverse(m, f))
        except NotInvertibleError as exc:
            raise NotInvertibleError(f"automorphism component {p} is singular", rank=exc.rank) from None
    return out


def twist_by_automorphism(h, a):
    """Twist a classical Hopf group-coalgebra by a Hopf automorphism family ``a``.

    Multiplication becomes ``a_p . m_p``, comultiplication ``Delta_{p,q} . a_pq^-1``
    and ``alpha := a``.  If ``h`` carries a crossing that commutes with ``a`` the
    crossing is carried over unchanged.
    """
    action = h if isinstance(h, AdmissibleAction) else None
    host = action.host if action is not None else h
    f = host.field
    a = tuple(np.asarray(x, dtype=np.int64) % f.prime for x in a)
    a_inv = _invert_family(f, a)
    if not host.is_classical:
        raise PreconditionError("input must be classical (alpha = id)", axiom="alpha = id")
    _require(check_graded_hopf(host), "input is not a Hopf group-coalgebra")
    _require(hopf_automorphism_report(host, a), "twist family is not a Hopf automorphism")
    twisted = _twisted(host, a, a_inv)
    if action is None:
        return twisted
    g = host.group
    col = Collector()
    for q, p in itertools.product(g.elements, repeat=2):
        tp = action.theta[q][p]
        col.compare("crossing commutes with twist", "adm-2", f.matmul(action.pi[q][p], a[p]),
                    f.matmul(a[tp], action.pi[q][p]).copy(), (q, p), ("q", "p"))
    _require(col.report(), "crossing cannot be carried through the twist")
    return action.with_host(twisted)


def twist_by_crossing(t: AdmissibleAction) -> AdmissibleAction:
    """Twist a classical Hopf T-coalgebra by its own crossing.

    Multiplication becomes ``pi_p . m_p`` and comultiplication
    ``Delta_{p,q} . pi_pq^-1`` with ``alpha_p = pi_p`` restricted to ``H_p``.
    Beyond the documented inputs this requires the restricted family
    ``pi_p|H_p`` to be a coalgebra automorphism family; without it the result
    violates the gamma-compatibility of the comultiplication, so such inputs
    are rejected with :class:`PreconditionError`.
    """
    host, g = t.host, t.host.group
    if not host.is_classical:
        raise PreconditionError("input must be classical (alpha = id)", axiom="alpha = id")
    _require(check_graded_hopf(host), "input is not a Hopf group-coalgebra")
    _require(check_admissible_action(t), "input crossing is not admissible")
    diag = [t.pi[p][p] for p in g.elements]
    for p in g.elements:
        if t.theta[p][p] != p:
            raise PreconditionError(f"pi_{p} does not preserve H_{p}", axiom="2")
    _require(hopf_automorphism_report(host, diag), "restricted crossing pi_p|H_p is not a Hopf automorphism")
    twisted = _twisted(host, diag, [t.pi_inv[p][p] for p in g.elements])
    return t.with_host(twisted)


def neutral_component(h: GradedHomHopf) -> GradedHomHopf:
    e = h.e
    return ungraded_hopf(h.field, h.alpha[e], h.mult[e], h.unit[e], h.comult[e][e], h.counit,
                         None if h.antipode is None else h.antipode[e])


# ---------------------------------------------------------------- modules and comodules


def _hom_module_checks(f: FieldSpec, mult, unit, alpha, mu, action, col: Collector, group=(), names=()):
    lhs = f.einsum("bix,ya,yxo->abio", action, alpha, action)
    rhs = f.einsum("abz,ji,zjo->abio", mult, mu, action)
    col.compare("module Hom-associativity", "2.8", lhs, rhs, group, names, ("a", "b", "m"))
    col.compare("unit acts as mu", "2.8", f.einsum("u,uio->io", unit, action), mu.T, group, names, ("m",))
    lhs = f.einsum("aix,ox->aio", action, mu)
    rhs = f.einsum("ya,ji,yjo->aio", alpha, mu, action)
    col.compare("mu intertwines action", "2.9", lhs, rhs, group, names, ("a", "m"))


def check_hom_module(m: HomModule) -> CheckReport:
    col = Collector()
    f = m.field
    _hom_module_checks(f, f.array(m.mult), f.array(m.unit), f.array(m.alpha), f.array(m.mu),
                       f.array(m.action), col)
    return col.report()


def check_hom_comodule(m: HomComodule) -> CheckReport:
    f = m.field
    col = Collector()
    rho, mu = f.array(m.coaction), f.array(m.mu)
    mu_inv, g_inv = mat_inverse(mu, f), mat_inverse(m.gamma, f)
    lhs = f.einsum("ijc,oj,cab->ioab", rho, mu_inv, f.array(m.comult))
    rhs = f.einsum("ijc,joa,bc->ioab", rho, rho, g_inv)
    col.compare("comodule Hom-coassociativity", "2.10", lhs, rhs, (), (), ("m",))
    col.compare("comodule counit", "2.10", f.einsum("ijc,c->ij", rho, f.array(m.counit)), mu_inv.T, (), (), ("m",))
    lhs = f.einsum("ji,jkc->ikc", mu, rho)
    rhs = f.einsum("ijc,kj,dc->ikd", rho, mu, f.array(m.gamma))
    col.compare("coaction is a Hom-morphism", "2.11", lhs, rhs, (), (), ("m",))
    return col.report()


def regular_module(h: GradedHomHopf, p: int | None = None) -> HomModule:
    """Component ``H_p`` acting on itself by its multiplication, with ``mu = alpha_p``."""
    p = h.e if p is None else p
    return HomModule(h.field, h.mult[p], h.unit[p], h.alpha[p], h.dims[p], h.alpha[p], h.mult[p])


def regular_comodule(h: GradedHomHopf) -> HomComodule:
    """Neutral component coacting on itself through ``Delta_{e,e}``, with ``mu = alpha_e``."""
    e = h.e
    return HomComodule(h.field, h.comult[e][e], h.counit, h.alpha[e], h.dims[e], h.alpha[e], h.comult[e][e])


# ---------------------------------------------------------------- Hom-category coherence


@dataclass(frozen=True)
class HomCoherence:
    """Associator and unitors of the Hom-category on three concrete objects.

    All maps are matrices on the row-major flattening of the tensor product,
    so the bracketing is tracked by the caller.
    """

    field: FieldSpec
    mu: np.ndarray
    nu: np.ndarray
    varsigma: np.ndarray

    def __post_init__(self):
        try:
            mat_inverse(self.varsigma, self.field)
            mat_inverse(self.mu, self.field)
        except NotInvertibleError as exc:
            raise NotInvertibleError("coherence maps need invertible automorphisms", rank=exc.rank) from None

    @property
    def associator(self) -> np.ndarray:
        """(m (x) n) (x) l  ->  mu(m) (x) (n (x) varsigma^-1(l))."""
        f = self.field
        return f.kron(self.mu, np.eye(self.nu.shape[0], dtype=np.int64), mat_inverse(self.varsigma, f))

    @property
    def associator_inv(self) -> np.ndarray:
        f = self.field
        return f.kron(mat_inverse(self.mu, f), np.eye(self.nu.shape[0], dtype=np.int64), self.varsigma)

    @property
    def left_unitor(self) -> np.ndarray:
        """k (x) M -> M, 1 (x) m -> mu(m)."""
        return self.mu.copy()

    @property
    def right_unitor(self) -> np.ndarray:
        return self.mu.copy()


def hom_coherence_maps(field: FieldSpec, mu, nu, varsigma) -> HomCoherence:
    f = field
    return HomCoherence(f, f.array(mu), f.array(nu), f.array(varsigma))


def associator(field: FieldSpec, mu, nu, varsigma) -> np.ndarray:
    return hom_coherence_maps(field, mu, nu, varsigma).associator


def associator_inv(field: FieldSpec, mu, nu, varsigma) -> np.ndarray:
    return hom_coherence_maps(field, mu, nu, varsigma).associator_inv


def check_tcoalgebra(t: AdmissibleAction) -> CheckReport:
    return check_graded_hopf(t.host) + check_admissible_action(t)

