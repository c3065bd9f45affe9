"""Structure-constant data model for group-cograded monoidal Hom-Hopf algebras.

Conventions (``e_i`` is the basis of the component named in brackets):

* ``mult[p][i, j, k]``        e_i e_j = sum_k mult e_k             in H_p
* ``unit[p][i]``              1_p = sum_i unit e_i
* ``alpha[p][i, j]``          alpha_p(e_j) = sum_i alpha e_i
* ``comult[p][q][k, i, j]``   Delta_{p,q}(e_k) = sum mult e_i (x) e_j,  H_pq -> H_p (x) H_q
* ``counit[i]``               epsilon on H_e
* ``antipode[p][i, j]``       S_p(e_j) = sum_i S e_i,  H_p -> H_{p^-1}
* ``pi[q][p][i, j]``          pi_q(e_j) = sum_i pi e_i,  H_p -> H_{theta_q(p)}
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import NotBijectiveError, NotInvertibleError, ShapeError
from .group import FiniteGroup, trivial_group
from .linalg import FieldSpec, mat_inverse

MAX_COMPONENT_DIM = 8


def _frozen(a) -> np.ndarray:
    out = np.array(a, dtype=np.int64)
    out.setflags(write=False)
    return out


def _expect(name, arr, shape):
    if tuple(arr.shape) != tuple(shape):
        raise ShapeError(f"{name}: expected shape {tuple(shape)}, got {tuple(arr.shape)}")


def _inverse_family(field, mats, name):
    out = []
    for p, m in enumerate(mats):
        try:
            out.append(_frozen(mat_inverse(m, field)))
        except NotInvertibleError as exc:
            raise NotInvertibleError(f"{name}_{p} is not invertible", rank=exc.rank) from None
    return tuple(out)


@dataclass(frozen=True, eq=False)
class GradedHomCoalgebra:
    field: FieldSpec
    group: FiniteGroup
    dims: tuple[int, ...]
    gamma: tuple[np.ndarray, ...]
    comult: tuple[tuple[np.ndarray, ...], ...]
    counit: np.ndarray

    def __post_init__(self):
        g, p = self.group, self.field.prime
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if len(self.dims) != g.order:
            raise ShapeError(f"dims: expected {g.order} entries, got {len(self.dims)}")
        for d in self.dims:
            if not 1 <= d <= MAX_COMPONENT_DIM:
                raise ShapeError(f"component dimension {d} outside [1, {MAX_COMPONENT_DIM}]")
        object.__setattr__(self, "gamma", tuple(_frozen(np.asarray(a) % p) for a in self.gamma))
        object.__setattr__(self, "comult", tuple(tuple(_frozen(np.asarray(t) % p) for t in row) for row in self.comult))
        object.__setattr__(self, "counit", _frozen(np.asarray(self.counit) % p))
        d = self.dims
        for a in g.elements:
            _expect(f"gamma[{a}]", self.gamma[a], (d[a], d[a]))
            for b in g.elements:
                _expect(f"comult[{a}][{b}]", self.comult[a][b], (d[g.mul(a, b)], d[a], d[b]))
        _expect("counit", self.counit, (d[g.identity],))
        self.gamma_inv  # invertibility is an invariant

    @cached_property
    def gamma_inv(self) -> tuple[np.ndarray, ...]:
        return _inverse_family(self.field, self.gamma, "gamma")

    @property
    def e(self) -> int:
        return self.group.identity


@dataclass(frozen=True, eq=False)
class GradedHomHopf:
    """Group-cograded monoidal Hom-Hopf algebra; ``antipode`` may be ``None`` for a bare bialgebra."""

    field: FieldSpec
    group: FiniteGroup
    dims: tuple[int, ...]
    alpha: tuple[np.ndarray, ...]
    mult: tuple[np.ndarray, ...]
    unit: tuple[np.ndarray, ...]
    comult: tuple[tuple[np.ndarray, ...], ...]
    counit: np.ndarray
    antipode: tuple[np.ndarray, ...] | None = None

    def __post_init__(self):
        p = self.field.prime
        # shape/invertibility validation for the coalgebra part is shared
        coalg = self.coalgebra
        object.__setattr__(self, "dims", coalg.dims)
        object.__setattr__(self, "alpha", coalg.gamma)
        object.__setattr__(self, "comult", coalg.comult)
        object.__setattr__(self, "counit", coalg.counit)
        object.__setattr__(self, "mult", tuple(_frozen(np.asarray(m) % p) for m in self.mult))
        object.__setattr__(self, "unit", tuple(_frozen(np.asarray(u) % p) for u in self.unit))
        d, g = self.dims, self.group
        if len(self.mult) != g.order or len(self.unit) != g.order:
            raise ShapeError("mult/unit must have one entry per group element")
        for a in g.elements:
            _expect(f"mult[{a}]", self.mult[a], (d[a], d[a], d[a]))
            _expect(f"unit[{a}]", self.unit[a], (d[a],))
        if self.antipode is not None:
            object.__setattr__(self, "antipode", tuple(_frozen(np.asarray(s) % p) for s in self.antipode))
            if len(self.antipode) != g.order:
                raise ShapeError("antipode must have one entry per group element")
            for a in g.elements:
                _expect(f"antipode[{a}]", self.antipode[a], (d[g.inv(a)], d[a]))

    @cached_property
    def coalgebra(self) -> GradedHomCoalgebra:
        return GradedHomCoalgebra(self.field, self.group, self.dims, self.alpha, self.comult, self.counit)

    @property
    def alpha_inv(self) -> tuple[np.ndarray, ...]:
        return self.coalgebra.gamma_inv

    @property
    def e(self) -> int:
        return self.group.identity

    @cached_property
    def antipode_inv(self) -> tuple[np.ndarray, ...]:
        """``S_p^{-1}: H_{p^-1} -> H_p`` indexed by ``p``."""
        if self.antipode is None:
            raise NotBijectiveError("instance carries no antipode")
        out = []
        for p, s in enumerate(self.antipode):
            if s.shape[0] != s.shape[1]:
                raise NotBijectiveError(f"S_{p} maps between spaces of different dimension")
            try:
                out.append(_frozen(mat_inverse(s, self.field)))
            except NotInvertibleError as exc:
                raise NotBijectiveError(f"S_{p} is not bijective (rank {exc.rank})") from None
        return tuple(out)

    @property
    def is_classical(self) -> bool:
        return all(np.array_equal(a, np.eye(a.shape[0], dtype=np.int64)) for a in self.alpha)

    def replace(self, **changes) -> "GradedHomHopf":
        fields = dict(field=self.field, group=self.group, dims=self.dims, alpha=self.alpha, mult=self.mult,
                      unit=self.unit, comult=self.comult, counit=self.counit, antipode=self.antipode)
        fields.update(changes)
        return GradedHomHopf(**fields)


def conjugation_table(group: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(group.conj(q, p) for p in group.elements) for q in group.elements)


@dataclass(frozen=True, eq=False)
class AdmissibleAction:
    """A family ``pi_q: H_p -> H_{theta_q(p)}`` over an action ``theta`` of G on itself."""

    host: GradedHomHopf
    theta: tuple[tuple[int, ...], ...]
    pi: tuple[tuple[np.ndarray, ...], ...]

    def __post_init__(self):
        g, d, prime = self.host.group, self.host.dims, self.host.field.prime
        theta = tuple(tuple(int(x) for x in row) for row in self.theta)
        object.__setattr__(self, "theta", theta)
        if len(theta) != g.order or any(sorted(row) != list(g.elements) for row in theta):
            raise ShapeError("theta must list one permutation of G per group element")
        pi = tuple(tuple(_frozen(np.asarray(m) % prime) for m in row) for row in self.pi)
        object.__setattr__(self, "pi", pi)
        if len(pi) != g.order or any(len(row) != g.order for row in pi):
            raise ShapeError("pi must be indexed by (q, p) in G x G")
        for q in g.elements:
            for p in g.elements:
                _expect(f"pi[{q}][{p}]", pi[q][p], (d[theta[q][p]], d[p]))
        self.pi_inv

    @cached_property
    def pi_inv(self) -> tuple[tuple[np.ndarray, ...], ...]:
        """``pi_inv[q][p]`` inverts ``pi[q][p]``, mapping ``H_{theta_q(p)} -> H_p``."""
        out = []
        for q, row in enumerate(self.pi):
            cur = []
            for p, m in enumerate(row):
                if m.shape[0] != m.shape[1]:
                    raise NotInvertibleError(f"pi_{q} on component {p} changes dimension")
                try:
                    cur.append(_frozen(mat_inverse(m, self.host.field)))
                except NotInvertibleError as exc:
                    raise NotInvertibleError(f"pi_{q} on component {p} is singular", rank=exc.rank) from None
            out.append(tuple(cur))
        return tuple(out)

    @property
    def is_conjugation(self) -> bool:
        return self.theta == conjugation_table(self.host.group)

    def with_host(self, host: GradedHomHopf) -> "AdmissibleAction":
        return type(self)(host, self.theta, self.pi)


class TCoalgebra(AdmissibleAction):
    """Monoidal Hom-Hopf T-coalgebra: a crossing, i.e. theta is conjugation."""

    def __init__(self, host: GradedHomHopf, pi, theta=None):
        if theta is None:
            theta = conjugation_table(host.group)
        super().__init__(host, theta, pi)
        if not self.is_conjugation:
            raise ShapeError("a crossing requires theta to be the conjugation action")

    def with_host(self, host: GradedHomHopf) -> "TCoalgebra":
        return TCoalgebra(host, self.pi)


def identity_crossing(host: GradedHomHopf) -> TCoalgebra:
    """The crossing ``pi_q = id``; needs ``H_p`` and ``H_{qpq^-1}`` to coincide in dimension."""
    g = host.group
    pi = []
    for q in g.elements:
        row = []
        for p in g.elements:
            if host.dims[g.conj(q, p)] != host.dims[p]:
                raise ShapeError("identity crossing needs conjugate components of equal dimension")
            row.append(np.eye(host.dims[p], dtype=np.int64))
        pi.append(row)
    return TCoalgebra(host, pi)


@dataclass(frozen=True, eq=False)
class HomModule:
    """Left Hom-module ``(M, mu)`` over one component ``(A, alpha)``.

    ``action[a, i, j]`` is the coefficient of e_j in e_a . e_i.
    """

    field: FieldSpec
    mult: np.ndarray
    unit: np.ndarray
    alpha: np.ndarray
    dim: int
    mu: np.ndarray
    action: np.ndarray

    def __post_init__(self):
        da = self.mult.shape[0]
        _expect("module action", np.asarray(self.action), (da, self.dim, self.dim))
        _expect("module mu", np.asarray(self.mu), (self.dim, self.dim))
        mat_inverse(self.mu, self.field)


@dataclass(frozen=True, eq=False)
class HomComodule:
    """Right Hom-comodule ``(M, mu)`` over an ungraded Hom-coalgebra ``(C, gamma)``.

    ``coaction[i, j, c]`` is the coefficient of e_j (x) c_c in rho(e_i).
    """

    field: FieldSpec
    comult: np.ndarray
    counit: np.ndarray
    gamma: np.ndarray
    dim: int
    mu: np.ndarray
    coaction: np.ndarray

    def __post_init__(self):
        dc = self.comult.shape[0]
        _expect("comodule coaction", np.asarray(self.coaction), (self.dim, self.dim, dc))
        _expect("comodule mu", np.asarray(self.mu), (self.dim, self.dim))
        mat_inverse(self.mu, self.field)
        mat_inverse(self.gamma, self.field)


def ungraded_hopf(field: FieldSpec, alpha, mult, unit, comult, counit, antipode=None) -> GradedHomHopf:
    """A monoidal Hom-Hopf algebra, stored as the trivial-group case."""
    return GradedHomHopf(
        field, trivial_group(), (np.asarray(unit).shape[0],), (alpha,), (mult,), (unit,),
        ((comult,),), counit, None if antipode is None else (antipode,),
    )
