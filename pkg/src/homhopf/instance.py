"""Instance files: a JSON format with sparse structure constants.

Every tensor section is a list of ``[index..., value]`` rows (zeros omitted),
or alternatively ``{"dense": [...]}`` holding one nested array per group
index, which is convenient for hand-written files.  Coordinates:

=============  ==========================  =========================================
section        row                         meaning
=============  ==========================  =========================================
alpha          ``[p, i, j, v]``            alpha_p(e_j) has coefficient v on e_i
mult           ``[p, i, j, k, v]``         e_i e_j has coefficient v on e_k in H_p
unit           ``[p, i, v]``
comult         ``[p, q, k, i, j, v]``      Delta_{p,q}(e_k) has v on e_i (x) e_j
counit         ``[i, v]``
antipode       ``[p, i, j, v]``            S_p: H_p -> H_{p^-1}
crossing       ``[q, p, i, j, v]``         pi_q: H_p -> H_{theta_q(p)}
=============  ==========================  =========================================

Declared modules carry ``mu [i, j, v]``, ``action [a, i, j, v]`` and
``coaction [r, i, j, c, v]``.  For a coalgebra instance ``alpha`` holds gamma.

Files written by :func:`serialize` are byte-stable: fixed key order, sorted
rows, one row per line.
"""

from __future__ import annotations

import copy
import hashlib
import itertools
import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .errors import (
    BoundsError,
    GroupValidationError,
    HomHopfError,
    InstanceShapeError,
    NoAntipodeError,
    NotBijectiveError,
    NotInvertibleError,
    ParseError,
    SemanticError,
    ShapeError,
)
from .group import FiniteGroup, validate_group
from .hopf import antipode_solve
from .linalg import FieldSpec
from .structures import (
    AdmissibleAction,
    GradedHomCoalgebra,
    GradedHomHopf,
    TCoalgebra,
    conjugation_table,
    identity_crossing,
)
from .yd import MAX_BRAID_SIDE, YDModule

FORMAT = "homhopf-instance/1"
KINDS = ("coalgebra", "hopf", "tcoalgebra")


@dataclass(frozen=True, eq=False)
class Instance:
    """A parsed instance: the structure, its declared modules and metadata."""

    name: str
    kind: str
    coalgebra: GradedHomCoalgebra
    hopf: GradedHomHopf | None = None
    action: AdmissibleAction | None = None
    modules: tuple[YDModule, ...] = ()
    metadata: dict = dc_field(default_factory=dict)
    solved_antipode: tuple[np.ndarray, ...] | None = None
    solver_note: str = ""

    @property
    def field(self) -> FieldSpec:
        return self.coalgebra.field

    @property
    def group(self) -> FiniteGroup:
        return self.coalgebra.group

    @property
    def tcoalgebra(self) -> TCoalgebra | None:
        """The crossing to build YD modules over, if there is one."""
        if isinstance(self.action, TCoalgebra):
            return self.action
        if self.action is None and self.hopf is not None and self.group.order == 1:
            return identity_crossing(self.hopf)
        return None

    def module(self, name: str) -> YDModule:
        for m in self.modules:
            if m.name == name:
                return m
        raise KeyError(f"instance declares no module named {name!r}")


def make_instance(name: str, structure, modules: Sequence[YDModule] = (), metadata: dict | None = None,
                  kind: str | None = None) -> Instance:
    """Wrap a library structure as an :class:`Instance`."""
    action = hopf = None
    if isinstance(structure, AdmissibleAction):
        action, hopf = structure, structure.host
        coalg = hopf.coalgebra
        kind = kind or "tcoalgebra"
    elif isinstance(structure, GradedHomHopf):
        hopf, coalg = structure, structure.coalgebra
        kind = kind or "hopf"
    elif isinstance(structure, GradedHomCoalgebra):
        coalg = structure
        kind = kind or "coalgebra"
    else:
        raise TypeError(f"cannot wrap {type(structure).__name__} as an instance")
    inst = Instance(name, kind, coalg, hopf, action, tuple(modules), dict(metadata or {}))
    return parse_payload(to_payload(inst))


# ---------------------------------------------------------------- writing


def _sparse(arr: np.ndarray, prefix: Sequence[int] = ()) -> list[list[int]]:
    arr = np.asarray(arr)
    return [list(prefix) + [int(i) for i in idx] + [int(arr[idx])] for idx in zip(*np.nonzero(arr))]


def _module_payload(m: YDModule) -> dict:
    return {
        "name": m.name,
        "degree": m.degree,
        "dim": m.dim,
        "mu": _sparse(m.mu),
        "action": _sparse(m.action),
        "coaction": [row for r, c in enumerate(m.coaction) for row in _sparse(c, (r,))],
    }


def to_payload(inst: Instance) -> dict:
    c, g = inst.coalgebra, inst.group
    out: dict[str, Any] = {
        "format": FORMAT,
        "name": inst.name,
        "kind": inst.kind,
        "field": {"prime": inst.field.prime},
        "group": {"name": g.name, "order": g.order, "table": [list(r) for r in g.table]},
        "dims": list(c.dims),
        "alpha": [row for p in g.elements for row in _sparse(c.gamma[p], (p,))],
    }
    h = inst.hopf
    if h is not None:
        out["mult"] = [row for p in g.elements for row in _sparse(h.mult[p], (p,))]
        out["unit"] = [row for p in g.elements for row in _sparse(h.unit[p], (p,))]
    out["comult"] = [row for p in g.elements for q in g.elements for row in _sparse(c.comult[p][q], (p, q))]
    out["counit"] = _sparse(c.counit)
    if h is not None and h.antipode is not None:
        out["antipode"] = [row for p in g.elements for row in _sparse(h.antipode[p], (p,))]
    if inst.action is not None:
        if not inst.action.is_conjugation:
            out["theta"] = [list(r) for r in inst.action.theta]
        out["crossing"] = [row for q in g.elements for p in g.elements
                           for row in _sparse(inst.action.pi[q][p], (q, p))]
    if inst.modules:
        out["modules"] = [_module_payload(m) for m in inst.modules]
    out["metadata"] = inst.metadata
    return out


def _dump(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{pad}  {json.dumps(k)}: {_dump(v, indent + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        if all(not isinstance(x, (list, dict)) for x in obj):
            return json.dumps(obj, separators=(", ", ": "))
        items = [f"{pad}  {_dump(x, indent + 1)}" for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj)


def dumps_payload(payload: dict) -> str:
    return _dump(payload) + "\n"


def serialize(inst: Instance) -> str:
    return dumps_payload(to_payload(inst))


def digest(inst: Instance) -> str:
    return hashlib.sha256(serialize(inst).encode()).hexdigest()


def write_instance(inst: Instance, path) -> None:
    Path(path).write_text(serialize(inst))


# ---------------------------------------------------------------- reading


def _need(payload: dict, key: str, what: str = "section"):
    if key not in payload:
        raise SemanticError(key, f"required {what} {key!r} is missing")
    return payload[key]


def _int(x, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SemanticError(where, f"expected an integer, got {x!r}")
    return x


def _tensor(section: str, raw, group_shape: tuple[int, ...], shape_of, prime: int) -> dict:
    """Decode a sparse or dense section into ``{group_index: array}``."""
    out = {}
    for gi in itertools.product(*(range(n) for n in group_shape)):
        out[gi] = np.zeros(shape_of(*gi), dtype=np.int64)
    label = lambda gi: f"{section}[{']['.join(map(str, gi))}]" if gi else section  # noqa: E731
    if isinstance(raw, dict):
        if set(raw) != {"dense"}:
            raise SemanticError(section, "dense sections must have the single key 'dense'")
        data = raw["dense"]
        for gi in out:
            node = data
            for k in gi:
                if not isinstance(node, list) or k >= len(node):
                    raise InstanceShapeError(section, f"one entry per group index {group_shape}", "too few")
                node = node[k]
            try:
                arr = np.array(node, dtype=object)
            except ValueError:
                raise InstanceShapeError(label(gi), shape_of(*gi), "ragged array") from None
            if arr.shape != tuple(shape_of(*gi)):
                raise InstanceShapeError(label(gi), tuple(shape_of(*gi)), tuple(arr.shape))
            for idx in np.ndindex(arr.shape):
                out[gi][idx] = _int(arr[idx], label(gi)) % prime
        return out
    if not isinstance(raw, list):
        raise SemanticError(section, "expected a list of sparse entries or a dense object")
    ng = len(group_shape)
    seen = set()
    for row in raw:
        if not isinstance(row, list) or not row:
            raise SemanticError(section, f"malformed entry {row!r}")
        vals = [_int(x, section) for x in row]
        gi = tuple(vals[:ng])
        for k, n in zip(gi, group_shape):
            if not 0 <= k < n:
                raise InstanceShapeError(section, f"group index below {n}", f"entry {row}")
        shape = tuple(shape_of(*gi)) if len(gi) == ng else ()
        if len(vals) != ng + len(shape) + 1:
            raise InstanceShapeError(section, f"entries of length {ng + len(shape) + 1}", f"entry {row}")
        idx = tuple(vals[ng:-1])
        for k, n in zip(idx, shape):
            if not 0 <= k < n:
                raise InstanceShapeError(label(gi), shape, f"index {idx}")
        key = gi + idx
        if key in seen:
            raise SemanticError(section, f"duplicate entry at {list(key)}")
        seen.add(key)
        out[gi][idx] = vals[-1] % prime
    return out


def _field(payload) -> FieldSpec:
    raw = _need(payload, "field")
    if not isinstance(raw, dict) or "prime" not in raw:
        raise SemanticError("field", "expected an object with key 'prime'")
    try:
        return FieldSpec(_int(raw["prime"], "field.prime"))
    except ValueError as exc:
        raise SemanticError("field", str(exc)) from None


def _group(payload) -> FiniteGroup:
    raw = _need(payload, "group")
    if not isinstance(raw, dict):
        raise SemanticError("group", "expected an object with 'order' and 'table'")
    order = _int(_need(raw, "order", "group key"), "group.order")
    table = _need(raw, "table", "group key")
    try:
        return validate_group(order, table, str(raw.get("name", "")))
    except GroupValidationError as exc:
        raise SemanticError("group", str(exc)) from None
    except (TypeError, ValueError) as exc:
        raise SemanticError("group", f"malformed table: {exc}") from None


def _module(raw, index: int, host: TCoalgebra) -> YDModule:
    h = host.host
    g, d, prime = h.group, h.dims, h.field.prime
    if not isinstance(raw, dict):
        raise SemanticError(f"modules[{index}]", "expected an object")
    name = str(_need(raw, "name", "module key"))
    where = f"modules[{name}]"
    degree = _int(_need(raw, "degree", "module key"), f"{where}.degree")
    dim = _int(_need(raw, "dim", "module key"), f"{where}.dim")
    if not 0 <= degree < g.order:
        raise SemanticError(f"{where}.degree", f"{degree} is not a group element")
    if not 1 <= dim or dim * dim > MAX_BRAID_SIDE:
        raise InstanceShapeError(f"{where}.dim", f"dimension with dim*dim <= {MAX_BRAID_SIDE}", dim)
    mu = _tensor(f"{where}.mu", _need(raw, "mu", "module key"), (), lambda: (dim, dim), prime)[()]
    act = _tensor(f"{where}.action", _need(raw, "action", "module key"), (),
                  lambda: (d[degree], dim, dim), prime)[()]
    co = _tensor(f"{where}.coaction", _need(raw, "coaction", "module key"), (g.order,),
                 lambda r: (dim, dim, d[r]), prime)
    try:
        return YDModule(host, degree, dim, mu, act, tuple(co[(r,)] for r in g.elements), name)
    except NotInvertibleError as exc:
        raise SemanticError(f"{where}.mu", f"not invertible ({exc})") from None


def parse_payload(payload: dict, solve_antipode: bool = False) -> Instance:
    if not isinstance(payload, dict):
        raise SemanticError("document", "top level must be an object")
    fmt = payload.get("format", FORMAT)
    if fmt != FORMAT:
        raise SemanticError("format", f"unsupported format {fmt!r}")
    kind = _need(payload, "kind")
    if kind not in KINDS:
        raise SemanticError("kind", f"expected one of {', '.join(KINDS)}, got {kind!r}")
    name = str(payload.get("name", ""))
    field = _field(payload)
    g = _group(payload)
    p = field.prime
    dims_raw = _need(payload, "dims")
    if not isinstance(dims_raw, list) or len(dims_raw) != g.order:
        raise InstanceShapeError("dims", (g.order,), "list of wrong length" if isinstance(dims_raw, list) else dims_raw)
    dims = [_int(x, "dims") for x in dims_raw]
    for x in dims:
        if not 1 <= x <= 8:
            raise InstanceShapeError("dims", "entries in [1, 8]", x)
    e = g.identity
    mul = g.mul
    alpha = _tensor("alpha", _need(payload, "alpha"), (g.order,), lambda a: (dims[a], dims[a]), p)
    comult = _tensor("comult", _need(payload, "comult"), (g.order, g.order),
                     lambda a, b: (dims[mul(a, b)], dims[a], dims[b]), p)
    counit = _tensor("counit", _need(payload, "counit"), (), lambda: (dims[e],), p)[()]
    alpha_t = tuple(alpha[(a,)] for a in g.elements)
    comult_t = tuple(tuple(comult[(a, b)] for b in g.elements) for a in g.elements)
    try:
        coalg = GradedHomCoalgebra(field, g, dims, alpha_t, comult_t, counit)
    except NotInvertibleError as exc:
        raise SemanticError("alpha", f"not invertible: {exc}") from None
    except ShapeError as exc:
        raise InstanceShapeError("coalgebra", "consistent shapes", str(exc)) from None
    meta = payload.get("metadata", {})
    if not isinstance(meta, dict):
        raise SemanticError("metadata", "expected an object")
    if kind == "coalgebra":
        for key in ("mult", "unit", "antipode", "crossing", "modules"):
            if key in payload:
                raise SemanticError(key, "not allowed for kind 'coalgebra'")
        return Instance(name, kind, coalg, metadata=copy.deepcopy(meta))

    mult = _tensor("mult", _need(payload, "mult"), (g.order,), lambda a: (dims[a],) * 3, p)
    unit = _tensor("unit", _need(payload, "unit"), (g.order,), lambda a: (dims[a],), p)
    anti = None
    if "antipode" in payload:
        raw = _tensor("antipode", payload["antipode"], (g.order,), lambda a: (dims[g.inv(a)], dims[a]), p)
        anti = tuple(raw[(a,)] for a in g.elements)
    hopf = GradedHomHopf(field, g, dims, alpha_t, tuple(mult[(a,)] for a in g.elements),
                         tuple(unit[(a,)] for a in g.elements), comult_t, counit, anti)
    solved, note = None, ""
    try:
        solved = antipode_solve(hopf)
    except NoAntipodeError as exc:
        note = str(exc)
    if anti is None:
        if not solve_antipode:
            raise SemanticError("antipode", f"section missing for kind {kind!r}; pass --solve-antipode to solve for it")
        if solved is None:
            raise SemanticError("antipode", f"section missing and the solver failed: {note}")
        hopf = hopf.replace(antipode=solved)
    try:
        hopf.antipode_inv
    except NotBijectiveError as exc:
        raise SemanticError("antipode", str(exc)) from None

    action = None
    if kind == "tcoalgebra":
        cross = _need(payload, "crossing")
        theta = payload.get("theta")
        if theta is None:
            theta_t = conjugation_table(g)
        else:
            if (not isinstance(theta, list) or len(theta) != g.order
                    or any(not isinstance(r, list) or sorted(r) != list(g.elements) for r in theta)):
                raise SemanticError("theta", "expected one permutation of the group per element")
            theta_t = tuple(tuple(r) for r in theta)
        pi = _tensor("crossing", cross, (g.order, g.order), lambda q, a: (dims[theta_t[q][a]], dims[a]), p)
        pi_t = [[pi[(q, a)] for a in g.elements] for q in g.elements]
        try:
            if theta_t == conjugation_table(g):
                action = TCoalgebra(hopf, pi_t)
            else:
                action = AdmissibleAction(hopf, theta_t, pi_t)
        except NotInvertibleError as exc:
            raise SemanticError("crossing", f"not invertible: {exc}") from None
    elif "crossing" in payload:
        raise SemanticError("crossing", "only allowed for kind 'tcoalgebra'")

    inst = Instance(name, kind, coalg, hopf, action, (), copy.deepcopy(meta), solved, note)
    mods_raw = payload.get("modules", [])
    if mods_raw:
        host = inst.tcoalgebra
        if host is None:
            raise SemanticError("modules", "modules need a crossing (theta must be conjugation)")
        if not isinstance(mods_raw, list):
            raise SemanticError("modules", "expected a list")
        mods = tuple(_module(raw, i, host) for i, raw in enumerate(mods_raw))
        names = [m.name for m in mods]
        if len(set(names)) != len(names):
            raise SemanticError("modules", "module names must be unique")
        inst = Instance(name, kind, coalg, hopf, action, mods, copy.deepcopy(meta), solved, note)
    return inst


def parse_text(text: str, solve_antipode: bool = False) -> Instance:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    try:
        return parse_payload(payload, solve_antipode)
    except ParseError:
        raise
    except HomHopfError as exc:
        raise SemanticError("structure", str(exc)) from None


def parse_instance(path, solve_antipode: bool = False) -> Instance:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_text(text, solve_antipode)


# ---------------------------------------------------------------- perturbation


def _section_shape(inst: Instance, section: str) -> tuple[int, ...]:
    """Full coordinate ranges (group indices first) of a section."""
    g, d = inst.group, inst.coalgebra.dims
    n = g.order
    if section.startswith("modules."):
        _, mname, part = section.split(".", 2)
        m = inst.module(mname)
        dim = m.dim
        if part == "mu":
            return (dim, dim)
        if part == "action":
            return (d[m.degree], dim, dim)
        if part == "coaction":
            return (n, dim, dim, max(d))
        raise BoundsError(f"unknown module section {part!r}")
    mx = max(d)
    shapes = {
        "alpha": (n, mx, mx), "mult": (n, mx, mx, mx), "unit": (n, mx),
        "comult": (n, n, mx, mx, mx), "counit": (d[g.identity],), "antipode": (n, mx, mx),
        "crossing": (n, n, mx, mx),
    }
    if section not in shapes:
        raise BoundsError(f"unknown section {section!r}")
    return shapes[section]


def _exact_bounds(inst: Instance, section: str, coord: tuple[int, ...]) -> None:
    g, d = inst.group, inst.coalgebra.dims
    shape = _section_shape(inst, section)
    if len(coord) != len(shape) or any(not 0 <= c < s for c, s in zip(coord, shape)):
        raise BoundsError(f"coordinate {list(coord)} out of range for section {section!r}")
    # component-dependent bounds
    if section == "alpha":
        p, i, j = coord
        ok = i < d[p] and j < d[p]
    elif section == "mult":
        p, *ijk = coord
        ok = all(x < d[p] for x in ijk)
    elif section == "unit":
        ok = coord[1] < d[coord[0]]
    elif section == "comult":
        p, q, k, i, j = coord
        ok = k < d[g.mul(p, q)] and i < d[p] and j < d[q]
    elif section == "antipode":
        p, i, j = coord
        ok = i < d[g.inv(p)] and j < d[p]
    elif section == "crossing":
        q, p, i, j = coord
        if inst.action is None:
            raise BoundsError("instance has no crossing")
        ok = i < d[inst.action.theta[q][p]] and j < d[p]
    elif section.endswith(".coaction"):
        r, i, j, c = coord
        ok = c < d[r]
    else:
        ok = True
    if not ok:
        raise BoundsError(f"coordinate {list(coord)} out of range for section {section!r}")


def perturb(inst: Instance, section: str, coordinate: Sequence[int], delta: int) -> Instance:
    """Copy of ``inst`` with the single structure constant at ``coordinate`` of ``section`` shifted by ``delta``."""
    coord = tuple(int(c) for c in coordinate)
    _exact_bounds(inst, section, coord)
    payload = to_payload(inst)
    if section.startswith("modules."):
        _, mname, part = section.split(".", 2)
        target = next(m for m in payload["modules"] if m["name"] == mname)
        rows = target[part]
    else:
        if section not in payload:
            raise BoundsError(f"instance has no {section!r} section")
        rows = payload[section]
    prime = inst.field.prime
    for row in rows:
        if tuple(row[:-1]) == coord:
            row[-1] = (row[-1] + delta) % prime
            break
    else:
        rows.append(list(coord) + [delta % prime])
    rows[:] = sorted(r for r in rows if r[-1] % prime)
    meta = dict(payload.get("metadata", {}))
    meta["perturbation"] = {"section": section, "coordinate": list(coord), "delta": int(delta)}
    payload["metadata"] = meta
    return parse_payload(payload, solve_antipode=False)
