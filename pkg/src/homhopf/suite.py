"""Suite orchestration over a parsed instance, and report rendering."""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, HomHopfError
from .hopf import check_admissible_action, check_graded_coalgebra, check_graded_hopf
from .instance import Instance, digest
from .report import CheckReport, CheckResult, Collector, Witness
from .yd import (
    MAX_BRAID_SIDE,
    MAX_INTERNAL_SIDE,
    YDModule,
    check_braiding_axioms,
    check_unit_coherence,
    check_yd_module,
    check_yd_morphism,
    compat_alt_check,
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

SUITES = ("coalgebra", "hopf", "crossing", "yd", "braiding")
REPORT_VERSION = 1


@dataclass(frozen=True)
class SuiteReport:
    instance: str
    digest: str
    selection: tuple[str, ...]
    suites: tuple[tuple[str, CheckReport], ...]
    notes: tuple[str, ...] = ()
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for _, r in self.suites)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def report(self, suite: str) -> CheckReport:
        for name, r in self.suites:
            if name == suite:
                return r
        raise KeyError(suite)

    def combined(self) -> CheckReport:
        out = CheckReport()
        for _, r in self.suites:
            out = out + r
        return out


def parse_selection(text: str) -> tuple[str, ...]:
    """``all``, a suite name, or a comma-separated list; empty text selects nothing."""
    parts = [s.strip() for s in text.split(",") if s.strip()]
    out: list[str] = []
    for s in parts:
        if s == "all":
            names = ["all"]
        elif s in SUITES:
            names = [s]
        else:
            raise ConfigurationError(f"unknown suite {s!r}; choose from all, {', '.join(SUITES)}")
        for n in names:
            if n not in out:
                out.append(n)
    return tuple(out)


def _applicable(inst: Instance) -> list[str]:
    if inst.kind == "coalgebra":
        return ["coalgebra"]
    out = ["hopf"]
    if inst.action is not None:
        out.append("crossing")
    if inst.tcoalgebra is not None:
        out += ["yd", "braiding"]
    return out


def _failure(axiom: str, equation: str, message: str) -> CheckReport:
    return CheckReport((CheckResult(axiom, equation, False, Witness((), (), (), ()), 0, message),))


def builtin_modules(inst: Instance) -> list[YDModule]:
    """Declared modules if the file has any; otherwise the unit, H itself and diagonal modules when available."""
    if inst.modules:
        return list(inst.modules)
    host = inst.tcoalgebra
    mods = [yd_unit_k(host), yd_on_H(host)]
    try:
        mods += [diagonal_yd_module(host, p) for p in host.host.group.elements]
    except HomHopfError:
        pass
    return mods


def _antipode_agreement(inst: Instance) -> CheckReport:
    col = Collector()
    h = inst.hopf
    if inst.solved_antipode is None or h.antipode is None:
        return col.report()
    for p in inst.group.elements:
        col.compare("stored antipode equals solved antipode", "3.7", h.antipode[p].T,
                    inst.solved_antipode[p].T, (p,), ("p",), ("i",))
    return col.report()


def _yd_suite(inst: Instance, mods: list[YDModule]) -> CheckReport:
    g = inst.group
    out = CheckReport()
    for m in mods:
        out = out + check_yd_module(m) + compat_alt_check(m)
        out = out + check_yd_morphism(identity_morphism(m))
        if m.host.host.is_classical:
            # mu(h.m) = alpha(h).mu(m), so mu is a morphism only when alpha = id
            out = out + check_yd_morphism(mu_morphism(m))
    if not out.passed:
        return out
    col = Collector("closure")
    for m in mods:
        for q in g.elements:
            out = out + check_yd_module(yd_conjugate(m, q))
        for s, t in itertools.product(g.elements, repeat=2):
            lhs = yd_conjugate(m, g.mul(s, t))
            rhs = yd_conjugate(yd_conjugate(m, t), s)
            col.require("conjugation composes", "conj", same_structure(lhs, rhs), (s, t), ("s", "t"))
            fm = mu_morphism(m)
            a = conjugation_functor(conjugation_functor(fm, t), s)
            b = conjugation_functor(fm, g.mul(s, t))
            col.require("conjugation functor composes", "conj",
                        np.array_equal(a.map, b.map) and same_structure(a.source, b.source), (s, t), ("s", "t"))
    for m, n in itertools.product(mods, repeat=2):
        if m.dim * n.dim > MAX_INTERNAL_SIDE:
            continue
        mn = yd_tensor(m, n)
        out = out + check_yd_module(mn)
        for s in g.elements:
            ok = same_structure(yd_conjugate(mn, s), yd_tensor(yd_conjugate(m, s), yd_conjugate(n, s)))
            col.require("conjugation distributes over tensor", "conj", ok, (s,), ("s",))
    return out + col.report()


def _braiding_suite(inst: Instance, mods: list[YDModule], notes: list[str]) -> CheckReport:
    out = CheckReport()
    for m in mods:
        out = out + check_unit_coherence(m)
    for m, n in itertools.product(mods, repeat=2):
        if m.dim * n.dim > MAX_BRAID_SIDE:
            notes.append(f"braiding ({m.name}, {n.name}) skipped: side {m.dim * n.dim} > {MAX_BRAID_SIDE}")
            continue
        out = out + check_braiding_axioms(m, n)
    for m, n, x in itertools.product(mods, repeat=3):
        side = m.dim * n.dim * x.dim
        if side > MAX_INTERNAL_SIDE or m.dim * n.dim > MAX_BRAID_SIDE:
            notes.append(f"hexagons ({m.name}, {n.name}, {x.name}) skipped: side {side}")
            continue
        hex_only = CheckReport(tuple(r for r in check_braiding_axioms(m, n, x) if r.equation in ("4.14", "4.15")))
        out = out + hex_only
    return out


def run_suite(inst: Instance, selection: str | tuple[str, ...] = "all") -> SuiteReport:
    start = time.perf_counter()
    sel = parse_selection(selection) if isinstance(selection, str) else tuple(selection)
    applicable = _applicable(inst)
    wanted: list[str] = []
    for s in sel:
        if s == "all":
            wanted += [a for a in applicable if a not in wanted]
            continue
        if s not in applicable and s != "coalgebra":
            raise ConfigurationError(f"suite {s!r} needs data this {inst.kind} instance does not provide")
        if s not in wanted:
            wanted.append(s)
    order = [s for s in SUITES if s in wanted]
    suites: list[tuple[str, CheckReport]] = []
    notes: list[str] = []
    mods: list[YDModule] | None = None
    for s in order:
        if s == "coalgebra":
            rep = check_graded_coalgebra(inst.coalgebra)
        elif s == "hopf":
            rep = check_graded_hopf(inst.hopf) + _antipode_agreement(inst)
        elif s == "crossing":
            rep = check_admissible_action(inst.action)
        else:
            if mods is None:
                try:
                    mods = builtin_modules(inst)
                except HomHopfError as exc:
                    mods = []
                    notes.append(f"module construction failed: {exc}")
            if not mods:
                rep = _failure("modules available", s, "no YD modules could be built over this host")
            elif s == "yd":
                rep = _yd_suite(inst, mods)
            else:
                rep = _braiding_suite(inst, mods, notes)
        suites.append((s, rep))
    return SuiteReport(inst.name, digest(inst), tuple(order), tuple(suites), tuple(dict.fromkeys(notes)),
                       time.perf_counter() - start)


# ---------------------------------------------------------------- rendering


def _result_dict(r: CheckResult) -> dict:
    return {
        "axiom": r.axiom,
        "equation_label": r.equation,
        "pass": r.passed,
        "cases": r.cases,
        "context": r.context,
        "witness": None if r.witness is None else r.witness.as_dict(),
    }


def report_payload(rep: SuiteReport) -> dict:
    return {
        "report_version": REPORT_VERSION,
        "instance": rep.instance,
        "digest": rep.digest,
        "selection": list(rep.selection),
        "verdict": "pass" if rep.passed else "fail",
        "suites": [{"suite": name, "pass": r.passed, "results": [_result_dict(x) for x in r]}
                   for name, r in rep.suites],
        "notes": list(rep.notes),
    }


def emit_report(rep: SuiteReport, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report_payload(rep), indent=2, sort_keys=False) + "\n"
    if fmt != "text":
        raise ConfigurationError(f"unknown report format {fmt!r}")
    lines = [f"instance {rep.instance}  sha256 {rep.digest}",
             f"suites: {', '.join(rep.selection) if rep.selection else '(none)'}"]
    for name, r in rep.suites:
        lines.append(f"== {name}")
        for x in r:
            ctx = f" [{x.context}]" if x.context else ""
            lines.append(f"{x.equation:>6}  {x.axiom}{ctx}: {'PASS' if x.passed else 'FAIL'}")
            if not x.passed and x.witness is not None and x.witness.names:
                lines.append(f"        witness {x.witness}")
    for n in rep.notes:
        lines.append(f"note: {n}")
    if rep.suites:
        total = sum(len(r) for _, r in rep.suites)
        bad = sum(len(r.failures()) for _, r in rep.suites)
        lines.append(f"{total - bad}/{total} checks passed in {rep.seconds:.2f}s; verdict: "
                     f"{'PASS' if rep.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"
